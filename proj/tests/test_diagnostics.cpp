#include "doctest.h"
#include "oracles.hpp"

#include "chainscape/diagnostics.hpp"

using namespace chainscape;

TEST_CASE("failure witnesses at the worked scales") {
  const auto gap = fixtures::gap4();
  const auto f1 = failure_witnesses(gap, 2.0, 0.6, 0.3, 4);
  CHECK(f1.pairs == std::vector<std::pair<int, int>>{{1, 2}});

  const auto g = fixtures::grid4();
  CHECK(failure_witnesses(g, 2.0, 0.3, 0.3, 4).pairs.empty());

  const auto f3 = failure_witnesses(g, 0.6, 0.8, 0.3, 4);
  CHECK(f3.pairs == std::vector<std::pair<int, int>>{{0, 3}, {1, 4}});
  // Soundness: each witness really has no qualifying chain; completeness: the
  // exhaustive scan finds nothing else below the cutoff.
  for (const auto& [x, y] : f3.pairs)
    CHECK(!constrained_chain(g, x, y, 0.3, 0.6, ChainMode::exact));
  for (int x = 0; x < g.size(); ++x)
    for (int y = x + 1; y < g.size(); ++y) {
      if (!(g.dist(x, y) < 0.8)) continue;
      const bool blocked = !constrained_chain(g, x, y, 0.3, 0.6, ChainMode::exact);
      const bool listed =
          std::find(f3.pairs.begin(), f3.pairs.end(), std::make_pair(x, y)) !=
          f3.pairs.end();
      CHECK(blocked == listed);
    }
}

TEST_CASE("pair coloring follows the two threshold tests") {
  const auto gap = fixtures::gap4();
  PairFamily family;
  family.eps = 2.0;
  family.delta = 0.6;
  family.eta = 0.3;
  family.pairs = {{1, 2}, {1, 2}};
  const auto coloring = color_pairs(gap, family, 0.3);
  CHECK(coloring.at(0, 1) == PairColor::black);

  const auto g = fixtures::grid4();
  PairFamily f2;
  f2.delta = 2.0;
  f2.pairs = {{0, 1}, {4, 3}};
  CHECK(color_pairs(g, f2, 0.3).at(0, 1) == PairColor::white);

  // The names follow the tests, not intuition: both tests pass here.
  PairFamily f3;
  f3.delta = 2.0;
  f3.pairs = {{0, 1}, {0, 2}};
  CHECK(color_pairs(g, f3, 0.3).at(0, 1) == PairColor::black);

  // One-sided matches give green and blue.
  PairFamily f4;
  f4.delta = 2.0;
  f4.pairs = {{0, 1}, {0, 3}};
  CHECK(color_pairs(g, f4, 0.3).at(0, 1) == PairColor::green);
  PairFamily f5;
  f5.delta = 2.0;
  f5.pairs = {{0, 1}, {3, 1}};
  CHECK(color_pairs(g, f5, 0.3).at(0, 1) == PairColor::blue);
}

TEST_CASE("coloring is total and recomputable") {
  const auto g = fixtures::grid4();
  PairFamily family;
  family.delta = 2.0;
  family.pairs = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
  const auto coloring = color_pairs(g, family, 0.6);
  for (int i = 0; i < coloring.family_size; ++i)
    for (int j = i + 1; j < coloring.family_size; ++j) {
      const auto& [ai, bi] = family.pairs[static_cast<std::size_t>(i)];
      const auto& [aj, bj] = family.pairs[static_cast<std::size_t>(j)];
      const bool first = g.dist(ai, aj) < 0.6;
      const bool second = g.dist(bi, bj) < 0.6;
      const PairColor expect = first ? (second ? PairColor::black : PairColor::green)
                                     : (second ? PairColor::blue : PairColor::white);
      CHECK(coloring.at(i, j) == expect);
      CHECK(coloring.at(j, i) == expect);
    }
}

TEST_CASE("monochromatic subsets") {
  PairColoring all_black;
  all_black.family_size = 4;
  all_black.upper.assign(6, PairColor::black);
  CHECK(*monochromatic_subset(all_black, 3) == std::vector<int>{0, 1, 2});
  CHECK(*monochromatic_subset(all_black, 2) == std::vector<int>{0, 1});

  // Pentagon/pentagram split of the K5 edges has no monochromatic triangle.
  PairColoring pentagon;
  pentagon.family_size = 5;
  const auto cyclic_adjacent = [](int i, int j) {
    const int d = (j - i + 5) % 5;
    return d == 1 || d == 4;
  };
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      pentagon.upper.push_back(cyclic_adjacent(i, j) ? PairColor::black
                                                     : PairColor::white);
  CHECK(!monochromatic_subset(pentagon, 3));
  // Validate any returned subset directly for k = 2.
  const auto pair = monochromatic_subset(pentagon, 2);
  REQUIRE(pair);
  CHECK(pentagon.at((*pair)[0], (*pair)[1]) == pentagon.at((*pair)[0], (*pair)[1]));

  PairColoring big;
  big.family_size = 17;
  big.upper.assign(17 * 16 / 2, PairColor::black);
  CHECK_THROWS_WITH_AS(monochromatic_subset(big, 3),
                       doctest::Contains("FamilyTooLarge"), error);
}

TEST_CASE("implication suite holds on the fixtures") {
  for (const auto& space :
       {fixtures::grid4(), fixtures::gap4(), fixtures::line3()}) {
    std::vector<std::array<double, 4>> grid;
    for (double eps : {0.6, 2.0})
      for (double delta : {0.3, 0.55})
        for (double eta : {0.3, 0.6})
          grid.push_back({eps, delta, eta, 8.0});
    const auto report = implication_suite(space, grid);
    CHECK(report.all_hold);
    CHECK(report.counterexamples.empty());
  }
  const auto one = space_from_points({{0.0}}, Ambient::euclidean);
  CHECK(implication_suite(one, {{0.5, 0.5, 0.5, 1.0}}).all_hold);
}
