#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "chainscape/chains.hpp"

using namespace chainscape;

TEST_CASE("shortest chains on GRID4, frozen from the enumeration oracle") {
  const auto g = fixtures::grid4();
  REQUIRE(oracles::enumerate_min_chain(g, 0, 4, 0.3) == 4);
  const auto tight = shortest_chain(g, 0, 4, 0.3);
  REQUIRE(tight);
  CHECK(tight->points == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(tight->length() == 4);
  CHECK(chain_valid(g, *tight));

  REQUIRE(oracles::enumerate_min_chain(g, 0, 4, 0.6) == 2);
  const auto loose = shortest_chain(g, 0, 4, 0.6);
  REQUIRE(loose);
  CHECK(loose->points == std::vector<int>{0, 2, 4});

  CHECK(!shortest_chain(g, 0, 4, 0.25));  // strict step bound leaves no edges
  CHECK(shortest_chain(g, 2, 2, 0.3)->points == std::vector<int>{2});
}

TEST_CASE("shortest chains match the enumeration oracle on random spaces") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const auto space = oracles::random_euclidean_space(rng, 7);
    for (double eta : {0.2, 0.4, 0.7, 1.2}) {
      for (int x = 0; x < space.size(); ++x)
        for (int y = 0; y < space.size(); ++y) {
          const auto chain = shortest_chain(space, x, y, eta);
          const int expect = oracles::enumerate_min_chain(space, x, y, eta);
          CHECK((chain ? chain->length() : -1) == expect);
          if (chain) CHECK(chain_valid(space, *chain));
        }
    }
  }
}

TEST_CASE("chain components at the worked scales") {
  const auto l = fixtures::line3();
  const auto parts = chain_components(l, 1.5);
  CHECK(parts.component_of == std::vector<int>{0, 0, 2});
  CHECK(parts.count() == 2);
  CHECK(chain_components(l, 3.5).count() == 1);
  CHECK(chain_components(fixtures::grid4(), 0.25).count() == 5);
}

TEST_CASE("minimax edge equals the brute-force bottleneck") {
  const auto g = fixtures::grid4();
  CHECK(minimax_edge(g, 0, 4) == 0.25);
  CHECK(oracles::brute_minimax(g, 0, 4) == 0.25);
  const auto l = fixtures::line3();
  CHECK(minimax_edge(l, 0, 2) == 2.0);
  CHECK(minimax_edge(l, 1, 1) == 0.0);

  std::mt19937_64 rng(13);
  const auto space = oracles::random_euclidean_space(rng, 8);
  for (int x = 0; x < space.size(); ++x)
    for (int y = 0; y < space.size(); ++y)
      CHECK(minimax_edge(space, x, y) == oracles::brute_minimax(space, x, y));
}

TEST_CASE("minimax threshold characterizes components") {
  const auto gap = fixtures::gap4();
  for (double eta : {0.2, 0.25, 0.26, 0.5, 0.51, 1.0, 1.1}) {
    const auto parts = chain_components(gap, eta);
    for (int x = 0; x < gap.size(); ++x)
      for (int y = 0; y < gap.size(); ++y)
        CHECK((minimax_edge(gap, x, y) < eta) == parts.together(x, y));
  }
}

TEST_CASE("constrained chains: exact matches the oracle and modes sandwich") {
  const auto g = fixtures::grid4();
  const auto exact = constrained_chain(g, 0, 2, 0.3, 0.6, ChainMode::exact);
  REQUIRE(exact);
  CHECK(exact->points == std::vector<int>{0, 1, 2});
  CHECK(chain_diameter(g, *exact) == 0.5);
  CHECK(oracles::enumerate_min_constrained(g, 0, 2, 0.3, 0.6) == 2);

  // Endpoints 0.75 apart force diameter >= 0.75.
  CHECK(!constrained_chain(g, 0, 3, 0.3, 0.6, ChainMode::exact));
  CHECK(oracles::enumerate_min_constrained(g, 0, 3, 0.3, 0.6) == -1);

  // Half-ball restriction keeps only {p0, p1}.
  CHECK(!constrained_chain(g, 0, 2, 0.3, 0.6, ChainMode::half_ball));

  for (const auto& space : {fixtures::grid4(), fixtures::gap4()}) {
    for (double eta : {0.2, 0.3, 0.6, 1.1})
      for (double eps : {0.3, 0.6, 1.1, 2.0})
        for (int x = 0; x < space.size(); ++x)
          for (int y = 0; y < space.size(); ++y) {
            const bool half =
                constrained_chain(space, x, y, eta, eps, ChainMode::half_ball).has_value();
            const bool exact_ok =
                constrained_chain(space, x, y, eta, eps, ChainMode::exact).has_value();
            const bool ball_ok =
                constrained_chain(space, x, y, eta, eps, ChainMode::ball).has_value();
            if (half) CHECK(exact_ok);
            if (exact_ok) CHECK(ball_ok);
            // Oracle agreement for the exact mode.
            CHECK(exact_ok ==
                  (oracles::enumerate_min_constrained(space, x, y, eta, eps) >= 0));
          }
  }
}

TEST_CASE("exact mode diameters and minimal lengths agree with the oracle") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 6; ++trial) {
    const auto space = oracles::random_euclidean_space(rng, 7);
    for (double eta : {0.3, 0.6})
      for (double eps : {0.4, 0.9})
        for (int x = 0; x < space.size(); ++x)
          for (int y = 0; y < space.size(); ++y) {
            const auto chain = constrained_chain(space, x, y, eta, eps, ChainMode::exact);
            const int expect = oracles::enumerate_min_constrained(space, x, y, eta, eps);
            CHECK((chain ? chain->length() : -1) == expect);
            if (chain) {
              CHECK(chain_valid(space, *chain));
              CHECK(chain_diameter(space, *chain) < eps);
            }
          }
  }
}

TEST_CASE("exact mode refuses large spaces") {
  std::mt19937_64 rng(19);
  const auto big = oracles::random_euclidean_space(rng, 17);
  CHECK_THROWS_WITH_AS(constrained_chain(big, 0, 1, 0.5, 0.5, ChainMode::exact),
                       doctest::Contains("ExactSearchTooLarge"), error);
}

TEST_CASE("chaining modulus delta*") {
  const auto g = fixtures::grid4();
  const auto r1 = ulcc_modulus(g, 0.6, 0.3);
  CHECK(r1.delta_star == 0.75);
  CHECK(r1.witness == std::make_pair(0, 3));

  const auto r2 = ulcc_modulus(g, 2.0, 0.3);
  CHECK(r2.delta_star == kInfinity);
  CHECK(!r2.witness);

  const auto gap = fixtures::gap4();
  const auto r3 = ulcc_modulus(gap, 2.0, 0.3);
  CHECK(r3.delta_star == 0.5);
  CHECK(r3.witness == std::make_pair(1, 2));

  // Soundness: pairs strictly inside delta* always chain; the witness fails.
  for (int x = 0; x < g.size(); ++x)
    for (int y = x + 1; y < g.size(); ++y)
      if (g.dist(x, y) < r1.delta_star)
        CHECK(constrained_chain(g, x, y, 0.3, 0.6, ChainMode::exact));
  CHECK(!constrained_chain(g, 0, 3, 0.3, 0.6, ChainMode::exact));
}

TEST_CASE("chaining modulus respects a subset restriction") {
  const auto gap = fixtures::gap4();
  const auto res = ulcc_modulus(gap, 2.0, 0.3, ChainMode::exact,
                                Subset::of({0, 1}, gap.size()));
  CHECK(res.delta_star == kInfinity);  // the separated pair is outside the subset
}

TEST_CASE("bounded-length table l*") {
  const auto g = fixtures::grid4();
  const auto r1 = ulcec_table(g, 0.6, 0.55, 0.3);
  CHECK(r1.reachable);
  CHECK(r1.l_star == 2);
  CHECK(r1.witness == std::make_pair(0, 2));

  const auto r2 = ulcec_table(g, 0.6, 0.3, 0.3);
  CHECK(r2.reachable);
  CHECK(r2.l_star == 1);

  const auto gap = fixtures::gap4();
  const auto r3 = ulcec_table(gap, 2.0, 0.6, 0.3);
  CHECK(!r3.reachable);
  CHECK(r3.witness == std::make_pair(1, 2));
}

TEST_CASE("chain length profile") {
  const auto g = fixtures::grid4();
  const auto profile = chain_length_profile(g, {0.3, 0.6, 1.1});
  REQUIRE(profile.entries.size() == 3);
  CHECK(*profile.entries[0].length_bound == 4);
  CHECK(*profile.entries[1].length_bound == 2);
  CHECK(*profile.entries[2].length_bound == 1);

  const auto blocked = chain_length_profile(g, {0.25});
  CHECK(!blocked.entries[0].length_bound);

  const auto one = space_from_points({{0.0}}, Ambient::euclidean);
  CHECK(*chain_length_profile(one, {0.5}).entries[0].length_bound == 0);

  CHECK_THROWS_AS(chain_length_profile(g, {0.6, 0.3}), error);
}

TEST_CASE("profile is monotone and matches shortest chains") {
  std::mt19937_64 rng(23);
  const auto space = oracles::random_euclidean_space(rng, 8);
  const std::vector<double> etas{0.25, 0.5, 0.75, 1.0, 1.5};
  const auto profile = chain_length_profile(space, etas);
  for (std::size_t i = 0; i < etas.size(); ++i) {
    int expect = 0;
    bool all = true;
    for (int x = 0; x < space.size() && all; ++x)
      for (int y = x + 1; y < space.size(); ++y) {
        const auto c = shortest_chain(space, x, y, etas[i]);
        if (!c) {
          all = false;
          break;
        }
        expect = std::max(expect, c->length());
      }
    if (all)
      CHECK(*profile.entries[i].length_bound == expect);
    else
      CHECK(!profile.entries[i].length_bound);
    if (i > 0 && profile.entries[i - 1].length_bound && profile.entries[i].length_bound)
      CHECK(*profile.entries[i - 1].length_bound >= *profile.entries[i].length_bound);
  }
}
