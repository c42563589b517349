#include <cmath>

#include "doctest.h"
#include "oracles.hpp"

#include "chainscape/moduli.hpp"

using namespace chainscape;

TEST_CASE("piecewise-linear evaluation") {
  const Modulus m({{0.0, 0.0}, {1.0, 1.0}});
  CHECK(m(0.5) == 0.5);
  CHECK(m(0.0) == 0.0);
  const Modulus flat({{0.0, 0.0}, {1.0, 2.0}, {2.0, 2.0}});
  CHECK(flat(5.0) == 2.0);  // final slope zero continues flat
  const Modulus steep({{0.0, 0.0}, {1.0, 2.0}});
  CHECK(steep(3.0) == 6.0);  // final slope continues
  const Modulus floor({{0.5, 0.3}, {1.0, 0.8}});
  CHECK(floor(0.1) == 0.3);  // constant left of the first breakpoint
}

TEST_CASE("modulus invariants are enforced") {
  CHECK_THROWS_AS(Modulus({{1.0, 1.0}, {1.0, 2.0}}), error);
  CHECK_THROWS_AS(Modulus({{0.0, 2.0}, {1.0, 1.0}}), error);
  CHECK_THROWS_AS(Modulus({{-1.0, 0.0}, {1.0, 1.0}}), error);
  CHECK_THROWS_AS(Modulus({{0.0, 0.0}, {1.0, 2e18}}), error);
}

TEST_CASE("concavity check") {
  // Samples of sqrt: concave.
  const Modulus root({{0.0, 0.0}, {0.25, 0.5}, {1.0, 1.0}, {4.0, 2.0}});
  CHECK(check_concave(root).concave);
  // Samples of t^2: first violation at breakpoints (0,1,2).
  const auto square = check_concave(Modulus({{0.0, 0.0}, {1.0, 1.0}, {2.0, 4.0}}));
  CHECK(!square.concave);
  CHECK(*square.violation == std::array<int, 3>{0, 1, 2});
  CHECK(check_concave(Modulus::linear(3.0)).concave);
}

TEST_CASE("subadditivity check") {
  const std::vector<double> grid{0.25, 0.5, 1.0, 2.0};
  CHECK(check_subadditive(Modulus::linear(2.0, 4.0), grid).subadditive);
  // Concave with zero floor implies subadditive on any grid.
  const Modulus root({{0.0, 0.0}, {0.25, 0.5}, {1.0, 1.0}, {4.0, 2.0}});
  CHECK(check_subadditive(root, grid).subadditive);
  // A jump at 1 fails at s = t = 0.5.
  const Modulus step({{0.0, 0.0}, {0.999, 0.0}, {1.0, 1.0}, {2.0, 1.0}});
  const auto res = check_subadditive(step, {0.5, 0.5});
  CHECK(!res.subadditive);
  CHECK(res.witness == std::make_pair(0.5, 0.5));
}

TEST_CASE("concave envelope: hull keeps or drops the middle sample") {
  const auto keep = concave_envelope({{1.0, 1.0}, {2.0, 1.2}, {3.0, 1.3}});
  CHECK(keep.breakpoints().size() == 3);
  CHECK(keep(1.5) == oracles::hull_value_at({{1, 1}, {2, 1.2}, {3, 1.3}}, 1.5));
  CHECK(keep(1.5) == 1.1);

  const auto drop = concave_envelope({{1.0, 1.0}, {2.0, 1.1}, {3.0, 1.3}});
  CHECK(drop.breakpoints().size() == 2);
  CHECK(drop(2.0) == oracles::hull_value_at({{1, 1}, {2, 1.1}, {3, 1.3}}, 2.0));
  CHECK(drop(2.0) == 1.15);

  const auto line = concave_envelope({{0.0, 0.0}, {1.0, 0.5}, {2.0, 1.0}});
  CHECK(line(0.6) == 0.3);
  CHECK_THROWS_WITH_AS(concave_envelope({{1.0, 1.0}}),
                       doctest::Contains("FewerThanTwoSamples"), error);
}

TEST_CASE("concave envelope dominates samples, is concave, and is least") {
  const std::vector<std::pair<double, double>> samples{
      {0.0, 0.0}, {0.5, 0.9}, {1.0, 1.0}, {1.5, 1.4}, {2.0, 1.5}, {3.0, 1.6}};
  const auto env = concave_envelope(samples);
  CHECK(check_concave(env).concave);
  for (const auto& [t, v] : samples) {
    CHECK(env(t) >= v);
    CHECK(env(t) == oracles::hull_value_at(samples, t));
  }
  // Lowering any hull vertex breaks domination at some sample.
  for (const auto& [t, v] : env.breakpoints()) {
    bool touches = false;
    for (const auto& [ts, vs] : samples) touches = touches || (ts == t && vs == v);
    CHECK(touches);  // hull vertices are sample points
  }
}

TEST_CASE("gamma construction from a modulus") {
  const auto gamma = gamma_from_omega(Modulus::linear(1.0, 1.0), 1.0, 3);
  // Anchors (1,3),(2,4),(3,5); hull edge runs from the origin to (1,3).
  CHECK(gamma(0.5) == 1.5);
  CHECK(gamma(1.0) == 3.0);
  CHECK(gamma(1.0) >= 3.0 * 1.0);
  CHECK(check_concave(gamma).concave);
  for (int i = 1; i <= 3; ++i)
    CHECK(gamma(static_cast<double>(i)) >= (i + 2) * 1.0);
  // Dominates the modulus on the sampling grid.
  for (int j = 1; j <= 64; ++j) {
    const double t = std::pow(2.0, -16.0 * (64 - j) / 64.0);
    CHECK(gamma(t) >= t);
  }
}

TEST_CASE("modulus ladder recursion") {
  const auto ladder = modulus_ladder(1.0, {0.5, 0.25}, 2);
  CHECK(ladder.level(0)(0.7) == 0.0);
  CHECK(ladder.level(1)(0.6) == 1.0);
  CHECK(ladder.level(1)(0.4) == 0.0);
  CHECK(ladder.level(2)(0.3) == 0.5);
  CHECK(ladder.level(2)(0.6) == 1.5);
  CHECK(ladder.level(2)(0.2) == 0.0);   // below every threshold
  CHECK(ladder.level(2)(0.25) == 0.5);  // jump sits at the threshold
  CHECK(ladder.sup(0.6) == 1.5);
  CHECK_THROWS_WITH_AS(modulus_ladder(1.0, {0.25, 0.5}, 2),
                       doctest::Contains("NonDecreasingDeltas"), error);
}

TEST_CASE("ladder levels grow pointwise in the level index") {
  const auto ladder = modulus_ladder(2.0, {0.8, 0.4, 0.2, 0.1}, 4);
  for (double t : {0.05, 0.1, 0.15, 0.2, 0.3, 0.4, 0.5, 0.8, 1.0, 2.0})
    for (int n = 1; n <= 4; ++n)
      CHECK(ladder.level(n)(t) >= ladder.level(n - 1)(t));
}

TEST_CASE("concave consequence inequalities") {
  const Modulus root({{0.0, 0.0}, {0.25, 0.5}, {1.0, 1.0}, {4.0, 2.0}});
  // Direct evaluation on the interpolant: f(9)-f(4) <= f(6)-f(1).
  const auto res = verify_concave_inequalities(root, 1.0, 4.0, 5.0, 1.0, 4.0, 1.0, 4.0);
  CHECK(res.translate_ok);
  CHECK(res.superadd_ok);
  const auto lin = verify_concave_inequalities(Modulus::linear(2.0, 4.0), 1.0, 2.0,
                                               1.5, 0.5, 1.0, 2.0, 3.0);
  CHECK(lin.translate_ok);
  CHECK(lin.superadd_ok);
  // a == b makes part 1 an equality, still satisfied.
  const auto eq = verify_concave_inequalities(root, 2.0, 2.0, 1.0, 0.0, 0.0, 0.0, 0.0);
  CHECK(eq.translate_ok);
  CHECK_THROWS_WITH_AS(
      verify_concave_inequalities(root, 3.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0),
      doctest::Contains("PreconditionViolated"), error);
  CHECK_THROWS_WITH_AS(
      verify_concave_inequalities(Modulus({{0.0, 0.0}, {1.0, 1.0}, {2.0, 4.0}}), 0.0,
                                  1.0, 1.0, 0.0, 0.0, 0.0, 0.0),
      doctest::Contains("AlphaNotConcave"), error);
}

TEST_CASE("concave moduli with zero floor are subadditive on sampled grids") {
  // Consequence check across a family of concave interpolants.
  for (double curve : {0.3, 0.5, 0.8}) {
    std::vector<std::pair<double, double>> bp;
    for (int i = 0; i <= 8; ++i) {
      const double t = i / 4.0;
      bp.emplace_back(t, std::pow(t, curve));
    }
    const Modulus m(bp);
    REQUIRE(check_concave(m).concave);
    CHECK(check_subadditive(m, {0.1, 0.25, 0.4, 0.5, 0.75, 1.0}).subadditive);
  }
}
