#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "chainscape/chains.hpp"
#include "chainscape/core.hpp"

namespace chainscape {

/// Index-pair limit for the exhaustive monochromatic-subset search.
inline constexpr int kMonochromaticMaxFamily = 16;

/// Point pairs that defeat small-diameter chaining at the (eps, delta, eta)
/// scales: d(a_i, b_i) < delta for every member.
struct PairFamily {
  std::vector<std::pair<int, int>> pairs;
  double eps = 0.0;
  double delta = 0.0;
  double eta = 0.0;
};

/// Up to `count` pairs (x, y), x < y, with d(x,y) < delta admitting no
/// eta-chain of diameter < eps at all, in lexicographic order. An empty
/// family means no witnesses exist at these scales.
PairFamily failure_witnesses(const MetricSpace& space, double eps, double delta,
                             double eta, int count);

/// Four-way classification of a two-element subset {i, j} of the family by
/// the threshold tests d(a_i,a_j) < eta and d(b_i,b_j) < eta:
///   black = both, white = neither, green = first only, blue = second only.
enum class PairColor { black, white, green, blue };

const char* pair_color_name(PairColor c);

struct PairColoring {
  int family_size = 0;
  double eta = 0.0;
  std::vector<PairColor> upper;  ///< row-major upper triangle, i < j

  PairColor at(int i, int j) const;
};

PairColoring color_pairs(const MetricSpace& space, const PairFamily& family,
                         double eta);

/// Lexicographically smallest k-subset of family indices whose two-element
/// subsets all share one color, or nullopt. Exhaustive; family size capped at
/// kMonochromaticMaxFamily (throws FamilyTooLarge beyond).
std::optional<std::vector<int>> monochromatic_subset(const PairColoring& coloring,
                                                     int k);

/// Fixed-scale implication checks over an (eps, delta, eta, l) grid:
///  - bounded-length chaining at a scale implies unbounded-length chaining;
///  - chain existence is monotone under relaxing eps and eta.
/// Counterexamples are logically impossible on a valid space, so any entry
/// here flags an implementation bug.
struct ImplicationGridPoint {
  double eps = 0.0, delta = 0.0, eta = 0.0;
  int l = 0;
  bool ulcec_holds = false;  ///< finite l* and l* <= l
  bool ulcc_holds = false;   ///< every pair with d < delta is chained
};

struct ImplicationReport {
  std::vector<ImplicationGridPoint> grid;
  std::vector<std::string> counterexamples;
  bool all_hold = true;
};

ImplicationReport implication_suite(const MetricSpace& space,
                                    const std::vector<std::array<double, 4>>& grid);

}  // namespace chainscape
