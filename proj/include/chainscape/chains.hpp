#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "chainscape/core.hpp"

namespace chainscape {

/// Point-count limit for the exhaustive diameter-constrained search.
inline constexpr int kExactSearchMaxPoints = 16;

/// Finite witness of connectivity: a point sequence whose consecutive
/// distances are strictly below eta. length() counts steps.
struct Chain {
  std::vector<int> points;
  double eta = 0.0;

  int length() const { return static_cast<int>(points.size()) - 1; }
};

double chain_diameter(const MetricSpace& space, const Chain& chain);
bool chain_valid(const MetricSpace& space, const Chain& chain);

/// Shortest chain in the threshold graph {(u,v) : d(u,v) < eta}. Among
/// equal-length chains returns the lexicographically smallest index sequence.
/// Returns nullopt (unreachable) when no chain exists; [x] when x == y.
std::optional<Chain> shortest_chain(const MetricSpace& space, int x, int y,
                                    double eta);

/// Connected components of the threshold graph at resolution eta.
/// Component ids are the minimal member index.
struct ComponentPartition {
  double eta = 0.0;
  std::vector<int> component_of;

  int count() const;
  bool together(int x, int y) const { return component_of[static_cast<std::size_t>(x)] == component_of[static_cast<std::size_t>(y)]; }
};

ComponentPartition chain_components(const MetricSpace& space, double eta);

/// Minimum over x-y paths of the maximum step distance (the single-linkage
/// merge height). x and y are eta-chain connected iff the value is < eta.
double minimax_edge(const MetricSpace& space, int x, int y);

enum class ChainMode { ball, half_ball, exact };

const char* chain_mode_name(ChainMode m);

/// Diameter-constrained chain search from x to y with step bound eta:
///  - ball:      BFS among points z with d(x,z) < eps (diameter < 2*eps);
///  - half_ball: BFS among points z with d(x,z) < eps/2 (diameter < eps);
///  - exact:     exhaustive search over (visited-set, point) states with
///               incremental diameter pruning; returns a minimum-length chain
///               of diameter < eps (lexicographically smallest) or nullopt.
///               Only for spaces with at most kExactSearchMaxPoints points.
std::optional<Chain> constrained_chain(const MetricSpace& space, int x, int y,
                                       double eta, double eps, ChainMode mode);

/// delta*(eps, eta): the smallest distance between a pair admitting no
/// eta-chain of diameter < eps, or +infinity when every pair is linked.
/// The witness is the lexicographically smallest pair realizing the minimum.
/// With mode ball/half_ball the value is a certified upper/lower bound.
/// `within` restricts the scanned pairs (not the chains) to a subset.
struct UlccResult {
  double delta_star = kInfinity;
  std::optional<std::pair<int, int>> witness;
};

UlccResult ulcc_modulus(const MetricSpace& space, double eps, double eta,
                        ChainMode mode = ChainMode::exact,
                        const std::optional<Subset>& within = std::nullopt);

/// l*(eps, delta, eta): the maximum over pairs with d < delta of the minimal
/// length of an eta-chain of diameter < eps. `reachable == false` means some
/// pair with d < delta has no qualifying chain; the witness is then the
/// lexicographically smallest blocking pair, otherwise the smallest maximizer.
struct UlcecResult {
  bool reachable = true;
  int l_star = 0;
  std::pair<int, int> witness{0, 0};
};

UlcecResult ulcec_table(const MetricSpace& space, double eps, double delta,
                        double eta, ChainMode mode = ChainMode::exact);

/// L(eta) profile over an increasing eta grid: per eta the maximum over all
/// pairs of the shortest-chain length, or unreachable.
struct ChainProfileEntry {
  double eta = 0.0;
  std::optional<int> length_bound;             ///< nullopt = unreachable
  std::optional<std::pair<int, int>> witness;  ///< maximizer or blocked pair
};

struct ChainProfile {
  std::vector<ChainProfileEntry> entries;
};

ChainProfile chain_length_profile(const MetricSpace& space,
                                  const std::vector<double>& etas);

}  // namespace chainscape
