#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "chainscape/chains.hpp"
#include "chainscape/core.hpp"
#include "chainscape/hausdorff.hpp"
#include "chainscape/moduli.hpp"

namespace chainscape {

/// Refinement schedule: branching factors ls (each >= 2) with derived grid
/// increments D_n = 1/(l_1...l_n), D_0 = 1, plus a decreasing positive
/// sequence of distance thresholds and a base radius r0.
/// Consistency: D_n < delta_{n+2} whenever both are defined.
struct GridSchedule {
  std::vector<int> ls;
  std::vector<double> deltas;  ///< delta_1 > delta_2 > ... > 0
  double r0 = 1.0;

  /// D_1, D_2, ..., one per branching factor.
  std::vector<double> grid_deltas() const;
  double delta(int level) const { return deltas[static_cast<std::size_t>(level - 1)]; }

  static GridSchedule checked(std::vector<int> ls, std::vector<double> deltas,
                              double r0);
};

/// {sum_k i_k * D_k : 0 <= i_k < l_k, k <= m}, sorted; |Q_m| = l_1...l_m and
/// Q_m is nested in Q_{m+1} bit-exactly (identical summation order).
std::vector<double> build_grid(const GridSchedule& schedule, int m);

/// Grid-indexed point map: a discrete stand-in for a path. The grid is sorted,
/// contains 0 and domain_length, and values are point indices.
struct Trace {
  double domain_length = 1.0;
  std::vector<double> grid;
  std::vector<int> values;
};

/// Grid-indexed subset map; displacement measured with the Hausdorff metric.
struct HyperTrace {
  double domain_length = 1.0;
  std::vector<double> grid;
  std::vector<Subset> values;
};

/// Empirical displacement bound at gap t: the maximum distance between values
/// over all grid pairs at parameter distance <= t (step semantics).
double empirical_modulus_at(const MetricSpace& space, const Trace& trace, double t);
double empirical_modulus_at(const MetricSpace& space, const HyperTrace& trace, double t);

/// The empirical modulus sampled at the distinct grid gap values, packaged as
/// a Modulus with breakpoints at those gaps (exact there).
Modulus trace_modulus(const MetricSpace& space, const Trace& trace);
Modulus trace_modulus(const MetricSpace& space, const HyperTrace& trace);

/// Supplies chains for the refinement: called with neighbor values (u, v) and
/// the level m being built; expected to return a delta_{m+1}-chain of length
/// <= l_m (and, when the schedule is honest, diameter < 2^{-m} r0) whenever
/// d(u, v) < delta_m, or nullopt.
using ChainFinder = std::function<std::optional<Chain>(int u, int v, int level)>;

/// Breadth-first finder over the threshold graph at eta = delta_{level+1}.
ChainFinder bfs_chain_finder(const MetricSpace& space, const GridSchedule& schedule);

struct RefineLevelReport {
  int level = 0;
  bool modulus_ok = true;  ///< empirical modulus <= ladder level at every gap
  bool diam_ok = true;     ///< neighbor-interval diameters < 2^{-m} r0
  double max_interval_diameter = 0.0;
};

struct RefineCertificate {
  std::vector<RefineLevelReport> levels;
  bool all_modulus_ok = true;
  bool all_diam_ok = true;
};

struct RefineResult {
  Trace trace;                      ///< finest level, on Q_depth plus the endpoint
  std::vector<Trace> level_traces;  ///< per level 0..depth
  RefineCertificate certificate;
  ModulusLadder ladder;             ///< built from r0 and the grid increments
};

/// Builds a trace from x to y on the nested grids of the schedule, inserting
/// chain values between neighbor grid points level by level (level m fills
/// l_m - 1 interior points per interval; shorter chains pad with their final
/// value). Domain is [0,1] with value x at 0 and y at the endpoint.
/// The certificate records, per level m, whether the empirical modulus is
/// dominated by ladder level m at every grid gap and whether every
/// neighbor-interval diameter stays below 2^{-m} r0.
/// Throws ChainFinderFailed(level, u, v) when the finder reports failure or
/// returns a chain too long for the interval.
RefineResult refine_chain_to_trace(const MetricSpace& space, int x, int y,
                                   const GridSchedule& schedule, int depth,
                                   const ChainFinder& finder);
RefineResult refine_chain_to_trace(const MetricSpace& space, int x, int y,
                                   const GridSchedule& schedule, int depth);

/// Chain extraction: greedily selects grid points 0 = t_0 <= ... <= t_l = a
/// with consecutive gaps < mesh (each step as far as possible) and reads the
/// chain off the trace values, collapsing consecutive repeats. Requires the
/// empirical modulus at mesh to be < eta. Throws GridTooCoarse when no
/// selection achieves gaps < mesh.
Chain chain_from_trace(const MetricSpace& space, const Trace& trace, double eta,
                       double mesh);

/// Endpoint-pinned widening of a subset trace: at evaluation time t the value
/// is the union of f(q) over grid points q with |q - t| <= min(t, a - t).
/// Endpoints reproduce f(0) and f(a) exactly. eval_grid must be sorted within
/// [0, a] and contain both endpoints.
HyperTrace lift_trace_to_path(const HyperTrace& trace,
                              const std::vector<double>& eval_grid);

/// Per-gap certificate for the lift: for every evaluation pair at gap u the
/// displacement of g is bounded by the empirical modulus of f at 2u.
/// (At interior evaluation points the window moves at speed up to 2.)
bool check_lift_modulus(const MetricSpace& space, const HyperTrace& f,
                        const HyperTrace& g);

/// Supplies point-to-point traces on a shared grid for the connector.
using Connector = std::function<Trace(int u, int v)>;

/// Trace built from the shortest eta-chain, left-packed onto `grid` with the
/// final grid point pinned to the target. Throws ConnectorFailed when
/// unreachable.
Connector chain_connector(const MetricSpace& space, double eta,
                          std::vector<double> grid);

/// Subset-to-subset trace: each a in A is matched with its nearest point of B
/// (minimal index on ties) and vice versa; F(t) collects the connector values
/// of all matched pairs. F(0) = A and F(end) = B exactly.
HyperTrace hyperspace_connector(const MetricSpace& space, const Subset& a,
                                const Subset& b, const Connector& connector,
                                const std::vector<double>& grid);

}  // namespace chainscape
