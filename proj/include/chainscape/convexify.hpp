#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "chainscape/chains.hpp"
#include "chainscape/core.hpp"
#include "chainscape/moduli.hpp"

namespace chainscape {

/// Surrogate radii: r~(x,y) = d(x,y) when d(x,y) <= R, +infinity otherwise;
/// zero diagonal. Finite entries define the locality graph of the pipeline.
Matrix surrogate_radii(const MetricSpace& space, double R);

/// All-pairs shortest-path distances in the graph with edge weights
/// alpha(r~(u,v)) on finite-radius edges; +infinity across components.
/// Entry (i,j) is accumulated along the optimal path starting from the
/// lower-index endpoint, so values are bit-stable. Witnesses are the
/// lexicographically smallest optimal chains (keyed by i < j).
struct ChainCostResult {
  Matrix costs;
  std::map<std::pair<int, int>, std::vector<int>> witnesses;
};

/// Requires alpha concave and alpha(t) >= t on (0, R] (checked exactly at the
/// breakpoints and at R); throws AlphaNotConcave / AlphaBelowIdentity.
ChainCostResult chain_cost_metric(const MetricSpace& space, const Modulus& alpha,
                                  double R);

/// Full pipeline output. rho equals the chain-cost metric within a component
/// and 2R + p~(x, x0) + p~(y, y0) across components, with x0, y0 the
/// minimal-index basepoints of the respective components. All metric axioms,
/// d <= rho, and the same-component sandwich rho <= alpha(d) on <= R pairs are
/// verified before returning; a failure throws MetricAxiomFailure.
struct ConvexifyResult {
  double R = 0.0;
  Modulus alpha = Modulus::linear(1.0);
  Matrix r_tilde;
  Matrix p_tilde;
  Matrix rho;
  std::vector<int> component_of;  ///< component id = minimal member index
  std::vector<int> basepoints;    ///< one per component, ascending
  std::map<std::pair<int, int>, std::vector<int>> witnesses;
};

ConvexifyResult convexified_metric(const MetricSpace& space, const Modulus& alpha,
                                   double R);

/// Approximate-midpoint tester: for every point pair (x,y) and every ordered
/// grid pair (s,t) with metric(x,y) < w(s+t), scans all z for
/// metric(x,z) < w(s) and metric(z,y) < w(t). Records the minimal-index
/// witness per applicable combination, the lexicographically smallest
/// violating (x, y, s, t), and the smallest grid scale u such that every grid
/// pair with s,t >= u passes.
struct OmegaConvexCase {
  int x = 0, y = 0;
  double s = 0.0, t = 0.0;
  int z = -1;  ///< witness, or -1 for a violation
};

struct OmegaConvexReport {
  bool pass = true;
  std::optional<OmegaConvexCase> violation;
  std::vector<OmegaConvexCase> witnesses;
  std::optional<double> min_uniform_scale;
  long long checked = 0;
  long long vacuous = 0;
};

/// `components` (optional) supplies the partition used when
/// component_restriction is set; otherwise the partition is derived from the
/// finite entries of the matrix itself.
OmegaConvexReport check_omega_convex(
    const Matrix& metric, const Modulus& w, const std::vector<double>& st_grid,
    bool component_restriction = false,
    const std::optional<std::vector<int>>& components = std::nullopt,
    bool record_witnesses = true);

/// Iterative midpoint chain construction under an omega-convex metric:
/// starting from x, step i picks the minimal-index z with
/// metric(prev, z) < w(a/l) and metric(z, y) < w(a*(l-i)/l), ending at y.
/// Throws NoWitnessAtStep(i) when no point qualifies. Requires
/// metric(x,y) < w(a) and l >= 1. The result has eta = w(a/l), length <= l
/// and diameter < 2*w(a).
Chain convex_chain_builder(const Matrix& metric, const Modulus& w, int x, int y,
                           double a, int l);

}  // namespace chainscape
