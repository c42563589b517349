#pragma once

#include <vector>

#include "chainscape/core.hpp"

namespace chainscape {

/// Hyperspace distance value. The infinity slot exists only for API symmetry
/// with unbounded ambient spaces; it is unreachable for nonempty finite
/// subsets. `truncated` is min(cap, value) when a cap was applied.
struct HausdorffValue {
  double value = 0.0;
  std::optional<double> truncated;
};

/// Two-sided sup-inf distance between nonempty subsets, computed by the plain
/// quadratic scan. Symmetric; zero exactly when A == B.
HausdorffValue hausdorff_distance(const MetricSpace& space, const Subset& a,
                                  const Subset& b);

/// min(cap, d_H(A,B)). Requires cap > 0.
double truncated_hausdorff(const MetricSpace& space, const Subset& a,
                           const Subset& b, double cap = 1.0);

/// Union of open eps-balls around the members of A; contains A.
Subset set_neighborhood(const MetricSpace& space, const Subset& a, double eps);

/// Sorted merge; the semilattice operation on subsets.
Subset union_sets(const Subset& a, const Subset& b);

/// Greedy maximal eps-separated subset, scanning points in `seed_order`
/// (identity when empty) and accepting a point iff it is at distance >= eps
/// from every point accepted so far. Every point of the space ends up within
/// < eps of some member.
Subset separated_net(const MetricSpace& space, double eps,
                     const std::vector<int>& seed_order = {});

/// True iff all distinct pairs in A are at distance >= eps.
bool is_separated(const MetricSpace& space, const Subset& a, double eps);

}  // namespace chainscape
