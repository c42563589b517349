#include "chainscape/hausdorff.hpp"

#include <algorithm>
#include <cmath>

namespace chainscape {

namespace {

double directed_sup_inf(const MetricSpace& space, const Subset& from,
                        const Subset& to) {
  double sup = 0.0;
  for (int x : from.members()) {
    double inf = kInfinity;
    for (int y : to.members()) inf = std::min(inf, space.dist(x, y));
    sup = std::max(sup, inf);
  }
  return sup;
}

void check_subset(const MetricSpace& space, const Subset& s, const char* what) {
  if (s.members().back() >= space.size())
    fail(errc::invalid_argument, std::string(what) + " index out of range");
}

}  // namespace

HausdorffValue hausdorff_distance(const MetricSpace& space, const Subset& a,
                                  const Subset& b) {
  check_subset(space, a, "A");
  check_subset(space, b, "B");
  const double d =
      std::max(directed_sup_inf(space, b, a), directed_sup_inf(space, a, b));
  return HausdorffValue{d, std::nullopt};
}

double truncated_hausdorff(const MetricSpace& space, const Subset& a,
                           const Subset& b, double cap) {
  if (!(cap > 0)) fail(errc::precondition_violated, "cap must be positive");
  return std::min(cap, hausdorff_distance(space, a, b).value);
}

Subset set_neighborhood(const MetricSpace& space, const Subset& a, double eps) {
  check_subset(space, a, "A");
  if (!(eps > 0)) fail(errc::precondition_violated, "eps must be positive");
  std::vector<int> out;
  for (int x = 0; x < space.size(); ++x) {
    for (int y : a.members())
      if (space.dist(x, y) < eps) {
        out.push_back(x);
        break;
      }
  }
  return Subset::of(std::move(out), space.size());
}

Subset union_sets(const Subset& a, const Subset& b) {
  std::vector<int> v = a.members();
  v.insert(v.end(), b.members().begin(), b.members().end());
  return Subset::of(std::move(v));
}

Subset separated_net(const MetricSpace& space, double eps,
                     const std::vector<int>& seed_order) {
  if (!(eps > 0)) fail(errc::precondition_violated, "eps must be positive");
  const int n = space.size();
  std::vector<int> order = seed_order;
  if (order.empty()) {
    order.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  } else {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    if (static_cast<int>(order.size()) != n)
      fail(errc::invalid_argument, "seed_order must be a permutation of the points");
    for (int i : order) {
      if (i < 0 || i >= n || seen[static_cast<std::size_t>(i)])
        fail(errc::invalid_argument, "seed_order must be a permutation of the points");
      seen[static_cast<std::size_t>(i)] = true;
    }
  }
  std::vector<int> accepted;
  for (int x : order) {
    bool ok = true;
    for (int y : accepted)
      if (space.dist(x, y) < eps) {
        ok = false;
        break;
      }
    if (ok) accepted.push_back(x);
  }
  return Subset::of(std::move(accepted), n);
}

bool is_separated(const MetricSpace& space, const Subset& a, double eps) {
  check_subset(space, a, "A");
  if (!(eps > 0)) fail(errc::precondition_violated, "eps must be positive");
  const auto& v = a.members();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (space.dist(v[i], v[j]) < eps) return false;
  return true;
}

}  // namespace chainscape
