#include "chainscape/diagnostics.hpp"

#include <algorithm>
#include <string>

namespace chainscape {

PairFamily failure_witnesses(const MetricSpace& space, double eps, double delta,
                             double eta, int count) {
  if (!(eps > 0) || !(delta > 0) || !(eta > 0))
    fail(errc::precondition_violated, "scales must be positive");
  if (count < 0) fail(errc::invalid_argument, "count must be non-negative");
  PairFamily family;
  family.eps = eps;
  family.delta = delta;
  family.eta = eta;
  const int n = space.size();
  for (int x = 0; x < n && static_cast<int>(family.pairs.size()) < count; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (!(space.dist(x, y) < delta)) continue;
      if (!constrained_chain(space, x, y, eta, eps, ChainMode::exact)) {
        family.pairs.emplace_back(x, y);
        if (static_cast<int>(family.pairs.size()) >= count) break;
      }
    }
  return family;
}

const char* pair_color_name(PairColor c) {
  switch (c) {
    case PairColor::black: return "black";
    case PairColor::white: return "white";
    case PairColor::green: return "green";
    case PairColor::blue: return "blue";
  }
  return "black";
}

PairColor PairColoring::at(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i >= family_size || j >= family_size)
    fail(errc::invalid_argument, "coloring index out of range", i, j);
  if (i > j) std::swap(i, j);
  // Row-major upper triangle offset.
  const int row_start = i * (2 * family_size - i - 1) / 2;
  return upper[static_cast<std::size_t>(row_start + (j - i - 1))];
}

PairColoring color_pairs(const MetricSpace& space, const PairFamily& family,
                         double eta) {
  if (family.pairs.empty())
    fail(errc::precondition_violated, "family must be nonempty");
  if (!(eta > 0)) fail(errc::precondition_violated, "eta must be positive");
  PairColoring coloring;
  coloring.family_size = static_cast<int>(family.pairs.size());
  coloring.eta = eta;
  for (int i = 0; i < coloring.family_size; ++i)
    for (int j = i + 1; j < coloring.family_size; ++j) {
      const auto& [ai, bi] = family.pairs[static_cast<std::size_t>(i)];
      const auto& [aj, bj] = family.pairs[static_cast<std::size_t>(j)];
      const bool first = space.dist(ai, aj) < eta;
      const bool second = space.dist(bi, bj) < eta;
      PairColor c = first ? (second ? PairColor::black : PairColor::green)
                          : (second ? PairColor::blue : PairColor::white);
      coloring.upper.push_back(c);
    }
  return coloring;
}

std::optional<std::vector<int>> monochromatic_subset(const PairColoring& coloring,
                                                     int k) {
  const int n = coloring.family_size;
  if (n > kMonochromaticMaxFamily)
    fail(errc::family_too_large,
         "exhaustive search supports at most " +
             std::to_string(kMonochromaticMaxFamily) + " indices, got " +
             std::to_string(n));
  if (k < 1 || k > n) return std::nullopt;
  if (k == 1) return std::vector<int>{0};  // vacuously monochromatic
  // k-combinations in lexicographic order.
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    bool mono = true;
    const PairColor c0 = coloring.at(pick[0], pick[1]);
    for (int i = 0; i < k && mono; ++i)
      for (int j = i + 1; j < k; ++j)
        if (coloring.at(pick[static_cast<std::size_t>(i)],
                        pick[static_cast<std::size_t>(j)]) != c0) {
          mono = false;
          break;
        }
    if (mono) return pick;
    int pos = k - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) return std::nullopt;
    ++pick[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i)
      pick[static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i - 1)] + 1;
  }
}

ImplicationReport implication_suite(const MetricSpace& space,
                                    const std::vector<std::array<double, 4>>& grid) {
  ImplicationReport report;
  const int n = space.size();
  const auto chained = [&](double eps, double delta, double eta) {
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        if (!(space.dist(x, y) < delta)) continue;
        if (!constrained_chain(space, x, y, eta, eps, ChainMode::exact)) return false;
      }
    return true;
  };
  for (const auto& [eps, delta, eta, l_real] : grid) {
    ImplicationGridPoint point;
    point.eps = eps;
    point.delta = delta;
    point.eta = eta;
    point.l = static_cast<int>(l_real);
    const auto table = ulcec_table(space, eps, delta, eta);
    point.ulcec_holds = table.reachable && table.l_star <= point.l;
    point.ulcc_holds = chained(eps, delta, eta);
    if (point.ulcec_holds && !point.ulcc_holds) {
      report.all_hold = false;
      report.counterexamples.push_back(
          "bounded-length chaining without chaining at eps=" + std::to_string(eps) +
          " delta=" + std::to_string(delta) + " eta=" + std::to_string(eta));
    }
    report.grid.push_back(point);
  }
  // Monotonicity under relaxing eps and eta at fixed delta.
  for (const auto& a : report.grid)
    for (const auto& b : report.grid) {
      if (a.delta != b.delta || !(a.eps <= b.eps) || !(a.eta <= b.eta)) continue;
      if (a.ulcc_holds && !b.ulcc_holds) {
        report.all_hold = false;
        report.counterexamples.push_back(
            "chain existence not monotone between (eps=" + std::to_string(a.eps) +
            ",eta=" + std::to_string(a.eta) + ") and (eps=" + std::to_string(b.eps) +
            ",eta=" + std::to_string(b.eta) + ")");
      }
    }
  return report;
}

}  // namespace chainscape
