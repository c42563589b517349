#include "chainscape/convexify.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace chainscape {

namespace {

void check_alpha(const Modulus& alpha, double R) {
  const auto conc = check_concave(alpha);
  if (!conc.concave)
    fail(errc::alpha_not_concave,
         "alpha slope increases at breakpoint triple (" +
             std::to_string((*conc.violation)[0]) + "," +
             std::to_string((*conc.violation)[1]) + "," +
             std::to_string((*conc.violation)[2]) + ")");
  // alpha - id is piecewise linear, so non-negativity on (0,R] reduces to the
  // breakpoints inside the interval plus the endpoint R.
  for (const auto& [t, v] : alpha.breakpoints()) {
    if (t > 0 && t <= R && v < t)
      fail(errc::alpha_below_identity,
           "alpha(" + std::to_string(t) + ") = " + std::to_string(v) + " < t");
  }
  if (alpha(R) < R)
    fail(errc::alpha_below_identity,
         "alpha(" + std::to_string(R) + ") = " + std::to_string(alpha(R)) + " < R");
}

std::vector<int> finite_edge_components(const Matrix& weights) {
  const int n = weights.n();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  for (int root = 0; root < n; ++root) {
    if (comp[static_cast<std::size_t>(root)] >= 0) continue;
    std::deque<int> queue{root};
    comp[static_cast<std::size_t>(root)] = root;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < n; ++v)
        if (comp[static_cast<std::size_t>(v)] < 0 && v != u &&
            weights(u, v) != kInfinity) {
          comp[static_cast<std::size_t>(v)] = root;
          queue.push_back(v);
        }
    }
  }
  return comp;
}

// Label-correcting single-source pass. dist[v] is the minimum over paths of
// the left-to-right floating-point fold of the edge weights, which is a
// schedule-independent fixpoint because rounding is monotone.
std::vector<double> single_source_costs(const Matrix& w, int src) {
  const int n = w.n();
  std::vector<double> dist(static_cast<std::size_t>(n), kInfinity);
  std::vector<char> queued(static_cast<std::size_t>(n), 0);
  dist[static_cast<std::size_t>(src)] = 0.0;
  std::deque<int> queue{src};
  queued[static_cast<std::size_t>(src)] = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    queued[static_cast<std::size_t>(u)] = 0;
    for (int v = 0; v < n; ++v) {
      if (v == u || w(u, v) == kInfinity) continue;
      const double cand = dist[static_cast<std::size_t>(u)] + w(u, v);
      if (cand < dist[static_cast<std::size_t>(v)]) {
        dist[static_cast<std::size_t>(v)] = cand;
        if (!queued[static_cast<std::size_t>(v)]) {
          queue.push_back(v);
          queued[static_cast<std::size_t>(v)] = 1;
        }
      }
    }
  }
  return dist;
}

// Lexicographically smallest chain among those whose every prefix realizes
// the computed cost (tight chains). Tight edges form a DAG since all weights
// are positive.
std::vector<int> tight_witness(const Matrix& w, const std::vector<double>& dist,
                               int src, int dst) {
  const int n = w.n();
  const auto tight = [&](int u, int v) {
    return u != v && w(u, v) != kInfinity &&
           dist[static_cast<std::size_t>(u)] != kInfinity &&
           dist[static_cast<std::size_t>(u)] + w(u, v) ==
               dist[static_cast<std::size_t>(v)];
  };
  // Vertices that reach dst along tight edges.
  std::vector<char> reaches(static_cast<std::size_t>(n), 0);
  reaches[static_cast<std::size_t>(dst)] = 1;
  std::deque<int> queue{dst};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int u = 0; u < n; ++u)
      if (!reaches[static_cast<std::size_t>(u)] && tight(u, v)) {
        reaches[static_cast<std::size_t>(u)] = 1;
        queue.push_back(u);
      }
  }
  std::vector<int> path{src};
  int cur = src;
  int guard = 0;
  while (cur != dst) {
    if (++guard > n * n)
      fail(errc::metric_axiom_failure, "tight-path reconstruction cycled", src, dst);
    int next = -1;
    for (int z = 0; z < n && next < 0; ++z)
      if (tight(cur, z) && reaches[static_cast<std::size_t>(z)]) next = z;
    if (next < 0)
      fail(errc::metric_axiom_failure, "no tight continuation", src, dst);
    path.push_back(next);
    cur = next;
  }
  return path;
}

}  // namespace

Matrix surrogate_radii(const MetricSpace& space, double R) {
  if (!(R > 0)) fail(errc::precondition_violated, "R must be positive");
  const int n = space.size();
  Matrix r(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double d = space.dist(i, j);
      r(i, j) = d <= R ? d : kInfinity;
    }
  return r;
}

ChainCostResult chain_cost_metric(const MetricSpace& space, const Modulus& alpha,
                                  double R) {
  check_alpha(alpha, R);
  const int n = space.size();
  const Matrix radii = surrogate_radii(space, R);
  Matrix weights(n, kInfinity);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j)
        weights(i, j) = 0.0;
      else if (radii(i, j) != kInfinity)
        weights(i, j) = alpha(radii(i, j));
    }

  ChainCostResult out;
  out.costs = Matrix(n, kInfinity);
  for (int i = 0; i < n; ++i) out.costs(i, i) = 0.0;
  for (int src = 0; src < n; ++src) {
    const auto dist = single_source_costs(weights, src);
    for (int dst = src + 1; dst < n; ++dst) {
      const double v = dist[static_cast<std::size_t>(dst)];
      out.costs(src, dst) = v;
      out.costs(dst, src) = v;
      if (v != kInfinity)
        out.witnesses[{src, dst}] = tight_witness(weights, dist, src, dst);
    }
  }
  return out;
}

ConvexifyResult convexified_metric(const MetricSpace& space, const Modulus& alpha,
                                   double R) {
  const int n = space.size();
  ConvexifyResult res;
  res.R = R;
  res.alpha = alpha;
  res.r_tilde = surrogate_radii(space, R);
  auto cost = chain_cost_metric(space, alpha, R);
  res.p_tilde = std::move(cost.costs);
  res.witnesses = std::move(cost.witnesses);
  res.component_of = finite_edge_components(res.r_tilde);
  for (int i = 0; i < n; ++i)
    if (res.component_of[static_cast<std::size_t>(i)] == i) res.basepoints.push_back(i);

  res.rho = Matrix(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double v;
      if (res.component_of[static_cast<std::size_t>(i)] ==
          res.component_of[static_cast<std::size_t>(j)]) {
        v = res.p_tilde(i, j);
      } else {
        const int bi = res.component_of[static_cast<std::size_t>(i)];
        const int bj = res.component_of[static_cast<std::size_t>(j)];
        v = 2.0 * R + res.p_tilde(i, bi) + res.p_tilde(j, bj);
      }
      res.rho(i, j) = v;
      res.rho(j, i) = v;
    }

  // Verification gate: the declared invariants are checked before returning.
  // The lower sandwich d <= rho is guaranteed within components (alpha >= id
  // makes every chain cost dominate the walked distance); across components
  // rho can drop to 2R regardless of d, so the bound is scoped accordingly.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!(res.rho(i, j) > 0) || res.rho(i, j) == kInfinity)
        fail(errc::metric_axiom_failure, "rho not positive-finite off-diagonal", i, j);
      if (res.component_of[static_cast<std::size_t>(i)] !=
          res.component_of[static_cast<std::size_t>(j)])
        continue;
      if (space.dist(i, j) > res.rho(i, j))
        fail(errc::metric_axiom_failure, "rho below the original metric", i, j);
      if (space.dist(i, j) <= R && res.rho(i, j) > alpha(space.dist(i, j)))
        fail(errc::metric_axiom_failure, "rho above alpha(d) on a local pair", i, j);
    }
  const auto check_triangle = [&](int i, int j, int k) {
    if (res.rho(i, k) > res.rho(i, j) + res.rho(j, k))
      fail(errc::metric_axiom_failure, "rho triangle inequality failed", i, j, k);
  };
  if (n <= 64) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) check_triangle(i, j, k);
  } else {
    // Deterministic sample of triples.
    unsigned long long state = 0x9e3779b97f4a7c15ULL;
    const auto next = [&state, n]() {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      return static_cast<int>(state % static_cast<unsigned long long>(n));
    };
    for (int it = 0; it < 100000; ++it) check_triangle(next(), next(), next());
  }
  return res;
}

OmegaConvexReport check_omega_convex(
    const Matrix& metric, const Modulus& w, const std::vector<double>& st_grid,
    bool component_restriction,
    const std::optional<std::vector<int>>& components, bool record_witnesses) {
  const int n = metric.n();
  if (n <= 0) fail(errc::invalid_argument, "metric matrix must be nonempty");
  std::vector<double> grid = st_grid;
  for (double s : grid)
    if (!(s > 0)) fail(errc::precondition_violated, "st_grid values must be positive");
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<int> comp;
  if (component_restriction) {
    if (components) {
      comp = *components;
      if (static_cast<int>(comp.size()) != n)
        fail(errc::invalid_argument, "component partition size mismatch");
    } else {
      comp = finite_edge_components(metric);
    }
  }

  const int g = static_cast<int>(grid.size());
  std::vector<char> pair_ok(static_cast<std::size_t>(g) * static_cast<std::size_t>(g), 1);
  OmegaConvexReport report;
  long long violations = 0;
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      if (component_restriction &&
          comp[static_cast<std::size_t>(x)] != comp[static_cast<std::size_t>(y)])
        continue;
      for (int si = 0; si < g; ++si)
        for (int ti = 0; ti < g; ++ti) {
          const double s = grid[static_cast<std::size_t>(si)];
          const double t = grid[static_cast<std::size_t>(ti)];
          if (!(metric(x, y) < w(s + t))) {
            ++report.vacuous;
            continue;
          }
          ++report.checked;
          int witness = -1;
          for (int z = 0; z < n && witness < 0; ++z) {
            if (component_restriction &&
                comp[static_cast<std::size_t>(z)] != comp[static_cast<std::size_t>(x)])
              continue;
            if (metric(x, z) < w(s) && metric(z, y) < w(t)) witness = z;
          }
          if (witness < 0) {
            ++violations;
            pair_ok[static_cast<std::size_t>(si) * static_cast<std::size_t>(g) +
                    static_cast<std::size_t>(ti)] = 0;
            if (!report.violation) report.violation = OmegaConvexCase{x, y, s, t, -1};
            report.pass = false;
          } else if (record_witnesses) {
            report.witnesses.push_back(OmegaConvexCase{x, y, s, t, witness});
          }
        }
    }

  for (int ui = 0; ui < g; ++ui) {
    bool all_ok = true;
    for (int si = ui; si < g && all_ok; ++si)
      for (int ti = ui; ti < g; ++ti)
        if (!pair_ok[static_cast<std::size_t>(si) * static_cast<std::size_t>(g) +
                     static_cast<std::size_t>(ti)]) {
          all_ok = false;
          break;
        }
    if (all_ok) {
      report.min_uniform_scale = grid[static_cast<std::size_t>(ui)];
      break;
    }
  }
  return report;
}

Chain convex_chain_builder(const Matrix& metric, const Modulus& w, int x, int y,
                           double a, int l) {
  const int n = metric.n();
  if (x < 0 || x >= n || y < 0 || y >= n)
    fail(errc::invalid_argument, "endpoint out of range");
  if (l < 1) fail(errc::precondition_violated, "l must be >= 1");
  if (!(a > 0)) fail(errc::precondition_violated, "a must be positive");
  const double step_bound = w(a / static_cast<double>(l));
  if (x == y) return Chain{{x}, step_bound};
  if (!(metric(x, y) < w(a)))
    fail(errc::precondition_violated, "need metric(x,y) < w(a)");

  std::vector<int> points{x};
  int prev = x;
  for (int i = 1; i < l && prev != y; ++i) {
    const double tail_bound =
        w(a * static_cast<double>(l - i) / static_cast<double>(l));
    int z = -1;
    for (int cand = 0; cand < n && z < 0; ++cand)
      if (metric(prev, cand) < step_bound && metric(cand, y) < tail_bound) z = cand;
    if (z < 0)
      fail(errc::no_witness_at_step,
           "no midpoint at step " + std::to_string(i) + " (metric not convex at scale " +
               std::to_string(a * static_cast<double>(l - i) / static_cast<double>(l)) + ")",
           i, prev, y);
    points.push_back(z);
    prev = z;
  }
  if (prev != y) points.push_back(y);
  return Chain{std::move(points), step_bound};
}

}  // namespace chainscape
