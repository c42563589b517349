#include "chainscape/traces.hpp"

#include <algorithm>
#include <cmath>

namespace chainscape {

namespace {

void check_trace_shape(const std::vector<double>& grid, std::size_t value_count,
                       double domain_length) {
  if (grid.size() < 2 || grid.size() != value_count)
    fail(errc::invalid_argument, "trace needs a grid with one value per point");
  if (grid.front() != 0.0 || grid.back() != domain_length)
    fail(errc::invalid_argument, "trace grid must run from 0 to domain_length");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      fail(errc::invalid_argument, "trace grid must be strictly increasing");
}

template <typename TraceT, typename Dist>
double empirical_at(const TraceT& trace, double t, Dist&& dist) {
  double m = 0.0;
  const auto& g = trace.grid;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (g[j] - g[i] <= t) m = std::max(m, dist(trace.values[i], trace.values[j]));
  return m;
}

template <typename TraceT, typename Dist>
Modulus modulus_of(const TraceT& trace, Dist&& dist) {
  const auto& g = trace.grid;
  std::vector<std::pair<double, double>> samples;  // (gap, displacement)
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      samples.emplace_back(g[j] - g[i], dist(trace.values[i], trace.values[j]));
  std::sort(samples.begin(), samples.end());
  std::vector<std::pair<double, double>> bp{{0.0, 0.0}};
  double running = 0.0;
  for (const auto& [gap, d] : samples) {
    running = std::max(running, d);
    if (bp.back().first == gap)
      bp.back().second = running;
    else
      bp.emplace_back(gap, running);
  }
  return Modulus(std::move(bp));
}

}  // namespace

std::vector<double> GridSchedule::grid_deltas() const {
  std::vector<double> out;
  out.reserve(ls.size());
  double d = 1.0;
  for (int l : ls) {
    d /= static_cast<double>(l);
    out.push_back(d);
  }
  return out;
}

GridSchedule GridSchedule::checked(std::vector<int> ls, std::vector<double> deltas,
                                   double r0) {
  GridSchedule s;
  s.ls = std::move(ls);
  s.deltas = std::move(deltas);
  s.r0 = r0;
  if (!(s.r0 > 0)) fail(errc::schedule_inconsistent, "r0 must be positive");
  if (s.ls.empty() || s.deltas.empty())
    fail(errc::schedule_inconsistent, "schedule needs branching factors and deltas");
  for (std::size_t i = 0; i < s.ls.size(); ++i)
    if (s.ls[i] < 2)
      fail(errc::schedule_inconsistent, "branching factors must be >= 2",
           static_cast<std::int64_t>(i));
  for (std::size_t i = 0; i < s.deltas.size(); ++i) {
    if (!(s.deltas[i] > 0))
      fail(errc::schedule_inconsistent, "deltas must be positive",
           static_cast<std::int64_t>(i));
    if (i > 0 && !(s.deltas[i] < s.deltas[i - 1]))
      fail(errc::schedule_inconsistent, "deltas must be strictly decreasing",
           static_cast<std::int64_t>(i));
  }
  const auto grid = s.grid_deltas();
  for (std::size_t n = 1; n <= grid.size(); ++n) {
    const std::size_t k = n + 2;
    if (k <= s.deltas.size() && !(grid[n - 1] < s.deltas[k - 1]))
      fail(errc::schedule_inconsistent,
           "grid increment " + std::to_string(n) + " must stay below delta_" +
               std::to_string(k),
           static_cast<std::int64_t>(n));
  }
  return s;
}

std::vector<double> build_grid(const GridSchedule& schedule, int m) {
  if (m < 0 || m > static_cast<int>(schedule.ls.size()))
    fail(errc::invalid_argument, "grid level out of range", m);
  long long card = 1;
  for (int k = 0; k < m; ++k) {
    card *= schedule.ls[static_cast<std::size_t>(k)];
    if (card > 10'000'000) fail(errc::invalid_argument, "grid too large");
  }
  const auto deltas = schedule.grid_deltas();
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(card));
  std::vector<int> digits(static_cast<std::size_t>(m), 0);
  while (true) {
    double v = 0.0;
    for (int k = 0; k < m; ++k)
      v += static_cast<double>(digits[static_cast<std::size_t>(k)]) *
           deltas[static_cast<std::size_t>(k)];
    out.push_back(v);
    int pos = m - 1;
    while (pos >= 0 && ++digits[static_cast<std::size_t>(pos)] ==
                           schedule.ls[static_cast<std::size_t>(pos)]) {
      digits[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  std::sort(out.begin(), out.end());
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i] == out[i - 1])
      fail(errc::schedule_inconsistent, "grid values collided");
  return out;
}

double empirical_modulus_at(const MetricSpace& space, const Trace& trace, double t) {
  return empirical_at(trace, t,
                      [&](int u, int v) { return space.dist(u, v); });
}

double empirical_modulus_at(const MetricSpace& space, const HyperTrace& trace,
                            double t) {
  return empirical_at(trace, t, [&](const Subset& u, const Subset& v) {
    return hausdorff_distance(space, u, v).value;
  });
}

Modulus trace_modulus(const MetricSpace& space, const Trace& trace) {
  check_trace_shape(trace.grid, trace.values.size(), trace.domain_length);
  return modulus_of(trace, [&](int u, int v) { return space.dist(u, v); });
}

Modulus trace_modulus(const MetricSpace& space, const HyperTrace& trace) {
  check_trace_shape(trace.grid, trace.values.size(), trace.domain_length);
  return modulus_of(trace, [&](const Subset& u, const Subset& v) {
    return hausdorff_distance(space, u, v).value;
  });
}

ChainFinder bfs_chain_finder(const MetricSpace& space, const GridSchedule& schedule) {
  return [space, schedule](int u, int v, int level) -> std::optional<Chain> {
    if (level < 1 || level + 1 > static_cast<int>(schedule.deltas.size()))
      fail(errc::invalid_argument, "finder level out of schedule range", level);
    return shortest_chain(space, u, v, schedule.delta(level + 1));
  };
}

RefineResult refine_chain_to_trace(const MetricSpace& space, int x, int y,
                                   const GridSchedule& schedule, int depth,
                                   const ChainFinder& finder) {
  if (x < 0 || x >= space.size() || y < 0 || y >= space.size())
    fail(errc::invalid_argument, "endpoint out of range");
  if (depth < 1 || depth > static_cast<int>(schedule.ls.size()))
    fail(errc::schedule_inconsistent, "depth must fit the branching factors", depth);
  if (static_cast<int>(schedule.deltas.size()) < depth + 1)
    fail(errc::schedule_inconsistent,
         "schedule needs deltas up to level depth+1", depth);

  RefineResult result{Trace{},
                      {},
                      RefineCertificate{},
                      modulus_ladder(schedule.r0, [&] {
                        auto gd = schedule.grid_deltas();
                        gd.resize(static_cast<std::size_t>(depth));
                        return gd;
                      }(), depth)};

  Trace level0;
  level0.domain_length = 1.0;
  level0.grid = {0.0, 1.0};
  level0.values = {x, y};
  result.level_traces.push_back(level0);

  for (int m = 1; m <= depth; ++m) {
    const Trace& prev = result.level_traces.back();
    auto grid = build_grid(schedule, m);
    grid.push_back(1.0);
    Trace cur;
    cur.domain_length = 1.0;
    cur.grid = grid;
    cur.values.assign(grid.size(), -1);

    // Carry previous values across (nested grids are bit-identical).
    for (std::size_t i = 0; i < prev.grid.size(); ++i) {
      const auto it = std::lower_bound(grid.begin(), grid.end(), prev.grid[i]);
      if (it == grid.end() || *it != prev.grid[i])
        fail(errc::schedule_inconsistent, "grid nesting broke", m);
      cur.values[static_cast<std::size_t>(it - grid.begin())] = prev.values[i];
    }

    const int lm = schedule.ls[static_cast<std::size_t>(m - 1)];
    for (std::size_t pi = 0; pi + 1 < prev.grid.size(); ++pi) {
      const double p = prev.grid[pi];
      const double q = prev.grid[pi + 1];
      const int u = prev.values[pi];
      const int v = prev.values[pi + 1];
      std::vector<std::size_t> interior;
      for (std::size_t gi = 0; gi < grid.size(); ++gi)
        if (grid[gi] > p && grid[gi] < q) interior.push_back(gi);
      if (interior.empty()) continue;
      if (u == v) {
        for (std::size_t gi : interior) cur.values[gi] = u;
        continue;
      }
      const auto chain = finder(u, v, m);
      if (!chain || chain->points.front() != u || chain->points.back() != v)
        fail(errc::chain_finder_failed,
             "level " + std::to_string(m) + " between " + space.label(u) + " and " +
                 space.label(v),
             m, u, v);
      const int len = chain->length();
      if (len > lm)
        fail(errc::chain_finder_failed,
             "level " + std::to_string(m) + " chain of length " + std::to_string(len) +
                 " exceeds l_" + std::to_string(m) + " = " + std::to_string(lm),
             m, u, v);
      for (std::size_t j = 0; j < interior.size(); ++j) {
        const int pick = std::min(static_cast<int>(j) + 1, len);
        cur.values[interior[j]] = chain->points[static_cast<std::size_t>(pick)];
      }
    }
    result.level_traces.push_back(std::move(cur));
  }

  // Certificates per level.
  for (int m = 1; m <= depth; ++m) {
    const Trace& cur = result.level_traces[static_cast<std::size_t>(m)];
    const Trace& prev = result.level_traces[static_cast<std::size_t>(m - 1)];
    RefineLevelReport report;
    report.level = m;
    const auto ladder_level = result.ladder.level(m);
    for (std::size_t i = 0; i < cur.grid.size() && report.modulus_ok; ++i)
      for (std::size_t j = i + 1; j < cur.grid.size(); ++j) {
        const double gap = cur.grid[j] - cur.grid[i];
        if (space.dist(cur.values[i], cur.values[j]) > ladder_level(gap)) {
          report.modulus_ok = false;
          break;
        }
      }
    const double bound = std::pow(2.0, -m) * schedule.r0;
    for (std::size_t pi = 0; pi + 1 < prev.grid.size(); ++pi) {
      std::vector<int> pts;
      for (std::size_t gi = 0; gi < cur.grid.size(); ++gi)
        if (cur.grid[gi] >= prev.grid[pi] && cur.grid[gi] <= prev.grid[pi + 1])
          pts.push_back(cur.values[gi]);
      double diam = 0.0;
      for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b)
          diam = std::max(diam, space.dist(pts[a], pts[b]));
      report.max_interval_diameter = std::max(report.max_interval_diameter, diam);
      if (!(diam < bound)) report.diam_ok = false;
    }
    result.certificate.all_modulus_ok &= report.modulus_ok;
    result.certificate.all_diam_ok &= report.diam_ok;
    result.certificate.levels.push_back(report);
  }

  result.trace = result.level_traces.back();
  return result;
}

RefineResult refine_chain_to_trace(const MetricSpace& space, int x, int y,
                                   const GridSchedule& schedule, int depth) {
  return refine_chain_to_trace(space, x, y, schedule, depth,
                               bfs_chain_finder(space, schedule));
}

Chain chain_from_trace(const MetricSpace& space, const Trace& trace, double eta,
                       double mesh) {
  check_trace_shape(trace.grid, trace.values.size(), trace.domain_length);
  if (!(eta > 0) || !(mesh > 0))
    fail(errc::precondition_violated, "eta and mesh must be positive");
  if (!(empirical_modulus_at(space, trace, mesh) < eta))
    fail(errc::precondition_violated,
         "trace displacement at the mesh scale must stay below eta");
  std::vector<std::size_t> selection{0};
  while (selection.back() + 1 < trace.grid.size()) {
    const std::size_t cur = selection.back();
    std::size_t next = cur;
    for (std::size_t j = cur + 1; j < trace.grid.size(); ++j)
      if (trace.grid[j] - trace.grid[cur] < mesh) next = j;
    if (next == cur)
      fail(errc::grid_too_coarse, "no grid point within the mesh",
           static_cast<std::int64_t>(cur));
    selection.push_back(next);
  }
  std::vector<int> points;
  for (std::size_t idx : selection) {
    const int v = trace.values[idx];
    if (points.empty() || points.back() != v) points.push_back(v);
  }
  return Chain{std::move(points), eta};
}

HyperTrace lift_trace_to_path(const HyperTrace& trace,
                              const std::vector<double>& eval_grid) {
  check_trace_shape(trace.grid, trace.values.size(), trace.domain_length);
  const double a = trace.domain_length;
  if (eval_grid.size() < 2 || eval_grid.front() != 0.0 || eval_grid.back() != a)
    fail(errc::invalid_argument, "eval_grid must run from 0 to domain_length");
  for (std::size_t i = 1; i < eval_grid.size(); ++i)
    if (!(eval_grid[i] > eval_grid[i - 1]))
      fail(errc::invalid_argument, "eval_grid must be strictly increasing");

  HyperTrace out;
  out.domain_length = a;
  out.grid = eval_grid;
  out.values.reserve(eval_grid.size());
  for (double t : eval_grid) {
    const double radius = std::min(t, a - t);
    std::vector<int> members;
    for (std::size_t i = 0; i < trace.grid.size(); ++i)
      if (std::fabs(trace.grid[i] - t) <= radius) {
        const auto& m = trace.values[i].members();
        members.insert(members.end(), m.begin(), m.end());
      }
    out.values.push_back(Subset::of(std::move(members)));
  }
  return out;
}

bool check_lift_modulus(const MetricSpace& space, const HyperTrace& f,
                        const HyperTrace& g) {
  for (std::size_t i = 0; i < g.grid.size(); ++i)
    for (std::size_t j = i + 1; j < g.grid.size(); ++j) {
      const double gap = g.grid[j] - g.grid[i];
      const double moved =
          hausdorff_distance(space, g.values[i], g.values[j]).value;
      if (moved > empirical_modulus_at(space, f, 2.0 * gap)) return false;
    }
  return true;
}

Connector chain_connector(const MetricSpace& space, double eta,
                          std::vector<double> grid) {
  if (grid.size() < 2) fail(errc::invalid_argument, "connector grid needs two points");
  return [space, eta, grid = std::move(grid)](int u, int v) -> Trace {
    const auto chain = shortest_chain(space, u, v, eta);
    if (!chain)
      fail(errc::connector_failed,
           "no chain between " + space.label(u) + " and " + space.label(v), u, v);
    const int len = chain->length();
    Trace t;
    t.domain_length = grid.back();
    t.grid = grid;
    t.values.reserve(grid.size());
    const int last = static_cast<int>(grid.size()) - 1;
    for (int j = 0; j <= last; ++j) {
      const int pick = j == last ? len : std::min(j, len);
      t.values.push_back(chain->points[static_cast<std::size_t>(pick)]);
    }
    return t;
  };
}

HyperTrace hyperspace_connector(const MetricSpace& space, const Subset& a,
                                const Subset& b, const Connector& connector,
                                const std::vector<double>& grid) {
  if (grid.size() < 2 || grid.front() != 0.0)
    fail(errc::invalid_argument, "connector grid must start at 0");
  const auto nearest = [&](int x, const Subset& in) {
    int best = in.members().front();
    for (int cand : in.members())
      if (space.dist(x, cand) < space.dist(x, best)) best = cand;
    return best;
  };
  std::vector<Trace> strands;
  for (int pa : a.members()) strands.push_back(connector(pa, nearest(pa, b)));
  for (int pb : b.members()) strands.push_back(connector(nearest(pb, a), pb));
  for (const auto& s : strands)
    if (s.grid.size() != grid.size())
      fail(errc::connector_failed, "connector returned a trace off the shared grid");

  HyperTrace out;
  out.domain_length = grid.back();
  out.grid = grid;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    std::vector<int> members;
    for (const auto& s : strands) members.push_back(s.values[j]);
    out.values.push_back(Subset::of(std::move(members), space.size()));
  }
  return out;
}

}  // namespace chainscape
