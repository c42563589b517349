#include "chainscape/chains.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <unordered_map>

namespace chainscape {

namespace {

void check_point(const MetricSpace& space, int x, const char* what) {
  if (x < 0 || x >= space.size())
    fail(errc::invalid_argument, std::string(what) + " out of range", x);
}

void check_positive(double v, const char* what) {
  if (!(v > 0)) fail(errc::precondition_violated, std::string(what) + " must be positive");
}

// BFS hop distances from `src` over the threshold graph restricted to
// `allowed`, edges d(u,v) < eta.
std::vector<int> bfs_distances(const MetricSpace& space, int src, double eta,
                               const std::vector<char>& allowed) {
  const int n = space.size();
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  if (!allowed[static_cast<std::size_t>(src)]) return dist;
  std::deque<int> queue{src};
  dist[static_cast<std::size_t>(src)] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v = 0; v < n; ++v) {
      if (!allowed[static_cast<std::size_t>(v)] || dist[static_cast<std::size_t>(v)] >= 0)
        continue;
      if (u != v && space.dist(u, v) < eta) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

// Lexicographically smallest shortest path: walk from x picking the smallest
// next vertex that stays on some shortest x-y path.
std::optional<Chain> bfs_chain(const MetricSpace& space, int x, int y, double eta,
                               const std::vector<char>& allowed) {
  if (!allowed[static_cast<std::size_t>(x)] || !allowed[static_cast<std::size_t>(y)])
    return std::nullopt;
  if (x == y) return Chain{{x}, eta};
  const auto from_x = bfs_distances(space, x, eta, allowed);
  const auto from_y = bfs_distances(space, y, eta, allowed);
  const int total = from_x[static_cast<std::size_t>(y)];
  if (total < 0) return std::nullopt;
  std::vector<int> points{x};
  int cur = x;
  for (int step = 1; step <= total; ++step) {
    for (int v = 0; v < space.size(); ++v) {
      if (!allowed[static_cast<std::size_t>(v)] || v == cur) continue;
      if (space.dist(cur, v) < eta &&
          from_x[static_cast<std::size_t>(v)] == step &&
          from_y[static_cast<std::size_t>(v)] == total - step) {
        points.push_back(v);
        cur = v;
        break;
      }
    }
  }
  return Chain{std::move(points), eta};
}

std::vector<char> all_allowed(int n) {
  return std::vector<char>(static_cast<std::size_t>(n), 1);
}

// Exhaustive minimum-length search over (visited-set, point) states with the
// running diameter pruned against eps. FIFO expansion in ascending vertex
// order yields the lexicographically smallest minimal chain.
std::optional<Chain> exact_constrained(const MetricSpace& space, int x, int y,
                                       double eta, double eps) {
  const int n = space.size();
  if (n > kExactSearchMaxPoints)
    fail(errc::exact_search_too_large,
         "exact mode supports at most " + std::to_string(kExactSearchMaxPoints) +
             " points, got " + std::to_string(n));
  if (x == y) return Chain{{x}, eta};

  // Shortcut: when no subset can violate the diameter bound the constraint
  // is inert and plain BFS already gives the minimal chain.
  if (diameter(space) < eps) {
    auto chain = bfs_chain(space, x, y, eta, all_allowed(n));
    return chain;
  }

  struct Node {
    std::uint32_t mask;
    std::uint8_t point;
    double diam;
  };
  const auto key = [n](std::uint32_t mask, int v) {
    return mask * static_cast<std::uint32_t>(n) + static_cast<std::uint32_t>(v);
  };
  std::unordered_map<std::uint32_t, std::uint32_t> parent;  // state -> state
  std::deque<Node> queue;
  const std::uint32_t start_mask = 1u << x;
  queue.push_back({start_mask, static_cast<std::uint8_t>(x), 0.0});
  parent[key(start_mask, x)] = key(start_mask, x);

  while (!queue.empty()) {
    const Node cur = queue.front();
    queue.pop_front();
    for (int z = 0; z < n; ++z) {
      const std::uint32_t bit = 1u << z;
      if (cur.mask & bit) continue;
      if (!(space.dist(cur.point, z) < eta)) continue;
      double diam = cur.diam;
      for (int w = 0; w < n; ++w)
        if (cur.mask & (1u << w)) diam = std::max(diam, space.dist(w, z));
      if (!(diam < eps)) continue;
      const std::uint32_t mask = cur.mask | bit;
      const std::uint32_t k = key(mask, z);
      if (parent.contains(k)) continue;
      parent[k] = key(cur.mask, cur.point);
      if (z == y) {
        std::vector<int> points;
        std::uint32_t state = k;
        while (true) {
          points.push_back(static_cast<int>(state % static_cast<std::uint32_t>(n)));
          const std::uint32_t up = parent[state];
          if (up == state) break;
          state = up;
        }
        std::reverse(points.begin(), points.end());
        return Chain{std::move(points), eta};
      }
      queue.push_back({mask, static_cast<std::uint8_t>(z), diam});
    }
  }
  return std::nullopt;
}

}  // namespace

double chain_diameter(const MetricSpace& space, const Chain& chain) {
  double m = 0.0;
  const auto& p = chain.points;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      m = std::max(m, space.dist(p[a], p[b]));
  return m;
}

bool chain_valid(const MetricSpace& space, const Chain& chain) {
  if (chain.points.empty()) return false;
  for (int i : chain.points)
    if (i < 0 || i >= space.size()) return false;
  for (std::size_t i = 1; i < chain.points.size(); ++i)
    if (!(space.dist(chain.points[i - 1], chain.points[i]) < chain.eta)) return false;
  return true;
}

std::optional<Chain> shortest_chain(const MetricSpace& space, int x, int y,
                                    double eta) {
  check_point(space, x, "x");
  check_point(space, y, "y");
  check_positive(eta, "eta");
  return bfs_chain(space, x, y, eta, all_allowed(space.size()));
}

int ComponentPartition::count() const {
  int c = 0;
  for (std::size_t i = 0; i < component_of.size(); ++i)
    if (component_of[i] == static_cast<int>(i)) ++c;
  return c;
}

ComponentPartition chain_components(const MetricSpace& space, double eta) {
  check_positive(eta, "eta");
  const int n = space.size();
  ComponentPartition part;
  part.eta = eta;
  part.component_of.assign(static_cast<std::size_t>(n), -1);
  for (int root = 0; root < n; ++root) {
    if (part.component_of[static_cast<std::size_t>(root)] >= 0) continue;
    std::deque<int> queue{root};
    part.component_of[static_cast<std::size_t>(root)] = root;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < n; ++v)
        if (part.component_of[static_cast<std::size_t>(v)] < 0 && u != v &&
            space.dist(u, v) < eta) {
          part.component_of[static_cast<std::size_t>(v)] = root;
          queue.push_back(v);
        }
    }
  }
  return part;
}

double minimax_edge(const MetricSpace& space, int x, int y) {
  check_point(space, x, "x");
  check_point(space, y, "y");
  if (x == y) return 0.0;
  const int n = space.size();
  std::vector<double> value(static_cast<std::size_t>(n), kInfinity);
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  value[static_cast<std::size_t>(x)] = 0.0;
  for (int round = 0; round < n; ++round) {
    int u = -1;
    for (int v = 0; v < n; ++v)
      if (!done[static_cast<std::size_t>(v)] &&
          (u < 0 || value[static_cast<std::size_t>(v)] < value[static_cast<std::size_t>(u)]))
        u = v;
    if (u < 0 || value[static_cast<std::size_t>(u)] == kInfinity) break;
    if (u == y) return value[static_cast<std::size_t>(u)];
    done[static_cast<std::size_t>(u)] = 1;
    for (int v = 0; v < n; ++v)
      if (!done[static_cast<std::size_t>(v)] && v != u)
        value[static_cast<std::size_t>(v)] =
            std::min(value[static_cast<std::size_t>(v)],
                     std::max(value[static_cast<std::size_t>(u)], space.dist(u, v)));
  }
  return value[static_cast<std::size_t>(y)];
}

const char* chain_mode_name(ChainMode m) {
  switch (m) {
    case ChainMode::ball: return "ball";
    case ChainMode::half_ball: return "half_ball";
    case ChainMode::exact: return "exact";
  }
  return "exact";
}

std::optional<Chain> constrained_chain(const MetricSpace& space, int x, int y,
                                       double eta, double eps, ChainMode mode) {
  check_point(space, x, "x");
  check_point(space, y, "y");
  check_positive(eta, "eta");
  check_positive(eps, "eps");
  switch (mode) {
    case ChainMode::ball:
    case ChainMode::half_ball: {
      const double radius = mode == ChainMode::ball ? eps : eps / 2.0;
      std::vector<char> allowed(static_cast<std::size_t>(space.size()), 0);
      for (int z = 0; z < space.size(); ++z)
        allowed[static_cast<std::size_t>(z)] = space.dist(x, z) < radius ? 1 : 0;
      return bfs_chain(space, x, y, eta, allowed);
    }
    case ChainMode::exact:
      return exact_constrained(space, x, y, eta, eps);
  }
  return std::nullopt;
}

namespace {

// Restriction set of the ball/half_ball modes around the chain source.
std::vector<char> mode_allowed(const MetricSpace& space, int x, double eps,
                               ChainMode mode) {
  const double radius = mode == ChainMode::ball ? eps : eps / 2.0;
  std::vector<char> allowed(static_cast<std::size_t>(space.size()), 0);
  for (int z = 0; z < space.size(); ++z)
    allowed[static_cast<std::size_t>(z)] = space.dist(x, z) < radius ? 1 : 0;
  return allowed;
}

}  // namespace

UlccResult ulcc_modulus(const MetricSpace& space, double eps, double eta,
                        ChainMode mode, const std::optional<Subset>& within) {
  check_positive(eps, "eps");
  check_positive(eta, "eta");
  std::vector<int> points;
  if (within)
    points = within->members();
  else
    points = Subset::full(space.size()).members();
  UlccResult out;
  for (std::size_t a = 0; a < points.size(); ++a) {
    const int x = points[a];
    // One restricted BFS per source in the ball modes.
    std::vector<int> hops;
    if (mode != ChainMode::exact)
      hops = bfs_distances(space, x, eta, mode_allowed(space, x, eps, mode));
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      const int y = points[b];
      const bool linked = mode == ChainMode::exact
                              ? constrained_chain(space, x, y, eta, eps, mode).has_value()
                              : hops[static_cast<std::size_t>(y)] >= 0;
      if (linked) continue;
      const double d = space.dist(x, y);
      if (d < out.delta_star) {
        out.delta_star = d;
        out.witness = {x, y};
      }
    }
  }
  return out;
}

UlcecResult ulcec_table(const MetricSpace& space, double eps, double delta,
                        double eta, ChainMode mode) {
  check_positive(eps, "eps");
  check_positive(delta, "delta");
  check_positive(eta, "eta");
  UlcecResult out;
  out.l_star = -1;
  const int n = space.size();
  for (int x = 0; x < n && out.reachable; ++x) {
    std::vector<int> hops;
    if (mode != ChainMode::exact)
      hops = bfs_distances(space, x, eta, mode_allowed(space, x, eps, mode));
    for (int y = x; y < n; ++y) {
      if (!(space.dist(x, y) < delta)) continue;
      int len;
      if (mode == ChainMode::exact) {
        const auto chain = constrained_chain(space, x, y, eta, eps, mode);
        len = chain ? chain->length() : -1;
      } else {
        len = hops[static_cast<std::size_t>(y)];
      }
      if (len < 0) {
        out.reachable = false;
        out.witness = {x, y};
        break;
      }
      if (len > out.l_star) {
        out.l_star = len;
        out.witness = {x, y};
      }
    }
  }
  if (out.reachable && out.l_star < 0) {
    out.l_star = 0;
    out.witness = {0, 0};
  }
  return out;
}

ChainProfile chain_length_profile(const MetricSpace& space,
                                  const std::vector<double>& etas) {
  for (std::size_t i = 0; i < etas.size(); ++i) {
    check_positive(etas[i], "eta");
    if (i > 0 && !(etas[i] > etas[i - 1]))
      fail(errc::precondition_violated, "etas must be strictly increasing");
  }
  ChainProfile profile;
  const int n = space.size();
  for (double eta : etas) {
    ChainProfileEntry entry;
    entry.eta = eta;
    entry.length_bound = 0;
    entry.witness = {0, 0};
    // All-pairs hop counts via one BFS per source.
    const auto allowed = std::vector<char>(static_cast<std::size_t>(n), 1);
    for (int x = 0; x < n && entry.length_bound; ++x) {
      const auto dist = bfs_distances(space, x, eta, allowed);
      for (int y = x + 1; y < n; ++y) {
        const int d = dist[static_cast<std::size_t>(y)];
        if (d < 0) {
          entry.length_bound = std::nullopt;
          entry.witness = {x, y};
          break;
        }
        if (d > *entry.length_bound) {
          entry.length_bound = d;
          entry.witness = {x, y};
        }
      }
    }
    profile.entries.push_back(std::move(entry));
  }
  return profile;
}

}  // namespace chainscape
