#include "chainscape/report.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "chainscape/chains.hpp"
#include "chainscape/diagnostics.hpp"
#include "chainscape/hausdorff.hpp"
#include "chainscape/io.hpp"
#include "chainscape/traces.hpp"

namespace chainscape {

namespace {

using Json = nlohmann::ordered_json;

Json make_report(const std::string& command, const MetricSpace* space) {
  Json r;
  r["tool_version"] = kToolVersion;
  r["command"] = command;
  r["input_digest"] = space ? sha256_hex(canonical_csv(*space)) : "";
  r["results"] = Json::object();
  r["results"]["schema"] = kReportSchema;
  r["witnesses"] = Json::array();
  return r;
}

Json json_value_or(double v, const char* when_infinite) {
  if (v == kInfinity) return when_infinite;
  return v;
}

Json json_pair(const std::pair<int, int>& p) { return Json::array({p.first, p.second}); }

Json json_matrix(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.n(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.n(); ++j) row.push_back(json_value_or(m(i, j), "inf"));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Distinct pairwise distances, ascending, thinned to index quantiles when
/// there are more than max_count of them. The natural scale grid of a space.
std::vector<double> distance_values(const MetricSpace& space,
                                    std::size_t max_count = 12) {
  std::set<double> vals;
  for (int i = 0; i < space.size(); ++i)
    for (int j = i + 1; j < space.size(); ++j) vals.insert(space.dist(i, j));
  std::vector<double> all{vals.begin(), vals.end()};
  if (all.size() <= max_count) return all;
  std::vector<double> picked;
  for (std::size_t k = 0; k < max_count; ++k)
    picked.push_back(all[k * (all.size() - 1) / (max_count - 1)]);
  picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
  return picked;
}

/// Scale grid straddling the selected distances (just below, at, just above).
std::vector<double> straddling_grid(const MetricSpace& space) {
  std::vector<double> grid;
  for (double d : distance_values(space)) {
    grid.push_back(d * (1.0 - 1e-9));
    grid.push_back(d);
    grid.push_back(d * (1.0 + 1e-9));
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

Subset random_subset(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> flip(0, 1);
  std::vector<int> members;
  for (int i = 0; i < n; ++i)
    if (flip(rng)) members.push_back(i);
  if (members.empty()) members.push_back(static_cast<int>(rng() % static_cast<unsigned long long>(n)));
  return Subset::of(std::move(members), n);
}

struct PropertyLog {
  Json properties = Json::array();
  bool all_pass = true;

  void add(const std::string& name, bool pass, Json detail = Json::object()) {
    Json p;
    p["name"] = name;
    p["pass"] = pass;
    if (!detail.empty()) p["detail"] = std::move(detail);
    properties.push_back(std::move(p));
    all_pass = all_pass && pass;
  }
};

// ---------------------------------------------------------------------------
// verify: hausdorff suite

void verify_hausdorff(const MetricSpace& space, PropertyLog& log) {
  const int n = space.size();
  const auto dh = [&](const Subset& a, const Subset& b) {
    return hausdorff_distance(space, a, b).value;
  };

  {  // metric axioms on the hyperspace
    bool ok = true;
    Json detail;
    if (n <= 8) {
      const unsigned long long count = (1ULL << n) - 1;
      std::vector<Subset> subsets;
      subsets.reserve(count);
      for (unsigned long long mask = 1; mask <= count; ++mask)
        subsets.push_back(Subset::from_mask(mask));
      std::vector<double> table(count * count);
      for (unsigned long long a = 0; a < count && ok; ++a)
        for (unsigned long long b = a; b < count; ++b) {
          const double v = dh(subsets[a], subsets[b]);
          table[a * count + b] = v;
          table[b * count + a] = v;
          if (v < 0 || (v == 0) != (subsets[a] == subsets[b])) {
            ok = false;
            detail["witness"] = Json::array({a + 1, b + 1});
            break;
          }
        }
      for (unsigned long long a = 0; a < count && ok; ++a)
        for (unsigned long long b = 0; b < count && ok; ++b)
          for (unsigned long long c = 0; c < count; ++c)
            if (table[a * count + c] > table[a * count + b] + table[b * count + c]) {
              ok = false;
              detail["witness"] = Json::array({a + 1, b + 1, c + 1});
              break;
            }
      detail["mode"] = "exhaustive";
    } else {
      std::mt19937_64 rng(0xC0FFEE01ULL);
      for (int it = 0; it < 2000 && ok; ++it) {
        const Subset a = random_subset(rng, n), b = random_subset(rng, n),
                     c = random_subset(rng, n);
        if (dh(a, c) > dh(a, b) + dh(b, c) || dh(a, b) != dh(b, a)) ok = false;
      }
      detail["mode"] = "randomized";
    }
    log.add("hausdorff_metric_axioms", ok, std::move(detail));
  }

  {  // singletons reduce to the ground metric
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n; ++j)
        if (dh(Subset::of({i}, n), Subset::of({j}, n)) != space.dist(i, j)) {
          ok = false;
          break;
        }
    log.add("hausdorff_singleton_identity", ok);
  }

  {  // closed-neighborhood characterization
    bool ok = true;
    std::vector<Subset> pool;
    if (n <= 6) {
      for (unsigned long long mask = 1; mask < (1ULL << n); ++mask)
        pool.push_back(Subset::from_mask(mask));
    } else {
      std::mt19937_64 rng(0xC0FFEE02ULL);
      for (int it = 0; it < 40; ++it) pool.push_back(random_subset(rng, n));
    }
    const auto within_closed = [&](const Subset& a, const Subset& b, double eps) {
      for (int x : a.members()) {
        double inf = kInfinity;
        for (int y : b.members()) inf = std::min(inf, space.dist(x, y));
        if (inf > eps) return false;
      }
      return true;
    };
    const auto eps_grid = distance_values(space);
    for (std::size_t a = 0; a < pool.size() && ok; ++a)
      for (std::size_t b = 0; b < pool.size() && ok; ++b)
        for (double eps : eps_grid) {
          const bool lhs = dh(pool[a], pool[b]) <= eps;
          const bool rhs = within_closed(pool[a], pool[b], eps) &&
                           within_closed(pool[b], pool[a], eps);
          if (lhs != rhs) {
            ok = false;
            break;
          }
        }
    log.add("hausdorff_characterization", ok);
  }

  {  // union non-expansiveness
    bool ok = true;
    Json detail;
    if (n <= 6) {
      const unsigned long long count = (1ULL << n) - 1;
      std::vector<double> table((count + 1) * (count + 1));
      for (unsigned long long a = 1; a <= count; ++a)
        for (unsigned long long b = a; b <= count; ++b) {
          const double v = dh(Subset::from_mask(a), Subset::from_mask(b));
          table[a * (count + 1) + b] = v;
          table[b * (count + 1) + a] = v;
        }
      for (unsigned long long a = 1; a <= count && ok; ++a)
        for (unsigned long long b = 1; b <= count && ok; ++b)
          for (unsigned long long a2 = 1; a2 <= count && ok; ++a2)
            for (unsigned long long b2 = 1; b2 <= count; ++b2) {
              const double lhs = table[(a | b) * (count + 1) + (a2 | b2)];
              if (lhs > std::max(table[a * (count + 1) + a2],
                                 table[b * (count + 1) + b2])) {
                ok = false;
                detail["witness"] = Json::array({a, b, a2, b2});
                break;
              }
            }
      detail["mode"] = "exhaustive";
    } else {
      std::mt19937_64 rng(0xC0FFEE03ULL);
      for (int it = 0; it < 1000 && ok; ++it) {
        const Subset a = random_subset(rng, n), b = random_subset(rng, n);
        const Subset a2 = random_subset(rng, n), b2 = random_subset(rng, n);
        if (dh(union_sets(a, b), union_sets(a2, b2)) >
            std::max(dh(a, a2), dh(b, b2)))
          ok = false;
      }
      detail["mode"] = "randomized";
    }
    log.add("hausdorff_union_nonexpansive", ok, std::move(detail));
  }

  {  // greedy nets are separated and maximal
    bool ok = true;
    for (double eps : distance_values(space)) {
      const Subset net = separated_net(space, eps);
      if (!is_separated(space, net, eps)) ok = false;
      for (int x = 0; x < n && ok; ++x) {
        bool covered = false;
        for (int y : net.members())
          if (space.dist(x, y) < eps) {
            covered = true;
            break;
          }
        if (!covered) ok = false;
      }
      if (!ok) break;
    }
    log.add("separated_net_valid", ok);
  }
}

// ---------------------------------------------------------------------------
// verify: chains suite

void verify_chains(const MetricSpace& space, PropertyLog& log) {
  const int n = space.size();
  const auto etas = straddling_grid(space);

  {  // BFS against exhaustive chain enumeration
    bool ok = true;
    Json detail;
    if (n <= 8) {
      // Depth-first over simple paths, minimal length.
      const auto enumerate_min = [&](int x, int y, double eta) {
        int best = -1;
        std::vector<int> stack{x};
        std::vector<char> used(static_cast<std::size_t>(n), 0);
        used[static_cast<std::size_t>(x)] = 1;
        const auto rec = [&](auto&& self, int cur) -> void {
          const int len = static_cast<int>(stack.size()) - 1;
          if (best >= 0 && len >= best) return;
          if (cur == y) {
            best = len;
            return;
          }
          for (int z = 0; z < n; ++z)
            if (!used[static_cast<std::size_t>(z)] && space.dist(cur, z) < eta) {
              used[static_cast<std::size_t>(z)] = 1;
              stack.push_back(z);
              self(self, z);
              stack.pop_back();
              used[static_cast<std::size_t>(z)] = 0;
            }
        };
        rec(rec, x);
        return best;
      };
      for (double eta : etas) {
        for (int x = 0; x < n && ok; ++x)
          for (int y = 0; y < n; ++y) {
            const auto chain = shortest_chain(space, x, y, eta);
            const int expect = enumerate_min(x, y, eta);
            const int got = chain ? chain->length() : -1;
            if (got != expect ||
                (chain && (!chain_valid(space, *chain)))) {
              ok = false;
              detail["witness"] = Json::array({x, y, eta});
              break;
            }
          }
        if (!ok) break;
      }
      detail["mode"] = "exhaustive";
    } else {
      detail["skipped"] = "enumeration oracle restricted to n <= 8";
    }
    log.add("shortest_chain_matches_enumeration", ok, std::move(detail));
  }

  {  // half_ball => exact => ball
    bool ok = true;
    Json detail;
    const bool exact_ok = n <= kExactSearchMaxPoints;
    const int stride = std::max(1, n / 12);  // exhaustive at fixture scale
    for (double eta : etas) {
      for (double eps : etas) {
        for (int x = 0; x < n && ok; x += stride)
          for (int y = 0; y < n; y += stride) {
            const bool half =
                constrained_chain(space, x, y, eta, eps, ChainMode::half_ball)
                    .has_value();
            const bool ball_mode =
                constrained_chain(space, x, y, eta, eps, ChainMode::ball).has_value();
            if (exact_ok) {
              const bool exact =
                  constrained_chain(space, x, y, eta, eps, ChainMode::exact)
                      .has_value();
              if ((half && !exact) || (exact && !ball_mode)) {
                ok = false;
                detail["witness"] = Json::array({x, y, eta, eps});
                break;
              }
            } else if (half && !ball_mode) {
              ok = false;
              detail["witness"] = Json::array({x, y, eta, eps});
              break;
            }
          }
        if (!ok) break;
      }
      if (!ok) break;
    }
    detail["exact_included"] = exact_ok;
    log.add("constrained_chain_sandwich", ok, std::move(detail));
  }

  {  // profile monotone in eta
    std::vector<double> inc = etas;
    const auto profile = chain_length_profile(space, inc);
    bool ok = true;
    for (std::size_t i = 1; i < profile.entries.size(); ++i) {
      const auto& prev = profile.entries[i - 1].length_bound;
      const auto& cur = profile.entries[i].length_bound;
      if (prev && cur && *prev < *cur) ok = false;   // larger eta, longer chains
      if (prev && !cur) ok = false;                  // connectivity lost as eta grew
    }
    log.add("profile_monotone", ok);
  }

  {  // minimax threshold consistent with components
    bool ok = true;
    const int stride = std::max(1, n / 12);
    for (double eta : etas) {
      const auto parts = chain_components(space, eta);
      for (int x = 0; x < n && ok; x += stride)
        for (int y = 0; y < n; y += stride)
          if ((minimax_edge(space, x, y) < eta) != parts.together(x, y)) {
            ok = false;
            break;
          }
      if (!ok) break;
    }
    log.add("minimax_matches_components", ok);
  }

  if (n <= kExactSearchMaxPoints) {  // chaining modulus soundness
    bool ok = true;
    Json listed = Json::array();
    const auto scales = distance_values(space, 6);
    for (double eta : scales) {
      for (double eps : scales) {
        const auto res = ulcc_modulus(space, eps, eta);
        if (res.witness) {
          const auto [wx, wy] = *res.witness;
          if (constrained_chain(space, wx, wy, eta, eps, ChainMode::exact)) ok = false;
        }
        for (int x = 0; x < n && ok; ++x)
          for (int y = x + 1; y < n; ++y)
            if (space.dist(x, y) < res.delta_star &&
                !constrained_chain(space, x, y, eta, eps, ChainMode::exact)) {
              ok = false;
              break;
            }
        if (!ok) break;
      }
      if (!ok) break;
    }
    log.add("ulcc_modulus_sound", ok, std::move(listed));
  } else {
    log.add("ulcc_modulus_sound", true, Json{{"skipped", "exact search restricted"}});
  }
}

// ---------------------------------------------------------------------------
// verify: convexify suite

void verify_convexify(const MetricSpace& space, PropertyLog& log) {
  const Modulus alpha = Modulus::linear(2.0, std::max(1.0, diameter(space)));
  const auto dvals = distance_values(space);
  bool ok = true;
  Json detail;
  int runs = 0;
  for (std::size_t qi = 0; qi < dvals.size() && ok; qi += std::max<std::size_t>(1, dvals.size() / 3)) {
    const double R = dvals[qi];
    ++runs;
    try {
      const auto res = convexified_metric(space, alpha, R);
      for (int i = 0; i < space.size() && ok; ++i) {
        const int base = res.component_of[static_cast<std::size_t>(i)];
        if (res.rho(i, base) != res.p_tilde(i, base)) {
          ok = false;
          detail["witness"] = Json::array({i, base, R});
        }
      }
    } catch (const error& e) {
      ok = false;
      detail["error"] = e.what();
    }
  }
  detail["runs"] = runs;
  log.add("convexify_certificates", ok, std::move(detail));

  {  // midpoint builder agrees with the convexity tester on the base metric
    bool builder_ok = true;
    const int segments = 4;
    const auto grid_space = fixtures::mesh_interval(segments);
    const Modulus w = Modulus::linear(2.0, 4.0);
    // Dyadic (a, l) pairs keep every scale argument exact.
    for (double a : {0.25, 0.5, 0.75}) {
      for (int l : {2, 4}) {
        std::vector<double> scales;
        for (int i = 1; i < l; ++i)
          scales.push_back(a * static_cast<double>(l - i) / static_cast<double>(l));
        scales.push_back(a / static_cast<double>(l));
        const auto tester =
            check_omega_convex(grid_space.matrix(), w, scales, false, std::nullopt, false);
        if (!tester.pass) continue;
        for (int x = 0; x < grid_space.size() && builder_ok; ++x)
          for (int y = 0; y < grid_space.size(); ++y) {
            if (!(grid_space.dist(x, y) < w(a))) continue;
            try {
              const Chain chain = convex_chain_builder(grid_space.matrix(), w, x, y, a, l);
              if (!(chain_diameter(grid_space, chain) < 2.0 * w(a))) builder_ok = false;
            } catch (const error&) {
              builder_ok = false;
            }
            if (!builder_ok) break;
          }
      }
    }
    log.add("convex_chain_builder_consistent", builder_ok);
  }
}

// ---------------------------------------------------------------------------
// verify: diagram1 suite

void verify_diagram1(const MetricSpace& space, PropertyLog& log, Json& witnesses) {
  const auto dvals = distance_values(space, 6);
  std::vector<std::array<double, 4>> grid;
  for (double eps : dvals)
    for (double eta : dvals)
      grid.push_back({eps * (1.0 + 1e-9), eta * (1.0 + 1e-9), eta * (1.0 + 1e-9),
                      static_cast<double>(space.size())});
  if (space.size() <= kExactSearchMaxPoints) {
    const auto report = implication_suite(space, grid);
    Json detail;
    detail["grid_points"] = report.grid.size();
    if (!report.all_hold) detail["counterexamples"] = report.counterexamples;
    log.add("diagram1_implications", report.all_hold, std::move(detail));

    // Failure witnesses are data, not failures.
    for (double eps : dvals) {
      const double delta = dvals.back() * (1.0 + 1e-9);
      const double eta = dvals.front();
      const auto family = failure_witnesses(space, eps, delta, eta, 8);
      if (family.pairs.empty()) continue;
      Json entry;
      entry["kind"] = "chaining_failure";
      entry["eps"] = eps;
      entry["delta"] = delta;
      entry["eta"] = eta;
      entry["pairs"] = Json::array();
      for (const auto& p : family.pairs) entry["pairs"].push_back(json_pair(p));
      witnesses.push_back(std::move(entry));
    }
  } else {
    log.add("diagram1_implications", true, Json{{"skipped", "exact search restricted"}});
  }
}

}  // namespace

// ---------------------------------------------------------------------------

CommandResult cmd_analyze(const MetricSpace& space, std::vector<double> etas,
                          std::vector<double> epsilons) {
  std::sort(etas.begin(), etas.end());
  etas.erase(std::unique(etas.begin(), etas.end()), etas.end());
  std::sort(epsilons.begin(), epsilons.end());
  epsilons.erase(std::unique(epsilons.begin(), epsilons.end()), epsilons.end());
  if (etas.empty()) fail(errc::invalid_argument, "need at least one eta");

  Json report = make_report("analyze", &space);
  auto& results = report["results"];
  results["n"] = space.size();
  results["labels"] = space.labels();

  const auto profile = chain_length_profile(space, etas);
  Json prof;
  prof["etas"] = etas;
  prof["L"] = Json::array();
  prof["witnesses"] = Json::array();
  for (const auto& e : profile.entries) {
    prof["L"].push_back(e.length_bound ? Json(*e.length_bound) : Json("unreachable"));
    prof["witnesses"].push_back(e.witness ? json_pair(*e.witness) : Json(nullptr));
  }
  results["profile"] = std::move(prof);

  results["components"] = Json::array();
  for (double eta : etas) {
    const auto parts = chain_components(space, eta);
    results["components"].push_back(Json{{"eta", eta}, {"count", parts.count()}});
  }

  results["ulcc"] = Json::array();
  const ChainMode mode =
      space.size() <= kExactSearchMaxPoints ? ChainMode::exact : ChainMode::ball;
  for (double eps : epsilons)
    for (double eta : etas) {
      const auto res = ulcc_modulus(space, eps, eta, mode);
      Json entry;
      entry["epsilon"] = eps;
      entry["eta"] = eta;
      entry["mode"] = chain_mode_name(mode);
      entry["delta_star"] = json_value_or(res.delta_star, "infinity");
      entry["witness"] = res.witness ? json_pair(*res.witness) : Json(nullptr);
      results["ulcc"].push_back(std::move(entry));
    }
  return {std::move(report), 0};
}

CommandResult cmd_convexify(const MetricSpace& space, const Modulus& alpha,
                            double R) {
  Json report = make_report("convexify", &space);
  const auto res = convexified_metric(space, alpha, R);
  auto& results = report["results"];
  results["n"] = space.size();
  results["R"] = R;
  results["alpha"] = Json::parse(modulus_to_json(alpha));
  results["rho"] = json_matrix(res.rho);
  results["basepoints"] = res.basepoints;
  results["component_of"] = res.component_of;

  Json sandwich = Json::array();
  for (int i = 0; i < space.size(); ++i)
    for (int j = i + 1; j < space.size(); ++j) {
      if (res.component_of[static_cast<std::size_t>(i)] !=
              res.component_of[static_cast<std::size_t>(j)] ||
          !(space.dist(i, j) <= R))
        continue;
      Json entry;
      entry["pair"] = Json::array({i, j});
      entry["d"] = space.dist(i, j);
      entry["rho"] = res.rho(i, j);
      entry["alpha_d"] = alpha(space.dist(i, j));
      entry["ok"] = space.dist(i, j) <= res.rho(i, j) &&
                    res.rho(i, j) <= alpha(space.dist(i, j));
      sandwich.push_back(std::move(entry));
    }

  // Midpoint-convexity summary on a geometric scale grid of (0, R].
  const std::vector<double> st_grid{R / 8.0, R / 4.0, R / 2.0, R};
  const auto convex = check_omega_convex(res.rho, alpha, st_grid, true,
                                         res.component_of, false);
  Json convex_json;
  convex_json["st_grid"] = st_grid;
  convex_json["pass"] = convex.pass;
  convex_json["checked"] = convex.checked;
  convex_json["vacuous"] = convex.vacuous;
  convex_json["min_uniform_scale"] =
      convex.min_uniform_scale ? Json(*convex.min_uniform_scale) : Json(nullptr);
  if (convex.violation)
    convex_json["violation"] = Json::array({convex.violation->x, convex.violation->y,
                                            convex.violation->s, convex.violation->t});
  results["certificates"] =
      Json{{"sandwich", std::move(sandwich)}, {"omega_convex", std::move(convex_json)}};
  return {std::move(report), 0};
}

CommandResult cmd_verify(const MetricSpace& space, const std::string& suite) {
  if (suite != "hausdorff" && suite != "chains" && suite != "convexify" &&
      suite != "diagram1" && suite != "all")
    fail(errc::invalid_argument, "unknown suite '" + suite + "'");
  Json report = make_report("verify --suite " + suite, &space);
  PropertyLog log;
  Json witnesses = Json::array();
  if (suite == "hausdorff" || suite == "all") verify_hausdorff(space, log);
  if (suite == "chains" || suite == "all") verify_chains(space, log);
  if (suite == "convexify" || suite == "all") verify_convexify(space, log);
  if (suite == "diagram1" || suite == "all") verify_diagram1(space, log, witnesses);
  report["results"]["suite"] = suite;
  report["results"]["properties"] = std::move(log.properties);
  report["results"]["all_pass"] = log.all_pass;
  report["witnesses"] = std::move(witnesses);
  return {std::move(report), log.all_pass ? 0 : 1};
}

CommandResult cmd_demo_normability(const std::vector<int>& dims, double eps,
                                   double delta, double eta) {
  Json report = make_report("demo-normability", nullptr);
  auto& results = report["results"];
  results["eps"] = eps;
  results["delta"] = delta;
  results["eta"] = eta;
  results["note"] =
      "exploratory: chain-length growth on truncated product samples against "
      "Euclidean samples of the same mesh; ball mode beyond the exact-search "
      "point cap";
  results["sampling"] =
      "per-dimension points: 9 for k = 1, else the largest of {5, 3, 2} "
      "keeping the total point count at or below 1024";
  results["table"] = Json::array();
  for (int k : dims) {
    if (k < 1 || k > 8) fail(errc::invalid_argument, "dims must lie in 1..8", k);
    int per_dim = 2;
    if (k == 1)
      per_dim = 9;
    else
      for (int candidate : {5, 3}) {
        if (std::pow(candidate, k) <= 1024.0) {
          per_dim = candidate;
          break;
        }
      }
    std::vector<std::vector<double>> pts;
    std::vector<int> digits(static_cast<std::size_t>(k), 0);
    while (true) {
      std::vector<double> p;
      for (int d = 0; d < k; ++d)
        p.push_back(static_cast<double>(digits[static_cast<std::size_t>(d)]) /
                    static_cast<double>(per_dim - 1));
      pts.push_back(std::move(p));
      int pos = k - 1;
      while (pos >= 0 && ++digits[static_cast<std::size_t>(pos)] == per_dim) {
        digits[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
    for (Ambient ambient : {Ambient::product, Ambient::euclidean}) {
      const MetricSpace sample = space_from_points(pts, ambient);
      const ChainMode mode = sample.size() <= kExactSearchMaxPoints
                                 ? ChainMode::exact
                                 : ChainMode::ball;
      const auto res = ulcec_table(sample, eps, delta, eta, mode);
      Json row;
      row["k"] = k;
      row["metric"] = ambient_name(ambient);
      row["n"] = sample.size();
      row["mesh"] = 1.0 / static_cast<double>(per_dim - 1);
      row["mode"] = chain_mode_name(mode);
      row["l_star"] = res.reachable ? Json(res.l_star) : Json("unreachable");
      row["witness"] = json_pair(res.witness);
      results["table"].push_back(std::move(row));
    }
  }
  return {std::move(report), 0};
}

int exit_code_for(const error& e) {
  switch (e.code()) {
    case errc::parse_error:
      return 2;
    case errc::metric_axiom_failure:
      return 4;
    default:
      return 3;
  }
}

std::string render_report(const nlohmann::ordered_json& report) {
  return report.dump(2) + "\n";
}

}  // namespace chainscape
