// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Brute-force oracles live in oracles.hpp.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"

#include "chainscape/chains.hpp"
#include "chainscape/convexify.hpp"
#include "chainscape/diagnostics.hpp"
#include "chainscape/hausdorff.hpp"
#include "chainscape/io.hpp"
#include "chainscape/report.hpp"
#include "chainscape/traces.hpp"

using namespace chainscape;

namespace {

struct Outcome {
  int id;
  std::string name;
  bool pass;
  std::string note;
};

std::vector<Outcome> outcomes;

void run(int id, const std::string& name, const std::function<std::string()>& body) {
  Outcome outcome{id, name, true, ""};
  try {
    outcome.note = body();
  } catch (const std::exception& e) {
    outcome.pass = false;
    outcome.note = e.what();
  }
  if (outcome.note.rfind("FAIL:", 0) == 0) outcome.pass = false;
  outcomes.push_back(std::move(outcome));
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fail_note(const std::string& s) { return "FAIL: " + s; }

// --------------------------------------------------------------- criterion 1
std::string hausdorff_axioms_exhaustive() {
  const auto g = fixtures::grid4();
  const auto t0 = std::chrono::steady_clock::now();
  const unsigned long long count = (1ULL << g.size()) - 1;  // 31 subsets
  std::vector<Subset> subsets;
  for (unsigned long long m = 1; m <= count; ++m) subsets.push_back(Subset::from_mask(m));
  std::vector<double> table(count * count);
  long long violations = 0;
  for (unsigned long long a = 0; a < count; ++a)
    for (unsigned long long b = 0; b < count; ++b) {
      const double v = hausdorff_distance(g, subsets[a], subsets[b]).value;
      table[a * count + b] = v;
      if (v < 0) ++violations;
      if ((v == 0.0) != (subsets[a] == subsets[b])) ++violations;
    }
  for (unsigned long long a = 0; a < count; ++a)
    for (unsigned long long b = 0; b < count; ++b) {
      if (table[a * count + b] != table[b * count + a]) ++violations;
      for (unsigned long long c = 0; c < count; ++c)
        if (table[a * count + c] > table[a * count + b] + table[b * count + c])
          ++violations;
    }
  const double elapsed = seconds_since(t0);
  const long long triples = static_cast<long long>(count) * count * count;
  if (violations != 0) return fail_note(std::to_string(violations) + " violations");
  if (elapsed >= 5.0) return fail_note("took " + std::to_string(elapsed) + " s");
  return std::to_string(triples) + " triples, 0 violations, " +
         std::to_string(elapsed) + " s";
}

// --------------------------------------------------------------- criterion 2
std::string hausdorff_oracle_equivalence() {
  std::mt19937_64 rng(0xACCE0002ULL);
  long long mismatches = 0;
  for (int s = 0; s < 10; ++s) {
    const auto space = oracles::random_euclidean_space(rng, 50);
    for (int it = 0; it < 1000; ++it) {
      const auto a = oracles::random_subset(rng, 50);
      const auto b = oracles::random_subset(rng, 50);
      if (hausdorff_distance(space, a, b).value != oracles::naive_hausdorff(space, a, b))
        ++mismatches;
    }
  }
  if (mismatches != 0) return fail_note(std::to_string(mismatches) + " mismatches");
  return "10000 random pairs on 10 random 50-point spaces, bit-exact";
}

// --------------------------------------------------------------- criterion 3
std::string union_nonexpansive() {
  const auto g = fixtures::gap4();
  const unsigned long long count = (1ULL << g.size()) - 1;  // 15 subsets
  std::vector<double> table((count + 1) * (count + 1));
  for (unsigned long long a = 1; a <= count; ++a)
    for (unsigned long long b = 1; b <= count; ++b)
      table[a * (count + 1) + b] =
          hausdorff_distance(g, Subset::from_mask(a), Subset::from_mask(b)).value;
  long long violations = 0, checked = 0;
  for (unsigned long long a = 1; a <= count; ++a)
    for (unsigned long long b = 1; b <= count; ++b)
      for (unsigned long long a2 = 1; a2 <= count; ++a2)
        for (unsigned long long b2 = 1; b2 <= count; ++b2) {
          ++checked;
          if (table[(a | b) * (count + 1) + (a2 | b2)] >
              std::max(table[a * (count + 1) + a2], table[b * (count + 1) + b2]))
            ++violations;
        }
  std::mt19937_64 rng(0xACCE0003ULL);
  const auto big = oracles::random_euclidean_space(rng, 50);
  for (int it = 0; it < 1000; ++it) {
    const auto a = oracles::random_subset(rng, 50), b = oracles::random_subset(rng, 50);
    const auto a2 = oracles::random_subset(rng, 50), b2 = oracles::random_subset(rng, 50);
    ++checked;
    if (hausdorff_distance(big, union_sets(a, b), union_sets(a2, b2)).value >
        std::max(hausdorff_distance(big, a, a2).value,
                 hausdorff_distance(big, b, b2).value))
      ++violations;
  }
  if (violations != 0) return fail_note(std::to_string(violations) + " violations");
  return std::to_string(checked) + " quadruples, 0 violations";
}

// --------------------------------------------------------------- criterion 4
std::string chain_length_oracle() {
  long long mismatches = 0, checked = 0;
  const auto check_space = [&](const MetricSpace& space,
                               const std::vector<double>& etas) {
    for (double eta : etas)
      for (int x = 0; x < space.size(); ++x)
        for (int y = 0; y < space.size(); ++y) {
          ++checked;
          const auto chain = shortest_chain(space, x, y, eta);
          if ((chain ? chain->length() : -1) !=
              oracles::enumerate_min_chain(space, x, y, eta))
            ++mismatches;
        }
  };
  for (const auto& space : {fixtures::grid4(), fixtures::line3(), fixtures::gap4()}) {
    std::vector<double> etas;
    for (int i = 0; i < space.size(); ++i)
      for (int j = i + 1; j < space.size(); ++j) {
        const double d = space.dist(i, j);
        etas.push_back(d * (1.0 - 1e-9));
        etas.push_back(d);
        etas.push_back(d * (1.0 + 1e-9));
      }
    check_space(space, etas);
  }
  std::mt19937_64 rng(0xACCE0004ULL);
  for (int s = 0; s < 100; ++s)
    check_space(oracles::random_euclidean_space(rng, 8),
                {0.2, 0.35, 0.5, 0.75, 1.0, 1.4});
  if (mismatches != 0) return fail_note(std::to_string(mismatches) + " mismatches");
  return std::to_string(checked) + " (pair, eta) points, 0 mismatches";
}

// --------------------------------------------------------------- criterion 5
std::string constrained_sandwich() {
  long long violations = 0, checked = 0;
  for (const auto& space : {fixtures::grid4(), fixtures::gap4()}) {
    std::vector<double> grid;
    for (int i = 0; i < space.size(); ++i)
      for (int j = i + 1; j < space.size(); ++j) {
        grid.push_back(space.dist(i, j));
        grid.push_back(space.dist(i, j) * (1.0 + 1e-9));
      }
    grid.push_back(2.0);
    for (double eta : grid)
      for (double eps : grid)
        for (int x = 0; x < space.size(); ++x)
          for (int y = 0; y < space.size(); ++y) {
            ++checked;
            const bool half =
                constrained_chain(space, x, y, eta, eps, ChainMode::half_ball)
                    .has_value();
            const bool exact =
                constrained_chain(space, x, y, eta, eps, ChainMode::exact).has_value();
            const bool ball =
                constrained_chain(space, x, y, eta, eps, ChainMode::ball).has_value();
            if ((half && !exact) || (exact && !ball)) ++violations;
          }
  }
  if (violations != 0) return fail_note(std::to_string(violations) + " violations");

  const auto g = fixtures::grid4();
  const auto ulcc = ulcc_modulus(g, 0.6, 0.3);
  if (ulcc.delta_star != 0.75 || ulcc.witness != std::make_pair(0, 3))
    return fail_note("ulcc_modulus(GRID4, 0.6, 0.3) = " +
                     std::to_string(ulcc.delta_star));
  const auto ulcec = ulcec_table(g, 0.6, 0.55, 0.3);
  if (!ulcec.reachable || ulcec.l_star != 2)
    return fail_note("ulcec_table(GRID4, 0.6, 0.55, 0.3) = " +
                     std::to_string(ulcec.l_star));
  return std::to_string(checked) + " sandwich points; delta* = 0.75, l* = 2";
}

// --------------------------------------------------------------- criterion 6
std::string convexify_certificates() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto g = fixtures::grid4();
  const auto resg = convexified_metric(g, Modulus::linear(2.0, 2.0), 0.3);
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j) {
      if (resg.rho(i, j) != 2.0 * g.dist(i, j))
        return fail_note("GRID4 rho is not twice the line metric");
      if (g.dist(i, j) > resg.rho(i, j)) return fail_note("d <= rho failed");
      for (int k = 0; k < g.size(); ++k)
        if (resg.rho(i, k) > resg.rho(i, j) + resg.rho(j, k))
          return fail_note("rho triangle failed");
    }
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (g.dist(i, j) <= 0.3 &&
          resg.rho(i, j) > Modulus::linear(2.0, 2.0)(g.dist(i, j)))
        return fail_note("rho above alpha(d) on a local pair");

  const auto l = fixtures::line3();
  const auto resl = convexified_metric(l, Modulus::linear(2.0, 8.0), 1.5);
  if (resl.rho(1, 2) != 5.0)
    return fail_note("LINE3 rho(q1,q2) = " + std::to_string(resl.rho(1, 2)));
  for (int i = 0; i < l.size(); ++i)
    for (int j = 0; j < l.size(); ++j) {
      if (l.dist(i, j) > resl.rho(i, j)) return fail_note("d <= rho failed on LINE3");
      for (int k = 0; k < l.size(); ++k)
        if (resl.rho(i, k) > resl.rho(i, j) + resl.rho(j, k))
          return fail_note("rho triangle failed on LINE3");
    }
  const double elapsed = seconds_since(t0);
  if (elapsed >= 1.0) return fail_note("took " + std::to_string(elapsed) + " s");
  return "axioms, sandwich, rho(q1,q2) = 5 exactly, " + std::to_string(elapsed) + " s";
}

// --------------------------------------------------------------- criterion 7
std::string omega_convex_tester() {
  // Interval sample at mesh 1/8 with the shifted modulus t + 0.3.
  const auto m8 = fixtures::mesh_interval(8);
  const Modulus shifted({{0.0, 0.3}, {1.0, 1.3}});
  const std::vector<double> full{0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5};
  const auto report = check_omega_convex(m8.matrix(), shifted, full, false,
                                         std::nullopt, false);
  if (!report.min_uniform_scale || *report.min_uniform_scale > 0.2)
    return fail_note("interval sample not convex from scale 0.2 up");
  std::vector<double> coarse;
  for (double v : full)
    if (v >= 0.2) coarse.push_back(v);
  if (!check_omega_convex(m8.matrix(), shifted, coarse, false, std::nullopt, false).pass)
    return fail_note("interval sample failed on the coarse grid");

  // Stated GRID4 witness: the doubled metric with w = 2t must report the
  // violation (p0, p2, 0.26, 0.26).
  const auto g = fixtures::grid4();
  const auto res = convexified_metric(g, Modulus::linear(2.0, 2.0), 0.3);
  const auto probe = check_omega_convex(res.rho, Modulus::linear(2.0, 2.0), {0.26});
  if (!probe.violation || probe.violation->x != 0 || probe.violation->y != 2 ||
      probe.violation->s != 0.26 || probe.violation->t != 0.26)
    return fail_note(
        "no (p0,p2,0.26,0.26) violation exists: the exhaustive z-scan finds the "
        "midpoint p1 (rho(p0,p1) = rho(p1,p2) = 0.5 < w(0.26) = 0.52), so the "
        "tester passes at that scale; see the decisions ledger");
  return "interval sample convex from 0.2 up; GRID4 witness reproduced";
}

// --------------------------------------------------------------- criterion 8
std::string midpoint_builder() {
  const auto g = fixtures::grid4();
  const Modulus w2 = Modulus::linear(2.0, 2.0);
  const auto chain = convex_chain_builder(g.matrix(), w2, 0, 4, 0.6, 4);
  if (chain.length() != 4) return fail_note("expected a length-4 chain");
  for (std::size_t i = 1; i < chain.points.size(); ++i)
    if (!(g.dist(chain.points[i - 1], chain.points[i]) < 0.3))
      return fail_note("step bound 0.3 violated");
  if (!(chain_diameter(g, chain) < 1.2)) return fail_note("diameter bound violated");

  const Modulus w = Modulus::linear(2.0, 4.0);
  long long built = 0;
  for (int segments : {4, 8, 16}) {
    const auto space = fixtures::mesh_interval(segments);
    for (double a : {0.25, 0.5, 0.75, 1.0})
      for (int l : {2, 4, 8}) {
        std::vector<double> scales{a / static_cast<double>(l)};
        for (int i = 1; i < l; ++i)
          scales.push_back(a * static_cast<double>(l - i) / static_cast<double>(l));
        if (!check_omega_convex(space.matrix(), w, scales, false, std::nullopt, false)
                 .pass)
          continue;
        for (int x = 0; x < space.size(); ++x)
          for (int y = 0; y < space.size(); ++y) {
            if (!(space.dist(x, y) < w(a))) continue;
            try {
              const auto c = convex_chain_builder(space.matrix(), w, x, y, a, l);
              ++built;
              if (c.length() > l || !chain_valid(space, c) ||
                  !(chain_diameter(space, c) < 2.0 * w(a)))
                return fail_note("builder chain broke its bounds");
            } catch (const error& e) {
              return fail_note(std::string("builder failed where the tester passes: ") +
                               e.what());
            }
          }
      }
  }
  return "length-4 chain on GRID4; " + std::to_string(built) +
         " builder runs under passing testers";
}

// --------------------------------------------------------------- criterion 9
std::string refinement_certificates() {
  const auto g = fixtures::grid4();
  const auto sched = GridSchedule::checked({2, 2, 2}, {1.2, 0.9, 0.6, 0.55}, 4.5);
  long long runs = 0;
  for (int depth = 1; depth <= 3; ++depth)
    for (int x = 0; x < g.size(); ++x)
      for (int y = 0; y < g.size(); ++y) {
        const auto res = refine_chain_to_trace(g, x, y, sched, depth);
        ++runs;
        if (!res.certificate.all_modulus_ok)
          return fail_note("empirical modulus exceeded the ladder level");
        if (!res.certificate.all_diam_ok)
          return fail_note("neighbor-interval diameter bound violated");
      }
  return std::to_string(runs) + " refinements, ladder domination and 2^-m r0 bounds";
}

// -------------------------------------------------------------- criterion 10
std::string lift_certificates() {
  std::mt19937_64 rng(0xACCE0010ULL);
  long long violations = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto space = oracles::random_euclidean_space(rng, 10);
    const int segments = 1 << (2 + static_cast<int>(rng() % 3ULL));
    HyperTrace f;
    f.domain_length = 1.0;
    for (int i = 0; i <= segments; ++i) {
      f.grid.push_back(static_cast<double>(i) / segments);
      f.values.push_back(oracles::random_subset(rng, space.size()));
    }
    const auto lifted = lift_trace_to_path(f, f.grid);
    if (!(lifted.values.front() == f.values.front())) ++violations;
    if (!(lifted.values.back() == f.values.back())) ++violations;
    if (!check_lift_modulus(space, f, lifted)) ++violations;
  }
  if (violations != 0) return fail_note(std::to_string(violations) + " violations");
  return "200 random subset traces lifted, endpoints and modulus domination";
}

// -------------------------------------------------------------- criterion 11
std::string connector_endpoints() {
  const auto g = fixtures::grid4();
  const std::vector<double> grid{0.0, 0.25, 0.5};
  const auto connector = chain_connector(g, 0.3, grid);
  long long checked = 0, violations = 0;
  const unsigned long long count = (1ULL << g.size()) - 1;
  for (unsigned long long ma = 1; ma <= count; ++ma)
    for (unsigned long long mb = 1; mb <= count; ++mb) {
      const auto a = Subset::from_mask(ma);
      const auto b = Subset::from_mask(mb);
      const auto f = hyperspace_connector(g, a, b, connector, grid);
      ++checked;
      if (!(f.values.front() == a) || !(f.values.back() == b)) ++violations;
    }
  if (violations != 0) return fail_note(std::to_string(violations) + " violations");
  return std::to_string(checked) + " subset pairs, endpoints exact";
}

// -------------------------------------------------------------- criterion 12
std::string report_determinism() {
  char tmpl[] = "/tmp/chainscape.XXXXXX";
  const char* dir = mkdtemp(tmpl);
  if (!dir) return fail_note("mkdtemp failed");
  const std::string base(dir);
  const auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
  };
  const std::vector<std::pair<std::string, MetricSpace>> spaces{
      {"grid4", fixtures::grid4()},
      {"gap4", fixtures::gap4()},
      {"line3", fixtures::line3()}};
  for (const auto& [name, space] : spaces) {
    const std::string csv = base + "/" + name + ".csv";
    std::ofstream(csv, std::ios::binary) << canonical_csv(space);
    std::vector<std::string> bodies;
    int runs = 0;
    for (int threads : {1, 1, 8, 8}) {
      const std::string out = base + "/" + name + "." + std::to_string(runs++);
      const std::string cmd = std::string(CHAINSCAPE_CLI_PATH) +
                              " verify --suite all --input " + csv + " --threads " +
                              std::to_string(threads) + " --out " + out;
      const int rc = std::system(cmd.c_str());
      if (rc != 0) return fail_note(name + ": verify exited with " + std::to_string(rc));
      bodies.push_back(slurp(out));
    }
    for (int i = 1; i < 4; ++i)
      if (bodies[static_cast<std::size_t>(i)] != bodies[0])
        return fail_note(name + ": run " + std::to_string(i) + " differs");
    if (bodies[0].empty()) return fail_note(name + ": empty report");
  }
  return "3 fixtures x 4 runs (threads 1 and 8), byte-identical reports";
}

}  // namespace

int main() {
  run(1, "hausdorff metric axioms, exhaustive on GRID4", hausdorff_axioms_exhaustive);
  run(2, "hausdorff oracle equivalence on random 50-point spaces",
      hausdorff_oracle_equivalence);
  run(3, "union non-expansiveness, exhaustive plus randomized", union_nonexpansive);
  run(4, "shortest-chain lengths match exhaustive enumeration", chain_length_oracle);
  run(5, "constrained-chain sandwich and pinned moduli", constrained_sandwich);
  run(6, "convexification certificates on GRID4 and LINE3", convexify_certificates);
  run(7, "midpoint-convexity tester scales", omega_convex_tester);
  run(8, "midpoint chain builder under passing testers", midpoint_builder);
  run(9, "refinement certificates dominated by the ladder", refinement_certificates);
  run(10, "lift endpoints and modulus domination on random traces", lift_certificates);
  run(11, "hyperspace connector endpoints, exhaustive on GRID4", connector_endpoints);
  run(12, "byte-identical verify reports across runs and thread counts",
      report_determinism);

  int failed = 0;
  for (const auto& o : outcomes) {
    std::printf("[%s] criterion %2d: %s%s%s\n", o.pass ? "PASS" : "FAIL", o.id,
                o.name.c_str(), o.note.empty() ? "" : " -- ", o.note.c_str());
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(outcomes.size()) - failed,
              outcomes.size());
  return failed;
}
