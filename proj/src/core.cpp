#include "chainscape/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace chainscape {

const char* errc_name(errc code) {
  switch (code) {
    case errc::asymmetric: return "Asymmetric";
    case errc::nonzero_diagonal: return "NonzeroDiagonal";
    case errc::triangle_violation: return "TriangleViolation";
    case errc::zero_off_diagonal: return "ZeroOffDiagonal";
    case errc::duplicate_point: return "DuplicatePoint";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::singleton_space: return "SingletonSpace";
    case errc::exact_search_too_large: return "ExactSearchTooLarge";
    case errc::fewer_than_two_samples: return "FewerThanTwoSamples";
    case errc::non_decreasing_deltas: return "NonDecreasingDeltas";
    case errc::alpha_not_concave: return "AlphaNotConcave";
    case errc::alpha_below_identity: return "AlphaBelowIdentity";
    case errc::metric_axiom_failure: return "MetricAxiomFailure";
    case errc::no_witness_at_step: return "NoWitnessAtStep";
    case errc::chain_finder_failed: return "ChainFinderFailed";
    case errc::schedule_inconsistent: return "ScheduleInconsistent";
    case errc::grid_too_coarse: return "GridTooCoarse";
    case errc::family_too_large: return "FamilyTooLarge";
    case errc::connector_failed: return "ConnectorFailed";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::parse_error: return "ParseError";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

void fail(errc code, const std::string& message, std::int64_t i, std::int64_t j,
          std::int64_t k) {
  throw error(code, std::string(errc_name(code)) + ": " + message, {i, j, k});
}

const char* ambient_name(Ambient a) {
  switch (a) {
    case Ambient::euclidean: return "euclidean";
    case Ambient::l1: return "l1";
    case Ambient::linf: return "linf";
    case Ambient::product: return "product";
  }
  return "euclidean";
}

std::optional<Ambient> ambient_from_name(const std::string& name) {
  if (name == "euclidean") return Ambient::euclidean;
  if (name == "l1") return Ambient::l1;
  if (name == "linf") return Ambient::linf;
  if (name == "product") return Ambient::product;
  return std::nullopt;
}

double ambient_distance(Ambient a, const std::vector<double>& x,
                        const std::vector<double>& y) {
  const std::size_t dim = x.size();
  switch (a) {
    case Ambient::euclidean: {
      double s = 0.0;
      for (std::size_t i = 0; i < dim; ++i) {
        const double d = x[i] - y[i];
        s += d * d;
      }
      return std::sqrt(s);
    }
    case Ambient::l1: {
      double s = 0.0;
      for (std::size_t i = 0; i < dim; ++i) s += std::fabs(x[i] - y[i]);
      return s;
    }
    case Ambient::linf: {
      double s = 0.0;
      for (std::size_t i = 0; i < dim; ++i) s = std::max(s, std::fabs(x[i] - y[i]));
      return s;
    }
    case Ambient::product: {
      double s = 0.0;
      double w = 1.0;
      for (std::size_t i = 0; i < dim; ++i, w *= 0.5)
        s += w * std::min(1.0, std::fabs(x[i] - y[i]));
      return s;
    }
  }
  return 0.0;
}

namespace {

std::vector<std::string> default_labels(int n, const char* prefix) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(std::string(prefix) + std::to_string(i));
  return out;
}

}  // namespace

MetricSpace validate_metric(const Matrix& dist,
                            const std::vector<std::string>& labels,
                            const TolerancePolicy& policy) {
  const int n = dist.n();
  if (n <= 0) fail(errc::invalid_argument, "matrix must be nonempty");
  if (!(policy.validation_rel_tol > 0))
    fail(errc::invalid_argument, "validation_rel_tol must be positive");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double v = dist(i, j);
      if (!std::isfinite(v) || v < 0)
        fail(errc::invalid_argument,
             "entries must be finite and non-negative at (" + std::to_string(i) +
                 "," + std::to_string(j) + ")",
             i, j);
    }
  for (int i = 0; i < n; ++i)
    if (dist(i, i) != 0.0)
      fail(errc::nonzero_diagonal, "dist(" + std::to_string(i) + "," +
                                       std::to_string(i) + ") must be 0", i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (dist(i, j) != dist(j, i))
        fail(errc::asymmetric, "dist(" + std::to_string(i) + "," +
                                   std::to_string(j) + ") != transpose", i, j);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (dist(i, j) == 0.0)
        fail(errc::zero_off_diagonal, "distinct points " + std::to_string(i) +
                                          "," + std::to_string(j) +
                                          " at zero distance", i, j);
  const double tol = policy.validation_rel_tol;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const double lhs = dist(i, k);
        const double rhs = dist(i, j) + dist(j, k);
        if (lhs > rhs + tol * std::max(lhs, rhs))
          fail(errc::triangle_violation,
               "d(" + std::to_string(i) + "," + std::to_string(k) + ") > d(" +
                   std::to_string(i) + "," + std::to_string(j) + ") + d(" +
                   std::to_string(j) + "," + std::to_string(k) + ")",
               i, j, k);
      }

  MetricSpace s;
  s.n_ = n;
  s.dist_ = dist;
  s.labels_ = labels.empty() ? default_labels(n, "x") : labels;
  if (static_cast<int>(s.labels_.size()) != n)
    fail(errc::invalid_argument, "label count does not match matrix size");
  return s;
}

MetricSpace space_from_points(const std::vector<std::vector<double>>& coords,
                              Ambient ambient,
                              const std::vector<std::string>& labels,
                              const TolerancePolicy& policy) {
  const int n = static_cast<int>(coords.size());
  if (n <= 0) fail(errc::invalid_argument, "point list must be nonempty");
  const std::size_t dim = coords[0].size();
  for (int i = 0; i < n; ++i)
    if (coords[static_cast<std::size_t>(i)].size() != dim)
      fail(errc::dimension_mismatch,
           "point " + std::to_string(i) + " has dimension " +
               std::to_string(coords[static_cast<std::size_t>(i)].size()) +
               ", expected " + std::to_string(dim),
           i);
  Matrix dist(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double d = ambient_distance(ambient, coords[static_cast<std::size_t>(i)],
                                        coords[static_cast<std::size_t>(j)]);
      if (d == 0.0)
        fail(errc::duplicate_point, "points " + std::to_string(i) + " and " +
                                        std::to_string(j) + " coincide", i, j);
      dist(i, j) = d;
      dist(j, i) = d;
    }
  MetricSpace s = validate_metric(dist, labels.empty() ? default_labels(n, "x") : labels,
                                  policy);
  s.coords_ = coords;
  s.ambient_ = ambient;
  return s;
}

Subset Subset::of(std::vector<int> indices, int n) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (indices.empty()) fail(errc::invalid_argument, "subset must be nonempty");
  if (n >= 0 && (indices.front() < 0 || indices.back() >= n))
    fail(errc::invalid_argument, "subset index out of range");
  Subset s;
  s.idx_ = std::move(indices);
  return s;
}

Subset Subset::full(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return of(std::move(v), n);
}

Subset Subset::from_mask(unsigned long long mask) {
  std::vector<int> v;
  for (int i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1ULL) v.push_back(i);
  return of(std::move(v));
}

bool Subset::contains(int i) const {
  return std::binary_search(idx_.begin(), idx_.end(), i);
}

Subset ball(const MetricSpace& space, int x, double r) {
  if (x < 0 || x >= space.size()) fail(errc::invalid_argument, "ball center out of range", x);
  if (!(r > 0) || !std::isfinite(r))
    fail(errc::precondition_violated, "ball radius must be finite and positive");
  std::vector<int> v;
  for (int y = 0; y < space.size(); ++y)
    if (space.dist(x, y) < r) v.push_back(y);
  return Subset::of(std::move(v), space.size());
}

double min_positive_distance(const MetricSpace& space) {
  if (space.size() < 2) fail(errc::singleton_space, "needs at least two points");
  double m = kInfinity;
  for (int i = 0; i < space.size(); ++i)
    for (int j = i + 1; j < space.size(); ++j) m = std::min(m, space.dist(i, j));
  return m;
}

double diameter(const MetricSpace& space, const Subset& of) {
  double m = 0.0;
  const auto& v = of.members();
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      m = std::max(m, space.dist(v[a], v[b]));
  return m;
}

double diameter(const MetricSpace& space) {
  return diameter(space, Subset::full(space.size()));
}

namespace fixtures {

namespace {
MetricSpace line_points(const std::vector<double>& xs, const char* prefix) {
  std::vector<std::vector<double>> coords;
  coords.reserve(xs.size());
  for (double x : xs) coords.push_back({x});
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < xs.size(); ++i)
    labels.push_back(std::string(prefix) + std::to_string(i));
  return space_from_points(coords, Ambient::euclidean, labels);
}
}  // namespace

MetricSpace grid4() { return line_points({0.0, 0.25, 0.5, 0.75, 1.0}, "p"); }
MetricSpace line3() { return line_points({0.0, 1.0, 3.0}, "q"); }
MetricSpace gap4() { return line_points({0.0, 0.25, 0.75, 1.0}, "g"); }

MetricSpace mesh_interval(int segments) {
  if (segments < 1) fail(errc::invalid_argument, "segments must be >= 1");
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(segments) + 1);
  for (int i = 0; i <= segments; ++i)
    xs.push_back(static_cast<double>(i) / static_cast<double>(segments));
  return line_points(xs, "m");
}

}  // namespace fixtures

}  // namespace chainscape
