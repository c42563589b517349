#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "chainscape/error.hpp"

namespace chainscape {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Dense square matrix of doubles, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n, double fill = 0.0)
      : n_(n), v_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill) {}

  int n() const { return n_; }
  double operator()(int i, int j) const { return v_[index(i, j)]; }
  double& operator()(int i, int j) { return v_[index(i, j)]; }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j);
  }
  int n_ = 0;
  std::vector<double> v_;
};

enum class Ambient { euclidean, l1, linf, product };

const char* ambient_name(Ambient a);
std::optional<Ambient> ambient_from_name(const std::string& name);

/// Distance between coordinate tuples under the named ambient metric.
/// `product` is the weighted truncated product metric
///   d(x,y) = sum_i 2^{-i} * min(1, |x_i - y_i|),  i = 0,1,...
double ambient_distance(Ambient a, const std::vector<double>& x,
                        const std::vector<double>& y);

/// Comparison/validation knobs. All inequalities taken from the domain
/// definitions (d < eta, diameter < eps, ...) are exact strict comparisons on
/// stored 64-bit values; the tolerance applies to input validation only.
struct TolerancePolicy {
  bool strict_comparisons = true;
  double validation_rel_tol = 1e-9;
};

/// A validated finite metric space: point labels plus a full distance matrix,
/// optionally backed by coordinates in a named ambient metric.
class MetricSpace {
 public:
  int size() const { return n_; }
  double dist(int i, int j) const { return dist_(i, j); }
  const Matrix& matrix() const { return dist_; }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_coords() const { return coords_.has_value(); }
  const std::vector<std::vector<double>>& coords() const { return *coords_; }
  Ambient ambient() const { return ambient_; }

  friend MetricSpace validate_metric(const Matrix&,
                                     const std::vector<std::string>&,
                                     const TolerancePolicy&);
  friend MetricSpace space_from_points(const std::vector<std::vector<double>>&,
                                       Ambient, const std::vector<std::string>&,
                                       const TolerancePolicy&);

 private:
  MetricSpace() = default;
  int n_ = 0;
  std::vector<std::string> labels_;
  Matrix dist_;
  std::optional<std::vector<std::vector<double>>> coords_;
  Ambient ambient_ = Ambient::euclidean;
};

/// Validates the metric axioms (zero diagonal, symmetry, positivity off the
/// diagonal, triangle inequality within the relative tolerance) and returns
/// the finished space. Throws `error` with codes NonzeroDiagonal / Asymmetric /
/// ZeroOffDiagonal / TriangleViolation, scanning indices in ascending order.
MetricSpace validate_metric(const Matrix& dist,
                            const std::vector<std::string>& labels = {},
                            const TolerancePolicy& policy = {});

/// Builds a space from coordinate tuples under a named ambient metric.
/// All tuples must share one dimension and all points must be distinct.
MetricSpace space_from_points(const std::vector<std::vector<double>>& coords,
                              Ambient ambient,
                              const std::vector<std::string>& labels = {},
                              const TolerancePolicy& policy = {});

/// Nonempty sorted set of point indices; an element of the hyperspace.
class Subset {
 public:
  /// Sorts, deduplicates, checks nonemptiness and (if n >= 0) index bounds.
  static Subset of(std::vector<int> indices, int n = -1);
  static Subset full(int n);
  static Subset from_mask(unsigned long long mask);

  const std::vector<int>& members() const { return idx_; }
  int size() const { return static_cast<int>(idx_.size()); }
  bool contains(int i) const;

  friend bool operator==(const Subset&, const Subset&) = default;
  friend auto operator<=>(const Subset& a, const Subset& b) { return a.idx_ <=> b.idx_; }

 private:
  Subset() = default;
  std::vector<int> idx_;
};

/// Open ball {y : d(x,y) < r}, strict; always contains x. Requires finite r > 0.
Subset ball(const MetricSpace& space, int x, double r);

/// Smallest positive pairwise distance. Throws SingletonSpace when n = 1.
double min_positive_distance(const MetricSpace& space);

/// Largest pairwise distance (0 for a singleton).
double diameter(const MetricSpace& space, const Subset& of);
double diameter(const MetricSpace& space);

namespace fixtures {

/// Five points {0, 0.25, 0.5, 0.75, 1} on the line, labels p0..p4.
MetricSpace grid4();
/// Points {0, 1, 3} on the line, labels q0..q2.
MetricSpace line3();
/// Points {0, 0.25, 0.75, 1} on the line, labels g0..g3.
MetricSpace gap4();
/// Interval [0,1] sampled at mesh 1/segments (segments+1 points).
MetricSpace mesh_interval(int segments);

}  // namespace fixtures

}  // namespace chainscape
