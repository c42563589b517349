#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "chainscape/core.hpp"

namespace chainscape {

/// Values above this sentinel are rejected; keeps interpolation finite.
inline constexpr double kMaxModulus = 1e18;

/// Piecewise-linear non-decreasing function given by breakpoints (t, value)
/// with strictly increasing t >= 0 and non-decreasing values >= 0.
/// Evaluation interpolates linearly between breakpoints, continues at the
/// final slope beyond the last breakpoint, and is constant at the first value
/// before the first breakpoint (the finite-resolution floor).
class Modulus {
 public:
  explicit Modulus(std::vector<std::pair<double, double>> breakpoints);

  /// {(0,0), (t_max, slope*t_max)}: the linear modulus t -> slope*t.
  static Modulus linear(double slope, double t_max = 1.0);

  double operator()(double t) const;
  const std::vector<std::pair<double, double>>& breakpoints() const { return bp_; }

 private:
  std::vector<std::pair<double, double>> bp_;
};

struct ConcavityCheck {
  bool concave = true;
  /// Breakpoint indices (i, i+1, i+2) of the first slope increase.
  std::optional<std::array<int, 3>> violation;
};

/// Concave iff successive breakpoint slopes are non-increasing (the chord
/// inequality for piecewise-linear functions).
ConcavityCheck check_concave(const Modulus& m);

struct SubadditivityCheck {
  bool subadditive = true;
  std::optional<std::pair<double, double>> witness;  ///< first failing (s,t)
};

/// Checks w(s+t) <= w(s) + w(t) over all ordered pairs from the grid.
SubadditivityCheck check_subadditive(const Modulus& m,
                                     const std::vector<double>& grid);

/// Least concave piecewise-linear majorant of the samples on
/// [min t, max t]: the upper convex hull chain of the sample points.
/// Requires at least two samples with distinct t.
Modulus concave_envelope(std::vector<std::pair<double, double>> samples);

/// Concave majorant construction for a modulus: the upper hull of
/// {(0, w(0+))} u {(t, w(t)) : t on a geometric grid of (0,R]} u
/// {(i*R, (i+2)*w(R)) : 1 <= i <= n_max}. The default grid places
/// `grid_points` geometrically spaced samples on (R*2^-16, R].
Modulus gamma_from_omega(const Modulus& w, double R, int n_max,
                         int grid_points = 64);

/// One step-function level of the recursive ladder:
///   level 0 == 0,  level n+1 (t) = 0 for t < D_{n+1},
///                  2^{-n}*r0 + level n (t) for t >= D_{n+1}.
/// Genuine step functions; not interpolated.
class LadderLevel {
 public:
  LadderLevel(int level, double r0, std::vector<double> thresholds)
      : level_(level), r0_(r0), thresholds_(std::move(thresholds)) {}
  double operator()(double t) const;
  int level() const { return level_; }

 private:
  int level_;
  double r0_;
  std::vector<double> thresholds_;  ///< D_1 > D_2 > ... (first `level_` used)
};

class ModulusLadder {
 public:
  ModulusLadder(double r0, std::vector<double> deltas, int levels);
  int levels() const { return levels_; }
  LadderLevel level(int n) const;
  /// Pointwise supremum over levels 0..N (equals the top level).
  double sup(double t) const;
  double r0() const { return r0_; }
  const std::vector<double>& deltas() const { return deltas_; }

 private:
  double r0_;
  std::vector<double> deltas_;
  int levels_;
};

/// Builds the ladder. Requires r0 > 0, strictly decreasing positive deltas,
/// and N <= deltas.size(); throws NonDecreasingDeltas otherwise.
ModulusLadder modulus_ladder(double r0, const std::vector<double>& deltas, int levels);

struct ConcaveInequalities {
  bool translate_ok = false;   ///< f(b+d)-f(b) <= f(a+d)-f(a)
  bool superadd_ok = false;    ///< f(s+t)-f(s)-f(t) <= f(a+b)-f(a)-f(b)
};

/// Evaluates the two concavity consequences exactly on the interpolant.
/// Requires 0 <= a <= b, d >= 0, 0 <= a2 <= s, 0 <= b2 <= t, and f concave.
ConcaveInequalities verify_concave_inequalities(const Modulus& f, double a,
                                                double b, double d, double a2,
                                                double b2, double s, double t);

}  // namespace chainscape
