#include "chainscape/moduli.hpp"

#include <algorithm>
#include <cmath>

namespace chainscape {

namespace {

// Cross product (p1-p0) x (p2-p0); positive = left turn = convex-up corner.
double cross(const std::pair<double, double>& p0,
             const std::pair<double, double>& p1,
             const std::pair<double, double>& p2) {
  return (p1.first - p0.first) * (p2.second - p0.second) -
         (p1.second - p0.second) * (p2.first - p0.first);
}

}  // namespace

Modulus::Modulus(std::vector<std::pair<double, double>> breakpoints)
    : bp_(std::move(breakpoints)) {
  if (bp_.empty()) fail(errc::invalid_argument, "modulus needs at least one breakpoint");
  for (std::size_t i = 0; i < bp_.size(); ++i) {
    const auto& [t, v] = bp_[i];
    if (!std::isfinite(t) || !std::isfinite(v) || t < 0 || v < 0 || v > kMaxModulus)
      fail(errc::invalid_argument,
           "modulus breakpoints must be finite, non-negative and below the cap",
           static_cast<std::int64_t>(i));
    if (i > 0) {
      if (!(bp_[i - 1].first < t))
        fail(errc::invalid_argument, "modulus breakpoints must have increasing t",
             static_cast<std::int64_t>(i));
      if (v < bp_[i - 1].second)
        fail(errc::invalid_argument, "modulus values must be non-decreasing",
             static_cast<std::int64_t>(i));
    }
  }
}

Modulus Modulus::linear(double slope, double t_max) {
  if (!(slope >= 0) || !(t_max > 0))
    fail(errc::invalid_argument, "linear modulus needs slope >= 0 and t_max > 0");
  return Modulus({{0.0, 0.0}, {t_max, slope * t_max}});
}

double Modulus::operator()(double t) const {
  if (!(t >= 0)) fail(errc::precondition_violated, "modulus argument must be >= 0");
  if (t <= bp_.front().first) return bp_.front().second;
  if (t >= bp_.back().first) {
    if (bp_.size() == 1) return bp_.back().second;
    const auto& [t0, v0] = bp_[bp_.size() - 2];
    const auto& [t1, v1] = bp_.back();
    const double slope = (v1 - v0) / (t1 - t0);
    return v1 + (t - t1) * slope;
  }
  auto it = std::upper_bound(bp_.begin(), bp_.end(), t,
                             [](double x, const auto& p) { return x < p.first; });
  const auto& [t1, v1] = *it;
  const auto& [t0, v0] = *(it - 1);
  return v0 + (t - t0) * (v1 - v0) / (t1 - t0);
}

ConcavityCheck check_concave(const Modulus& m) {
  const auto& bp = m.breakpoints();
  for (std::size_t i = 0; i + 2 < bp.size(); ++i) {
    if (cross(bp[i], bp[i + 1], bp[i + 2]) > 0.0)
      return {false, std::array<int, 3>{static_cast<int>(i), static_cast<int>(i + 1),
                                        static_cast<int>(i + 2)}};
  }
  return {true, std::nullopt};
}

SubadditivityCheck check_subadditive(const Modulus& m,
                                     const std::vector<double>& grid) {
  for (double s : grid)
    if (!(s > 0)) fail(errc::precondition_violated, "grid values must be positive");
  for (double s : grid)
    for (double t : grid)
      if (m(s + t) > m(s) + m(t)) return {false, std::make_pair(s, t)};
  return {true, std::nullopt};
}

Modulus concave_envelope(std::vector<std::pair<double, double>> samples) {
  if (samples.size() < 2)
    fail(errc::fewer_than_two_samples, "need at least two samples");
  std::sort(samples.begin(), samples.end());
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (samples[i].first == samples[i - 1].first)
      fail(errc::invalid_argument, "sample abscissae must be distinct",
           static_cast<std::int64_t>(i));
  std::vector<std::pair<double, double>> hull;
  for (const auto& p : samples) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) >= 0.0)
      hull.pop_back();
    hull.push_back(p);
  }
  return Modulus(std::move(hull));
}

Modulus gamma_from_omega(const Modulus& w, double R, int n_max, int grid_points) {
  if (!(R > 0)) fail(errc::precondition_violated, "R must be positive");
  if (n_max < 1) fail(errc::precondition_violated, "n_max must be >= 1");
  if (grid_points < 1) fail(errc::precondition_violated, "grid_points must be >= 1");
  std::vector<std::pair<double, double>> pts;
  // Closure anchor at t=0 (the modulus floor), then a geometric grid of (0,R].
  pts.emplace_back(0.0, w(0.0));
  for (int j = 1; j <= grid_points; ++j) {
    const double t =
        R * std::pow(2.0, -16.0 * static_cast<double>(grid_points - j) /
                               static_cast<double>(grid_points));
    pts.emplace_back(t, w(t));
  }
  const double wR = w(R);
  for (int i = 1; i <= n_max; ++i)
    pts.emplace_back(static_cast<double>(i) * R, static_cast<double>(i + 2) * wR);
  // Coinciding abscissae (the grid ends where the anchors start) keep the
  // higher ordinate.
  std::sort(pts.begin(), pts.end());
  std::vector<std::pair<double, double>> merged;
  for (const auto& p : pts) {
    if (!merged.empty() && merged.back().first == p.first)
      merged.back().second = std::max(merged.back().second, p.second);
    else
      merged.push_back(p);
  }
  return concave_envelope(std::move(merged));
}

double LadderLevel::operator()(double t) const {
  if (!(t >= 0)) fail(errc::precondition_violated, "ladder argument must be >= 0");
  double acc = 0.0;
  double coeff = 1.0;  // 2^{-(k-1)} for k = 1,2,...
  for (int k = 1; k <= level_; ++k, coeff *= 0.5)
    if (t >= thresholds_[static_cast<std::size_t>(k - 1)]) acc += coeff * r0_;
  return acc;
}

ModulusLadder::ModulusLadder(double r0, std::vector<double> deltas, int levels)
    : r0_(r0), deltas_(std::move(deltas)), levels_(levels) {}

LadderLevel ModulusLadder::level(int n) const {
  if (n < 0 || n > levels_) fail(errc::invalid_argument, "level out of range", n);
  return LadderLevel(n, r0_, deltas_);
}

double ModulusLadder::sup(double t) const { return level(levels_)(t); }

ModulusLadder modulus_ladder(double r0, const std::vector<double>& deltas, int levels) {
  if (!(r0 > 0)) fail(errc::precondition_violated, "r0 must be positive");
  if (levels < 0 || levels > static_cast<int>(deltas.size()))
    fail(errc::invalid_argument, "level count must be within the delta sequence");
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (!(deltas[i] > 0))
      fail(errc::non_decreasing_deltas, "deltas must be positive",
           static_cast<std::int64_t>(i));
    if (i > 0 && !(deltas[i] < deltas[i - 1]))
      fail(errc::non_decreasing_deltas, "deltas must be strictly decreasing",
           static_cast<std::int64_t>(i));
  }
  return ModulusLadder(r0, deltas, levels);
}

ConcaveInequalities verify_concave_inequalities(const Modulus& f, double a,
                                                double b, double d, double a2,
                                                double b2, double s, double t) {
  if (!(0 <= a && a <= b && d >= 0))
    fail(errc::precondition_violated, "part 1 needs 0 <= a <= b and d >= 0");
  if (!(0 <= a2 && a2 <= s && 0 <= b2 && b2 <= t))
    fail(errc::precondition_violated, "part 2 needs 0 <= a <= s and 0 <= b <= t");
  if (!check_concave(f).concave)
    fail(errc::alpha_not_concave, "function must be concave");
  ConcaveInequalities out;
  out.translate_ok = f(b + d) - f(b) <= f(a + d) - f(a);
  out.superadd_ok = f(s + t) - f(s) - f(t) <= f(a2 + b2) - f(a2) - f(b2);
  return out;
}

}  // namespace chainscape
