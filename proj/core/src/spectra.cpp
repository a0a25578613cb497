#include "qsdim/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qsdim/bounds.hpp"

namespace qsdim::spectra {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

double interp(const std::vector<CurvePoint>& pts, double x) {
  // linear interpolation on finite points; caller guarantees x in range
  auto it = std::lower_bound(
      pts.begin(), pts.end(), x,
      [](const CurvePoint& p, double v) { return p.x < v; });
  if (it == pts.begin()) return it->y;
  if (it == pts.end()) return (it - 1)->y;
  const CurvePoint& b = *it;
  const CurvePoint& a = *(it - 1);
  const double t = (x - a.x) / (b.x - a.x);
  return a.y + t * (b.y - a.y);
}

std::vector<CurvePoint> finite_points(const SpectrumCurve& c) {
  std::vector<CurvePoint> out;
  for (const CurvePoint& p : c.points)
    if (std::isfinite(p.y)) out.push_back(p);
  return out;
}

}  // namespace

SelfSimilarMeasure::SelfSimilarMeasure(std::vector<double> p,
                                       std::vector<double> r)
    : probabilities(std::move(p)), ratios(std::move(r)) {
  if (probabilities.size() != ratios.size() || probabilities.size() < 2)
    throw std::invalid_argument(
        "SelfSimilarMeasure: need matching lists of length >= 2");
  double psum = 0.0, rsum = 0.0;
  for (double x : probabilities) {
    if (!(x > 0.0))
      throw std::invalid_argument(
          "SelfSimilarMeasure: probabilities must be positive");
    psum += x;
  }
  if (std::abs(psum - 1.0) > 1e-12)
    throw std::invalid_argument("SelfSimilarMeasure: probabilities must sum to 1");
  for (double x : ratios) {
    if (!(x > 0.0 && x < 1.0))
      throw std::invalid_argument("SelfSimilarMeasure: ratios must lie in (0,1)");
    rsum += x;
  }
  if (rsum > 1.0 + 1e-12)
    throw std::invalid_argument(
        "SelfSimilarMeasure: ratios must sum to at most 1");
}

double SelfSimilarMeasure::max_ratio() const {
  return *std::max_element(ratios.begin(), ratios.end());
}

double f_bound(double alpha, double K) {
  if (!(alpha > 0.0)) throw std::domain_error("f_bound: alpha must be positive");
  if (!(K >= 1.0)) throw std::domain_error("f_bound: K must be >= 1");
  if (K == 1.0) return std::abs(alpha - 1.0) <= 1e-12 ? 1.0 : -kInf;
  if (alpha < 1.0 / K || alpha > K) return -kInf;
  const double k = bounds::K_to_k(K);
  const double lo = 1.0 - k * k;
  const double hi = 1.0 / lo;
  if (alpha >= lo && alpha <= hi) return std::min(alpha, 1.0);
  const double s = std::sqrt(alpha);
  const double sK = std::sqrt(K);
  return -4.0 * K / ((K - 1.0) * (K - 1.0)) * (s - sK) * (s - 1.0 / sK);
}

double beta_bound(double t, double K) {
  if (!(K >= 1.0)) throw std::domain_error("beta_bound: K must be >= 1");
  if (K == 1.0) return 0.0;
  const double c = 4.0 * K / ((K - 1.0) * (K - 1.0));
  const double t_lo = -2.0 / (K - 1.0);
  const double t_hi = 2.0 * K / (K - 1.0);
  if (t <= t_lo) return -(K - 1.0) * t - 1.0;
  if (t >= t_hi) return (1.0 - 1.0 / K) * t - 1.0;
  return std::max(0.0, t * (t - 1.0) / (t + c));
}

double quasidisk_beta_bound(double t, double k) {
  if (!(k > 0.0 && k < 1.0))
    throw std::domain_error("quasidisk_beta_bound: k must lie in (0,1)");
  const double k2 = k * k;
  if (t < 1.0 + k2 - 1e-12)
    throw std::domain_error(
        "quasidisk_beta_bound: no bound below t = 1 + k^2");
  const double t_c = (1.0 + k2) / k;
  if (t <= t_c) return k2 * t * t / ((1.0 + k2) * (1.0 + k2));
  return 2.0 * k / (1.0 + k2) * t - 1.0;
}

double conjectured_beta_lower(double t, double k) {
  if (!(k > 0.0 && k < 1.0))
    throw std::domain_error("conjectured_beta_lower: k must lie in (0,1)");
  if (std::abs(t) > 2.0 / k + 1e-12)
    throw std::domain_error("conjectured_beta_lower: |t| must be <= 2/k");
  return k * k * t * t / 4.0;
}

double tau_exponent(const SelfSimilarMeasure& m, double q) {
  const auto g = [&](double T) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.ratios.size(); ++i)
      s += std::exp(q * std::log(m.probabilities[i]) +
                    T * std::log(m.ratios[i]));
    return s - 1.0;  // strictly decreasing in T
  };
  double lo = 0.0, hi = 0.0;
  double span = 1.0;
  while (g(lo) < 0.0) {
    lo -= span;
    span *= 2.0;
    if (span > 1e6) throw std::runtime_error("tau_exponent: no lower bracket");
  }
  span = 1.0;
  while (g(hi) > 0.0) {
    hi += span;
    span *= 2.0;
    if (span > 1e6) throw std::runtime_error("tau_exponent: no upper bracket");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) >= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

SpectrumCurve f_oracle(const SelfSimilarMeasure& m, const LinearGrid& q_grid) {
  const std::vector<double> qs = q_grid.points();
  if (qs.size() < 3)
    throw std::invalid_argument("f_oracle: need at least 3 grid points");
  std::vector<double> tau(qs.size());
  for (std::size_t i = 0; i < qs.size(); ++i) tau[i] = tau_exponent(m, qs[i]);

  SpectrumCurve curve;
  curve.kind = CurveKind::f_of_alpha;
  for (std::size_t i = 1; i + 1 < qs.size(); ++i) {
    const double alpha = -(tau[i + 1] - tau[i - 1]) / (qs[i + 1] - qs[i - 1]);
    curve.points.push_back({alpha, qs[i] * alpha + tau[i]});
  }
  std::sort(curve.points.begin(), curve.points.end(),
            [](const CurvePoint& a, const CurvePoint& b) { return a.x < b.x; });
  // monofractal grids collapse to one point
  std::vector<CurvePoint> dedup;
  for (const CurvePoint& p : curve.points) {
    if (!dedup.empty() && p.x - dedup.back().x < 1e-12) continue;
    dedup.push_back(p);
  }
  curve.points = std::move(dedup);
  return curve;
}

SpectrumCurve box_f_estimate(const SelfSimilarMeasure& m, double r, double eps,
                             const LinearGrid& alpha_grid) {
  if (!(r > 0.0 && r < 1.0))
    throw std::domain_error("box_f_estimate: r must lie in (0,1)");
  if (!(eps > 0.0)) throw std::domain_error("box_f_estimate: eps must be positive");
  const double log_r = std::log(r);
  const double max_depth = std::ceil(log_r / std::log(m.max_ratio()));
  if (max_depth > 40.0)
    throw std::runtime_error(
        "box_f_estimate: cylinder depth would exceed 40; increase r");

  // depth-first refinement until cylinder length drops to r
  std::vector<double> exponents;  // log mass / log r per stopped cylinder
  struct Node {
    double log_len;
    double log_mass;
  };
  std::vector<Node> stack{{0.0, 0.0}};
  std::vector<double> log_ratio(m.ratios.size()), log_p(m.ratios.size());
  for (std::size_t i = 0; i < m.ratios.size(); ++i) {
    log_ratio[i] = std::log(m.ratios[i]);
    log_p[i] = std::log(m.probabilities[i]);
  }
  while (!stack.empty()) {
    const Node node = stack.back();
    stack.pop_back();
    if (node.log_len <= log_r) {
      exponents.push_back(node.log_mass / log_r);
      continue;
    }
    for (std::size_t i = 0; i < m.ratios.size(); ++i)
      stack.push_back({node.log_len + log_ratio[i], node.log_mass + log_p[i]});
  }
  std::sort(exponents.begin(), exponents.end());

  SpectrumCurve curve;
  curve.kind = CurveKind::f_of_alpha;
  const double inv_log = 1.0 / std::log(1.0 / r);
  for (double alpha : alpha_grid.points()) {
    if (!(alpha > 0.0))
      throw std::domain_error("box_f_estimate: alpha grid must be positive");
    const auto lo = std::lower_bound(exponents.begin(), exponents.end(),
                                     alpha - eps);
    const auto hi =
        std::upper_bound(exponents.begin(), exponents.end(), alpha + eps);
    const auto n = static_cast<double>(hi - lo);
    curve.points.push_back(
        {alpha, n > 0.0 ? std::log(n) * inv_log : -kInf});
  }
  return curve;
}

namespace {

// Periodic trapezoid quadrature of ((1-|phi|)/(1-r))^t, nodes doubled until
// stable. Running sums are reused across refinements.
double integral_means(const std::function<Complex(Complex)>& phi, double r,
                      double t, int n0) {
  const auto f = [&](double th) {
    const Complex z(r * std::cos(th), r * std::sin(th));
    const double gap = 1.0 - std::abs(phi(z));
    const double val = std::pow(gap / (1.0 - r), t);
    if (!std::isfinite(val))
      throw std::runtime_error("beta_estimate: non-finite integrand");
    return val;
  };
  int n = std::max(16, n0);
  double sum = 0.0;
  for (int j = 0; j < n; ++j) sum += f(2.0 * kPi * j / n);
  double prev = 2.0 * kPi * sum / n;
  while (n < (1 << 21)) {
    for (int j = 0; j < n; ++j) sum += f(2.0 * kPi * (j + 0.5) / n);
    n *= 2;
    const double cur = 2.0 * kPi * sum / n;
    if (std::abs(cur - prev) <= 1e-6 * std::abs(cur)) return cur;
    prev = cur;
  }
  return prev;
}

struct Fit {
  double slope;
  double intercept;
  double residual;
};

Fit fit_slope(const std::vector<double>& xs, const std::vector<double>& ys,
              std::size_t lo, std::size_t hi) {
  const auto n = static_cast<double>(hi - lo + 1);
  double mx = 0.0, my = 0.0;
  for (std::size_t i = lo; i <= hi; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = lo; i <= hi; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  const double slope = sxy / sxx;
  const double icept = my - slope * mx;
  double res = 0.0;
  for (std::size_t i = lo; i <= hi; ++i)
    res = std::max(res, std::abs(ys[i] - slope * xs[i] - icept));
  return {slope, icept, res};
}

}  // namespace

BetaEstimate beta_estimate(const std::function<Complex(Complex)>& phi, double t,
                           RadiiSchedule schedule, int initial_nodes) {
  if (schedule.j_lo < 1 || schedule.j_hi - schedule.j_lo < 2)
    throw std::invalid_argument("beta_estimate: need a window of >= 3 radii");
  std::vector<double> xs, ys;
  for (int j = schedule.j_lo; j <= schedule.j_hi; ++j) {
    const double r = 1.0 - std::pow(2.0, -j);
    xs.push_back(std::log(1.0 / (1.0 - r)));
    ys.push_back(std::log(integral_means(phi, r, t, initial_nodes)));
  }
  std::size_t lo = 0, hi = xs.size() - 1;
  Fit fit = fit_slope(xs, ys, lo, hi);
  while (fit.residual > 0.01 && hi - lo >= 3) {
    // drop the endpoint that sits further from the fitted line
    const double r_lo = std::abs(ys[lo] - fit.slope * xs[lo] - fit.intercept);
    const double r_hi = std::abs(ys[hi] - fit.slope * xs[hi] - fit.intercept);
    if (r_hi >= r_lo)
      --hi;
    else
      ++lo;
    fit = fit_slope(xs, ys, lo, hi);
  }
  BetaEstimate est;
  est.beta = fit.slope;
  est.residual = fit.residual;
  est.j_lo = schedule.j_lo + static_cast<int>(lo);
  est.j_hi = schedule.j_lo + static_cast<int>(hi);
  return est;
}

SpectrumCurve legendre_transform(const SpectrumCurve& curve,
                                 LegendreDirection direction,
                                 std::optional<LinearGrid> dual_grid) {
  if (curve.points.size() < 3)
    throw std::invalid_argument("legendre_transform: need >= 3 points");
  for (std::size_t i = 1; i < curve.points.size(); ++i)
    if (!(curve.points[i].x > curve.points[i - 1].x))
      throw std::invalid_argument("legendre_transform: x must be increasing");
  const std::vector<CurvePoint> pts = finite_points(curve);
  if (pts.empty())
    throw std::invalid_argument("legendre_transform: no finite points");

  LinearGrid grid;
  if (dual_grid) {
    grid = *dual_grid;
  } else if (pts.size() == 1) {
    grid = {-1.0, 1.0, static_cast<int>(curve.points.size())};
  } else {
    // dual range: slopes present in the input
    double s_lo = kInf, s_hi = -kInf;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      const double s = (pts[i].y - pts[i - 1].y) / (pts[i].x - pts[i - 1].x);
      s_lo = std::min(s_lo, s);
      s_hi = std::max(s_hi, s);
    }
    if (direction == LegendreDirection::f_to_beta) {
      // sup(y - t x) is attained where t matches a slope of the input
      grid = {s_lo, s_hi, static_cast<int>(curve.points.size())};
    } else {
      // inf(y + t a) is attained where a matches a negated slope
      grid = {-s_hi, -s_lo, static_cast<int>(curve.points.size())};
    }
    if (grid.hi - grid.lo < 1e-9) {
      grid.lo -= 1.0;
      grid.hi += 1.0;
    }
  }

  SpectrumCurve out;
  out.kind = direction == LegendreDirection::f_to_beta ? CurveKind::beta_of_t
                                                       : CurveKind::f_of_alpha;
  for (double s : grid.points()) {
    double best;
    if (direction == LegendreDirection::f_to_beta) {
      best = -kInf;
      for (const CurvePoint& p : pts) best = std::max(best, p.y - s * p.x);
    } else {
      best = kInf;
      for (const CurvePoint& p : pts) best = std::min(best, p.y + p.x * s);
    }
    out.points.push_back({s, best});
  }
  return out;
}

SymmetryReport check_spectrum_symmetries(const SpectrumCurve& F_curve,
                                         const SpectrumCurve& B_curve) {
  SymmetryReport rep;
  const std::vector<CurvePoint> F = finite_points(F_curve);
  const std::vector<CurvePoint> B = finite_points(B_curve);
  if (!F.empty()) {
    const double lo = F.front().x, hi = F.back().x;
    for (const CurvePoint& p : F) {
      const double inv = 1.0 / p.x;
      if (inv < lo || inv > hi) continue;
      rep.f_defect =
          std::max(rep.f_defect, std::abs(p.y - p.x * interp(F, inv)));
    }
  }
  if (!B.empty()) {
    const double lo = B.front().x, hi = B.back().x;
    for (const CurvePoint& p : B) {
      const double s = p.y - p.x + 1.0;
      if (s < lo || s > hi) continue;
      rep.beta_defect = std::max(rep.beta_defect, std::abs(interp(B, s) - p.y));
    }
  }
  return rep;
}

}  // namespace qsdim::spectra
