#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "qsdim/numeric.hpp"

// Multifractal machinery: the closed-form spectrum bound curves, an exact
// self-similar oracle (Legendre pair of the moment exponent), a box-counting
// f-spectrum estimator, an integral-means beta estimator and the discrete
// Legendre transform connecting them. Estimators are finite-scale proxies of
// the defining double limits; scale and window parameters are explicit.

namespace qsdim::spectra {

using Complex = std::complex<double>;

// Probabilities and contraction ratios of a self-similar measure on the
// line; realizable by disjoint intervals since the ratios sum to at most 1.
struct SelfSimilarMeasure {
  std::vector<double> probabilities;
  std::vector<double> ratios;

  SelfSimilarMeasure(std::vector<double> p, std::vector<double> r);

  double max_ratio() const;
};

enum class CurveKind { f_of_alpha, beta_of_t, tau_of_q };

struct CurvePoint {
  double x;
  double y;
};

struct SpectrumCurve {
  std::vector<CurvePoint> points;  // x strictly increasing; y may be -inf
  CurveKind kind = CurveKind::f_of_alpha;
};

// Upper bound for the disjoint-disk spectrum of K-quasiconformal self-maps
// of the disk: the quadratic expression -4K/(K-1)^2 (sqrt(a)-sqrt(K))
// (sqrt(a)-1/sqrt(K)) on [1/K, 1-k^2] and [1/(1-k^2), K], the trivial bound
// min{a,1} between, -inf outside [1/K, K]. K = 1 degenerates to the point
// spectrum {(1,1)}.
double f_bound(double alpha, double K);

// Matching integral-means bound: max{0, t(t-1)/(t + 4K/(K-1)^2)} on the
// bounded range, linear -(K-1)t - 1 and (1-1/K)t - 1 beyond the phase
// transitions at -2/(K-1) and 2K/(K-1). Identically 0 for K = 1.
double beta_bound(double t, double K);

// Quasidisk bound for conformal maps with K^2-quasiconformal extension:
// k^2 t^2/(1+k^2)^2 on [1+k^2, (1+k^2)/k], then ((K^2-1)/(K^2+1)) t - 1.
// No bound is asserted below t = 1+k^2 (domain error).
double quasidisk_beta_bound(double t, double k);

// Conjectural lower bound k^2 t^2 / 4 for |t| <= 2/k. Callers must flag the
// output as conjectural.
double conjectured_beta_lower(double t, double k);

// Moment exponent T(q): unique root of sum p_i^q r_i^T = 1. T(1) = 0 and
// T(0) is the dimension of the ratio system.
double tau_exponent(const SelfSimilarMeasure& m, double q);

// Exact multifractal spectrum via the Legendre pair alpha = -T'(q) (central
// differences on the q-grid), f = q alpha + T. Points returned with alpha
// increasing; a monofractal collapses to a single point.
SpectrumCurve f_oracle(const SelfSimilarMeasure& m, const LinearGrid& q_grid);

// Finite-scale box-counting estimate: cylinders are refined until their
// length drops to r, those with mass in [r^{a+eps}, r^{a-eps}] are counted,
// and log N / log(1/r) is reported per grid point (-inf when N = 0).
// Requires cylinder depth <= 40.
SpectrumCurve box_f_estimate(const SelfSimilarMeasure& m, double r, double eps,
                             const LinearGrid& alpha_grid);

struct RadiiSchedule {
  int j_lo = 6;
  int j_hi = 14;  // radii r_j = 1 - 2^{-j}
};

struct BetaEstimate {
  double beta = 0.0;
  int j_lo = 0;
  int j_hi = 0;
  double residual = 0.0;  // max abs residual of the final fit
};

// Integral means growth exponent: least-squares slope of log I(r_j) against
// log 1/(1-r_j), where I(r) = integral of ((1-|phi(r e^{i theta})|)/(1-r))^t.
// Quadrature nodes double until the integral is stable to 1e-6 relative.
// Window endpoints are trimmed while the fit residual exceeds 0.01.
BetaEstimate beta_estimate(const std::function<Complex(Complex)>& phi, double t,
                           RadiiSchedule schedule = {},
                           int initial_nodes = 1 << 12);

enum class LegendreDirection { f_to_beta, beta_to_f };

// Discrete Legendre conjugation in the concave orientation:
//   f_to_beta: g(t) = max_j (y_j - t x_j)   (concave input, convex output)
//   beta_to_f: f(a) = min_j (y_j + x_j a)   (convex input, concave output)
// -inf input points drop out of the pairing. Applying the two directions in
// sequence returns the concave (resp. convex) hull of the input up to the
// grid resolution. The dual grid defaults to the slope range of the input.
SpectrumCurve legendre_transform(const SpectrumCurve& curve,
                                 LegendreDirection direction,
                                 std::optional<LinearGrid> dual_grid = {});

struct SymmetryReport {
  double f_defect = 0.0;     // sup |F(a) - a F(1/a)|
  double beta_defect = 0.0;  // sup |B(B(t)-t+1) - B(t)|
};

// Inversion-invariance defects of sampled spectra, evaluated by linear
// interpolation wherever the reflected argument lands inside the sampled
// range.
SymmetryReport check_spectrum_symmetries(const SpectrumCurve& F_curve,
                                         const SpectrumCurve& B_curve);

}  // namespace qsdim::spectra
