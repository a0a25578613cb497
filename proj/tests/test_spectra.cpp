#include <cmath>
#include <limits>
#include <stdexcept>

#include <doctest.h>

#include "qsdim/bounds.hpp"
#include "qsdim/motion.hpp"
#include "qsdim/spectra.hpp"

using namespace qsdim::spectra;
using qsdim::LinearGrid;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// test-side derivative of the quadratic branch t(t-1)/(t+c):
// ((t+c)(2t-1) - t(t-1)) / (t+c)^2 = (t^2 + 2ct - c) / (t+c)^2
double beta_quad_slope(double t, double K) {
  const double c = 4.0 * K / ((K - 1.0) * (K - 1.0));
  return (t * t + 2.0 * c * t - c) / ((t + c) * (t + c));
}

}  // namespace

TEST_CASE("f-spectrum bound") {
  CHECK(f_bound(0.64, 4.0) == doctest::Approx(0.64).epsilon(1e-14));
  CHECK(f_bound(4.0, 4.0) == doctest::Approx(0.0).scale(1).epsilon(1e-14));
  CHECK(f_bound(0.25, 4.0) == doctest::Approx(0.0).scale(1).epsilon(1e-14));
  CHECK(f_bound(1.0, 4.0) == 1.0);
  CHECK(f_bound(0.2, 4.0) == -kInf);
  CHECK(f_bound(4.5, 4.0) == -kInf);
  CHECK(f_bound(1.0, 1.0) == 1.0);
  CHECK(f_bound(1.2, 1.0) == -kInf);
  CHECK_THROWS_AS(f_bound(0.0, 2.0), std::domain_error);

  // continuity at both branch joints, and dominated by min(alpha, 1)
  for (double k : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const double K = qsdim::bounds::k_to_K(k);
    for (double joint : {1.0 - k * k, 1.0 / (1.0 - k * k)}) {
      const double left = f_bound(std::nextafter(joint, 0.0), K);
      const double right = f_bound(std::nextafter(joint, 100.0), K);
      CHECK(std::abs(left - right) < 1e-10);
    }
    for (double a : LinearGrid{1.0 / K, K, 101}.points()) {
      const double v = f_bound(a, K);
      CHECK(v <= std::min(a, 1.0) + 1e-12);
      CHECK(v >= -1e-12);
    }
  }
}

TEST_CASE("f-bound consistency with the compression bound") {
  // on the quadratic compression branch, the bound equals D(d*, k) where
  // d* solves D(d, k) = alpha d  (bisection oracle)
  for (double k : {0.3, 0.5, 0.7}) {
    const double K = qsdim::bounds::k_to_K(k);
    for (double alpha :
         LinearGrid{1.0 / K + 0.01, 1.0 - k * k - 0.01, 7}.points()) {
      double lo = 1e-9, hi = 1.0;
      for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        // D(d,k)/d decreases in d, so D - alpha d changes sign once
        if (qsdim::bounds::compress_bound(mid, k) - alpha * mid > 0.0)
          lo = mid;
        else
          hi = mid;
      }
      const double dstar = 0.5 * (lo + hi);
      CHECK(f_bound(alpha, K) ==
            doctest::Approx(qsdim::bounds::compress_bound(dstar, k))
                .epsilon(1e-8));
    }
  }
}

TEST_CASE("beta-spectrum bound") {
  CHECK(beta_bound(1.0, 3.0) == 0.0);
  CHECK(beta_bound(4.0, 2.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(beta_bound(-2.0, 2.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(beta_bound(5.0, 1.0) == 0.0);

  for (double k : {0.2, 0.5, 0.8}) {
    const double K = qsdim::bounds::k_to_K(k);
    const double t_lo = -2.0 / (K - 1.0);
    const double t_hi = 2.0 * K / (K - 1.0);
    // continuity across the phase transitions
    for (double t : {t_lo, t_hi}) {
      const double inner = beta_bound(std::nextafter(t, 0.0), K);
      const double outer = beta_bound(std::nextafter(t, 100.0 * t), K);
      CHECK(std::abs(inner - outer) < 1e-10);
    }
    // first-order matching at the transitions
    CHECK(std::abs(beta_quad_slope(t_hi, K) - (1.0 - 1.0 / K)) < 1e-8);
    CHECK(std::abs(beta_quad_slope(t_lo, K) - (-(K - 1.0))) < 1e-8);
    // convexity on the bounded range
    const auto ts = LinearGrid{t_lo, t_hi, 41}.points();
    for (std::size_t i = 1; i + 1 < ts.size(); ++i) {
      const double second = beta_bound(ts[i - 1], K) -
                            2.0 * beta_bound(ts[i], K) +
                            beta_bound(ts[i + 1], K);
      CHECK(second >= -1e-12);
    }
  }
}

TEST_CASE("quasidisk bound") {
  CHECK(quasidisk_beta_bound(2.5, 0.5) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(quasidisk_beta_bound(1.25, 0.5) ==
        doctest::Approx(0.25).epsilon(1e-14));  // k^2 at the left endpoint
  CHECK(quasidisk_beta_bound(4.0, 0.5) ==
        doctest::Approx(11.0 / 5.0).epsilon(1e-14));
  CHECK_THROWS_AS(quasidisk_beta_bound(1.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(quasidisk_beta_bound(2.0, 0.0), std::domain_error);

  for (double k : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const double tc = (1.0 + k * k) / k;
    const double left = quasidisk_beta_bound(std::nextafter(tc, 0.0), k);
    const double right = quasidisk_beta_bound(std::nextafter(tc, 1e9), k);
    CHECK(std::abs(left - right) < 1e-10);
    // the linear slope written through K^2 agrees
    const double K = qsdim::bounds::k_to_K(k);
    const double slope = (K * K - 1.0) / (K * K + 1.0);
    CHECK(slope == doctest::Approx(2.0 * k / (1.0 + k * k)).epsilon(1e-14));
  }
}

TEST_CASE("conjectured lower bound and ordering") {
  CHECK(conjectured_beta_lower(0.0, 0.5) == 0.0);
  CHECK(conjectured_beta_lower(4.0, 0.5) == doctest::Approx(1.0));
  CHECK(conjectured_beta_lower(-4.0, 0.5) == doctest::Approx(1.0));
  CHECK(conjectured_beta_lower(-2.0, 0.5) == doctest::Approx(0.25));
  CHECK_THROWS_AS(conjectured_beta_lower(4.1, 0.5), std::domain_error);

  // below the proven quasidisk upper bound wherever both are defined
  for (double k : {0.2, 0.4, 0.6, 0.8}) {
    const double lo = 1.0 + k * k;
    const double hi = 2.0 / k;
    for (double t : LinearGrid{lo, hi, 33}.points())
      CHECK(quasidisk_beta_bound(t, k) >= conjectured_beta_lower(t, k) - 1e-12);
  }
}

TEST_CASE("moment exponent of self-similar measures") {
  const SelfSimilarMeasure even({0.5, 0.5}, {0.5, 0.5});
  for (double q : {-3.0, 0.0, 1.0, 2.5})
    CHECK(tau_exponent(even, q) == doctest::Approx(1.0 - q).epsilon(1e-11));
  const SelfSimilarMeasure binom({2.0 / 3.0, 1.0 / 3.0}, {0.5, 0.5});
  CHECK(tau_exponent(binom, 1.0) == doctest::Approx(0.0).scale(1).epsilon(1e-11));
  CHECK(tau_exponent(binom, 0.0) == doctest::Approx(1.0).epsilon(1e-11));

  CHECK_THROWS_AS(SelfSimilarMeasure({0.5, 0.6}, {0.5, 0.5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SelfSimilarMeasure({0.5, 0.5}, {0.7, 0.7}),
                  std::invalid_argument);
}

TEST_CASE("exact spectrum oracle") {
  // monofractal: the curve collapses to the point (s0, s0)
  const SelfSimilarMeasure mono({0.5, 0.5}, {0.5, 0.5});
  const auto point = f_oracle(mono, LinearGrid{-5.0, 5.0, 41});
  CHECK(point.points.size() == 1);
  CHECK(point.points[0].x == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(point.points[0].y == doctest::Approx(1.0).epsilon(1e-9));

  const SelfSimilarMeasure binom({2.0 / 3.0, 1.0 / 3.0}, {0.5, 0.5});
  const auto curve = f_oracle(binom, LinearGrid{-30.0, 30.0, 601});
  const double a_min = std::log(1.5) / std::log(2.0);
  const double a_max = std::log(3.0) / std::log(2.0);
  CHECK(curve.points.front().x == doctest::Approx(a_min).epsilon(1e-6));
  CHECK(curve.points.back().x == doctest::Approx(a_max).epsilon(1e-6));
  double fmax = -kInf;
  for (const auto& p : curve.points) {
    fmax = std::max(fmax, p.y);
    CHECK(p.y <= p.x + 1e-12);  // f <= alpha throughout
  }
  CHECK(fmax == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("box-counting estimate") {
  // exact dyadic monofractal: every cylinder sits at mass exponent 1
  const SelfSimilarMeasure mono({0.5, 0.5}, {0.5, 0.5});
  const auto curve =
      box_f_estimate(mono, std::pow(2.0, -16), 0.05, LinearGrid{0.5, 1.5, 21});
  for (const auto& p : curve.points) {
    if (std::abs(p.x - 1.0) <= 0.04)
      CHECK(p.y == doctest::Approx(1.0).epsilon(1e-12));
    if (p.x < 0.9 || p.x > 1.1) CHECK(p.y == -kInf);
  }

  // binomial at a coarse scale stays near the oracle on the interior
  const SelfSimilarMeasure binom({2.0 / 3.0, 1.0 / 3.0}, {0.5, 0.5});
  const auto oracle = f_oracle(binom, LinearGrid{-1.2, 1.2, 121});
  const auto est = box_f_estimate(binom, std::pow(2.0, -16), 0.05,
                                  LinearGrid{0.9, 1.25, 36});
  for (const auto& p : est.points) {
    if (p.x < oracle.points.front().x || p.x > oracle.points.back().x) continue;
    double ref = -kInf;
    for (std::size_t i = 1; i < oracle.points.size(); ++i) {
      if (oracle.points[i].x >= p.x) {
        const auto& a = oracle.points[i - 1];
        const auto& b = oracle.points[i];
        ref = a.y + (b.y - a.y) * (p.x - a.x) / (b.x - a.x);
        break;
      }
    }
    CHECK(std::abs(p.y - ref) < 0.12);
  }

  const SelfSimilarMeasure slow({0.5, 0.5}, {0.9, 0.05});
  CHECK_THROWS_AS(
      box_f_estimate(slow, std::pow(2.0, -20), 0.05, LinearGrid{0.5, 1.5, 3}),
      std::runtime_error);
}

TEST_CASE("integral means estimate") {
  const auto identity = [](Complex z) { return z; };
  for (double t : {-2.0, -1.0, 0.0, 1.0, 2.0})
    CHECK(beta_estimate(identity, t).beta == 0.0);

  const Complex rot(std::cos(0.7), std::sin(0.7));
  const auto rotation = [rot](Complex z) { return rot * z; };
  for (double t : {-2.0, 1.0}) CHECK(std::abs(beta_estimate(rotation, t).beta) < 1e-9);

  // t = 0 integrand is identically 1 regardless of the map
  const auto stretch = qsdim::motion::cayley_stretch(1.0 / 3.0);
  CHECK(beta_estimate(stretch, 0.0).beta == 0.0);

  // the angle-type behavior: for t = -2, K = 2 the growth exponent sits near
  // the transition value 1
  const auto est = beta_estimate(stretch, -2.0);
  CHECK(est.beta > 0.5);
  CHECK(est.beta < 1.15);

  CHECK_THROWS_AS(beta_estimate(identity, 1.0, {6, 7}), std::invalid_argument);
}

TEST_CASE("discrete Legendre transform") {
  // concave classical pair: -x^2/4 on [-2,2] conjugates to t^2 on [-1,1]
  SpectrumCurve par;
  par.kind = CurveKind::f_of_alpha;
  for (double x : LinearGrid{-2.0, 2.0, 81}.points())
    par.points.push_back({x, -x * x / 4.0});
  const auto conj = legendre_transform(par, LegendreDirection::f_to_beta);
  CHECK(conj.points.front().x == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(conj.points.back().x == doctest::Approx(1.0).epsilon(1e-9));
  const double step = 4.0 / 80.0;
  for (const auto& p : conj.points)
    CHECK(std::abs(p.y - p.x * p.x) <= step);

  // and back: the double transform reproduces the concave input
  const auto back = legendre_transform(conj, LegendreDirection::beta_to_f);
  for (const auto& p : back.points) {
    if (p.x < -2.0 || p.x > 2.0) continue;
    CHECK(std::abs(p.y - (-p.x * p.x / 4.0)) <= step);
  }

  // point spectrum padded with -inf maps to the affine pairing line
  SpectrumCurve point;
  point.kind = CurveKind::f_of_alpha;
  point.points = {{0.2, -kInf}, {0.7, 0.7}, {1.2, -kInf}};
  const auto line = legendre_transform(point, LegendreDirection::f_to_beta,
                                       LinearGrid{-1.0, 1.0, 5});
  for (const auto& p : line.points)
    CHECK(p.y == doctest::Approx(0.7 - p.x * 0.7).epsilon(1e-14));

  CHECK_THROWS_AS(legendre_transform(SpectrumCurve{{{0.0, 1.0}, {1.0, 2.0}},
                                                   CurveKind::f_of_alpha},
                                     LegendreDirection::f_to_beta),
                  std::invalid_argument);
}

TEST_CASE("spectrum symmetries") {
  // log-symmetric grid so reciprocals land on nodes
  const double K = 4.0;
  SpectrumCurve F;
  F.kind = CurveKind::f_of_alpha;
  const int n = 257;
  for (int i = 0; i < n; ++i) {
    const double alpha = std::pow(K, 2.0 * i / (n - 1) - 1.0);
    F.points.push_back({alpha, f_bound(alpha, K)});
  }
  SpectrumCurve B;
  B.kind = CurveKind::beta_of_t;
  for (double t : LinearGrid{-4.0, 10.0, 1401}.points())
    B.points.push_back({t, beta_bound(t, 2.0)});

  const auto rep = check_spectrum_symmetries(F, B);
  CHECK(rep.f_defect < 1e-12);   // identity exact at reciprocal nodes
  CHECK(rep.beta_defect < 1e-4); // limited by linear interpolation

  // spot values: both transition points map to each other
  CHECK(beta_bound(4.0, 2.0) ==
        doctest::Approx(beta_bound(beta_bound(4.0, 2.0) - 4.0 + 1.0, 2.0))
            .epsilon(1e-14));
  CHECK(f_bound(25.0 / 16.0, 4.0) ==
        doctest::Approx((25.0 / 16.0) * f_bound(16.0 / 25.0, 4.0))
            .epsilon(1e-14));

  // all-zero spectra of the identity map have no defect
  SpectrumCurve zf, zb;
  zf.kind = CurveKind::f_of_alpha;
  zb.kind = CurveKind::beta_of_t;
  for (double x : LinearGrid{0.5, 2.0, 31}.points()) zf.points.push_back({x, 0.0});
  for (double t : LinearGrid{-2.0, 2.0, 31}.points()) zb.points.push_back({t, 0.0});
  const auto zero_rep = check_spectrum_symmetries(zf, zb);
  CHECK(zero_rep.f_defect == 0.0);
  CHECK(zero_rep.beta_defect == 0.0);
}
