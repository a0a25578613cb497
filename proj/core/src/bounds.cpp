#include "qsdim/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qsdim::bounds {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

}  // namespace

Dilatation Dilatation::from_k(double k) {
  require(k >= 0.0 && k < 1.0, "Dilatation: k must lie in [0,1)");
  return {k, k_to_K(k)};
}

Dilatation Dilatation::from_K(double K) {
  require(K >= 1.0, "Dilatation: K must lie in [1,inf)");
  return {K_to_k(K), K};
}

double k_to_K(double k) {
  require(k >= 0.0 && k < 1.0, "k_to_K: k must lie in [0,1)");
  // long double intermediate keeps the round trip within 1 ulp
  const long double kk = k;
  return static_cast<double>((1.0L + kk) / (1.0L - kk));
}

double K_to_k(double K) {
  require(K >= 1.0, "K_to_k: K must lie in [1,inf)");
  const long double KK = K;
  return static_cast<double>((KK - 1.0L) / (KK + 1.0L));
}

double qs_k_upper_bound(double rho) {
  require(rho >= 1.0, "qs_k_upper_bound: rho must be >= 1");
  return 1.0 - 1.0 / rho;
}

double qs_rho_upper_bound(double K) {
  require(K >= 1.0, "qs_rho_upper_bound: K must be >= 1");
  return std::exp(std::numbers::pi * K) / 16.0;
}

double compress_bound(double delta, double k) {
  require(delta >= 0.0 && delta <= 1.0, "compress_bound: delta must lie in [0,1]");
  require(k >= -1.0 && k <= 1.0, "compress_bound: k must lie in [-1,1]");
  if (delta == 0.0) return 0.0;  // covers the 0/0 corner at k = -1
  const double l = std::sqrt(1.0 - delta);
  const double den = 1.0 + k * l;
  return delta * (1.0 - k * k) / (den * den);
}

double expand_bound(double delta, double k) {
  require(delta >= 0.0 && delta <= 1.0, "expand_bound: delta must lie in [0,1]");
  require(k >= 0.0 && k < 1.0, "expand_bound: k must lie in [0,1)");
  const double l = std::sqrt(1.0 - delta);
  return compress_bound(delta, -std::min(k, l));
}

std::complex<double> blaschke_sq(double a, std::complex<double> z) {
  require(a > -1.0 && a < 1.0, "blaschke_sq: a must lie in (-1,1)");
  require(std::abs(z) <= 1.0 + 1e-12, "blaschke_sq: |z| must be <= 1");
  const std::complex<double> w = (z - a) / (1.0 - a * z);
  return w * w;
}

double blaschke_sq(double a, double x) {
  require(a > -1.0 && a < 1.0, "blaschke_sq: a must lie in (-1,1)");
  require(std::abs(x) <= 1.0 + 1e-12, "blaschke_sq: |z| must be <= 1");
  const double w = (x - a) / (1.0 - a * x);
  return w * w;
}

double antisym_expand(double Delta, double k) {
  require(Delta >= 0.0 && Delta <= 1.0, "antisym_expand: Delta must lie in [0,1]");
  require(k >= 0.0 && k < 1.0, "antisym_expand: k must lie in [0,1)");
  const double k2 = k * k;
  return (1.0 + k2) * Delta / (1.0 - k2 + k2 * Delta);
}

double conformal_expand_bound(double delta, double k) {
  require(delta >= 0.0 && delta <= 1.0,
          "conformal_expand_bound: delta must lie in [0,1]");
  require(k >= 0.0 && k < 1.0, "conformal_expand_bound: k must lie in [0,1)");
  const double k2 = k * k;
  if (delta > 1.0 - k2) return 1.0 + k2;  // cap beyond the validity range
  return (1.0 + k2) * delta / (1.0 + k2 - 2.0 * k * std::sqrt(1.0 - delta));
}

double conformal_contract_bound(double delta, double k) {
  require(delta >= 0.0 && delta <= 1.0,
          "conformal_contract_bound: delta must lie in [0,1]");
  require(k >= 0.0 && k < 1.0, "conformal_contract_bound: k must lie in [0,1)");
  const double k2 = k * k;
  return (1.0 + k2) * delta / (1.0 + k2 + 2.0 * k * std::sqrt(1.0 - delta));
}

double makarov_dim_lower(double dimE, double t, double beta) {
  require(dimE > 0.0 && dimE <= 1.0, "makarov_dim_lower: dimE must lie in (0,1]");
  require(t < 0.0, "makarov_dim_lower: t must be negative");
  const double den = beta - t + 1.0 - dimE;
  require(den > 0.0, "makarov_dim_lower: nonpositive denominator");
  return -t * dimE / den;
}

std::optional<double> lp_exponent_bound(double K) {
  require(K >= 1.0, "lp_exponent_bound: K must be >= 1");
  if (K == 1.0) return std::nullopt;  // conformal case: every exponent works
  return 2.0 * (K + 1.0) / (K - 1.0);
}

}  // namespace qsdim::bounds
