#pragma once

#include <complex>
#include <optional>

// Closed-form dimension-distortion bounds for quasisymmetric and
// quasiconformal maps of the line/plane. All functions are pure and validate
// their domains with std::domain_error. Endpoints (k = 0, delta in {0,1}) are
// handled exactly, without epsilon nudging.

namespace qsdim::bounds {

// Dilatation pair: k in [0,1), K = (1+k)/(1-k) in [1,inf).
struct Dilatation {
  double k;
  double K;

  static Dilatation from_k(double k);
  static Dilatation from_K(double K);
};

double k_to_K(double k);  // (1+k)/(1-k)
double K_to_k(double K);  // (K-1)/(K+1)

// Quasisymmetry-norm conversions between the rho-definition and the
// dilatation definition. Both directions are upper bounds.
double qs_k_upper_bound(double rho);  // k(rho) <= 1 - 1/rho,  rho >= 1
double qs_rho_upper_bound(double K);  // rho    <= exp(pi K)/16, K >= 1

// Compression bound
//   D(delta, k) = delta (1 - k^2) / (1 + k sqrt(1-delta))^2,
// delta in [0,1], k in [-1,1]; the degenerate corner (0, +-1) is 0 by
// continuity.
double compress_bound(double delta, double k);

// Expansion bound D*(delta, k) = D(delta, -min{k, sqrt(1-delta)}), k in [0,1).
double expand_bound(double delta, double k);

// Squared Blaschke factor B_a(z) = ((z - a)/(1 - a z))^2 with real a in
// (-1,1). Satisfies 1 - B_{-sqrt(1-delta)}(k) = D(delta, k).
std::complex<double> blaschke_sq(double a, std::complex<double> z);
double blaschke_sq(double a, double x);

// Expansion bound for antisymmetric maps: (1+k^2) D / (1 - k^2 + k^2 D).
double antisym_expand(double Delta, double k);

// Expansion bound for conformal maps with quasiconformal extension:
// (1+k^2) d / (1 + k^2 - 2 k sqrt(1-d)) for d <= 1-k^2, capped at 1+k^2.
double conformal_expand_bound(double delta, double k);

// Matching contraction bound: (1+k^2) d / (1 + k^2 + 2 k sqrt(1-d)).
double conformal_contract_bound(double delta, double k);

// Dimension lower bound from the integral means spectrum:
// -t dimE / (beta - t + 1 - dimE), t < 0, positive denominator required.
double makarov_dim_lower(double dimE, double t, double beta);

// Supremum of p with phi' in L^p: 2(K+1)/(K-1). Unbounded (K = 1) is
// reported as nullopt; file emitters render it as "inf".
std::optional<double> lp_exponent_bound(double K);

}  // namespace qsdim::bounds
