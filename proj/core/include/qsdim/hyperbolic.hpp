#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qsdim/numeric.hpp"

// Hyperbolic geometry of the unit disk and the three-point Schwarz-Pick
// quantities, plus a randomized harness for the extremal inequality
// h(k) <= B_{-l}(k) over hypothesis-true holomorphic test maps.

namespace qsdim::hyperbolic {

using Complex = std::complex<double>;

// Point strictly inside the unit disk.
class DiskPoint {
 public:
  explicit DiskPoint(Complex z);
  DiskPoint(double re, double im) : DiskPoint(Complex(re, im)) {}
  explicit DiskPoint(double x) : DiskPoint(Complex(x, 0.0)) {}

  Complex value() const { return z_; }

 private:
  Complex z_;
};

// [z,w] = (z - w) / (1 - conj(w) z); always inside the unit disk.
Complex pseudo_hyp(Complex z, Complex w);
inline Complex pseudo_hyp(const DiskPoint& z, const DiskPoint& w) {
  return pseudo_hyp(z.value(), w.value());
}

// d(z,w) = 2 artanh |[z,w]|, so tanh(d/2) = |[z,w]|.
double hyp_dist(Complex z, Complex w);
inline double hyp_dist(const DiskPoint& z, const DiskPoint& w) {
  return hyp_dist(z.value(), w.value());
}

// Holomorphic test map D -> D. Instances built by the factories below are
// real-symmetric, send (-1,1) into [0,1) and are never disk automorphisms.
struct TestFunction {
  std::string description;
  std::function<Complex(Complex)> eval;
};

// weight * scale * ((z - zero)/(1 - zero z))^2, real zero in (-1,1)
struct BlaschkeTerm {
  double weight;
  double scale;
  double zero;
};

// Convex combination of scaled squared Blaschke factors; weights are
// normalized to sum to 1.
TestFunction blaschke_combination(std::vector<BlaschkeTerm> terms);

// Pure squared factor B_a, the extremal map of the lemma for a = -l.
TestFunction blaschke_square_map(double a);

TestFunction random_test_function(Rng& rng);

// Random point with |z| <= max_mod (default stays clear of the boundary).
Complex sample_disk_point(Rng& rng, double max_mod = 0.95);

// h*(z,w) = [h z, h w] / [z, w]; |result| <= 1 by Schwarz-Pick, strictly < 1
// here since the test maps are not automorphisms. Throws on z == w.
Complex schwarz_pick_quotient(const TestFunction& h, const DiskPoint& z,
                              const DiskPoint& w);

struct ThreePointReport {
  double lhs;  // d(h*(z,v), h*(w,v))
  double rhs;  // d(z,w)
  bool ok;     // lhs <= rhs + 1e-10
};

ThreePointReport three_point_check(const TestFunction& h, const DiskPoint& z,
                                   const DiskPoint& w, const DiskPoint& v);

// Sharp bound for h*(k,0) under the lemma hypotheses:
// (k + 2l + k l^2) / (1 + 2 k l + l^2); attained by B_{-l}.
double extremal_quotient_bound(double k, double l);

struct LemmaReport {
  long violations;
  double worst_margin;  // max over samples of h(k) - B_{-l}(k)
  long samples;
  std::uint64_t seed;
};

// Draws random test maps h and arguments k, sets l = sqrt(h(0)) and checks
// h(k) <= B_{-l}(k) + 1e-12. Violations are reported, never thrown.
LemmaReport verify_blaschke_lemma(long samples, std::uint64_t seed);

}  // namespace qsdim::hyperbolic
