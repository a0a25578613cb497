#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qsdim/thermo.hpp"

// Explicit holomorphic motions with symmetric Beltrami data.
//
// The base family is the radial stretch phi_lambda(z) = z |z|^{2 lambda /
// (1 - lambda)}, the closed-form solution for the Beltrami field
// mu_lambda = lambda z / conj(z). It fixes 0, 1, infinity, is the identity at
// lambda = 0, satisfies phi_lambda(conj z) = conj(phi_{conj lambda}(z)) and
// has |mu| = |lambda| a.e. Pre/post-composing with real Moebius maps and
// renormalizing to refix 0, 1, infinity yields further families with the same
// invariants that move real-centered packings non-trivially.

namespace qsdim::motion {

using Complex = std::complex<double>;

enum class FamilyKind { radial_stretch, mobius_conjugated_stretch, composition };

struct MapFamily {
  FamilyKind kind = FamilyKind::radial_stretch;
  // mobius_conjugated_stretch: one real Moebius m = (az+b)/(cz+d), family is
  // the renormalization of m^{-1} o phi_lambda o m (4 params).
  // composition: two real Moebius maps m1, m2, family is the renormalization
  // of m2 o phi_lambda o m1 (8 params).
  std::vector<double> params;

  static MapFamily stretch();
  static MapFamily conjugated(double a, double b, double c, double d);
  static MapFamily composed(double a1, double b1, double c1, double d1,
                            double a2, double b2, double c2, double d2);

  void validate() const;
};

struct MotionConfig {
  double rho = 0.9;  // motion restricted to |lambda| <= rho < 1
  double a = 1.0;    // radius rescaling constant (Prop-2 machinery: 1/C^2)
  int steps = 32;    // branch-continuation subdivisions along 0 -> lambda
};

// Radial stretch; 0 at 0, identity at lambda = 0, x -> x^K on positive reals
// for real lambda = k.
Complex stretch_eval(Complex lambda, Complex z);

// Family member at (lambda, z); fixes 0 and 1 exactly up to rounding.
Complex family_eval(const MapFamily& f, Complex lambda, Complex z);

// Complex radii a (phi_lambda(z_i + r_i) - phi_lambda(z_i)) with arguments
// tracked by continuation along the straight path 0 -> lambda in cfg.steps
// substeps; substeps are doubled until every per-step argument increment is
// below pi/2. At lambda = 0 the radii are a * r_i with zero arguments.
thermo::ComplexRadii complex_radii(const thermo::DiskPacking& packing,
                                   const MapFamily& f, Complex lambda,
                                   const MotionConfig& cfg);

// Empirical quasisymmetry constant over |lambda| <= cfg.rho: the max over
// sampled triples x, y, z in the closed unit disk with |x-z| <= |y-z| of
// |phi(x)-phi(z)| / |phi(y)-phi(z)|. Always >= 1; monotone in samples and in
// rho for matched seeds (nested sample sets).
double qs_constant(const MapFamily& f, const MotionConfig& cfg, long samples,
                   std::uint64_t seed);

// Max pairwise distance between images of boundary_samples equidistributed
// boundary points: a lower bound on the true image diameter, exact for the
// sampled set (convex hull + antipodal scan).
double image_diameter(const MapFamily& f, Complex lambda, thermo::Disk disk,
                      int boundary_samples);

struct LambdaGrid {
  int radii = 8;
  int angles = 16;
  int real_points = 32;

  std::vector<Complex> complex_points(double rho) const;
  std::vector<double> real_line(double rho) const;  // interior of (-rho, rho)
};

struct PhiReport {
  double delta = 0.0;
  double a = 1.0;
  double max_abs_phi = 0.0;      // (i)  |Phi| <= 1 + 1e-9 on the grid
  double symmetry_defect = 0.0;  // (ii) |Phi(conj l) - conj Phi(l)| <= 1e-10
  double real_imag_defect = 0.0; // (iii) |Im Phi| on the real line <= 1e-10
  double real_min = 0.0;         // (iii) min Re Phi on the real line >= -1e-10
  double phi0_excess = 0.0;      // (iv) Phi(0) - (1 - delta) <= 1e-10
  double lemma_defect = 0.0;     // (v)  max Phi(k) - B_{-l}(|k|/rho) <= 1e-9
  int violations = 0;
  bool pass = false;
};

// Checks the five structural properties of Phi(lambda) = 1 - I/Lambda(lambda)
// for the Gibbs weights at the given exponent. Requires the rescaled pressure
// hypothesis sum (a r_i)^delta >= 1; use rescaled_bowen_dimension for the
// exponent that satisfies it with equality.
PhiReport verify_phi_properties(const thermo::DiskPacking& packing,
                                const MapFamily& f, double delta,
                                const MotionConfig& cfg,
                                const LambdaGrid& grid = {});

// Bowen dimension of the rescaled radii {a r_i}; the largest exponent for
// which the Prop-2 hypothesis holds.
double rescaled_bowen_dimension(const thermo::DiskPacking& packing, double a);

struct PackingReport {
  double a = 1.0;
  double delta = 0.0;
  double exponent = 0.0;  // D(delta, k/rho)
  double hypothesis_sum = 0.0;
  double conclusion_sum = 0.0;
  bool hypothesis_met = false;
  bool pass = false;
  int boundary_samples_used = 0;
};

// Packing-level distortion implication: if sum (a r_i)^delta >= 1 then
// sum (a diam phi_k B_i)^{D(delta, k/rho)} >= 1 - 1e-9. A vacuous hypothesis
// is reported, not failed. Diameters are re-sampled at 2^14 boundary points
// before a failure is reported.
PackingReport verify_packing_implication(const thermo::DiskPacking& packing,
                                         const MapFamily& f, double k,
                                         double delta, const MotionConfig& cfg,
                                         int boundary_samples = 1 << 10);

// Disk self-map: Cayley-conjugated radial stretch at real k. Used as a test
// map for the integral means estimator.
std::function<Complex(Complex)> cayley_stretch(double k);

}  // namespace qsdim::motion
