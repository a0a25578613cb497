#pragma once

#include <complex>
#include <cstddef>
#include <vector>

// Thermodynamic formalism over finite disk systems: pressure, entropy, the
// complex Lyapunov exponent, the dimension formula (unique pressure zero) and
// the variational principle P(d) = sup_p (I_p - d Re Lambda_p).

namespace qsdim::thermo {

struct Disk {
  double center;  // on the real axis
  double radius;
};

// Finite list of disks centered on the real line inside the closed unit
// disk, with pairwise disjoint interiors (touching allowed).
class DiskPacking {
 public:
  explicit DiskPacking(std::vector<Disk> disks);

  const std::vector<Disk>& disks() const { return disks_; }
  std::size_t size() const { return disks_.size(); }
  std::vector<double> radii() const;

 private:
  std::vector<Disk> disks_;
};

// Probability vector paired with a packing/radii list.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> p);

  const std::vector<double>& values() const { return p_; }
  std::size_t size() const { return p_.size(); }

 private:
  std::vector<double> p_;
};

// Complex radii of a moved packing together with continuously tracked
// arguments. branch_args[i] == arg(values[i]) mod 2pi; the branch data is
// produced by the motion module's path continuation and never re-derived
// here.
struct ComplexRadii {
  std::vector<std::complex<double>> values;
  std::vector<double> branch_args;

  static ComplexRadii from_positive(const std::vector<double>& radii);
  std::vector<double> moduli() const;
  std::size_t size() const { return values.size(); }
};

// P(d) = log sum |r_i|^d, d in [0,2].
double pressure(const std::vector<double>& moduli, double d);
double pressure(const ComplexRadii& radii, double d);

// I = -sum p_i log p_i with 0 log 0 = 0.
double entropy(const WeightVector& p);

// Lambda_p = -sum p_i (log|r_i| + i branch_args[i]).
std::complex<double> lyapunov(const WeightVector& p, const ComplexRadii& radii);

// Normalized power weights p_i = r_i^delta / sum r_j^delta.
WeightVector gibbs_weights(const std::vector<double>& radii, double delta);

// Unique root of P(d) = 0; requires every modulus in (0,1). Bisection on
// [0,2], extended upward if needed, absolute tolerance 1e-12.
double bowen_dimension(const std::vector<double>& moduli);
double bowen_dimension(const ComplexRadii& radii);

// Signed gap I_p - d Re Lambda_p - P(d); always <= 0 up to rounding, and zero
// exactly when p is the Gibbs vector of |r| at exponent d.
double variational_gap(const WeightVector& p, const ComplexRadii& radii,
                       double d);

// Phi = 1 - I / Lambda, defined for I >= 0 and Re Lambda > 0.
std::complex<double> phi_function(double entropy_value,
                                  std::complex<double> lyapunov_value);

}  // namespace qsdim::thermo
