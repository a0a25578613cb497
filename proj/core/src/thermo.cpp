#include "qsdim/thermo.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qsdim/numeric.hpp"

namespace qsdim::thermo {

namespace {

constexpr double kGeomTol = 1e-12;

}  // namespace

DiskPacking::DiskPacking(std::vector<Disk> disks) : disks_(std::move(disks)) {
  if (disks_.empty())
    throw std::invalid_argument("DiskPacking: packing must be nonempty");
  for (std::size_t i = 0; i < disks_.size(); ++i) {
    const Disk& d = disks_[i];
    if (!(d.radius > 0.0) || d.radius >= 1.0)
      throw std::invalid_argument("DiskPacking: disk " + std::to_string(i) +
                                  " must have radius in (0,1)");
    if (std::abs(d.center) + d.radius > 1.0 + kGeomTol)
      throw std::invalid_argument("DiskPacking: disk " + std::to_string(i) +
                                  " extends outside the closed unit disk");
  }
  for (std::size_t i = 0; i < disks_.size(); ++i) {
    for (std::size_t j = i + 1; j < disks_.size(); ++j) {
      if (std::abs(disks_[i].center - disks_[j].center) <
          disks_[i].radius + disks_[j].radius - kGeomTol)
        throw std::invalid_argument("DiskPacking: disks " + std::to_string(i) +
                                    " and " + std::to_string(j) +
                                    " have overlapping interiors");
    }
  }
}

std::vector<double> DiskPacking::radii() const {
  std::vector<double> r;
  r.reserve(disks_.size());
  for (const Disk& d : disks_) r.push_back(d.radius);
  return r;
}

WeightVector::WeightVector(std::vector<double> p) : p_(std::move(p)) {
  if (p_.empty()) throw std::invalid_argument("WeightVector: empty");
  double sum = 0.0;
  for (double x : p_) {
    if (x < 0.0)
      throw std::invalid_argument("WeightVector: entries must be nonnegative");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("WeightVector: entries must sum to 1");
}

ComplexRadii ComplexRadii::from_positive(const std::vector<double>& radii) {
  ComplexRadii out;
  out.values.reserve(radii.size());
  out.branch_args.assign(radii.size(), 0.0);
  for (double r : radii) {
    if (!(r > 0.0))
      throw std::invalid_argument("ComplexRadii: radii must be positive");
    out.values.emplace_back(r, 0.0);
  }
  return out;
}

std::vector<double> ComplexRadii::moduli() const {
  std::vector<double> m;
  m.reserve(values.size());
  for (const auto& v : values) m.push_back(std::abs(v));
  return m;
}

double pressure(const std::vector<double>& moduli, double d) {
  if (moduli.empty()) throw std::invalid_argument("pressure: no radii");
  if (!(d >= 0.0 && d <= 64.0))
    throw std::domain_error("pressure: exponent out of range");
  double sum = 0.0;
  for (double m : moduli) {
    if (!(m > 0.0)) throw std::domain_error("pressure: nonpositive modulus");
    sum += std::exp(d * std::log(m));
  }
  return std::log(sum);
}

double pressure(const ComplexRadii& radii, double d) {
  return pressure(radii.moduli(), d);
}

double entropy(const WeightVector& p) {
  double acc = 0.0;
  for (double x : p.values())
    if (x > 0.0) acc -= x * std::log(x);
  return acc;
}

std::complex<double> lyapunov(const WeightVector& p, const ComplexRadii& radii) {
  if (p.size() != radii.size())
    throw std::invalid_argument("lyapunov: length mismatch");
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double mod = std::abs(radii.values[i]);
    if (!(mod > 0.0)) throw std::domain_error("lyapunov: zero radius");
    acc -= p.values()[i] *
           std::complex<double>(std::log(mod), radii.branch_args[i]);
  }
  return acc;
}

WeightVector gibbs_weights(const std::vector<double>& radii, double delta) {
  if (radii.empty()) throw std::invalid_argument("gibbs_weights: no radii");
  std::vector<double> w;
  w.reserve(radii.size());
  double sum = 0.0;
  for (double r : radii) {
    if (!(r > 0.0))
      throw std::invalid_argument("gibbs_weights: radii must be positive");
    const double x = std::exp(delta * std::log(r));
    w.push_back(x);
    sum += x;
  }
  for (double& x : w) x /= sum;
  return WeightVector(std::move(w));
}

double bowen_dimension(const std::vector<double>& moduli) {
  if (moduli.empty()) throw std::invalid_argument("bowen_dimension: no radii");
  for (double m : moduli) {
    if (!(m > 0.0 && m < 1.0))
      throw std::invalid_argument(
          "bowen_dimension: every modulus must lie in (0,1)");
  }
  return bisect_decreasing([&](double d) { return pressure(moduli, d); }, 0.0,
                           2.0, 1e-13);
}

double bowen_dimension(const ComplexRadii& radii) {
  return bowen_dimension(radii.moduli());
}

double variational_gap(const WeightVector& p, const ComplexRadii& radii,
                       double d) {
  return entropy(p) - d * lyapunov(p, radii).real() - pressure(radii, d);
}

std::complex<double> phi_function(double entropy_value,
                                  std::complex<double> lyapunov_value) {
  if (!(entropy_value >= 0.0))
    throw std::domain_error("phi_function: entropy must be nonnegative");
  if (!(lyapunov_value.real() > 0.0))
    throw std::domain_error("phi_function: Re Lambda must be positive");
  return 1.0 - entropy_value / lyapunov_value;
}

}  // namespace qsdim::thermo
