#include "qsdim/hyperbolic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "qsdim/bounds.hpp"

namespace qsdim::hyperbolic {

DiskPoint::DiskPoint(Complex z) : z_(z) {
  if (std::abs(z) >= 1.0 - 1e-14)
    throw std::domain_error("DiskPoint: |z| must be strictly below 1");
}

Complex pseudo_hyp(Complex z, Complex w) {
  return (z - w) / (1.0 - std::conj(w) * z);
}

double hyp_dist(Complex z, Complex w) {
  return 2.0 * std::atanh(std::abs(pseudo_hyp(z, w)));
}

TestFunction blaschke_combination(std::vector<BlaschkeTerm> terms) {
  if (terms.empty())
    throw std::invalid_argument("blaschke_combination: no terms");
  double total = 0.0;
  for (const auto& t : terms) {
    if (!(t.weight > 0.0))
      throw std::invalid_argument("blaschke_combination: weights must be positive");
    if (!(t.scale >= 0.0 && t.scale <= 1.0))
      throw std::invalid_argument("blaschke_combination: scale must lie in [0,1]");
    if (!(t.zero > -1.0 && t.zero < 1.0))
      throw std::invalid_argument("blaschke_combination: zero must lie in (-1,1)");
    total += t.weight;
  }
  for (auto& t : terms) t.weight /= total;

  std::string desc = "blaschke_combination[";
  desc += std::to_string(terms.size());
  desc += " term(s)]";
  return TestFunction{
      std::move(desc), [terms](Complex z) {
        Complex acc = 0.0;
        for (const auto& t : terms) {
          const Complex w = (z - t.zero) / (1.0 - t.zero * z);
          acc += t.weight * t.scale * (w * w);
        }
        return acc;
      }};
}

TestFunction blaschke_square_map(double a) {
  TestFunction h = blaschke_combination({{1.0, 1.0, a}});
  h.description = "blaschke_square[a=" + format_number(a) + "]";
  return h;
}

TestFunction random_test_function(Rng& rng) {
  // 1 in 8 draws is a pure unscaled factor: for negative zeros these are the
  // extremal maps, so the harness exercises the equality case.
  if (rng.next_u64() % 8 == 0)
    return blaschke_square_map(rng.uniform(-0.95, 0.95));
  const int n = 1 + static_cast<int>(rng.next_u64() % 4);
  std::vector<BlaschkeTerm> terms;
  terms.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    terms.push_back({0.05 + rng.next_double(), rng.next_double(),
                     rng.uniform(-0.95, 0.95)});
  }
  return blaschke_combination(std::move(terms));
}

Complex sample_disk_point(Rng& rng, double max_mod) {
  const double r = max_mod * std::sqrt(rng.next_double());
  const double th = 2.0 * std::numbers::pi * rng.next_double();
  return {r * std::cos(th), r * std::sin(th)};
}

Complex schwarz_pick_quotient(const TestFunction& h, const DiskPoint& z,
                              const DiskPoint& w) {
  const Complex dz = pseudo_hyp(z, w);
  if (std::abs(dz) < 1e-300)
    throw std::domain_error("schwarz_pick_quotient: coincident points");
  return pseudo_hyp(h.eval(z.value()), h.eval(w.value())) / dz;
}

ThreePointReport three_point_check(const TestFunction& h, const DiskPoint& z,
                                   const DiskPoint& w, const DiskPoint& v) {
  if (std::abs(z.value() - v.value()) < 1e-300 ||
      std::abs(w.value() - v.value()) < 1e-300)
    throw std::domain_error("three_point_check: coincident points");
  const Complex qz = schwarz_pick_quotient(h, z, v);
  const Complex qw = schwarz_pick_quotient(h, w, v);
  if (std::abs(qz) >= 1.0 || std::abs(qw) >= 1.0)
    throw std::domain_error("three_point_check: quotient reached the unit circle");
  ThreePointReport rep{};
  rep.lhs = hyp_dist(qz, qw);
  rep.rhs = hyp_dist(z.value(), w.value());
  rep.ok = rep.lhs <= rep.rhs + 1e-10;
  return rep;
}

double extremal_quotient_bound(double k, double l) {
  if (!(k >= 0.0 && k < 1.0))
    throw std::domain_error("extremal_quotient_bound: k must lie in [0,1)");
  if (!(l > 0.0 && l < 1.0))
    throw std::domain_error("extremal_quotient_bound: l must lie in (0,1)");
  return (k + 2.0 * l + k * l * l) / (1.0 + 2.0 * k * l + l * l);
}

LemmaReport verify_blaschke_lemma(long samples, std::uint64_t seed) {
  if (samples < 1)
    throw std::invalid_argument("verify_blaschke_lemma: samples must be >= 1");
  Rng rng(seed);
  LemmaReport rep{0, -std::numeric_limits<double>::infinity(), samples, seed};
  for (long i = 0; i < samples; ++i) {
    const TestFunction h = random_test_function(rng);
    const double k = rng.uniform(0.0, 0.99);
    const double h0 = h.eval(0.0).real();
    const double l = std::sqrt(std::max(h0, 0.0));
    const double margin = h.eval(k).real() - bounds::blaschke_sq(-l, k);
    if (margin > rep.worst_margin) rep.worst_margin = margin;
    if (margin > 1e-12) ++rep.violations;
  }
  return rep;
}

}  // namespace qsdim::hyperbolic
