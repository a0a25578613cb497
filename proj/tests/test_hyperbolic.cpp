#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "qsdim/bounds.hpp"
#include "qsdim/hyperbolic.hpp"

using namespace qsdim::hyperbolic;
using qsdim::Rng;

TEST_CASE("disk point validation") {
  CHECK_NOTHROW(DiskPoint(0.95));
  CHECK_THROWS_AS(DiskPoint(1.0), std::domain_error);
  CHECK_THROWS_AS(DiskPoint(Complex(0.8, 0.7)), std::domain_error);
}

TEST_CASE("pseudo-hyperbolic quotient") {
  const Complex z(0.3, 0.4);
  CHECK(std::abs(pseudo_hyp(z, Complex(0.0, 0.0)) - z) == 0.0);
  CHECK(pseudo_hyp(Complex(0.5, 0.0), Complex(1.0 / 3.0, 0.0)).real() ==
        doctest::Approx(0.2).epsilon(1e-15));
  CHECK(std::abs(pseudo_hyp(z, z)) == 0.0);

  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Complex a = sample_disk_point(rng);
    const Complex b = sample_disk_point(rng);
    CHECK(std::abs(pseudo_hyp(a, b)) < 1.0);
    CHECK(std::abs(pseudo_hyp(a, b)) ==
          doctest::Approx(std::abs(pseudo_hyp(b, a))).epsilon(1e-15));
  }
}

TEST_CASE("hyperbolic distance") {
  CHECK(hyp_dist(Complex(0.3, 0.2), Complex(0.3, 0.2)) == 0.0);
  CHECK(hyp_dist(Complex(0.0, 0.0), Complex(0.5, 0.0)) ==
        doctest::Approx(std::log(3.0)).epsilon(1e-15));
  // additivity along the real geodesic: d(-l, k) = d(0,k) + d(0,l)
  CHECK(hyp_dist(Complex(-0.5, 0.0), Complex(1.0 / 3.0, 0.0)) ==
        doctest::Approx(std::log(6.0)).epsilon(1e-14));

  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const Complex a = sample_disk_point(rng);
    const Complex b = sample_disk_point(rng);
    const Complex c = sample_disk_point(rng);
    CHECK(hyp_dist(a, b) == hyp_dist(b, a));
    CHECK(hyp_dist(a, c) <= hyp_dist(a, b) + hyp_dist(b, c) + 1e-12);
    CHECK(std::tanh(hyp_dist(a, b) / 2.0) ==
          doctest::Approx(std::abs(pseudo_hyp(a, b))).epsilon(1e-12));
  }
}

TEST_CASE("Schwarz-Pick quotient") {
  const TestFunction sq = blaschke_square_map(0.0);  // z^2
  const Complex z(0.3, 0.25);
  CHECK(std::abs(schwarz_pick_quotient(sq, DiskPoint(z), DiskPoint(0.0)) - z) <
        1e-15);

  const TestFunction b_half = blaschke_square_map(-0.5);
  CHECK(schwarz_pick_quotient(b_half, DiskPoint(1.0 / 3.0), DiskPoint(0.0))
            .real() == doctest::Approx(17.0 / 19.0).epsilon(1e-15));

  const TestFunction half_sq = blaschke_combination({{1.0, 0.5, 0.0}});  // z^2/2
  CHECK(schwarz_pick_quotient(half_sq, DiskPoint(0.5), DiskPoint(0.0)).real() ==
        doctest::Approx(0.25).epsilon(1e-15));

  CHECK_THROWS_AS(
      schwarz_pick_quotient(sq, DiskPoint(0.3), DiskPoint(0.3)),
      std::domain_error);

  Rng rng(13);
  for (int i = 0; i < 500; ++i) {
    const TestFunction h = random_test_function(rng);
    const Complex a = sample_disk_point(rng);
    Complex b = sample_disk_point(rng);
    if (std::abs(a - b) < 1e-6) b = -b + Complex(0.01, 0.0);
    CHECK(std::abs(schwarz_pick_quotient(h, DiskPoint(a), DiskPoint(b))) <=
          1.0 + 1e-12);
  }
}

TEST_CASE("three-point inequality") {
  const TestFunction sq = blaschke_square_map(0.0);
  const auto rep = three_point_check(sq, DiskPoint(Complex(0.4, 0.1)),
                                     DiskPoint(Complex(-0.2, 0.3)),
                                     DiskPoint(0.0));
  // h*(z, 0) = z for the squaring map, so the inequality is an equality
  CHECK(rep.lhs == doctest::Approx(rep.rhs).epsilon(1e-13));
  CHECK(rep.ok);

  const TestFunction b_half = blaschke_square_map(-0.5);
  CHECK(three_point_check(b_half, DiskPoint(1.0 / 3.0), DiskPoint(-0.5),
                          DiskPoint(0.0))
            .ok);

  CHECK_THROWS_AS(
      three_point_check(sq, DiskPoint(0.1), DiskPoint(0.2), DiskPoint(0.1)),
      std::domain_error);

  Rng rng(14);
  int checked = 0;
  while (checked < 1000) {
    const TestFunction h = random_test_function(rng);
    const Complex z = sample_disk_point(rng);
    const Complex w = sample_disk_point(rng);
    const Complex v = sample_disk_point(rng);
    if (std::abs(z - v) < 1e-3 || std::abs(w - v) < 1e-3 ||
        std::abs(z - w) < 1e-3)
      continue;
    CHECK(three_point_check(h, DiskPoint(z), DiskPoint(w), DiskPoint(v)).ok);
    ++checked;
  }
}

TEST_CASE("extremal quotient bound") {
  for (double l : {0.2, 0.5, 0.8})
    CHECK(extremal_quotient_bound(0.0, l) ==
          doctest::Approx(2.0 * l / (1.0 + l * l)).epsilon(1e-15));
  CHECK(extremal_quotient_bound(1.0 / 3.0, 0.5) ==
        doctest::Approx(17.0 / 19.0).epsilon(1e-15));
  CHECK(extremal_quotient_bound(0.4, 1e-8) == doctest::Approx(0.4).epsilon(1e-7));

  // the squared Blaschke factor attains the bound exactly
  for (double l : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const TestFunction b = blaschke_square_map(-l);
    for (double k : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      CHECK(schwarz_pick_quotient(b, DiskPoint(k), DiskPoint(0.0)).real() ==
            doctest::Approx(extremal_quotient_bound(k, l)).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(extremal_quotient_bound(-0.1, 0.5), std::domain_error);
  CHECK_THROWS_AS(extremal_quotient_bound(0.5, 0.0), std::domain_error);
}

TEST_CASE("geodesic alignment of the extremal map") {
  // d(0, B(k)) decomposes through B(0) on the chain used in the proof
  for (double l : {0.2, 0.5, 0.8}) {
    const TestFunction b = blaschke_square_map(-l);
    for (double k : {0.1, 0.4, 0.7}) {
      const Complex b0 = b.eval(Complex(0.0, 0.0));
      const Complex bk = b.eval(Complex(k, 0.0));
      CHECK(hyp_dist(Complex(0.0, 0.0), bk) ==
            doctest::Approx(hyp_dist(Complex(0.0, 0.0), b0) + hyp_dist(b0, bk))
                .epsilon(1e-10));
    }
  }
}

TEST_CASE("Blaschke lemma harness") {
  // the extremal map itself: equality, within tolerance
  for (double l : {0.2, 0.5, 0.8}) {
    const TestFunction b = blaschke_square_map(-l);
    const double l_rec = std::sqrt(b.eval(Complex(0.0, 0.0)).real());
    for (double k : {0.0, 0.25, 0.6, 0.9}) {
      CHECK(std::abs(b.eval(Complex(k, 0.0)).real() -
                     qsdim::bounds::blaschke_sq(-l_rec, k)) < 1e-12);
    }
  }
  // the l = 0 branch: h = c z^2 stays below k^2
  for (double c : {0.25, 0.75, 1.0}) {
    const TestFunction h = blaschke_combination({{1.0, c, 0.0}});
    for (double k : {0.2, 0.5, 0.9})
      CHECK(h.eval(Complex(k, 0.0)).real() <= k * k + 1e-15);
  }
  const auto rep = verify_blaschke_lemma(10000, 42);
  CHECK(rep.violations == 0);
  CHECK(rep.worst_margin <= 1e-12);
  CHECK(rep.samples == 10000);
  CHECK_THROWS_AS(verify_blaschke_lemma(0, 1), std::invalid_argument);
}
