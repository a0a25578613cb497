#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "qsdim/thermo.hpp"
#include "test_support.hpp"

using namespace qsdim::thermo;
using qsdim::Rng;

TEST_CASE("packing validation") {
  CHECK_NOTHROW(testsupport::tiling_packing());  // touching disks are fine
  CHECK_THROWS_AS(DiskPacking({}), std::invalid_argument);
  CHECK_THROWS_AS(DiskPacking({{0.9, 0.2}}), std::invalid_argument);
  CHECK_THROWS_AS(DiskPacking({{0.0, 0.5}, {0.25, 0.5}}), std::invalid_argument);
  CHECK_THROWS_AS(DiskPacking({{0.0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(DiskPacking({{0.0, -0.1}}), std::invalid_argument);
}

TEST_CASE("pressure") {
  const std::vector<double> quarter{0.25, 0.25};
  CHECK(pressure(quarter, 0.0) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(pressure(quarter, 0.5) == doctest::Approx(0.0).scale(1).epsilon(1e-14));
  CHECK(pressure({0.5, 0.25}, 1.0) ==
        doctest::Approx(std::log(0.75)).epsilon(1e-14));
  CHECK_THROWS_AS(pressure({0.5, 0.0}, 1.0), std::domain_error);

  // strictly decreasing and convex in the exponent
  for (const auto& radii :
       {std::vector<double>{0.25, 0.25}, std::vector<double>{0.5, 0.25},
        std::vector<double>{0.4, 0.3, 0.2}}) {
    double prev = pressure(radii, 0.0);
    double prev_diff = 0.0;
    for (int i = 1; i <= 8; ++i) {
      const double cur = pressure(radii, 0.25 * i);
      CHECK(cur < prev);
      const double diff = cur - prev;
      if (i > 1) CHECK(diff >= prev_diff - 1e-12);  // increasing increments
      prev_diff = diff;
      prev = cur;
    }
  }
}

TEST_CASE("entropy") {
  CHECK(entropy(WeightVector({0.25, 0.25, 0.25, 0.25})) ==
        doctest::Approx(std::log(4.0)).epsilon(1e-15));
  CHECK(entropy(WeightVector({1.0, 0.0})) == 0.0);
  CHECK(entropy(WeightVector({2.0 / 3.0, 1.0 / 3.0})) ==
        doctest::Approx(0.6365).epsilon(1e-4));
  CHECK_THROWS_AS(WeightVector({0.5, 0.4}), std::invalid_argument);
  CHECK_THROWS_AS(WeightVector({1.5, -0.5}), std::invalid_argument);
}

TEST_CASE("Lyapunov exponent") {
  const auto quarter = ComplexRadii::from_positive({0.25, 0.25});
  CHECK(lyapunov(WeightVector({0.5, 0.5}), quarter).real() ==
        doctest::Approx(std::log(4.0)).epsilon(1e-15));
  CHECK(lyapunov(WeightVector({0.5, 0.5}), quarter).imag() == 0.0);
  CHECK(lyapunov(WeightVector({1.0, 0.0}),
                 ComplexRadii::from_positive({0.5, 0.25}))
            .real() == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(lyapunov(WeightVector({0.5, 0.25, 0.25}),
                 ComplexRadii::from_positive({0.5, 0.25, 0.25}))
            .real() == doctest::Approx(1.5 * std::log(2.0)).epsilon(1e-15));

  ComplexRadii zero;
  zero.values = {std::complex<double>(0.0, 0.0)};
  zero.branch_args = {0.0};
  CHECK_THROWS_AS(lyapunov(WeightVector({1.0}), zero), std::domain_error);
  CHECK_THROWS_AS(lyapunov(WeightVector({0.5, 0.5}), zero),
                  std::invalid_argument);
}

TEST_CASE("Gibbs weights") {
  const auto uniform = gibbs_weights({0.3, 0.3, 0.3}, 1.7);
  for (double w : uniform.values()) CHECK(w == doctest::Approx(1.0 / 3.0));
  const auto g = gibbs_weights({0.5, 0.25}, 1.0);
  CHECK(g.values()[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(g.values()[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  const auto zeroth = gibbs_weights({0.9, 0.1, 0.05}, 0.0);
  for (double w : zeroth.values()) CHECK(w == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("Bowen dimension") {
  CHECK(bowen_dimension(std::vector<double>{0.25, 0.25}) ==
        doctest::Approx(0.5).epsilon(1e-10));
  CHECK(bowen_dimension(std::vector<double>{0.5, 0.25}) ==
        doctest::Approx(std::log2((1.0 + std::sqrt(5.0)) / 2.0)).epsilon(1e-10));
  CHECK(bowen_dimension(std::vector<double>{0.37}) == 0.0);
  CHECK_THROWS_AS(bowen_dimension(std::vector<double>{1.0, 0.5}),
                  std::invalid_argument);

  // n equal radii r: dimension log n / log (1/r)
  Rng rng(21);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + static_cast<int>(rng.next_u64() % 6);
    const double r = rng.uniform(0.05, 0.95 / n);
    CHECK(bowen_dimension(std::vector<double>(n, r)) ==
          doctest::Approx(std::log(n) / std::log(1.0 / r)).epsilon(1e-10));
  }

  // pressure-dimension bracket: dim >= d exactly when P(d) >= 0
  Rng rng2(22);
  for (int t = 0; t < 25; ++t) {
    const auto packing = testsupport::random_packing(rng2);
    const auto radii = packing.radii();
    const double dim = bowen_dimension(radii);
    for (double off : {-0.2, -0.05, 0.05, 0.2}) {
      const double d = dim + off;
      if (d < 0.0) continue;
      if (off < 0.0)
        CHECK(pressure(radii, d) >= 0.0);
      else
        CHECK(pressure(radii, d) <= 0.0);
    }
  }
}

TEST_CASE("variational principle") {
  const auto radii = ComplexRadii::from_positive({0.5, 0.25});
  const auto gibbs = gibbs_weights(radii.moduli(), 1.0);
  CHECK(std::abs(variational_gap(gibbs, radii, 1.0)) <= 1e-12);
  CHECK(variational_gap(WeightVector({0.5, 0.5}), radii, 1.0) < 0.0);
  CHECK(variational_gap(WeightVector({1.0, 0.0}),
                        ComplexRadii::from_positive({0.3, 0.3}), 0.0) ==
        doctest::Approx(-std::log(2.0)).epsilon(1e-14));

  Rng rng(23);
  for (int t = 0; t < 10; ++t) {
    const auto packing = testsupport::random_packing(rng);
    const auto cr = ComplexRadii::from_positive(packing.radii());
    const double d = rng.uniform(0.1, 1.2);
    for (int i = 0; i < 200; ++i) {
      const auto w = WeightVector(testsupport::random_weights(rng, cr.size()));
      CHECK(variational_gap(w, cr, d) <= 1e-12);
    }
    CHECK(std::abs(variational_gap(gibbs_weights(cr.moduli(), d), cr, d)) <=
          1e-12);
  }
}

TEST_CASE("phi function") {
  CHECK(phi_function(0.7, std::complex<double>(0.7, 0.0)) ==
        std::complex<double>(0.0, 0.0));
  CHECK(phi_function(0.0, std::complex<double>(2.0, 1.0)) ==
        std::complex<double>(1.0, 0.0));

  // tiling packing at exponent 1: entropy equals the Lyapunov exponent
  const auto tiling = testsupport::tiling_packing();
  const auto cr = ComplexRadii::from_positive(tiling.radii());
  const auto p = gibbs_weights(cr.moduli(), 1.0);
  const double I = entropy(p);
  const auto L = lyapunov(p, cr);
  CHECK(I == doctest::Approx(1.5 * std::log(2.0)).epsilon(1e-15));
  CHECK(std::abs(phi_function(I, L)) <= 1e-14);
  CHECK(phi_function(I, L).imag() == 0.0);  // real radii give real output

  CHECK_THROWS_AS(phi_function(0.5, std::complex<double>(0.0, 1.0)),
                  std::domain_error);
  CHECK_THROWS_AS(phi_function(-0.1, std::complex<double>(1.0, 0.0)),
                  std::domain_error);
}
