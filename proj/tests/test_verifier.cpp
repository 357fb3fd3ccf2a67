#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lisbon/errors.hpp"
#include "lisbon/residuals.hpp"
#include "lisbon/roots.hpp"
#include "lisbon/rng.hpp"
#include "test_util.hpp"

using lisbon::Complex;
using lisbon::CVector;
using lisbon::EntireFunction;
using lisbon::QuadratureConfig;
using lisbon::SymPoint;
using testutil::random_point;

namespace {

SymPoint off_discriminant(lisbon::Rng& rng, int k, double bound, double floor) {
  for (int tries = 0; tries < 500; ++tries) {
    SymPoint pt = random_point(rng, k, bound);
    if (std::abs(lisbon::discriminant(pt)) > floor) return pt;
  }
  throw std::runtime_error("no point off the discriminant found");
}

}  // namespace

TEST_CASE("dpsi_ds against central finite differences") {
  QuadratureConfig cfg;
  lisbon::Rng rng(59);
  for (int k = 2; k <= 4; ++k) {
    SymPoint pt = random_point(rng, k, 2.0);
    const auto f = EntireFunction::exp_t({1, 0});
    for (int h = 1; h <= k; ++h) {
      const auto analytic = lisbon::dpsi_ds(pt, f, h, cfg);
      const double step = 1e-5;
      auto up = pt.coords(), dn = pt.coords();
      up[h - 1] += step;
      dn[h - 1] -= step;
      const auto fp = lisbon::psi(SymPoint(up), f, cfg);
      const auto fm = lisbon::psi(SymPoint(dn), f, cfg);
      for (int i = 0; i < k; ++i) {
        const Complex fd = (fp.comp[i] - fm.comp[i]) / (2.0 * step);
        CHECK(std::abs(analytic.comp[i] - fd) < 1e-6 * (1.0 + std::abs(fd)));
      }
    }
  }
}

TEST_CASE("exact matrix derivatives") {
  lisbon::Rng rng(3);
  const SymPoint pt = random_point(rng, 3, 2.0);

  // d(A^1)/ds_h is the constant single-entry matrix
  for (int h = 1; h <= 3; ++h) {
    const auto d = lisbon::companion_power_ds(pt, 1, h);
    CHECK((d - lisbon::companion_ds(3, h)).cwiseAbs().maxCoeff() < 1e-15);
  }

  // d(A^p)/ds_k against the numeric product rule
  for (int p = 0; p <= 4; ++p) {
    const auto exact_d = lisbon::companion_power_ds(pt, p, 3);
    lisbon::CMatrix acc = lisbon::CMatrix::Zero(3, 3);
    const auto a = lisbon::companion(pt);
    for (int i = 0; i < p; ++i)
      acc += lisbon::matrix_power(a, i) * lisbon::companion_ds(3, 3) *
             lisbon::matrix_power(a, p - 1 - i);
    CHECK((exact_d - acc).cwiseAbs().maxCoeff() <
          1e-12 * (1.0 + acc.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("system (@): residuals for Phi_f") {
  QuadratureConfig cfg;
  lisbon::Rng rng(11);

  // f == 1: Phi constant
  for (int k = 2; k <= 4; ++k) {
    SymPoint pt = random_point(rng, k, 3.0);
    for (int h = 1; h <= k - 1; ++h) {
      CHECK(lisbon::residual_at(pt, EntireFunction::one(), h, cfg).residual <
            1e-9);
    }
  }

  // f = exp(z), k = 3
  for (int rep = 0; rep < 5; ++rep) {
    SymPoint pt = random_point(rng, 3, 3.0);
    for (int h : {1, 2}) {
      CHECK(lisbon::residual_at(pt, EntireFunction::exp_t({1, 0}), h, cfg)
                .residual < 1e-7);
    }
  }

  // f = z^2, k = 2 (closed-form polynomial field)
  for (int rep = 0; rep < 5; ++rep) {
    SymPoint pt = random_point(rng, 2, 3.0);
    CHECK(lisbon::residual_at(pt, EntireFunction::monomial(2), 1, cfg).residual <
          1e-8);
  }

  CHECK_THROWS_AS(
      lisbon::residual_at(SymPoint({{1, 0}, {0, 0}}), EntireFunction::one(), 2,
                          cfg),
      std::invalid_argument);
}

TEST_CASE("closure: A Phi is a solution; constants are not") {
  QuadratureConfig cfg;
  lisbon::Rng rng(13);

  const auto f = EntireFunction::exp_t({1, 0});
  for (int k = 2; k <= 3; ++k) {
    SymPoint pt = random_point(rng, k, 2.5);
    const auto field = lisbon::a_phi_field(f, cfg);
    for (int h = 1; h <= k - 1; ++h)
      CHECK(lisbon::residual_at_for(field, pt, h).residual < 1e-7);
  }

  // Phi_{zf} equals A Phi_f, so its direct residual matches the provider's
  {
    SymPoint pt = random_point(rng, 2, 2.5);
    const double direct =
        lisbon::residual_at(pt, f.times_z(), 1, cfg).residual;
    const double provided =
        lisbon::residual_at_for(lisbon::a_phi_field(f, cfg), pt, 1).residual;
    CHECK(direct < 1e-7);
    CHECK(provided < 1e-7);
  }

  // negative control: constant nonzero field
  {
    SymPoint pt({{0.7, 0.1}, {-0.3, 0.4}});
    lisbon::VectorField constant;
    constant.value = [](const SymPoint& p) {
      CVector v(p.k());
      for (int i = 0; i < p.k(); ++i) v(i) = Complex(1.0, 0.5);
      return v;
    };
    constant.dvalue = [](const SymPoint& p, int) {
      return CVector(CVector::Zero(p.k()));
    };
    CHECK(lisbon::residual_at_for(constant, pt, 1).residual > 1e-3);
  }

  // negative control: perturbed Phi field fails the sweep threshold
  {
    SymPoint pt = off_discriminant(rng, 2, 2.5, 0.3);
    CVector dir(2);
    dir << Complex(0.8, 0.6), Complex(-0.6, 0.8);
    const auto broken = lisbon::perturbed_phi_field(f, cfg, 1e-2, dir);
    CHECK(lisbon::residual_at_for(broken, pt, 1).residual > 1e-4);
  }
}

TEST_CASE("system (@@) for Psi") {
  QuadratureConfig cfg;
  lisbon::Rng rng(17);

  // f == 1, k = 2: Psi = (2, s1) satisfies (@@)
  for (int rep = 0; rep < 5; ++rep) {
    SymPoint pt = off_discriminant(rng, 2, 3.0, 0.5);
    CHECK(lisbon::residual_atat(pt, EntireFunction::one(), 1, cfg).residual <
          1e-8);
  }

  // f = exp(z), k = 3
  for (int rep = 0; rep < 5; ++rep) {
    SymPoint pt = off_discriminant(rng, 3, 3.0, 0.5);
    for (int h : {1, 2})
      CHECK(lisbon::residual_atat(pt, EntireFunction::exp_t({1, 0}), h, cfg)
                .residual < 1e-6);
  }

  // refusal near the discriminant
  CHECK_THROWS_AS(lisbon::residual_atat(SymPoint({{2, 0}, {1, 0}}),
                                        EntireFunction::one(), 1, cfg),
                  lisbon::NearDiscriminant);
}

TEST_CASE("bridge and correspondence") {
  QuadratureConfig cfg;
  lisbon::Rng rng(19);
  const auto f = EntireFunction::exp_t({1, 0});

  for (int k = 2; k <= 4; ++k) {
    SymPoint pt = random_point(rng, k, 3.0);
    CHECK(lisbon::bridge_residual(pt, f, cfg).residual < 1e-9);
  }
  // on the discriminant the bridge still holds
  CHECK(lisbon::bridge_residual(SymPoint({{2, 0}, {1, 0}}), f, cfg).residual <
        1e-9);

  for (int k = 2; k <= 4; ++k) {
    SymPoint pt = off_discriminant(rng, k, 3.0, 0.5);
    CHECK(lisbon::correspondence_roundtrip(pt, f, cfg).residual < 1e-6);
  }
}

TEST_CASE("mixed partials") {
  QuadratureConfig cfg;
  lisbon::Rng rng(23);
  const auto f = EntireFunction::exp_t({1, 0});

  SymPoint pt3 = random_point(rng, 3, 2.0);
  CHECK(lisbon::mixed_partial_check(pt3, f, 1, 2, cfg).residual < 1e-7);
  CHECK(lisbon::mixed_partial_check(pt3, EntireFunction::one(), 1, 2, cfg)
            .residual == 0.0);

  SymPoint pt4 = random_point(rng, 4, 2.0);
  for (int sum = 2; sum <= 8; ++sum)
    CHECK(lisbon::d2_equal_sum_spread(pt4, f, sum, cfg) < 1e-7);
}

TEST_CASE("dz action, star2, Leibniz") {
  QuadratureConfig cfg;
  lisbon::Rng rng(29);

  // f = exp(tz): Phi_{f'} = t Phi_f
  for (int k = 2; k <= 3; ++k) {
    SymPoint pt = random_point(rng, k, 2.5);
    const Complex t{1.0, 0.0};
    const auto f = EntireFunction::exp_t(t);
    const auto lhs = lisbon::phi(pt, f.derivative(), cfg);
    const auto base = lisbon::phi(pt, f, cfg);
    for (int i = 0; i < k; ++i)
      CHECK(std::abs(lhs.comp[i] - t * base.comp[i]) <
            1e-7 * (1.0 + std::abs(base.comp[i])));
    CHECK(lisbon::residual_dz_action(pt, f, cfg).residual < 1e-6);
    CHECK(lisbon::residual_dz_action_star2(pt, f, cfg).residual < 1e-6);
    CHECK(lisbon::residual_leibniz(pt, f, cfg).residual < 1e-6);
  }

  // f = z^2: f' = 2z, Phi_{f'} = 2 A Phi_... checked through the identity
  {
    SymPoint pt = random_point(rng, 2, 2.5);
    const auto f = EntireFunction::monomial(2);
    CHECK(lisbon::residual_dz_action(pt, f, cfg).residual < 1e-8);
    CHECK(lisbon::residual_dz_action_star2(pt, f, cfg).residual < 1e-8);
  }

  // f == 1: f' = 0, both sides vanish
  {
    SymPoint pt = random_point(rng, 3, 2.5);
    CHECK(lisbon::residual_dz_action(pt, EntireFunction::one(), cfg).residual <
          1e-8);
    CHECK(lisbon::residual_dz_action_star2(pt, EntireFunction::one(), cfg)
              .residual < 1e-8);
  }

  // both right-hand sides agree with each other (they equal Phi_{f'})
  for (int k = 2; k <= 4; ++k) {
    SymPoint pt = random_point(rng, k, 2.0);
    const auto f = EntireFunction::exp_t({1, 0});
    const double a = lisbon::residual_dz_action(pt, f, cfg).residual;
    const double b = lisbon::residual_dz_action_star2(pt, f, cfg).residual;
    CHECK(a < 1e-6);
    CHECK(b < 1e-6);
  }
}

TEST_CASE("theta operator, k = 2") {
  QuadratureConfig cfg;
  lisbon::Rng rng(31);

  for (int rep = 0; rep < 5; ++rep) {
    const Complex s = rng.complex_box(1.5), p = rng.complex_box(1.5);
    for (int m = 0; m <= 5; ++m) {
      CHECK(lisbon::residual_theta_k2(s, p, EntireFunction::exp_t({1, 0}), m, cfg)
                .residual < 1e-7);
    }
  }

  // phi_1 == 1 for f == 1
  CHECK(lisbon::residual_theta_k2({0.4, 0.2}, {-0.3, 0.1},
                                  EntireFunction::one(), 1, cfg)
            .residual < 1e-9);

  // m = 0, f = z: phi_0 == 1
  CHECK(lisbon::residual_theta_k2({0.4, 0.2}, {-0.3, 0.1},
                                  EntireFunction::monomial(1), 0, cfg)
            .residual < 1e-9);
}

TEST_CASE("exp connection (Eqs. for e^{tz})") {
  QuadratureConfig cfg;
  lisbon::Rng rng(37);

  CHECK(lisbon::residual_exp_connection(SymPoint({{1, 0}, {0, 0}}), {1, 0}, cfg)
            .residual < 1e-7);

  // t = 0 reduces to the f == 1 case
  CHECK(lisbon::residual_exp_connection(random_point(rng, 3, 2.0), {0, 0}, cfg)
            .residual < 1e-8);

  for (int rep = 0; rep < 5; ++rep) {
    SymPoint pt = random_point(rng, 3, 2.0);
    CHECK(lisbon::residual_exp_connection(pt, {2, 0}, cfg).residual < 1e-6);
  }

  for (int rep = 0; rep < 3; ++rep) {
    SymPoint pt = off_discriminant(rng, 2, 2.0, 0.5);
    CHECK(lisbon::residual_exp_connection_psi(pt, {1, 0}, cfg).residual < 1e-6);
    CHECK(lisbon::residual_exp_connection_psi(pt, {1, 1}, cfg).residual < 1e-6);
  }

  CHECK_THROWS_AS(lisbon::residual_exp_connection_psi(SymPoint({{2, 0}, {1, 0}}),
                                                      {1, 0}, cfg),
                  lisbon::NearDiscriminant);
}

TEST_CASE("finite-difference cross check") {
  QuadratureConfig cfg;
  cfg.tol = 1e-12;
  lisbon::Rng rng(41);

  for (int k = 2; k <= 4; ++k) {
    SymPoint pt = random_point(rng, k, 2.0);
    for (int h = 1; h <= k; ++h) {
      const auto rep = lisbon::fd_cross_check(pt, EntireFunction::exp_t({1, 0}),
                                              h, cfg);
      CHECK(rep.residual < 1e-6);
      CHECK(rep.method == lisbon::ResidualReport::Method::FiniteDifference);
    }
  }

  // f == 1: both sides vanish
  CHECK(lisbon::fd_cross_check(random_point(rng, 3, 2.0), EntireFunction::one(),
                               1, cfg)
            .residual < 1e-9);

  // f = z^3, k = 2: closed-form polynomial field
  CHECK(lisbon::fd_cross_check(random_point(rng, 2, 2.0),
                               EntireFunction::monomial(3), 1, cfg)
            .residual < 1e-7);
}
