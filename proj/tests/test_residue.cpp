#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lisbon/contour.hpp"
#include "lisbon/errors.hpp"
#include "lisbon/residue.hpp"
#include "lisbon/roots.hpp"
#include "lisbon/rng.hpp"
#include "test_util.hpp"

using lisbon::Complex;
using lisbon::EntireFunction;
using lisbon::SymPoint;
using testutil::random_point;

TEST_CASE("phi_residue fixed values") {
  const double e = std::exp(1.0);
  auto v = lisbon::phi_residue(SymPoint({{1, 0}, {0, 0}}),
                               EntireFunction::exp_t({1, 0}));
  CHECK(std::abs(v.comp[0] - Complex(e - 1.0, 0)) < 1e-12);
  CHECK(std::abs(v.comp[1] - Complex(e, 0)) < 1e-12);

  // f == 1, k = 3, random point off the discriminant
  lisbon::Rng rng(3);
  for (int rep = 0; rep < 5; ++rep) {
    SymPoint pt = random_point(rng, 3, 3.0);
    if (std::abs(lisbon::discriminant(pt)) < 0.1) continue;
    auto w = lisbon::phi_residue(pt, EntireFunction::one());
    CHECK(std::abs(w.comp[0]) < 1e-10);
    CHECK(std::abs(w.comp[1]) < 1e-10);
    CHECK(std::abs(w.comp[2] - Complex(1, 0)) < 1e-10);
  }

  // k=2, s=(0,-1), f == 1: roots +-1, P' = 2z, phi_0 = 0
  auto u = lisbon::phi_residue(SymPoint({{0, 0}, {-1, 0}}), EntireFunction::one());
  CHECK(std::abs(u.comp[0]) < 1e-13);
  CHECK(std::abs(u.comp[1] - Complex(1, 0)) < 1e-13);
}

TEST_CASE("psi_residue fixed values") {
  const double e = std::exp(1.0);
  auto v = lisbon::psi_residue(SymPoint({{1, 0}, {0, 0}}),
                               EntireFunction::exp_t({1, 0}));
  CHECK(std::abs(v.comp[0] - Complex(1.0 + e, 0)) < 1e-12);
  CHECK(std::abs(v.comp[1] - Complex(e, 0)) < 1e-12);

  auto w = lisbon::psi_residue(SymPoint({{0, 0}, {-1, 0}}),
                               EntireFunction::monomial(1));
  CHECK(std::abs(w.comp[0]) < 1e-13);
  CHECK(std::abs(w.comp[1] - Complex(2, 0)) < 1e-13);
}

TEST_CASE("refusal near the discriminant") {
  CHECK_THROWS_AS(
      lisbon::phi_residue(SymPoint({{2, 0}, {1, 0}}), EntireFunction::one()),
      lisbon::NearDiscriminant);
  CHECK_THROWS_AS(
      lisbon::psi_residue(SymPoint({{2, 0}, {1, 0}}), EntireFunction::one()),
      lisbon::NearDiscriminant);
  CHECK_THROWS_AS(lisbon::phi_residue(SymPoint({{1, 0}, {0, 0}}),
                                      EntireFunction::one(), -1.0),
                  std::invalid_argument);
}

TEST_CASE("oracle agreement: residue vs contour") {
  lisbon::Rng rng(101);
  const std::vector<EntireFunction> fs = {
      EntireFunction::one(), EntireFunction::monomial(1),
      EntireFunction::monomial(2), EntireFunction::exp_t({1, 0}),
      EntireFunction::exp_t({2, 0})};
  for (int k = 1; k <= 5; ++k) {
    int done = 0;
    while (done < 4) {
      SymPoint pt = random_point(rng, k, 5.0);
      if (std::abs(lisbon::discriminant(pt)) < 0.1) continue;
      ++done;
      for (const auto& f : fs) {
        auto pr = lisbon::phi_residue(pt, f);
        auto pc = lisbon::phi(pt, f);
        auto qr = lisbon::psi_residue(pt, f);
        auto qc = lisbon::psi(pt, f);
        const double sphi = 1.0 + pc.max_abs();
        const double spsi = 1.0 + qc.max_abs();
        for (int i = 0; i < k; ++i) {
          CHECK(std::abs(pr.comp[i] - pc.comp[i]) / sphi < 1e-8);
          CHECK(std::abs(qr.comp[i] - qc.comp[i]) / spsi < 1e-8);
        }
      }
    }
  }
}

TEST_CASE("psi_residue with f == 1 matches Newton power sums") {
  lisbon::Rng rng(7);
  for (int k = 2; k <= 5; ++k) {
    int done = 0;
    while (done < 5) {
      SymPoint pt = random_point(rng, k, 4.0);
      if (std::abs(lisbon::discriminant(pt)) < 1e-3) continue;
      ++done;
      auto v = lisbon::psi_residue(pt, EntireFunction::one());
      for (int h = 0; h < k; ++h) {
        const Complex p = lisbon::newton_power_sum(pt, h);
        CHECK(std::abs(v.comp[h] - p) < 1e-9 * (1.0 + std::abs(p)));
      }
    }
  }
}
