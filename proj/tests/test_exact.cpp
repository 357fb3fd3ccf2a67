#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "lisbon/companion.hpp"
#include "lisbon/identities.hpp"
#include "lisbon/mpoly.hpp"
#include "lisbon/poly_matrix.hpp"
#include "lisbon/rng.hpp"
#include "lisbon/sym_point.hpp"
#include "test_util.hpp"

using lisbon::exact::Int;
using lisbon::exact::MPoly;
using lisbon::exact::PolyMatrix;
using lisbon::Complex;

namespace {

std::vector<Complex> random_values(lisbon::Rng& rng, int nvars, double r) {
  std::vector<Complex> v(nvars);
  for (auto& c : v) c = rng.complex_box(r);
  return v;
}

MPoly random_poly(lisbon::Rng& rng, int nvars, int terms, int max_exp) {
  MPoly p(nvars);
  for (int t = 0; t < terms; ++t) {
    MPoly mono = MPoly::constant(nvars, Int(int(rng.uniform(-5.0, 6.0))));
    for (int v = 0; v < nvars; ++v) {
      const int e = int(rng.uniform() * (max_exp + 1));
      if (e > 0) mono = mono * MPoly::variable(nvars, v, e);
    }
    p += mono;
  }
  return p;
}

}  // namespace

TEST_CASE("MPoly arithmetic basics") {
  const int k = 3, nvars = k + 1;
  const MPoly p = lisbon::exact::sym_P(k);

  // dP/ds_k = (-1)^k
  MPoly dk = p.derivative(k);
  CHECK(dk == MPoly::constant(nvars, (k % 2 == 0) ? 1 : -1));

  // P*P has z-degree 2k and leading coefficient 1
  const MPoly p2 = p * p;
  CHECK(p2.degree_z() == 2 * k);
  CHECK(p2.z_coefficient(2 * k) == MPoly::constant(nvars, 1));

  // dP/dz agrees with eval_dpoly after numeric substitution
  lisbon::Rng rng(17);
  const MPoly dz = p.derivative(0);
  for (int rep = 0; rep < 20; ++rep) {
    auto vals = random_values(rng, nvars, 2.0);
    std::vector<Complex> coords(vals.begin() + 1, vals.end());
    const lisbon::SymPoint pt(coords);
    const Complex expected = lisbon::eval_dpoly(pt, vals[0]);
    CHECK(std::abs(dz.eval(vals) - expected) < 1e-12 * (1.0 + std::abs(expected)));
    CHECK(std::abs(p.eval(vals) - lisbon::eval_poly(pt, vals[0])) <
          1e-12 * (1.0 + std::abs(lisbon::eval_poly(pt, vals[0]))));
  }
}

TEST_CASE("MPoly canonical form") {
  lisbon::Rng rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    MPoly a = random_poly(rng, 4, 6, 3);
    MPoly b = random_poly(rng, 4, 6, 3);
    MPoly sum = a + b;
    sum -= b;
    CHECK(sum == a);  // identical stored maps, not merely equal values
    for (const auto& [key, c] : sum.terms()) CHECK(c != 0);
    MPoly z = a - a;
    CHECK(z.is_zero());
    CHECK(z.term_count() == 0);
  }
}

TEST_CASE("reduce_mod_P2") {
  lisbon::Rng rng(23);
  for (int k = 2; k <= 4; ++k) {
    const int nvars = k + 1;
    const MPoly p = lisbon::exact::sym_P(k);
    const MPoly p2 = p * p;

    // reduce(P^2 q + r) == r for small random q, r with deg_z r < 2k
    for (int rep = 0; rep < 5; ++rep) {
      MPoly q = random_poly(rng, nvars, 4, 2);
      MPoly r = random_poly(rng, nvars, 4, 1);
      // clamp r's z-degree below 2k
      while (r.degree_z() >= 2 * k) r = r.z_coefficient(0);
      const MPoly v = p2 * q + r;
      CHECK(lisbon::exact::reduce_mod_P2(v, k) == r);
    }

    // z^{2k} reduces to degree < 2k
    const MPoly z2k = MPoly::variable(nvars, 0, 2 * k);
    CHECK(lisbon::exact::reduce_mod_P2(z2k, k).degree_z() < 2 * k);

    // idempotence
    const MPoly w = random_poly(rng, nvars, 8, 3);
    const MPoly once = lisbon::exact::reduce_mod_P2(w, k);
    CHECK(lisbon::exact::reduce_mod_P2(once, k) == once);
  }

  // k=2: P*z has degree 3 < 4, untouched
  const MPoly pz =
      lisbon::exact::sym_P(2) * MPoly::variable(3, 0, 1);
  CHECK(lisbon::exact::reduce_mod_P2(pz, 2) == pz);
}

TEST_CASE("verify_block_power") {
  CHECK(lisbon::exact::verify_block_power(2, 0).exact_zero);
  CHECK(lisbon::exact::verify_block_power(2, 1).exact_zero);
  for (int k = 2; k <= 4; ++k)
    for (int p = 0; p <= 2 * k; ++p)
      CHECK(lisbon::exact::verify_block_power(k, p).exact_zero);
}

TEST_CASE("verify_E7") {
  CHECK(lisbon::exact::verify_E7(2, 0).exact_zero);
  CHECK(lisbon::exact::verify_E7(2, 1).exact_zero);
  CHECK(lisbon::exact::verify_E7(3, 2).exact_zero);
  for (int k = 2; k <= 4; ++k)
    for (int p = 0; p <= 2 * k; ++p)
      CHECK(lisbon::exact::verify_E7(k, p).exact_zero);
}

TEST_CASE("verify_E7bis") {
  CHECK(lisbon::exact::verify_E7bis(1).exact_zero);
  for (int k = 2; k <= 5; ++k) CHECK(lisbon::exact::verify_E7bis(k).exact_zero);
}

TEST_CASE("verify_simple2") {
  CHECK(lisbon::exact::verify_simple2(3, 0, 2).exact_zero);  // both sides zero
  for (int k = 2; k <= 4; ++k)
    for (int h = 1; h <= k; ++h) {
      CHECK(lisbon::exact::verify_simple2(k, 1, h).exact_zero);
      CHECK(lisbon::exact::verify_simple2(k, 4, h).exact_zero);
    }
}

TEST_CASE("verify_nabla_identity") {
  CHECK(lisbon::exact::verify_nabla_identity(2, 1).exact_zero);
  CHECK(lisbon::exact::verify_nabla_identity(2, 3).exact_zero);
  CHECK(lisbon::exact::verify_nabla_identity(4, 2).exact_zero);
  for (int k = 2; k <= 4; ++k)
    for (int p = 1; p <= 2 * k; ++p)
      CHECK(lisbon::exact::verify_nabla_identity(k, p).exact_zero);
}

TEST_CASE("witness mechanism reports the first nonzero entry") {
  const int nvars = 3;
  PolyMatrix diff(2, 2, nvars);
  diff.at(1, 0) = MPoly::variable(nvars, 1) * MPoly::constant(nvars, 3);
  const auto rep =
      lisbon::exact::report_from_diff("tampered", 2, 1, std::nullopt, diff);
  CHECK(!rep.exact_zero);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->row == 1);
  CHECK(rep.witness->col == 0);
  CHECK(rep.witness->entry == "3*s1");
}

TEST_CASE("sylvester_discriminant") {
  // k=2: exactly s_1^2 - 4 s_2
  const MPoly d2 = lisbon::exact::sylvester_discriminant(2);
  MPoly expected = MPoly::variable(3, 1, 2);
  expected -= MPoly::variable(3, 2).scaled(4);
  CHECK(d2 == expected);

  // substitution at s = (2, 1) gives 0 (double root)
  CHECK(std::abs(d2.eval({{0, 0}, {2, 0}, {1, 0}})) < 1e-14);

  // k=3 at s=0: triple root, discriminant 0
  const MPoly d3 = lisbon::exact::sylvester_discriminant(3);
  CHECK(std::abs(d3.eval({{0, 0}, {0, 0}, {0, 0}, {0, 0}})) < 1e-14);

  // numeric shadow against the root-product oracle
  for (int k = 2; k <= 5; ++k)
    CHECK(lisbon::exact::shadow_discriminant(k, lisbon::Rng(77 + k)) < 1e-8);
}

TEST_CASE("numeric shadows") {
  lisbon::Rng rng(99);
  for (int k = 2; k <= 4; ++k) {
    for (int p : {0, 1, 2, 2 * k}) {
      CHECK(lisbon::exact::shadow_block_power(k, p, rng.fork(p), 5) < 1e-9);
      CHECK(lisbon::exact::shadow_E7(k, p, rng.fork(100 + p), 5) < 1e-9);
    }
    CHECK(lisbon::exact::shadow_E7bis(k, rng.fork(200 + k), 5) < 1e-9);
    for (int h = 1; h <= k; ++h) {
      CHECK(lisbon::exact::shadow_simple2(k, 3, h, rng.fork(300 + h), 5) < 1e-9);
    }
    for (int p : {1, 2, 2 * k})
      CHECK(lisbon::exact::shadow_nabla_identity(k, p, rng.fork(400 + p), 5) <
            1e-9);
  }
}

TEST_CASE("ring axioms, spot-checked on random values") {
  lisbon::Rng rng(7);
  for (int rep = 0; rep < 10; ++rep) {
    const MPoly a = random_poly(rng, 3, 5, 3);
    const MPoly b = random_poly(rng, 3, 5, 3);
    const MPoly c = random_poly(rng, 3, 5, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK((a - b) + b == a);
  }

  // PolyMatrix: associativity and distributivity (noncommutative)
  auto random_matrix = [&](int n) {
    PolyMatrix m(n, n, 3);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = random_poly(rng, 3, 2, 2);
    return m;
  };
  for (int rep = 0; rep < 3; ++rep) {
    const PolyMatrix a = random_matrix(2), b = random_matrix(2),
                     c = random_matrix(2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    const PolyMatrix i2 = PolyMatrix::identity(2, 3);
    CHECK(a * i2 == a);
    CHECK(i2 * a == a);
  }
}

TEST_CASE("PolyMatrix vs numeric companion") {
  lisbon::Rng rng(111);
  for (int k = 2; k <= 4; ++k) {
    auto vals = random_values(rng, k + 1, 2.0);
    std::vector<Complex> coords(vals.begin() + 1, vals.end());
    const lisbon::SymPoint pt(coords);
    const auto sym = lisbon::exact::sym_companion(k).eval(vals);
    const auto num = lisbon::companion(pt);
    CHECK((sym - num).cwiseAbs().maxCoeff() < 1e-14);

    const auto symp = lisbon::exact::sym_pprime_of_companion(k).eval(vals);
    const auto nump = lisbon::pprime_of_companion(pt);
    CHECK((symp - nump).cwiseAbs().maxCoeff() <
          1e-12 * (1.0 + nump.cwiseAbs().maxCoeff()));

    const auto symn = lisbon::exact::sym_nabla(k).eval(vals);
    CHECK((symn - lisbon::nabla(k)).cwiseAbs().maxCoeff() == 0.0);
  }
}
