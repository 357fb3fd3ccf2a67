#include "lisbon/identities.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "lisbon/companion.hpp"
#include "lisbon/roots.hpp"
#include "lisbon/sym_point.hpp"

namespace lisbon::exact {

namespace {

Int lambda_sign(int k) { return (k % 2 == 1) ? Int(1) : Int(-1); }  // (-1)^{k-1}

Int pm(int e) { return (e % 2 == 0) ? Int(1) : Int(-1); }  // (-1)^e

PolyMatrix diff_from_vector(const std::vector<MPoly>& v) {
  PolyMatrix m(static_cast<int>(v.size()), 1, v.front().nvars());
  for (std::size_t i = 0; i < v.size(); ++i) m.at(static_cast<int>(i), 0) = v[i];
  return m;
}

// ---- numeric helpers for the shadow checks (Eigen only, no MPoly) ----

SymPoint random_sym_point(Rng& rng, int k, double bound) {
  std::vector<Complex> s(k);
  const double scale = bound / std::sqrt(2.0 * k);
  for (auto& c : s) c = scale * rng.complex_box(1.0);
  return SymPoint(s);
}

// d(A^p)/ds_h by the product rule: sum_i A^i (dA/ds_h) A^{p-1-i}.
CMatrix numeric_dpow(const SymPoint& pt, int p, int h) {
  const int k = pt.k();
  const CMatrix a = lisbon::companion(pt);
  const CMatrix da = lisbon::companion_ds(k, h);
  CMatrix acc = CMatrix::Zero(k, k);
  for (int i = 0; i < p; ++i)
    acc += matrix_power(a, i) * da * matrix_power(a, p - 1 - i);
  return acc;
}

double rel_err(const CMatrix& lhs, const CMatrix& rhs) {
  const double scale = 1.0 + lhs.cwiseAbs().maxCoeff();
  return (lhs - rhs).cwiseAbs().maxCoeff() / scale;
}

}  // namespace

IdentityReport report_from_diff(std::string name, int k, std::optional<int> p,
                                std::optional<int> h, const PolyMatrix& diff) {
  IdentityReport rep;
  rep.name = std::move(name);
  rep.k = k;
  rep.p = p;
  rep.h = h;
  rep.exact_zero = true;
  for (int i = 0; i < diff.rows() && rep.exact_zero; ++i)
    for (int j = 0; j < diff.cols(); ++j) {
      if (!diff.at(i, j).is_zero()) {
        rep.exact_zero = false;
        rep.witness = IdentityReport::Witness{i, j, diff.at(i, j).str()};
        break;
      }
    }
  return rep;
}

IdentityReport verify_block_power(int k, int p) {
  if (k < 1 || p < 0) throw std::invalid_argument("verify_block_power: bad args");
  const int nvars = k + 1;
  const PolyMatrix a = sym_companion(k);
  const PolyMatrix b = a.derivative(k).scaled(lambda_sign(k));

  PolyMatrix m(2 * k, 2 * k, nvars);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      m.at(i, j) = a.at(i, j);
      m.at(i, k + j) = b.at(i, j);
      m.at(k + i, k + j) = a.at(i, j);
    }

  const PolyMatrix mp = m.power(p);
  const PolyMatrix ap = a.power(p);
  const PolyMatrix bp = ap.derivative(k).scaled(lambda_sign(k));

  PolyMatrix diff(2 * k, 2 * k, nvars);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      diff.at(i, j) = mp.at(i, j) - ap.at(i, j);
      diff.at(i, k + j) = mp.at(i, k + j) - bp.at(i, j);
      diff.at(k + i, j) = mp.at(k + i, j);
      diff.at(k + i, k + j) = mp.at(k + i, k + j) - ap.at(i, j);
    }
  return report_from_diff("block_power", k, p, std::nullopt, diff);
}

IdentityReport verify_E7(int k, int p) {
  if (k < 1 || p < 0) throw std::invalid_argument("verify_E7: bad args");
  const int nvars = k + 1;
  const std::vector<MPoly> e = sym_E(k);
  const MPoly zp = MPoly::variable(nvars, 0, p);
  const MPoly pp = sym_P(k);

  const PolyMatrix ap = sym_companion(k).power(p);
  const PolyMatrix dap = ap.derivative(k).scaled(lambda_sign(k));

  std::vector<MPoly> lhs(k, MPoly(nvars)), rhs = ap.apply(e);
  const std::vector<MPoly> corr = dap.apply(e);
  for (int i = 0; i < k; ++i) {
    lhs[i] = zp * e[i];
    rhs[i] += pp * corr[i];
  }

  std::vector<MPoly> diff(k, MPoly(nvars));
  for (int i = 0; i < k; ++i) diff[i] = reduce_mod_P2(lhs[i] - rhs[i], k);
  return report_from_diff("E7", k, p, std::nullopt, diff_from_vector(diff));
}

IdentityReport verify_E7bis(int k) {
  if (k < 1) throw std::invalid_argument("verify_E7bis: bad args");
  const int nvars = k + 1;
  const std::vector<MPoly> e = sym_E(k);
  const MPoly pp = sym_P(k);
  const MPoly ppr = sym_Pprime(k);

  const PolyMatrix pa = sym_pprime_of_companion(k);
  const PolyMatrix dpa = pa.derivative(k).scaled(lambda_sign(k));

  std::vector<MPoly> rhs = pa.apply(e);
  const std::vector<MPoly> corr = dpa.apply(e);
  std::vector<MPoly> diff(k, MPoly(nvars));
  for (int i = 0; i < k; ++i) {
    const MPoly lhs = ppr * e[i];
    diff[i] = reduce_mod_P2(lhs - rhs[i] - pp * corr[i], k);
  }
  return report_from_diff("E7bis", k, std::nullopt, std::nullopt,
                          diff_from_vector(diff));
}

IdentityReport verify_simple2(int k, int p, int h) {
  if (k < 1 || p < 0 || h < 1 || h > k)
    throw std::invalid_argument("verify_simple2: bad args");
  const PolyMatrix ap = sym_companion(k).power(p);
  const PolyMatrix lhs = ap.derivative(h).scaled(pm(k - h));
  const PolyMatrix rhs = ap.derivative(k) * sym_companion(k).power(k - h);
  return report_from_diff("simple2", k, p, h, lhs - rhs);
}

IdentityReport verify_nabla_identity(int k, int p) {
  if (k < 1 || p < 1)
    throw std::invalid_argument("verify_nabla_identity: p must be >= 1");
  const PolyMatrix a = sym_companion(k);
  const PolyMatrix ap = a.power(p);
  const PolyMatrix nab = sym_nabla(k);
  const PolyMatrix lhs =
      nab * ap - ap * nab + a.power(p - 1).scaled(Int(p));
  const PolyMatrix rhs =
      ap.derivative(k).scaled(lambda_sign(k)) * sym_pprime_of_companion(k);
  return report_from_diff("nabla_identity", k, p, std::nullopt, lhs - rhs);
}

MPoly sylvester_discriminant(int k) {
  if (k < 2) throw std::invalid_argument("sylvester_discriminant: k must be >= 2");
  const int nvars = k + 1;
  const int n = 2 * k - 1;

  // Coefficients of P from degree k down: c_h = (-1)^h s_h (c_0 = 1),
  // and of P' from degree k-1 down: d_h = (-1)^h (k-h) s_h.
  std::vector<MPoly> c(k + 1, MPoly(nvars)), d(k, MPoly(nvars));
  c[0] = MPoly::constant(nvars, 1);
  d[0] = MPoly::constant(nvars, k);
  for (int h = 1; h <= k; ++h) {
    const MPoly sh = MPoly::variable(nvars, h);
    c[h] = (h % 2 == 1) ? -sh : sh;
    if (h <= k - 1) d[h] = c[h].scaled(Int(k - h));
  }

  // Sylvester matrix: k-1 rows of P coefficients, k rows of P' coefficients.
  std::vector<std::vector<MPoly>> syl(n, std::vector<MPoly>(n, MPoly(nvars)));
  for (int i = 0; i < k - 1; ++i)
    for (int j = 0; j <= k; ++j) syl[i][i + j] = c[j];
  for (int i = 0; i < k; ++i)
    for (int j = 0; j <= k - 1; ++j) syl[k - 1 + i][i + j] = d[j];

  // Determinant by Laplace expansion memoized over column subsets: after
  // processing rows r..n-1, `level` maps each used-column mask to the minor
  // over those rows and columns. Expanding row r along column `col`
  // contributes the sign (-1)^{#used columns below col}.
  std::map<std::uint32_t, MPoly> level;
  level.emplace(0u, MPoly::constant(nvars, 1));
  for (int r = n - 1; r >= 0; --r) {
    std::map<std::uint32_t, MPoly> next;
    for (const auto& [mask, minor] : level) {
      if (minor.is_zero()) continue;
      for (int col = 0; col < n; ++col) {
        const std::uint32_t bit = 1u << col;
        if (mask & bit) continue;
        if (syl[r][col].is_zero()) continue;
        MPoly term = syl[r][col] * minor;
        if (__builtin_popcount(mask & (bit - 1)) % 2 == 1) term = -term;
        auto it = next.find(mask | bit);
        if (it == next.end())
          next.emplace(mask | bit, std::move(term));
        else
          it->second += term;
      }
    }
    level = std::move(next);
  }
  MPoly det = level.begin()->second;

  // Disc(P) = (-1)^{k(k-1)/2} Res(P, P') for monic P.
  if ((k * (k - 1) / 2) % 2 == 1) det = -det;
  return det;
}

// ---------------------------------------------------------------- shadows

double shadow_block_power(int k, int p, Rng rng, int points) {
  double worst = 0.0;
  for (int n = 0; n < points; ++n) {
    const SymPoint pt = random_sym_point(rng, k, 2.0);
    const CMatrix a = lisbon::companion(pt);
    CMatrix b = CMatrix::Zero(k, k);
    b(k - 1, 0) = 1.0;  // (-1)^{k-1} dA/ds_k
    CMatrix m = CMatrix::Zero(2 * k, 2 * k);
    m.topLeftCorner(k, k) = a;
    m.topRightCorner(k, k) = b;
    m.bottomRightCorner(k, k) = a;
    const CMatrix mp = matrix_power(m, p);
    const CMatrix ap = matrix_power(a, p);
    const double lam = (k % 2 == 1) ? 1.0 : -1.0;
    const CMatrix bp = lam * numeric_dpow(pt, p, k);
    worst = std::max(worst, rel_err(mp.topLeftCorner(k, k), ap));
    worst = std::max(worst, rel_err(mp.bottomRightCorner(k, k), ap));
    worst = std::max(worst, rel_err(mp.topRightCorner(k, k), bp));
    worst = std::max(worst, mp.bottomLeftCorner(k, k).cwiseAbs().maxCoeff() /
                                (1.0 + ap.cwiseAbs().maxCoeff()));
  }
  return worst;
}

// The identity holds modulo P^2, so its two sides agree to second order at
// every root of P: both the values and the z-derivatives must match there.
double shadow_E7(int k, int p, Rng rng, int points) {
  double worst = 0.0;
  const double lam = (k % 2 == 1) ? 1.0 : -1.0;
  for (int n = 0; n < points; ++n) {
    const SymPoint pt = random_sym_point(rng, k, 2.0);
    const CMatrix ap = matrix_power(lisbon::companion(pt), p);
    const CMatrix dap = numeric_dpow(pt, p, k);
    const CMatrix nab = lisbon::nabla(k);
    for (const Complex& z : roots(pt).values) {
      const CVector e = monomial_vector(k, z);
      const CVector lhs = cpow(z, p) * e;
      const CVector rhs = ap * e;  // the P-term vanishes at a root
      const double scale = 1.0 + lhs.cwiseAbs().maxCoeff();
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff() / scale);

      // z-derivative at the root: P(z_j) = 0 leaves one correction term.
      const Complex dprime = eval_dpoly(pt, z);
      CVector dlhs = cpow(z, p) * (nab * e);
      if (p > 0) dlhs += double(p) * cpow(z, p - 1) * e;
      const CVector drhs = ap * (nab * e) + lam * dprime * (dap * e);
      const double dscale = 1.0 + dlhs.cwiseAbs().maxCoeff();
      worst = std::max(worst, (dlhs - drhs).cwiseAbs().maxCoeff() / dscale);
    }
  }
  return worst;
}

double shadow_E7bis(int k, Rng rng, int points) {
  double worst = 0.0;
  const double lam = (k % 2 == 1) ? 1.0 : -1.0;
  for (int n = 0; n < points; ++n) {
    const SymPoint pt = random_sym_point(rng, k, 2.0);
    const CMatrix pa = pprime_of_companion(pt);
    const CMatrix nab = lisbon::nabla(k);
    // d(P'(A))/ds_k numerically: sum_h (-1)^h (k-h) s_h d(A^{k-h-1})/ds_k.
    CMatrix dpa = CMatrix::Zero(k, k);
    double sign = 1.0;
    for (int h = 0; h <= k - 1; ++h) {
      dpa += sign * double(k - h) * pt.s(h) * numeric_dpow(pt, k - h - 1, k);
      sign = -sign;
    }
    for (const Complex& z : roots(pt).values) {
      const CVector e = monomial_vector(k, z);
      const Complex dprime = eval_dpoly(pt, z);
      const CVector lhs = dprime * e;
      const CVector rhs = pa * e;
      const double scale = 1.0 + lhs.cwiseAbs().maxCoeff();
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff() / scale);

      // second derivative of P at z for the z-derivative comparison
      Complex ddp{0.0, 0.0};
      {
        double sg = 1.0;
        for (int h = 0; h <= k - 2; ++h) {
          ddp += sg * double((k - h) * (k - h - 1)) * pt.s(h) *
                 cpow(z, k - h - 2);
          sg = -sg;
        }
      }
      const CVector dlhs = ddp * e + dprime * (nab * e);
      const CVector drhs = pa * (nab * e) + lam * dprime * (dpa * e);
      const double dscale = 1.0 + dlhs.cwiseAbs().maxCoeff();
      worst = std::max(worst, (dlhs - drhs).cwiseAbs().maxCoeff() / dscale);
    }
  }
  return worst;
}

double shadow_simple2(int k, int p, int h, Rng rng, int points) {
  double worst = 0.0;
  for (int n = 0; n < points; ++n) {
    const SymPoint pt = random_sym_point(rng, k, 2.0);
    const double sign = ((k - h) % 2 == 0) ? 1.0 : -1.0;
    const CMatrix lhs = sign * numeric_dpow(pt, p, h);
    const CMatrix rhs =
        numeric_dpow(pt, p, k) * matrix_power(lisbon::companion(pt), k - h);
    worst = std::max(worst, rel_err(lhs, rhs));
  }
  return worst;
}

double shadow_nabla_identity(int k, int p, Rng rng, int points) {
  double worst = 0.0;
  const double lam = (k % 2 == 1) ? 1.0 : -1.0;
  for (int n = 0; n < points; ++n) {
    const SymPoint pt = random_sym_point(rng, k, 2.0);
    const CMatrix a = lisbon::companion(pt);
    const CMatrix ap = matrix_power(a, p);
    const CMatrix nab = lisbon::nabla(k);
    const CMatrix lhs = nab * ap - ap * nab + double(p) * matrix_power(a, p - 1);
    const CMatrix rhs = lam * numeric_dpow(pt, p, k) * pprime_of_companion(pt);
    worst = std::max(worst, rel_err(lhs, rhs));
  }
  return worst;
}

double shadow_discriminant(int k, Rng rng, int points) {
  const MPoly disc = sylvester_discriminant(k);
  double worst = 0.0;
  for (int n = 0; n < points; ++n) {
    const SymPoint pt = random_sym_point(rng, k, 2.0);
    std::vector<Complex> values(k + 1, Complex(0.0));
    for (int h = 1; h <= k; ++h) values[h] = pt.s(h);
    const Complex exact_val = disc.eval(values);
    const Complex numeric = discriminant(pt);
    worst = std::max(worst, std::abs(exact_val - numeric) /
                                (1.0 + std::abs(numeric)));
  }
  return worst;
}

}  // namespace lisbon::exact
