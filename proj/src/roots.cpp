#include "lisbon/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lisbon/errors.hpp"

namespace lisbon {

namespace {

double root_bound(const SymPoint& pt) {
  double m = 0.0;
  for (int h = 1; h <= pt.k(); ++h)
    m = std::max(m, std::pow(std::abs(pt.s(h)), 1.0 / h));
  return 2.0 * m;  // Fujiwara-type bound for a monic polynomial
}

double vieta_error(const SymPoint& pt, const std::vector<Complex>& zs) {
  const auto e = elementary_from_roots(zs);
  double err = 0.0;
  for (int h = 1; h <= pt.k(); ++h)
    err = std::max(err, std::abs(e[h - 1] - pt.s(h)));
  return err / (1.0 + pt.norm());
}

}  // namespace

std::vector<Complex> elementary_from_roots(const std::vector<Complex>& zs) {
  // Expand prod_j (z - z_j); coefficient of z^{k-h} is (-1)^h e_h.
  const int k = static_cast<int>(zs.size());
  std::vector<Complex> c(k + 1, Complex(0.0));
  c[0] = 1.0;  // degree k downwards: c[h] multiplies z^{k-h}
  for (int j = 0; j < k; ++j) {
    for (int h = j + 1; h >= 1; --h) c[h] -= zs[j] * c[h - 1];
  }
  std::vector<Complex> e(k);
  double sign = -1.0;
  for (int h = 1; h <= k; ++h) {
    e[h - 1] = sign * c[h];  // e_h = (-1)^h c_h
    sign = -sign;
  }
  return e;
}

RootSet roots(const SymPoint& pt, double tol) {
  if (tol <= 0) throw std::invalid_argument("roots: tol must be positive");
  const int k = pt.k();
  if (k == 1) return RootSet{{pt.s(1)}, 0.0};

  std::vector<Complex> x(k);
  const double r0 = std::max(0.5, root_bound(pt));
  for (int j = 0; j < k; ++j) {
    const double th = 6.283185307179586 * j / k + 0.43;
    x[j] = r0 * Complex(std::cos(th), std::sin(th));
  }

  const int cap = 200;
  for (int it = 0; it < cap; ++it) {
    double step = 0.0;
    for (int i = 0; i < k; ++i) {
      const Complex p = eval_poly(pt, x[i]);
      if (p == Complex(0.0)) continue;
      Complex dp = eval_dpoly(pt, x[i]);
      if (dp == Complex(0.0)) {  // stationary point: nudge off it
        x[i] += Complex(1e-8, 1e-8) * (1.0 + std::abs(x[i]));
        step = 1.0;
        continue;
      }
      const Complex ratio = p / dp;
      Complex repel{0.0, 0.0};
      bool collision = false;
      for (int j = 0; j < k; ++j) {
        if (j == i) continue;
        const Complex d = x[i] - x[j];
        if (std::abs(d) < 1e-300) {
          collision = true;
          break;
        }
        repel += 1.0 / d;
      }
      if (collision) {
        x[i] += Complex(1e-8, -1e-8) * (1.0 + std::abs(x[i]));
        step = 1.0;
        continue;
      }
      const Complex denom = 1.0 - ratio * repel;
      const Complex w = (std::abs(denom) < 1e-300) ? ratio : ratio / denom;
      x[i] -= w;
      step = std::max(step, std::abs(w) / (1.0 + std::abs(x[i])));
    }
    if (step < 1e-15) break;
  }

  const double err = vieta_error(pt, x);
  if (err > std::max(tol, 1e-5)) {
    throw NonConvergence("roots: Vieta round-trip error " + std::to_string(err) +
                         " exceeds the relaxed gate");
  }
  return RootSet{std::move(x), err};
}

Complex discriminant(const SymPoint& pt, double tol) {
  const int k = pt.k();
  if (k == 1) return {1.0, 0.0};  // empty product
  const RootSet rs = roots(pt, tol);
  Complex d{1.0, 0.0};
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const Complex diff = rs.values[i] - rs.values[j];
      d *= diff * diff;
    }
  return d;
}

Complex newton_power_sum(const SymPoint& pt, int h) {
  if (h < 0) throw std::invalid_argument("newton_power_sum: h must be >= 0");
  const int k = pt.k();
  std::vector<Complex> p(h + 1);
  p[0] = double(k);
  for (int n = 1; n <= h; ++n) {
    Complex acc{0.0, 0.0};
    double sign = 1.0;  // (-1)^{i-1}
    const int top = std::min(n - 1, k);
    for (int i = 1; i <= top; ++i) {
      acc += sign * pt.s(i) * p[n - i];
      sign = -sign;
    }
    if (n <= k) {
      // (-1)^{n-1} n e_n term
      acc += ((n % 2 == 1) ? 1.0 : -1.0) * double(n) * pt.s(n);
    }
    p[n] = acc;
  }
  return p[h];
}

}  // namespace lisbon
