#include "lisbon/contour.hpp"

#include <cmath>
#include <stdexcept>

#include "lisbon/errors.hpp"
#include "lisbon/roots.hpp"

namespace lisbon {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// One trapezoid pass over |zeta| = R:
//   (1/2 pi i) \oint g(zeta) dzeta  ~=  (1/N) sum_m g(zeta_m) zeta_m,
// zeta_m = R e^{2 pi i m / N}. The weight zeta_m/N folds the 2 pi i factor.
// `magnitude` returns the largest summand seen (the roundoff scale).
template <class Eval>
std::vector<Complex> ring_sum(double radius, int n, int m, const Eval& eval,
                              double& magnitude) {
  std::vector<Complex> acc(m, Complex(0.0)), tmp(m);
  magnitude = 0.0;
  for (int i = 0; i < n; ++i) {
    const double th = kTwoPi * i / n;
    const Complex zeta = radius * Complex(std::cos(th), std::sin(th));
    eval(zeta, tmp);
    for (int c = 0; c < m; ++c) {
      const Complex term = tmp[c] * zeta;
      magnitude = std::max(magnitude, std::abs(term));
      acc[c] += term;
    }
  }
  const double inv = 1.0 / n;
  for (auto& a : acc) a *= inv;
  return acc;
}

struct QuadResult {
  std::vector<Complex> value;
  double accuracy;
};

// Doubles the node count until two successive estimates differ by less than
// tol, scaled by the estimate's magnitude (an absolute criterion is
// unreachable once the value exceeds tol / machine epsilon). When the
// successive differences stop improving inside the roundoff band of the
// summands, more nodes provably cannot help: return the attained accuracy
// instead of burning the budget.
template <class Eval>
QuadResult adaptive(double radius, const QuadratureConfig& cfg, int m,
                    const Eval& eval) {
  constexpr double kEps = 2.220446049250313e-16;
  int n = cfg.min_nodes;
  double mag = 0.0;
  std::vector<Complex> prev = ring_sum(radius, n, m, eval, mag);
  double prev_diff = -1.0;
  while (2 * n <= cfg.max_nodes) {
    n *= 2;
    std::vector<Complex> cur = ring_sum(radius, n, m, eval, mag);
    double diff = 0.0, scale = 1.0;
    for (int c = 0; c < m; ++c) {
      diff = std::max(diff, std::abs(cur[c] - prev[c]));
      scale = std::max(scale, std::abs(cur[c]));
    }
    if (diff < cfg.tol * scale) return {std::move(cur), diff};
    const bool at_floor = diff <= 1024.0 * kEps * mag;
    const bool stagnant = prev_diff >= 0.0 && diff >= 0.25 * prev_diff;
    if (at_floor && stagnant) return {std::move(cur), diff};
    prev_diff = diff;
    prev = std::move(cur);
  }
  throw BudgetExceeded("contour quadrature: node budget " +
                       std::to_string(cfg.max_nodes) +
                       " exhausted before tol was met");
}

// Auto radius: a circle just above the roots keeps the integrand magnitude
// (and with it the cancellation error of the quadrature) small for
// exponential-type f; the coefficient-based bound caps it and serves as the
// fallback when the root positions are unavailable.
double choose_radius(const SymPoint& pt, const QuadratureConfig& cfg) {
  cfg.validate();
  if (cfg.radius_policy == QuadratureConfig::RadiusPolicy::Auto) {
    const double cap = radius_bound(pt);
    try {
      double m = 0.0;
      for (const Complex& z : roots(pt, 1e-10).values)
        m = std::max(m, std::abs(z));
      return std::min(1.25 * m + 0.75, cap);
    } catch (const NonConvergence&) {
      return cap;
    }
  }
  const double r = cfg.fixed_radius;
  // Best effort: reject a fixed radius that does not enclose the roots.
  try {
    for (const Complex& z : roots(pt, 1e-10).values) {
      if (std::abs(z) >= r)
        throw DomainError("fixed contour radius " + std::to_string(r) +
                          " does not enclose all roots");
    }
  } catch (const NonConvergence&) {
    // root quality insufficient to check; proceed with the caller's radius
  }
  return r;
}

// Kernel numerator n(zeta) for dPsi/ds_h over P^2.
Complex dpsi_numerator(const SymPoint& pt, int h, Complex zeta) {
  const int k = pt.k();
  const double sign = (h % 2 == 0) ? 1.0 : -1.0;  // (-1)^h
  Complex num = -eval_dpoly(pt, zeta) * cpow(zeta, k - h);
  if (h <= k - 1)
    num += double(k - h) * cpow(zeta, k - h - 1) * eval_poly(pt, zeta);
  return sign * num;
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(tol > 0.0)) throw std::invalid_argument("QuadratureConfig: tol must be > 0");
  if (min_nodes < 16)
    throw std::invalid_argument("QuadratureConfig: min_nodes must be >= 16");
  if (max_nodes < 2 * min_nodes)
    throw std::invalid_argument("QuadratureConfig: max_nodes must be >= 2*min_nodes");
  if (radius_policy == RadiusPolicy::Fixed && !(fixed_radius > 0.0))
    throw std::invalid_argument("QuadratureConfig: fixed radius must be > 0");
}

double LisbonVector::max_abs() const {
  double m = 0.0;
  for (const Complex& c : comp) m = std::max(m, std::abs(c));
  return m;
}

double radius_bound(const SymPoint& pt) {
  double m = 0.0;
  for (int h = 1; h <= pt.k(); ++h)
    m = std::max(m, std::pow(std::abs(pt.s(h)), 1.0 / h));
  return 2.0 * (1.0 + m);
}

LisbonVector phi(const SymPoint& pt, const EntireFunction& f,
                 const QuadratureConfig& cfg) {
  const int k = pt.k();
  const double r = choose_radius(pt, cfg);
  auto eval = [&](Complex zeta, std::vector<Complex>& out) {
    const Complex base = f(zeta) / eval_poly(pt, zeta);
    Complex pw{1.0, 0.0};
    for (int c = 0; c < k; ++c) {
      out[c] = base * pw;
      pw *= zeta;
    }
  };
  QuadResult q = adaptive(r, cfg, k, eval);
  return {LisbonKind::Phi, std::move(q.value), q.accuracy};
}

LisbonVector psi(const SymPoint& pt, const EntireFunction& f,
                 const QuadratureConfig& cfg) {
  const int k = pt.k();
  const double r = choose_radius(pt, cfg);
  auto eval = [&](Complex zeta, std::vector<Complex>& out) {
    const Complex base =
        f(zeta) * eval_dpoly(pt, zeta) / eval_poly(pt, zeta);
    Complex pw{1.0, 0.0};
    for (int c = 0; c < k; ++c) {
      out[c] = base * pw;
      pw *= zeta;
    }
  };
  QuadResult q = adaptive(r, cfg, k, eval);
  return {LisbonKind::Psi, std::move(q.value), q.accuracy};
}

Complex scalar_phi(const SymPoint& pt, const EntireFunction& f, int h,
                   const QuadratureConfig& cfg) {
  if (h < 0) throw std::invalid_argument("scalar_phi: h must be >= 0");
  return scalar_phi_kernel(pt, f, h, 1, cfg);
}

Complex scalar_psi(const SymPoint& pt, const EntireFunction& f, int h,
                   const QuadratureConfig& cfg) {
  if (h < 0) throw std::invalid_argument("scalar_psi: h must be >= 0");
  const double r = choose_radius(pt, cfg);
  auto eval = [&](Complex zeta, std::vector<Complex>& out) {
    out[0] = f(zeta) * cpow(zeta, h) * eval_dpoly(pt, zeta) /
             eval_poly(pt, zeta);
  };
  return adaptive(r, cfg, 1, eval).value[0];
}

Complex scalar_phi_kernel(const SymPoint& pt, const EntireFunction& f, int zpow,
                          int ppow, const QuadratureConfig& cfg) {
  if (zpow < 0 || ppow < 1)
    throw std::invalid_argument("scalar_phi_kernel: bad exponents");
  const double r = choose_radius(pt, cfg);
  auto eval = [&](Complex zeta, std::vector<Complex>& out) {
    Complex den{1.0, 0.0};
    const Complex p = eval_poly(pt, zeta);
    for (int i = 0; i < ppow; ++i) den *= p;
    out[0] = f(zeta) * cpow(zeta, zpow) / den;
  };
  return adaptive(r, cfg, 1, eval).value[0];
}

LisbonVector dphi_ds(const SymPoint& pt, const EntireFunction& f, int h,
                     const QuadratureConfig& cfg) {
  const int k = pt.k();
  if (h < 1 || h > k) throw std::invalid_argument("dphi_ds: h out of range");
  const double r = choose_radius(pt, cfg);
  const double sign = (h % 2 == 0) ? -1.0 : 1.0;  // (-1)^{h+1}
  auto eval = [&](Complex zeta, std::vector<Complex>& out) {
    const Complex p = eval_poly(pt, zeta);
    const Complex base = sign * f(zeta) * cpow(zeta, k - h) / (p * p);
    Complex pw{1.0, 0.0};
    for (int c = 0; c < k; ++c) {
      out[c] = base * pw;
      pw *= zeta;
    }
  };
  QuadResult q = adaptive(r, cfg, k, eval);
  return {LisbonKind::Phi, std::move(q.value), q.accuracy};
}

LisbonVector dpsi_ds(const SymPoint& pt, const EntireFunction& f, int h,
                     const QuadratureConfig& cfg) {
  const int k = pt.k();
  if (h < 1 || h > k) throw std::invalid_argument("dpsi_ds: h out of range");
  const double r = choose_radius(pt, cfg);
  auto eval = [&](Complex zeta, std::vector<Complex>& out) {
    const Complex p = eval_poly(pt, zeta);
    const Complex base = f(zeta) * dpsi_numerator(pt, h, zeta) / (p * p);
    Complex pw{1.0, 0.0};
    for (int c = 0; c < k; ++c) {
      out[c] = base * pw;
      pw *= zeta;
    }
  };
  QuadResult q = adaptive(r, cfg, k, eval);
  return {LisbonKind::Psi, std::move(q.value), q.accuracy};
}

LisbonVector d2phi_ds2(const SymPoint& pt, const EntireFunction& f, int h,
                       int j, const QuadratureConfig& cfg) {
  const int k = pt.k();
  if (h < 1 || h > k || j < 1 || j > k)
    throw std::invalid_argument("d2phi_ds2: indices out of range");
  const double r = choose_radius(pt, cfg);
  const double sign = ((h + j) % 2 == 0) ? 1.0 : -1.0;  // (-1)^{h+j}
  auto eval = [&](Complex zeta, std::vector<Complex>& out) {
    const Complex p = eval_poly(pt, zeta);
    const Complex base =
        2.0 * sign * f(zeta) * cpow(zeta, 2 * k - h - j) / (p * p * p);
    Complex pw{1.0, 0.0};
    for (int c = 0; c < k; ++c) {
      out[c] = base * pw;
      pw *= zeta;
    }
  };
  QuadResult q = adaptive(r, cfg, k, eval);
  return {LisbonKind::Phi, std::move(q.value), q.accuracy};
}

}  // namespace lisbon
