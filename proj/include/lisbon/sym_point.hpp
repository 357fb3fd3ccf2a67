#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace lisbon {

using Complex = std::complex<double>;

// A point of the parameter space: the elementary symmetric coordinates
// (s_1, ..., s_k) of the monic polynomial
//
//   P_s(z) = sum_{h=0}^{k} (-1)^h s_h z^{k-h},   s_0 = 1.
class SymPoint {
 public:
  explicit SymPoint(std::vector<Complex> coords) : s_(std::move(coords)) {
    if (s_.empty()) throw std::invalid_argument("SymPoint: k must be >= 1");
  }

  int k() const { return static_cast<int>(s_.size()); }

  // s(0) == 1 by convention; otherwise h must lie in [1, k].
  Complex s(int h) const {
    if (h == 0) return {1.0, 0.0};
    return s_.at(static_cast<std::size_t>(h - 1));
  }

  const std::vector<Complex>& coords() const { return s_; }

  double norm() const;

  bool operator==(const SymPoint& o) const { return s_ == o.s_; }

 private:
  std::vector<Complex> s_;
};

// P_s(z) by Horner recurrence on the coefficients (-1)^h s_h.
Complex eval_poly(const SymPoint& pt, Complex z);

// View of P_s attached to its point: monic in z, coefficient (-1)^h s_h
// at z^{k-h}.
class MonicPoly {
 public:
  explicit MonicPoly(SymPoint owner) : owner_(std::move(owner)) {}

  const SymPoint& owner() const { return owner_; }
  int degree() const { return owner_.k(); }

  // Coefficient of z^d for d in [0, k]; the leading one is exactly 1.
  Complex coefficient(int d) const {
    const int h = owner_.k() - d;
    if (h < 0 || h > owner_.k())
      throw std::invalid_argument("MonicPoly: degree out of range");
    const double sign = (h % 2 == 0) ? 1.0 : -1.0;
    return sign * owner_.s(h);
  }

  Complex operator()(Complex z) const;
  Complex derivative_at(Complex z) const;

 private:
  SymPoint owner_;
};

// P'_s(z) = sum_{h=0}^{k-1} (-1)^h (k-h) s_h z^{k-h-1}; independent of s_k.
Complex eval_dpoly(const SymPoint& pt, Complex z);

// z^n by repeated multiplication, n >= 0.
Complex cpow(Complex z, int n);

}  // namespace lisbon
