#include "lisbon/sym_point.hpp"

#include <cmath>

namespace lisbon {

double SymPoint::norm() const {
  double n2 = 0.0;
  for (const Complex& c : s_) n2 += std::norm(c);
  return std::sqrt(n2);
}

Complex eval_poly(const SymPoint& pt, Complex z) {
  const int k = pt.k();
  Complex acc{1.0, 0.0};  // s_0 term
  double sign = -1.0;
  for (int h = 1; h <= k; ++h) {
    acc = acc * z + sign * pt.s(h);
    sign = -sign;
  }
  return acc;
}

Complex eval_dpoly(const SymPoint& pt, Complex z) {
  const int k = pt.k();
  Complex acc{double(k), 0.0};  // h = 0 term: k z^{k-1}
  double sign = -1.0;
  for (int h = 1; h <= k - 1; ++h) {
    acc = acc * z + sign * double(k - h) * pt.s(h);
    sign = -sign;
  }
  return acc;
}

Complex MonicPoly::operator()(Complex z) const { return eval_poly(owner_, z); }

Complex MonicPoly::derivative_at(Complex z) const {
  return eval_dpoly(owner_, z);
}

Complex cpow(Complex z, int n) {
  Complex r{1.0, 0.0};
  for (int i = 0; i < n; ++i) r *= z;
  return r;
}

}  // namespace lisbon
