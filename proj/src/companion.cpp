#include "lisbon/companion.hpp"

#include <stdexcept>

namespace lisbon {

CMatrix companion(const SymPoint& pt) {
  const int k = pt.k();
  CMatrix a = CMatrix::Zero(k, k);
  for (int i = 0; i + 1 < k; ++i) a(i, i + 1) = 1.0;
  for (int j = 0; j < k; ++j) {
    const int h = k - j;
    const double sign = (h % 2 == 1) ? 1.0 : -1.0;  // (-1)^{h-1}
    a(k - 1, j) = sign * pt.s(h);
  }
  return a;
}

CMatrix nabla(int k) {
  if (k < 1) throw std::invalid_argument("nabla: k must be >= 1");
  CMatrix n = CMatrix::Zero(k, k);
  for (int i = 1; i < k; ++i) n(i, i - 1) = double(i);
  return n;
}

CVector monomial_vector(int k, Complex z) {
  CVector e(k);
  Complex p{1.0, 0.0};
  for (int i = 0; i < k; ++i) {
    e(i) = p;
    p *= z;
  }
  return e;
}

CMatrix pprime_of_companion(const SymPoint& pt) {
  const int k = pt.k();
  const CMatrix a = companion(pt);
  CMatrix acc = CMatrix::Zero(k, k);
  // Horner in A: acc = k I, then acc = acc*A + (-1)^h (k-h) s_h I.
  acc = double(k) * CMatrix::Identity(k, k);
  double sign = -1.0;
  for (int h = 1; h <= k - 1; ++h) {
    acc = acc * a + sign * double(k - h) * pt.s(h) * CMatrix::Identity(k, k);
    sign = -sign;
  }
  return acc;
}

CMatrix companion_ds(int k, int h) {
  if (h < 1 || h > k) throw std::invalid_argument("companion_ds: h out of range");
  CMatrix d = CMatrix::Zero(k, k);
  d(k - 1, k - h) = (h % 2 == 1) ? 1.0 : -1.0;
  return d;
}

CMatrix matrix_power(const CMatrix& m, int p) {
  if (p < 0) throw std::invalid_argument("matrix_power: negative power");
  CMatrix r = CMatrix::Identity(m.rows(), m.cols());
  for (int i = 0; i < p; ++i) r = r * m;
  return r;
}

}  // namespace lisbon
