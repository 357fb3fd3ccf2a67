#include "lisbon/poly_matrix.hpp"

#include <stdexcept>

namespace lisbon::exact {

PolyMatrix::PolyMatrix(int rows, int cols, int nvars)
    : rows_(rows), cols_(cols), nvars_(nvars),
      data_(static_cast<std::size_t>(rows) * cols, MPoly(nvars)) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("PolyMatrix: bad dimensions");
}

PolyMatrix PolyMatrix::identity(int n, int nvars) {
  PolyMatrix m(n, n, nvars);
  for (int i = 0; i < n; ++i) m.at(i, i) = MPoly::constant(nvars, 1);
  return m;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  PolyMatrix out(rows_, cols_, nvars_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = data_[i] + o.data_[i];
  return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  PolyMatrix out(rows_, cols_, nvars_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = data_[i] - o.data_[i];
  return out;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("PolyMatrix: shape mismatch");
  PolyMatrix out(rows_, o.cols_, nvars_);
  for (int i = 0; i < rows_; ++i)
    for (int m = 0; m < cols_; ++m) {
      const MPoly& lhs = at(i, m);
      if (lhs.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const MPoly& rhs = o.at(m, j);
        if (rhs.is_zero()) continue;
        out.at(i, j) += lhs * rhs;
      }
    }
  return out;
}

PolyMatrix PolyMatrix::scaled(const Int& c) const {
  PolyMatrix out(rows_, cols_, nvars_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i].scaled(c);
  return out;
}

PolyMatrix PolyMatrix::power(int p) const {
  if (rows_ != cols_) throw std::invalid_argument("PolyMatrix::power: not square");
  if (p < 0) throw std::invalid_argument("PolyMatrix::power: negative power");
  PolyMatrix out = identity(rows_, nvars_);
  for (int i = 0; i < p; ++i) out = out * (*this);
  return out;
}

PolyMatrix PolyMatrix::derivative(int var) const {
  PolyMatrix out(rows_, cols_, nvars_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = data_[i].derivative(var);
  return out;
}

std::vector<MPoly> PolyMatrix::apply(const std::vector<MPoly>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("PolyMatrix::apply: size mismatch");
  std::vector<MPoly> out(rows_, MPoly(nvars_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero() || v[j].is_zero()) continue;
      out[i] += at(i, j) * v[j];
    }
  return out;
}

Eigen::MatrixXcd PolyMatrix::eval(const std::vector<Complex>& values) const {
  Eigen::MatrixXcd m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = at(i, j).eval(values);
  return m;
}

bool PolyMatrix::is_zero() const {
  for (const MPoly& p : data_)
    if (!p.is_zero()) return false;
  return true;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

PolyMatrix sym_companion(int k) {
  const int nvars = k + 1;
  PolyMatrix a(k, k, nvars);
  for (int i = 0; i + 1 < k; ++i) a.at(i, i + 1) = MPoly::constant(nvars, 1);
  for (int j = 0; j < k; ++j) {
    const int h = k - j;
    MPoly entry = MPoly::variable(nvars, h);
    a.at(k - 1, j) = (h % 2 == 1) ? entry : -entry;  // (-1)^{h-1} s_h
  }
  return a;
}

PolyMatrix sym_nabla(int k) {
  PolyMatrix n(k, k, k + 1);
  for (int i = 1; i < k; ++i) n.at(i, i - 1) = MPoly::constant(k + 1, i);
  return n;
}

PolyMatrix sym_pprime_of_companion(int k) {
  const int nvars = k + 1;
  const PolyMatrix a = sym_companion(k);
  PolyMatrix acc(k, k, nvars);
  // sum_{h=0}^{k-1} (-1)^h (k-h) s_h A^{k-h-1}, s_0 = 1
  PolyMatrix apow = PolyMatrix::identity(k, nvars);  // A^0, grows upward
  std::vector<PolyMatrix> powers;
  powers.reserve(k);
  for (int p = 0; p <= k - 1; ++p) {
    powers.push_back(apow);
    if (p < k - 1) apow = apow * a;
  }
  for (int h = 0; h <= k - 1; ++h) {
    PolyMatrix term = powers[k - h - 1].scaled(Int(k - h));
    if (h > 0) {
      const MPoly sh = MPoly::variable(nvars, h);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) term.at(i, j) = term.at(i, j) * sh;
    }
    acc = (h % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

std::vector<MPoly> sym_E(int k) {
  std::vector<MPoly> e;
  e.reserve(k);
  for (int i = 0; i < k; ++i) e.push_back(MPoly::variable(k + 1, 0, i));
  return e;
}

}  // namespace lisbon::exact
