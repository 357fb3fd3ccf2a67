#pragma once

#include <Eigen/Dense>
#include <vector>

#include "lisbon/mpoly.hpp"

namespace lisbon::exact {

// Dense matrix with MPoly entries; the carrier of the exact identities.
class PolyMatrix {
 public:
  PolyMatrix(int rows, int cols, int nvars);

  static PolyMatrix identity(int n, int nvars);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nvars() const { return nvars_; }

  MPoly& at(int r, int c) { return data_[idx(r, c)]; }
  const MPoly& at(int r, int c) const { return data_[idx(r, c)]; }

  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix scaled(const Int& c) const;
  PolyMatrix power(int p) const;
  PolyMatrix derivative(int var) const;

  std::vector<MPoly> apply(const std::vector<MPoly>& v) const;

  Eigen::MatrixXcd eval(const std::vector<Complex>& values) const;

  bool is_zero() const;
  bool operator==(const PolyMatrix& o) const;

 private:
  int rows_, cols_, nvars_;
  std::vector<MPoly> data_;

  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * cols_ + c;
  }
};

// Symbolic builders over Z[s_1..s_k, z] (k+1 variables, z unused in matrices).
PolyMatrix sym_companion(int k);
PolyMatrix sym_nabla(int k);
PolyMatrix sym_pprime_of_companion(int k);
std::vector<MPoly> sym_E(int k);  // (1, z, ..., z^{k-1})

}  // namespace lisbon::exact
