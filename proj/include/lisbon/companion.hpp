#pragma once

#include <Eigen/Dense>

#include "lisbon/sym_point.hpp"

namespace lisbon {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Companion matrix A(s): superdiagonal ones, bottom row
// ((-1)^{k-1} s_k, ..., (-1)^{h-1} s_h, ..., s_1), char poly P_s.
CMatrix companion(const SymPoint& pt);

// Constant matrix with subdiagonal (1, 2, ..., k-1); satisfies
// d/dz E(z) = nabla(k) * E(z) for the monomial vector E.
CMatrix nabla(int k);

// E(z) = (1, z, ..., z^{k-1})^T.
CVector monomial_vector(int k, Complex z);

// P'_s(A(s)) = sum_{h=0}^{k-1} (-1)^h (k-h) s_h A^{k-h-1}.
CMatrix pprime_of_companion(const SymPoint& pt);

// dA/ds_h: a single entry (-1)^{h-1} at (k-1, k-h), h in [1, k].
CMatrix companion_ds(int k, int h);

CMatrix matrix_power(const CMatrix& m, int p);

}  // namespace lisbon
