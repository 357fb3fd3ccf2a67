#pragma once

#include "lisbon/contour.hpp"
#include "lisbon/sym_point.hpp"

namespace lisbon {

// Independent oracle for Phi via the residue formula
//   phi_h(s) = sum_j z_j^h f(z_j) / P'_s(z_j).
// Refuses (NearDiscriminant) when |discriminant| < delta_floor: the formula
// is genuinely singular there and the contour path is the fallback.
LisbonVector phi_residue(const SymPoint& pt, const EntireFunction& f,
                         double delta_floor = 1e-6);

// psi_h(s) = sum_j z_j^h f(z_j). Same refusal policy (root quality only).
LisbonVector psi_residue(const SymPoint& pt, const EntireFunction& f,
                         double delta_floor = 1e-6);

}  // namespace lisbon
