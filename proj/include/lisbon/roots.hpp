#pragma once

#include <vector>

#include "lisbon/sym_point.hpp"

namespace lisbon {

struct RootSet {
  std::vector<Complex> values;  // the k roots, an unordered multiset
  double accuracy = 0.0;        // attained Vieta round-trip error (scaled)
};

// Simultaneous Aberth-Ehrlich iteration started on a circle at the root
// bound, capped at 200 iterations. `accuracy` is the Vieta round-trip error
//   max_h |e_h(roots) - s_h| / (1 + |s|).
// The strict gate is `tol`; clustered (multiple-root) configurations are
// returned with degraded accuracy as long as the relaxed 1e-5 gate passes.
// Throws NonConvergence beyond that.
RootSet roots(const SymPoint& pt, double tol = 1e-12);

// Elementary symmetric functions e_1, ..., e_k of the given values.
std::vector<Complex> elementary_from_roots(const std::vector<Complex>& zs);

// prod_{i<j} (z_i - z_j)^2 from the numeric roots; 1 for k = 1.
Complex discriminant(const SymPoint& pt, double tol = 1e-12);

// Power sum p_h = sum_j z_j^h via Newton's identities on s directly
// (no root extraction).
Complex newton_power_sum(const SymPoint& pt, int h);

}  // namespace lisbon
