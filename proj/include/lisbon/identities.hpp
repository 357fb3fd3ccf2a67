#pragma once

#include <optional>
#include <string>

#include "lisbon/poly_matrix.hpp"
#include "lisbon/rng.hpp"

namespace lisbon::exact {

struct IdentityReport {
  std::string name;
  int k = 0;
  std::optional<int> p;
  std::optional<int> h;
  bool exact_zero = false;

  struct Witness {
    int row = 0;
    int col = 0;
    std::string entry;  // the offending polynomial, printed
  };
  std::optional<Witness> witness;
};

// Builds the verdict from a difference matrix: ExactZero when every entry is
// the zero polynomial, otherwise Failed with the first nonzero entry as a
// reproducible witness.
IdentityReport report_from_diff(std::string name, int k, std::optional<int> p,
                                std::optional<int> h, const PolyMatrix& diff);

// M = [[A, B], [0, A]] with B = (-1)^{k-1} dA/ds_k; checks that M^p has
// blocks A^p and (-1)^{k-1} d(A^p)/ds_k exactly.
IdentityReport verify_block_power(int k, int p);

// z^p E = A^p E + (-1)^{k-1} P d(A^p)/ds_k E  modulo P^2.
IdentityReport verify_E7(int k, int p);

// P' E = P'(A) E + (-1)^{k-1} P d(P'(A))/ds_k E  modulo P^2.
IdentityReport verify_E7bis(int k);

// (-1)^{k-h} d(A^p)/ds_h = d(A^p)/ds_k * A^{k-h}.
IdentityReport verify_simple2(int k, int p, int h);

// nabla A^p - A^p nabla + p A^{p-1} = (-1)^{k-1} d(A^p)/ds_k * P'(A), p >= 1.
IdentityReport verify_nabla_identity(int k, int p);

// Discriminant as an exact polynomial in s: (-1)^{k(k-1)/2} Res_z(P, P').
// Normalized so that k = 2 gives s_1^2 - 4 s_2. Requires k >= 2.
MPoly sylvester_discriminant(int k);

// Numeric cross-checks: re-derive each identity with plain floating-point
// linear algebra (numeric matrix powers, product-rule derivatives, numeric
// roots) at random points; returns the worst normalized residual. These
// paths never go through MPoly arithmetic, so a systematically wrong exact
// kernel cannot hide.
double shadow_block_power(int k, int p, Rng rng, int points = 20);
double shadow_E7(int k, int p, Rng rng, int points = 20);
double shadow_E7bis(int k, Rng rng, int points = 20);
double shadow_simple2(int k, int p, int h, Rng rng, int points = 20);
double shadow_nabla_identity(int k, int p, Rng rng, int points = 20);
double shadow_discriminant(int k, Rng rng, int points = 20);

}  // namespace lisbon::exact
