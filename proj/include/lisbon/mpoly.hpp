#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lisbon::exact {

using Int = boost::multiprecision::cpp_int;
using Complex = std::complex<double>;

// Sparse multivariate polynomial over Z[s_1, ..., s_k, z].
//
// Variable 0 is z, variables 1..k are s_1..s_k; at most 8 variables (k <= 7).
// An exponent vector is packed big-endian into a uint64 key, one byte per
// variable with z in the top byte, so the natural uint64 order equals the
// lexicographic order on (e_z, e_1, ..., e_k). Zero coefficients are never
// stored: equal polynomials have identical term maps (canonical form).
class MPoly {
 public:
  static constexpr int kMaxVars = 8;
  static constexpr int kMaxExponent = 255;

  explicit MPoly(int nvars = 1);

  static MPoly constant(int nvars, Int c);
  static MPoly variable(int nvars, int var, int power = 1);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly operator-() const;
  MPoly scaled(const Int& c) const;

  bool operator==(const MPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  MPoly derivative(int var) const;

  // Degree in one variable; -1 for the zero polynomial.
  int degree(int var) const;
  int degree_z() const;  // O(1): z owns the most significant key byte

  // Coefficient of z^d as a polynomial with the z exponent cleared.
  MPoly z_coefficient(int d) const;

  // Multiply by z^dz.
  MPoly shifted_z(int dz) const;

  // Numeric substitution; values[v] for variable v (values[0] is z).
  Complex eval(const std::vector<Complex>& values) const;

  std::string str() const;  // for witnesses and debugging

  const std::map<std::uint64_t, Int>& terms() const { return terms_; }

  static int exponent_of(std::uint64_t key, int var) {
    return static_cast<int>((key >> (8 * (7 - var))) & 0xffu);
  }

 private:
  int nvars_;
  std::map<std::uint64_t, Int> terms_;

  void add_term(std::uint64_t key, Int c);
};

// P_s(z) = sum_{h=0}^{k} (-1)^h s_h z^{k-h} with s_0 = 1, in k+1 variables.
MPoly sym_P(int k);

// P'_s(z) = dP/dz.
MPoly sym_Pprime(int k);

// Remainder of v modulo P_s^2, dividing out the monic (in z) leading terms;
// the result has z-degree < 2k and the reduction is exact over Z[s].
MPoly reduce_mod_P2(const MPoly& v, int k);

}  // namespace lisbon::exact
