#include "lisbon/mpoly.hpp"

#include <cassert>
#include <stdexcept>

namespace lisbon::exact {

namespace {

std::uint64_t key_with(int var, int power) {
  return static_cast<std::uint64_t>(power) << (8 * (7 - var));
}

Complex cpow_local(Complex z, int n) {
  Complex r{1.0, 0.0};
  for (int i = 0; i < n; ++i) r *= z;
  return r;
}

}  // namespace

MPoly::MPoly(int nvars) : nvars_(nvars) {
  if (nvars < 1 || nvars > kMaxVars)
    throw std::invalid_argument("MPoly: nvars must be in [1, 8]");
}

MPoly MPoly::constant(int nvars, Int c) {
  MPoly p(nvars);
  if (c != 0) p.terms_.emplace(0, std::move(c));
  return p;
}

MPoly MPoly::variable(int nvars, int var, int power) {
  if (var < 0 || var >= nvars)
    throw std::invalid_argument("MPoly::variable: var out of range");
  if (power < 0 || power > kMaxExponent)
    throw std::invalid_argument("MPoly::variable: bad power");
  MPoly p(nvars);
  p.terms_.emplace(key_with(var, power), Int(1));
  return p;
}

void MPoly::add_term(std::uint64_t key, Int c) {
  if (c == 0) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  assert(nvars_ == o.nvars_);
  for (const auto& [key, c] : o.terms_) add_term(key, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  assert(nvars_ == o.nvars_);
  for (const auto& [key, c] : o.terms_) add_term(key, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  assert(a.nvars_ == b.nvars_);
  MPoly out(a.nvars_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      // Packed exponent vectors add; bytes must not carry.
#ifndef NDEBUG
      for (int v = 0; v < a.nvars_; ++v)
        assert(MPoly::exponent_of(ka, v) + MPoly::exponent_of(kb, v) <=
               MPoly::kMaxExponent);
#endif
      out.add_term(ka + kb, ca * cb);
    }
  }
  return out;
}

MPoly MPoly::operator-() const {
  MPoly out(nvars_);
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
  return out;
}

MPoly MPoly::scaled(const Int& c) const {
  MPoly out(nvars_);
  if (c == 0) return out;
  for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, coeff * c);
  return out;
}

MPoly MPoly::derivative(int var) const {
  if (var < 0 || var >= nvars_)
    throw std::invalid_argument("MPoly::derivative: var out of range");
  MPoly out(nvars_);
  for (const auto& [key, c] : terms_) {
    const int e = exponent_of(key, var);
    if (e == 0) continue;
    out.terms_.emplace(key - key_with(var, 1), c * e);
  }
  return out;
}

int MPoly::degree(int var) const {
  int d = -1;
  for (const auto& [key, c] : terms_) d = std::max(d, exponent_of(key, var));
  return d;
}

int MPoly::degree_z() const {
  if (terms_.empty()) return -1;
  return exponent_of(terms_.rbegin()->first, 0);
}

MPoly MPoly::z_coefficient(int d) const {
  MPoly out(nvars_);
  const std::uint64_t lo = key_with(0, d);
  const std::uint64_t hi = key_with(0, d + 1);
  for (auto it = terms_.lower_bound(lo); it != terms_.end() && it->first < hi;
       ++it) {
    out.terms_.emplace(it->first - lo, it->second);
  }
  return out;
}

MPoly MPoly::shifted_z(int dz) const {
  if (dz < 0) throw std::invalid_argument("MPoly::shifted_z: dz must be >= 0");
  MPoly out(nvars_);
  const std::uint64_t shift = key_with(0, dz);
  for (const auto& [key, c] : terms_) {
    assert(exponent_of(key, 0) + dz <= kMaxExponent);
    out.terms_.emplace(key + shift, c);
  }
  return out;
}

Complex MPoly::eval(const std::vector<Complex>& values) const {
  if (static_cast<int>(values.size()) != nvars_)
    throw std::invalid_argument("MPoly::eval: wrong number of values");
  Complex acc{0.0, 0.0};
  for (const auto& [key, c] : terms_) {
    Complex term{c.convert_to<double>(), 0.0};
    for (int v = 0; v < nvars_; ++v) {
      const int e = exponent_of(key, v);
      if (e != 0) term *= cpow_local(values[v], e);
    }
    acc += term;
  }
  return acc;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Int& c = it->second;
    if (!out.empty()) out += (c >= 0) ? " + " : " - ";
    else if (c < 0) out += "-";
    const Int mag = (c < 0) ? Int(-c) : c;
    std::string mono;
    for (int v = 0; v < nvars_; ++v) {
      const int e = exponent_of(it->first, v);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (v == 0) ? "z" : ("s" + std::to_string(v));
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      out += mono;
    }
  }
  return out;
}

MPoly sym_P(int k) {
  const int nvars = k + 1;
  MPoly p = MPoly::variable(nvars, 0, k);  // z^k (s_0 = 1)
  for (int h = 1; h <= k; ++h) {
    MPoly term = MPoly::variable(nvars, h);
    if (k - h > 0) term = term * MPoly::variable(nvars, 0, k - h);
    p += (h % 2 == 1) ? -term : term;
  }
  return p;
}

MPoly sym_Pprime(int k) { return sym_P(k).derivative(0); }

MPoly reduce_mod_P2(const MPoly& v, int k) {
  if (v.nvars() != k + 1)
    throw std::invalid_argument("reduce_mod_P2: nvars must be k+1");
  const MPoly p = sym_P(k);
  const MPoly p2 = p * p;  // monic in z of degree 2k
  MPoly r = v;
  int d;
  while ((d = r.degree_z()) >= 2 * k) {
    const MPoly lead = r.z_coefficient(d);
    r -= lead.shifted_z(d - 2 * k) * p2;
  }
  return r;
}

}  // namespace lisbon::exact
