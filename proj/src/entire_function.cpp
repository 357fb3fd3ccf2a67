#include "lisbon/entire_function.hpp"

#include <cstdio>

namespace lisbon {

namespace {

std::string short_num(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

std::string short_complex(Complex z) {
  if (z.imag() == 0.0) return short_num(z.real());
  if (z.real() == 0.0) return short_num(z.imag()) + "i";
  return short_num(z.real()) + (z.imag() < 0 ? "" : "+") + short_num(z.imag()) +
         "i";
}

}  // namespace

std::string EntireFunction::describe() const {
  switch (kind_) {
    case Kind::One:
      return "one";
    case Kind::Monomial:
      if (power_ == 0) return "one";
      if (power_ == 1) return "z";
      return "z^" + std::to_string(power_);
    case Kind::Poly: {
      std::string s = "poly:";
      for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ",";
        s += short_complex(coeffs_[i]);
      }
      return s;
    }
    case Kind::ExpT:
      if (amp_ == Complex(1.0, 0.0)) return "exp:" + short_complex(t_);
      return "exp[" + short_complex(amp_) + "]:" + short_complex(t_);
    case Kind::Closure:
      return label_.empty() ? "closure" : label_;
  }
  return "?";
}

EntireFunction operator+(const EntireFunction& a, const EntireFunction& b) {
  std::function<Complex(Complex)> dfn;
  if (a.has_derivative() && b.has_derivative()) {
    const EntireFunction da = a.derivative(), db = b.derivative();
    dfn = [da, db](Complex z) { return da(z) + db(z); };
  }
  return EntireFunction::closure(
      "(" + a.describe() + "+" + b.describe() + ")",
      [a, b](Complex z) { return a(z) + b(z); }, dfn);
}

EntireFunction multiply(const EntireFunction& a, const EntireFunction& b) {
  std::function<Complex(Complex)> dfn;
  if (a.has_derivative() && b.has_derivative()) {
    const EntireFunction da = a.derivative(), db = b.derivative();
    const EntireFunction ca = a, cb = b;
    dfn = [ca, cb, da, db](Complex z) { return da(z) * cb(z) + ca(z) * db(z); };
  }
  return EntireFunction::closure(
      "(" + a.describe() + "*" + b.describe() + ")",
      [a, b](Complex z) { return a(z) * b(z); }, dfn);
}

}  // namespace lisbon
