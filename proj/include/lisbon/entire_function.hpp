#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lisbon/sym_point.hpp"

namespace lisbon {

// Closed family of integrands f(zeta): 1, zeta^p, polynomials, a*e^{t zeta},
// and arbitrary closures. Evaluation is deterministic within a process run.
// derivative() is exact and stays inside the family, except for closures
// constructed without one.
class EntireFunction {
 public:
  enum class Kind { One, Monomial, Poly, ExpT, Closure };

  static EntireFunction one() { return EntireFunction(); }

  static EntireFunction monomial(int p) {
    if (p < 0) throw std::invalid_argument("monomial: power must be >= 0");
    EntireFunction f;
    f.kind_ = Kind::Monomial;
    f.power_ = p;
    return f;
  }

  // c0 + c1 z + c2 z^2 + ...
  static EntireFunction poly(std::vector<Complex> coeffs) {
    EntireFunction f;
    f.kind_ = Kind::Poly;
    f.coeffs_ = std::move(coeffs);
    return f;
  }

  // amplitude * e^{t z}
  static EntireFunction exp_t(Complex t, Complex amplitude = {1.0, 0.0}) {
    EntireFunction f;
    f.kind_ = Kind::ExpT;
    f.t_ = t;
    f.amp_ = amplitude;
    return f;
  }

  static EntireFunction closure(std::string label,
                                std::function<Complex(Complex)> fn,
                                std::function<Complex(Complex)> dfn = {}) {
    EntireFunction f;
    f.kind_ = Kind::Closure;
    f.label_ = std::move(label);
    f.fn_ = std::move(fn);
    f.dfn_ = std::move(dfn);
    return f;
  }

  Complex operator()(Complex z) const {
    switch (kind_) {
      case Kind::One:
        return {1.0, 0.0};
      case Kind::Monomial:
        return cpow(z, power_);
      case Kind::Poly: {
        Complex acc{0.0, 0.0};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
          acc = acc * z + *it;
        return acc;
      }
      case Kind::ExpT:
        return amp_ * std::exp(t_ * z);
      case Kind::Closure:
        return fn_(z);
    }
    return {0.0, 0.0};
  }

  Kind kind() const { return kind_; }

  bool has_derivative() const {
    return kind_ != Kind::Closure || static_cast<bool>(dfn_);
  }

  EntireFunction derivative() const {
    switch (kind_) {
      case Kind::One:
        return poly({});
      case Kind::Monomial: {
        if (power_ == 0) return poly({});
        std::vector<Complex> c(power_, Complex(0.0));
        c[power_ - 1] = double(power_);
        return poly(std::move(c));
      }
      case Kind::Poly: {
        std::vector<Complex> c;
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
          c.push_back(double(i) * coeffs_[i]);
        return poly(std::move(c));
      }
      case Kind::ExpT:
        return exp_t(t_, amp_ * t_);
      case Kind::Closure:
        if (!dfn_)
          throw std::invalid_argument("derivative: closure has no f' evaluator");
        return closure(label_ + "'", dfn_);
    }
    return poly({});
  }

  // zeta -> zeta * f(zeta)
  EntireFunction times_z() const {
    switch (kind_) {
      case Kind::One:
        return monomial(1);
      case Kind::Monomial:
        return monomial(power_ + 1);
      case Kind::Poly: {
        std::vector<Complex> c(coeffs_.size() + 1, Complex(0.0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + 1] = coeffs_[i];
        return poly(std::move(c));
      }
      default: {
        const EntireFunction self = *this;
        std::function<Complex(Complex)> dfn;
        if (has_derivative()) {
          const EntireFunction d = derivative();
          dfn = [self, d](Complex z) { return self(z) + z * d(z); };
        }
        return closure("z*" + describe(),
                       [self](Complex z) { return z * self(z); }, dfn);
      }
    }
  }

  EntireFunction scaled(Complex a) const {
    switch (kind_) {
      case Kind::One:
        return poly({a});
      case Kind::Monomial: {
        std::vector<Complex> c(power_ + 1, Complex(0.0));
        c[power_] = a;
        return poly(std::move(c));
      }
      case Kind::Poly: {
        std::vector<Complex> c = coeffs_;
        for (auto& x : c) x *= a;
        return poly(std::move(c));
      }
      case Kind::ExpT:
        return exp_t(t_, amp_ * a);
      default: {
        const EntireFunction self = *this;
        std::function<Complex(Complex)> dfn;
        if (has_derivative()) {
          const EntireFunction d = derivative();
          dfn = [a, d](Complex z) { return a * d(z); };
        }
        return closure("scaled " + describe(),
                       [a, self](Complex z) { return a * self(z); }, dfn);
      }
    }
  }

  std::string describe() const;

  Complex exp_parameter() const { return t_; }

 private:
  Kind kind_ = Kind::One;
  int power_ = 0;
  std::vector<Complex> coeffs_;
  Complex t_{0.0, 0.0};
  Complex amp_{1.0, 0.0};
  std::string label_;
  std::function<Complex(Complex)> fn_, dfn_;
};

// Pointwise sum and product; exact derivatives when both factors have one.
EntireFunction operator+(const EntireFunction& a, const EntireFunction& b);
EntireFunction multiply(const EntireFunction& a, const EntireFunction& b);

}  // namespace lisbon
