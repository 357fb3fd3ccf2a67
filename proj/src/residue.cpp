#include "lisbon/residue.hpp"

#include <cmath>
#include <stdexcept>

#include "lisbon/errors.hpp"
#include "lisbon/roots.hpp"

namespace lisbon {

namespace {

RootSet checked_roots(const SymPoint& pt, double delta_floor) {
  if (!(delta_floor > 0.0))
    throw std::invalid_argument("residue: delta_floor must be > 0");
  if (std::abs(discriminant(pt)) < delta_floor)
    throw NearDiscriminant("residue formula refused: |discriminant| < " +
                           std::to_string(delta_floor));
  return roots(pt);
}

}  // namespace

LisbonVector phi_residue(const SymPoint& pt, const EntireFunction& f,
                         double delta_floor) {
  const int k = pt.k();
  const RootSet rs = checked_roots(pt, delta_floor);
  LisbonVector out{LisbonKind::Phi, std::vector<Complex>(k, Complex(0.0)),
                   rs.accuracy};
  for (const Complex& z : rs.values) {
    const Complex w = f(z) / eval_dpoly(pt, z);
    Complex pw{1.0, 0.0};
    for (int h = 0; h < k; ++h) {
      out.comp[h] += pw * w;
      pw *= z;
    }
  }
  return out;
}

LisbonVector psi_residue(const SymPoint& pt, const EntireFunction& f,
                         double delta_floor) {
  const int k = pt.k();
  const RootSet rs = checked_roots(pt, delta_floor);
  LisbonVector out{LisbonKind::Psi, std::vector<Complex>(k, Complex(0.0)),
                   rs.accuracy};
  for (const Complex& z : rs.values) {
    const Complex w = f(z);
    Complex pw{1.0, 0.0};
    for (int h = 0; h < k; ++h) {
      out.comp[h] += pw * w;
      pw *= z;
    }
  }
  return out;
}

}  // namespace lisbon
