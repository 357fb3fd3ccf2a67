#pragma once

#include <string>
#include <vector>

#include "lisbon/entire_function.hpp"
#include "lisbon/sym_point.hpp"

namespace lisbon {

struct QuadratureConfig {
  enum class RadiusPolicy { Auto, Fixed };

  RadiusPolicy radius_policy = RadiusPolicy::Auto;
  double fixed_radius = 0.0;
  double tol = 1e-10;
  int min_nodes = 64;
  int max_nodes = 1 << 16;

  static QuadratureConfig with_radius(double r) {
    QuadratureConfig cfg;
    cfg.radius_policy = RadiusPolicy::Fixed;
    cfg.fixed_radius = r;
    return cfg;
  }

  void validate() const;  // throws std::invalid_argument
};

enum class LisbonKind { Phi, Psi };

struct LisbonVector {
  LisbonKind kind = LisbonKind::Phi;
  std::vector<Complex> comp;  // component h at index h, h in [0, k-1]
  double accuracy = 0.0;      // last successive-refinement difference

  int k() const { return static_cast<int>(comp.size()); }
  double max_abs() const;
};

// R = 2 (1 + max_h |s_h|^{1/h}); all roots of P_s lie strictly inside.
double radius_bound(const SymPoint& pt);

// Phi(s) = (1/2 pi i) \oint f(zeta) E(zeta) / P_s(zeta) dzeta over |zeta| = R,
// adaptive trapezoid with node doubling from cfg.min_nodes.
LisbonVector phi(const SymPoint& pt, const EntireFunction& f,
                 const QuadratureConfig& cfg = {});

// Same integrand multiplied by P'_s(zeta).
LisbonVector psi(const SymPoint& pt, const EntireFunction& f,
                 const QuadratureConfig& cfg = {});

// (1/2 pi i) \oint f zeta^h / P_s dzeta; h may exceed k-1.
Complex scalar_phi(const SymPoint& pt, const EntireFunction& f, int h,
                   const QuadratureConfig& cfg = {});

// (1/2 pi i) \oint f zeta^h P'_s / P_s dzeta; equals the power-sum trace.
Complex scalar_psi(const SymPoint& pt, const EntireFunction& f, int h,
                   const QuadratureConfig& cfg = {});

// (1/2 pi i) \oint f zeta^zpow / P_s^ppow dzeta. The raw kernel behind the
// derivative formulas; exposed for the k=2 operator checks.
Complex scalar_phi_kernel(const SymPoint& pt, const EntireFunction& f, int zpow,
                          int ppow, const QuadratureConfig& cfg = {});

// dPhi/ds_h = (1/2 pi i) \oint f E (-1)^{h+1} zeta^{k-h} / P_s^2 dzeta
// (analytic derivative under the integral; no differencing). h in [1, k].
LisbonVector dphi_ds(const SymPoint& pt, const EntireFunction& f, int h,
                     const QuadratureConfig& cfg = {});

// dPsi/ds_h with the P'^ aware kernel
//   (1/2 pi i) \oint f E (-1)^h [ (k-h) zeta^{k-h-1} P - P' zeta^{k-h} ] / P^2.
LisbonVector dpsi_ds(const SymPoint& pt, const EntireFunction& f, int h,
                     const QuadratureConfig& cfg = {});

// d2Phi/ds_h ds_j = (1/2 pi i) \oint f E 2 (-1)^{h+j} zeta^{2k-h-j} / P^3.
// Depends on (h, j) only through h + j.
LisbonVector d2phi_ds2(const SymPoint& pt, const EntireFunction& f, int h,
                       int j, const QuadratureConfig& cfg = {});

}  // namespace lisbon
