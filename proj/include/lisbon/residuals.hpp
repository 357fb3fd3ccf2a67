#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lisbon/companion.hpp"
#include "lisbon/contour.hpp"
#include "lisbon/entire_function.hpp"

namespace lisbon {

// One residual measurement of a differential identity at a point s. The
// residual is the max-norm of (lhs - rhs), normalized by 1 + |field| so the
// thresholds are scale-free.
struct ResidualReport {
  enum class Method { Analytic, FiniteDifference };

  std::string identity;
  int k = 0;
  std::vector<Complex> point;  // s
  std::vector<std::pair<std::string, std::string>> params;
  double residual = 0.0;
  Method method = Method::Analytic;
  std::uint64_t seed = 0;
};

// A candidate solution of the first-order system: the field value and its
// exact s_h-derivatives, h in [1, k].
struct VectorField {
  std::function<CVector(const SymPoint&)> value;
  std::function<CVector(const SymPoint&, int)> dvalue;
};

VectorField phi_field(const EntireFunction& f, const QuadratureConfig& cfg);

// s -> A(s) Phi_f(s), with derivatives by the product rule (dA/ds_h is a
// constant matrix).
VectorField a_phi_field(const EntireFunction& f, const QuadratureConfig& cfg);

// Phi + eps * direction with unchanged derivatives: a deliberately broken
// field for the negative controls.
VectorField perturbed_phi_field(const EntireFunction& f,
                                const QuadratureConfig& cfg, double eps,
                                const CVector& direction);

// d(A(s)^p)/ds_h and d(P'_s(A))/ds_k, differentiated symbolically entry by
// entry and then evaluated at s (never by differencing).
CMatrix companion_power_ds(const SymPoint& pt, int p, int h);
CMatrix pprime_of_companion_dsk(const SymPoint& pt);

// Residual of (-1)^{k+h} dPhi/ds_h = d(A^{k-h} Phi)/ds_k for Phi_f.
ResidualReport residual_at(const SymPoint& pt, const EntireFunction& f, int h,
                           const QuadratureConfig& cfg);

// Same system for an arbitrary candidate field.
ResidualReport residual_at_for(const VectorField& field, const SymPoint& pt,
                               int h);

// Residual of the singular system for Psi_f:
//   (-1)^{k+h} dPsi/ds_h = d(A^{k-h} Psi)/ds_k
//                          + (-1)^k (k-h) A^{k-h-1} P'(A)^{-1} Psi.
// Refuses (NearDiscriminant) when |discriminant| < delta_floor.
ResidualReport residual_atat(const SymPoint& pt, const EntireFunction& f, int h,
                             const QuadratureConfig& cfg,
                             double delta_floor = 1e-3);

// d2 phi / ds_p ds_{q+1} = d2 phi / ds_{p+1} ds_q, 1 <= p < q <= k-1.
ResidualReport mixed_partial_check(const SymPoint& pt, const EntireFunction& f,
                                   int p, int q, const QuadratureConfig& cfg);

// Largest pairwise deviation among d2Phi/ds_h ds_j over all (h, j) with
// h + j = sum (the second derivatives depend on the pair only through h+j).
double d2_equal_sum_spread(const SymPoint& pt, const EntireFunction& f, int sum,
                           const QuadratureConfig& cfg);

// Phi_{f'} = -nabla Phi_f + sum_{h=0}^{k-1} (k-h) s_h dPhi_f/ds_{h+1}.
ResidualReport residual_dz_action(const SymPoint& pt, const EntireFunction& f,
                                  const QuadratureConfig& cfg);

// Phi_{f'} = -nabla Phi_f + (-1)^{k-1} d(P'(A) Phi_f)/ds_k.
ResidualReport residual_dz_action_star2(const SymPoint& pt,
                                        const EntireFunction& f,
                                        const QuadratureConfig& cfg);

// Phi_{(zf)'} = Phi_f + Phi_{z f'}, both sides through independent routes.
ResidualReport residual_leibniz(const SymPoint& pt, const EntireFunction& f,
                                const QuadratureConfig& cfg);

// k = 2 second-order operator
//   Theta = d^2/ds^2 + s d^2/ds dp + p d^2/dp^2 + 2 d/dp
// annihilates every scalar integral phi_m; evaluated through the P^2/P^3
// contour kernels.
ResidualReport residual_theta_k2(Complex s1, Complex s2, const EntireFunction& f,
                                 int m, const QuadratureConfig& cfg);

// (t Id + nabla) Phi_{e^{tz}} = (-1)^{k-1} d(P'(A) Phi)/ds_k.
ResidualReport residual_exp_connection(const SymPoint& pt, Complex t,
                                       const QuadratureConfig& cfg);

// (t Id + nabla) P'(A)^{-1} Psi_{e^{tz}} = (-1)^{k-1} dPsi/ds_k, away from
// the discriminant.
ResidualReport residual_exp_connection_psi(const SymPoint& pt, Complex t,
                                           const QuadratureConfig& cfg,
                                           double delta_floor = 1e-3);

// Independent derivative oracle: dphi_ds versus Richardson-extrapolated
// central differences of phi along the real direction of s_h
// (steps 1e-3 and 1e-4).
ResidualReport fd_cross_check(const SymPoint& pt, const EntireFunction& f, int h,
                              const QuadratureConfig& cfg);

// |psi - P'(A) phi| / (1 + |psi|); holds everywhere, including on the
// discriminant.
ResidualReport bridge_residual(const SymPoint& pt, const EntireFunction& f,
                               const QuadratureConfig& cfg);

// Solve P'(A) x = psi and compare x with phi; needs |discriminant| above
// delta_floor.
ResidualReport correspondence_roundtrip(const SymPoint& pt,
                                        const EntireFunction& f,
                                        const QuadratureConfig& cfg,
                                        double delta_floor = 1e-3);

}  // namespace lisbon
