#include "lisbon/residuals.hpp"

#include <cmath>
#include <stdexcept>

#include "lisbon/errors.hpp"
#include "lisbon/poly_matrix.hpp"
#include "lisbon/roots.hpp"

namespace lisbon {

namespace {

double pm(int e) { return (e % 2 == 0) ? 1.0 : -1.0; }  // (-1)^e

CVector to_eigen(const std::vector<Complex>& v) {
  return Eigen::Map<const CVector>(v.data(), static_cast<long>(v.size()));
}

std::vector<Complex> sym_values(const SymPoint& pt) {
  std::vector<Complex> vals(pt.k() + 1, Complex(0.0));
  for (int h = 1; h <= pt.k(); ++h) vals[h] = pt.s(h);
  return vals;
}

double norm_residual(const CVector& r, const CVector& field) {
  return r.cwiseAbs().maxCoeff() / (1.0 + field.cwiseAbs().maxCoeff());
}

ResidualReport make_report(std::string identity, const SymPoint& pt,
                           double residual,
                           std::vector<std::pair<std::string, std::string>> params,
                           ResidualReport::Method method) {
  ResidualReport rep;
  rep.identity = std::move(identity);
  rep.k = pt.k();
  rep.point = pt.coords();
  rep.params = std::move(params);
  rep.residual = residual;
  rep.method = method;
  return rep;
}

void require_off_discriminant(const SymPoint& pt, double delta_floor) {
  if (!(delta_floor > 0.0))
    throw std::invalid_argument("delta_floor must be > 0");
  if (std::abs(discriminant(pt)) < delta_floor)
    throw NearDiscriminant("identity is singular near the discriminant");
}

// System residual for a candidate field V at one point:
//   (-1)^{k+h} dV/ds_h - d(A^{k-h})/ds_k V - A^{k-h} dV/ds_k.
CVector system_residual(const SymPoint& pt, int h, const CVector& v,
                        const CVector& dvh, const CVector& dvk) {
  const int k = pt.k();
  const CMatrix dak = companion_power_ds(pt, k - h, k);
  const CMatrix akh = matrix_power(companion(pt), k - h);
  return pm(k + h) * dvh - dak * v - akh * dvk;
}

}  // namespace

CMatrix companion_power_ds(const SymPoint& pt, int p, int h) {
  const int k = pt.k();
  if (h < 1 || h > k) throw std::invalid_argument("companion_power_ds: bad h");
  const auto ap = exact::sym_companion(k).power(p);
  return ap.derivative(h).eval(sym_values(pt));
}

CMatrix pprime_of_companion_dsk(const SymPoint& pt) {
  const int k = pt.k();
  const auto pa = exact::sym_pprime_of_companion(k);
  return pa.derivative(k).eval(sym_values(pt));
}

VectorField phi_field(const EntireFunction& f, const QuadratureConfig& cfg) {
  VectorField field;
  field.value = [f, cfg](const SymPoint& pt) {
    return to_eigen(phi(pt, f, cfg).comp);
  };
  field.dvalue = [f, cfg](const SymPoint& pt, int h) {
    return to_eigen(dphi_ds(pt, f, h, cfg).comp);
  };
  return field;
}

VectorField a_phi_field(const EntireFunction& f, const QuadratureConfig& cfg) {
  VectorField field;
  field.value = [f, cfg](const SymPoint& pt) {
    return CVector(companion(pt) * to_eigen(phi(pt, f, cfg).comp));
  };
  field.dvalue = [f, cfg](const SymPoint& pt, int h) {
    const CVector base = to_eigen(phi(pt, f, cfg).comp);
    const CVector dbase = to_eigen(dphi_ds(pt, f, h, cfg).comp);
    return CVector(companion_ds(pt.k(), h) * base + companion(pt) * dbase);
  };
  return field;
}

VectorField perturbed_phi_field(const EntireFunction& f,
                                const QuadratureConfig& cfg, double eps,
                                const CVector& direction) {
  VectorField field;
  field.value = [f, cfg, eps, direction](const SymPoint& pt) {
    return CVector(to_eigen(phi(pt, f, cfg).comp) + eps * direction);
  };
  field.dvalue = [f, cfg](const SymPoint& pt, int h) {
    return to_eigen(dphi_ds(pt, f, h, cfg).comp);
  };
  return field;
}

ResidualReport residual_at(const SymPoint& pt, const EntireFunction& f, int h,
                           const QuadratureConfig& cfg) {
  const int k = pt.k();
  if (h < 1 || h > k - 1) throw std::invalid_argument("residual_at: bad h");
  const CVector v = to_eigen(phi(pt, f, cfg).comp);
  const CVector dvh = to_eigen(dphi_ds(pt, f, h, cfg).comp);
  const CVector dvk = to_eigen(dphi_ds(pt, f, k, cfg).comp);
  const CVector r = system_residual(pt, h, v, dvh, dvk);
  return make_report("system@", pt, norm_residual(r, v),
                     {{"h", std::to_string(h)}, {"f", f.describe()}},
                     ResidualReport::Method::Analytic);
}

ResidualReport residual_at_for(const VectorField& field, const SymPoint& pt,
                               int h) {
  const int k = pt.k();
  if (h < 1 || h > k - 1) throw std::invalid_argument("residual_at_for: bad h");
  const CVector v = field.value(pt);
  const CVector dvh = field.dvalue(pt, h);
  const CVector dvk = field.dvalue(pt, k);
  const CVector r = system_residual(pt, h, v, dvh, dvk);
  return make_report("system@", pt, norm_residual(r, v),
                     {{"h", std::to_string(h)}, {"f", "provider"}},
                     ResidualReport::Method::Analytic);
}

ResidualReport residual_atat(const SymPoint& pt, const EntireFunction& f, int h,
                             const QuadratureConfig& cfg, double delta_floor) {
  const int k = pt.k();
  if (h < 1 || h > k - 1) throw std::invalid_argument("residual_atat: bad h");
  require_off_discriminant(pt, delta_floor);

  const CVector v = to_eigen(psi(pt, f, cfg).comp);
  const CVector dvh = to_eigen(dpsi_ds(pt, f, h, cfg).comp);
  const CVector dvk = to_eigen(dpsi_ds(pt, f, k, cfg).comp);

  const CMatrix dak = companion_power_ds(pt, k - h, k);
  const CMatrix a = companion(pt);
  const CVector solve =
      pprime_of_companion(pt).partialPivLu().solve(v);
  const CVector r = pm(k + h) * dvh - dak * v - matrix_power(a, k - h) * dvk -
                    pm(k) * double(k - h) * matrix_power(a, k - h - 1) * solve;
  return make_report("system@@", pt, norm_residual(r, v),
                     {{"h", std::to_string(h)}, {"f", f.describe()}},
                     ResidualReport::Method::Analytic);
}

ResidualReport mixed_partial_check(const SymPoint& pt, const EntireFunction& f,
                                   int p, int q, const QuadratureConfig& cfg) {
  const int k = pt.k();
  if (!(1 <= p && p < q && q <= k - 1))
    throw std::invalid_argument("mixed_partial_check: need 1 <= p < q <= k-1");
  const CVector lhs = to_eigen(d2phi_ds2(pt, f, p, q + 1, cfg).comp);
  const CVector rhs = to_eigen(d2phi_ds2(pt, f, p + 1, q, cfg).comp);
  return make_report(
      "mixed_partials", pt, norm_residual(lhs - rhs, lhs),
      {{"p", std::to_string(p)}, {"q", std::to_string(q)}, {"f", f.describe()}},
      ResidualReport::Method::Analytic);
}

double d2_equal_sum_spread(const SymPoint& pt, const EntireFunction& f, int sum,
                           const QuadratureConfig& cfg) {
  const int k = pt.k();
  std::vector<CVector> values;
  for (int h = 1; h <= k; ++h) {
    const int j = sum - h;
    if (j < h || j > k) continue;
    values.push_back(to_eigen(d2phi_ds2(pt, f, h, j, cfg).comp));
  }
  double spread = 0.0;
  for (std::size_t a = 0; a < values.size(); ++a)
    for (std::size_t b = a + 1; b < values.size(); ++b)
      spread = std::max(spread, norm_residual(values[a] - values[b], values[a]));
  return spread;
}

ResidualReport residual_dz_action(const SymPoint& pt, const EntireFunction& f,
                                  const QuadratureConfig& cfg) {
  const int k = pt.k();
  const CVector lhs = to_eigen(phi(pt, f.derivative(), cfg).comp);
  const CVector base = to_eigen(phi(pt, f, cfg).comp);
  CVector rhs = -nabla(k) * base;
  for (int h = 0; h <= k - 1; ++h) {
    const CVector d = to_eigen(dphi_ds(pt, f, h + 1, cfg).comp);
    rhs += double(k - h) * pt.s(h) * d;
  }
  return make_report("dz_action", pt, norm_residual(lhs - rhs, base),
                     {{"f", f.describe()}}, ResidualReport::Method::Analytic);
}

ResidualReport residual_dz_action_star2(const SymPoint& pt,
                                        const EntireFunction& f,
                                        const QuadratureConfig& cfg) {
  const int k = pt.k();
  const CVector lhs = to_eigen(phi(pt, f.derivative(), cfg).comp);
  const CVector base = to_eigen(phi(pt, f, cfg).comp);
  const CVector dbase = to_eigen(dphi_ds(pt, f, k, cfg).comp);
  const CVector rhs =
      -nabla(k) * base +
      pm(k - 1) * (pprime_of_companion_dsk(pt) * base +
                   pprime_of_companion(pt) * dbase);
  return make_report("dz_action_star2", pt, norm_residual(lhs - rhs, base),
                     {{"f", f.describe()}}, ResidualReport::Method::Analytic);
}

ResidualReport residual_leibniz(const SymPoint& pt, const EntireFunction& f,
                                const QuadratureConfig& cfg) {
  // Phi_{(zf)'} through the dz-action identity applied to zf, against
  // Phi_f + Phi_{z f'} evaluated directly.
  const int k = pt.k();
  const EntireFunction zf = f.times_z();
  const CVector base_zf = to_eigen(phi(pt, zf, cfg).comp);
  CVector lhs = -nabla(k) * base_zf;
  for (int h = 0; h <= k - 1; ++h) {
    const CVector d = to_eigen(dphi_ds(pt, zf, h + 1, cfg).comp);
    lhs += double(k - h) * pt.s(h) * d;
  }
  const CVector rhs =
      to_eigen(phi(pt, f, cfg).comp) +
      to_eigen(phi(pt, f.derivative().times_z(), cfg).comp);
  return make_report("leibniz", pt, norm_residual(lhs - rhs, rhs),
                     {{"f", f.describe()}}, ResidualReport::Method::Analytic);
}

ResidualReport residual_theta_k2(Complex s1, Complex s2, const EntireFunction& f,
                                 int m, const QuadratureConfig& cfg) {
  const SymPoint pt({s1, s2});
  // (b)-(f) kernels of the direct proof; Theta phi_m = (d)+s(e)+p(f)+2(c).
  const Complex kc = -scalar_phi_kernel(pt, f, m, 2, cfg);
  const Complex kd = 2.0 * scalar_phi_kernel(pt, f, m + 2, 3, cfg);
  const Complex ke = -2.0 * scalar_phi_kernel(pt, f, m + 1, 3, cfg);
  const Complex kf = 2.0 * scalar_phi_kernel(pt, f, m, 3, cfg);
  const Complex theta = kd + s1 * ke + s2 * kf + 2.0 * kc;
  const Complex phi_m = scalar_phi(pt, f, m, cfg);
  const double residual = std::abs(theta) / (1.0 + std::abs(phi_m));
  return make_report("theta_k2", pt, residual,
                     {{"m", std::to_string(m)}, {"f", f.describe()}},
                     ResidualReport::Method::Analytic);
}

ResidualReport residual_exp_connection(const SymPoint& pt, Complex t,
                                       const QuadratureConfig& cfg) {
  const int k = pt.k();
  const EntireFunction f = EntireFunction::exp_t(t);
  const CVector base = to_eigen(phi(pt, f, cfg).comp);
  const CVector dbase = to_eigen(dphi_ds(pt, f, k, cfg).comp);
  const CVector lhs = t * base + nabla(k) * base;
  const CVector rhs = pm(k - 1) * (pprime_of_companion_dsk(pt) * base +
                                   pprime_of_companion(pt) * dbase);
  return make_report("exp_connection_14", pt, norm_residual(lhs - rhs, base),
                     {{"t", std::to_string(t.real()) + "+" +
                                std::to_string(t.imag()) + "i"}},
                     ResidualReport::Method::Analytic);
}

ResidualReport residual_exp_connection_psi(const SymPoint& pt, Complex t,
                                           const QuadratureConfig& cfg,
                                           double delta_floor) {
  const int k = pt.k();
  require_off_discriminant(pt, delta_floor);
  const EntireFunction f = EntireFunction::exp_t(t);
  const CVector v = to_eigen(psi(pt, f, cfg).comp);
  const CVector dvk = to_eigen(dpsi_ds(pt, f, k, cfg).comp);
  const CVector x = pprime_of_companion(pt).partialPivLu().solve(v);
  const CVector lhs = t * x + nabla(k) * x;
  const CVector rhs = pm(k - 1) * dvk;
  return make_report("exp_connection_15", pt, norm_residual(lhs - rhs, v),
                     {{"t", std::to_string(t.real()) + "+" +
                                std::to_string(t.imag()) + "i"}},
                     ResidualReport::Method::Analytic);
}

ResidualReport fd_cross_check(const SymPoint& pt, const EntireFunction& f, int h,
                              const QuadratureConfig& cfg) {
  const int k = pt.k();
  if (h < 1 || h > k) throw std::invalid_argument("fd_cross_check: bad h");
  const CVector analytic = to_eigen(dphi_ds(pt, f, h, cfg).comp);

  auto central = [&](double step) {
    auto up = pt.coords(), dn = pt.coords();
    up[h - 1] += step;
    dn[h - 1] -= step;
    const CVector fp = to_eigen(phi(SymPoint(up), f, cfg).comp);
    const CVector fm = to_eigen(phi(SymPoint(dn), f, cfg).comp);
    return CVector((fp - fm) / (2.0 * step));
  };
  // Central differences at steps 1e-3 and 1e-4 (ratio 10), extrapolated to
  // fourth order: D = (100 D(h/10) - D(h)) / 99.
  const CVector d1 = central(1e-3);
  const CVector d2 = central(1e-4);
  const CVector extrap = (100.0 * d2 - d1) / 99.0;
  return make_report("fd_cross_check", pt, norm_residual(analytic - extrap, analytic),
                     {{"h", std::to_string(h)}, {"f", f.describe()}},
                     ResidualReport::Method::FiniteDifference);
}

ResidualReport bridge_residual(const SymPoint& pt, const EntireFunction& f,
                               const QuadratureConfig& cfg) {
  const CVector vphi = to_eigen(phi(pt, f, cfg).comp);
  const CVector vpsi = to_eigen(psi(pt, f, cfg).comp);
  const CVector r = vpsi - pprime_of_companion(pt) * vphi;
  return make_report("bridge", pt, norm_residual(r, vpsi),
                     {{"f", f.describe()}}, ResidualReport::Method::Analytic);
}

ResidualReport correspondence_roundtrip(const SymPoint& pt,
                                        const EntireFunction& f,
                                        const QuadratureConfig& cfg,
                                        double delta_floor) {
  require_off_discriminant(pt, delta_floor);
  const CVector vphi = to_eigen(phi(pt, f, cfg).comp);
  const CVector vpsi = to_eigen(psi(pt, f, cfg).comp);
  const CVector back = pprime_of_companion(pt).partialPivLu().solve(vpsi);
  return make_report("correspondence", pt, norm_residual(back - vphi, vphi),
                     {{"f", f.describe()}}, ResidualReport::Method::Analytic);
}

}  // namespace lisbon
