#include "lisbon/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "lisbon/errors.hpp"
#include "lisbon/parallel.hpp"
#include "lisbon/report.hpp"
#include "lisbon/residue.hpp"
#include "lisbon/roots.hpp"

namespace lisbon {

namespace {

SymPoint random_sym_point(Rng& rng, int k, double bound) {
  std::vector<Complex> s(k);
  const double scale = bound / std::sqrt(2.0 * k);
  for (auto& c : s) c = scale * rng.complex_box(1.0);
  return SymPoint(s);
}

SymPoint point_off_discriminant(Rng& rng, int k, double bound, double floor) {
  for (int tries = 0; tries < 1000; ++tries) {
    SymPoint pt = random_sym_point(rng, k, bound);
    try {
      if (std::abs(discriminant(pt)) > floor) return pt;
    } catch (const NonConvergence&) {
    }
  }
  // statistically unreachable; the loop covers pathological seeds
  return random_sym_point(rng, k, bound);
}

std::vector<EntireFunction> sweep_functions() {
  return {EntireFunction::one(), EntireFunction::monomial(1),
          EntireFunction::monomial(2), EntireFunction::exp_t({1, 0}),
          EntireFunction::exp_t({2, 0})};
}

constexpr std::uint64_t kSuiteSalt = 1000;

struct SuiteBuilder {
  const SweepOptions& opt;
  QuadratureConfig cfg;
  std::vector<std::function<ResidualRecord()>> tasks;

  explicit SuiteBuilder(const SweepOptions& o) : opt(o) {
    cfg.tol = o.tol;
  }

  Rng stream(std::uint64_t suite_id, int k) const {
    return Rng(opt.seed).fork(suite_id * kSuiteSalt + std::uint64_t(k));
  }

  void add(double threshold, std::function<ResidualReport()> fn) {
    const std::uint64_t seed = opt.seed;
    tasks.push_back([fn = std::move(fn), threshold, seed]() {
      ResidualRecord rec;
      rec.threshold = threshold;
      try {
        rec.report = fn();
        rec.report.seed = seed;
        rec.pass = rec.report.residual < threshold;
      } catch (const std::exception& e) {
        rec.report.residual = std::numeric_limits<double>::infinity();
        rec.report.params.emplace_back("error", e.what());
        rec.pass = false;
      }
      return rec;
    });
  }

  std::vector<ResidualRecord> run() {
    std::vector<ResidualRecord> out(tasks.size());
    parallel_for(tasks.size(), [&](std::size_t i) { out[i] = tasks[i](); });
    tasks.clear();
    return out;
  }
};

void append(std::vector<ResidualRecord>& all, std::vector<ResidualRecord> part) {
  for (auto& r : part) all.push_back(std::move(r));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "f1",        "oracle", "newton", "system",  "closure",
      "bridge",    "system2", "correspondence",   "mixed",
      "dzaction",  "theta",  "expconn", "fdcheck", "identities"};
  return names;
}

VerifyReport run_verify(const SweepOptions& opt) {
  VerifyReport report;
  report.options = opt;

  const bool all = opt.suite == "all";
  auto wants = [&](const std::string& name) { return all || opt.suite == name; };
  {
    const auto& names = suite_names();
    if (!all && std::find(names.begin(), names.end(), opt.suite) == names.end())
      throw std::invalid_argument("unknown suite: " + opt.suite);
  }

  SuiteBuilder b(opt);
  const QuadratureConfig cfg = b.cfg;

  // ---- f == 1 closed form: phi = (0, ..., 0, 1) -------------------------
  if (wants("f1")) {
    for (int k = std::max(2, opt.k_min); k <= opt.k_max; ++k) {
      Rng rng = b.stream(1, k);
      for (int n = 0; n < opt.points; ++n) {
        const SymPoint pt = random_sym_point(rng, k, 5.0);
        b.add(1e-9, [pt, cfg]() {
          const auto v = phi(pt, EntireFunction::one(), cfg);
          double worst = std::abs(v.comp[pt.k() - 1] - Complex(1, 0));
          for (int h = 0; h <= pt.k() - 2; ++h)
            worst = std::max(worst, std::abs(v.comp[h]));
          ResidualReport rep;
          rep.identity = "f1_closed_form";
          rep.k = pt.k();
          rep.point = pt.coords();
          rep.params = {{"f", "one"}};
          rep.residual = worst;
          return rep;
        });
      }
    }
    append(report.residuals, b.run());
  }

  // ---- contour vs residue oracle ----------------------------------------
  if (wants("oracle")) {
    const auto fs = sweep_functions();
    for (int k = std::max(2, opt.k_min); k <= opt.k_max; ++k) {
      Rng rng = b.stream(2, k);
      const int npts = std::max(4, opt.points / 3);
      for (int n = 0; n < npts; ++n) {
        const SymPoint pt = point_off_discriminant(rng, k, 5.0, 0.1);
        for (const auto& f : fs) {
          b.add(1e-8, [pt, f, cfg]() {
            const auto pc = phi(pt, f, cfg);
            const auto pr = phi_residue(pt, f);
            double worst = 0.0;
            const double scale = 1.0 + pc.max_abs();
            for (int i = 0; i < pt.k(); ++i)
              worst = std::max(worst,
                               std::abs(pc.comp[i] - pr.comp[i]) / scale);
            ResidualReport rep;
            rep.identity = "oracle_phi";
            rep.k = pt.k();
            rep.point = pt.coords();
            rep.params = {{"f", f.describe()}};
            rep.residual = worst;
            return rep;
          });
          b.add(1e-8, [pt, f, cfg]() {
            const auto qc = psi(pt, f, cfg);
            const auto qr = psi_residue(pt, f);
            double worst = 0.0;
            const double scale = 1.0 + qc.max_abs();
            for (int i = 0; i < pt.k(); ++i)
              worst = std::max(worst,
                               std::abs(qc.comp[i] - qr.comp[i]) / scale);
            ResidualReport rep;
            rep.identity = "oracle_psi";
            rep.k = pt.k();
            rep.point = pt.coords();
            rep.params = {{"f", f.describe()}};
            rep.residual = worst;
            return rep;
          });
        }
      }
    }
    append(report.residuals, b.run());
  }

  // ---- psi against Newton power sums, h <= 2k ----------------------------
  if (wants("newton")) {
    for (int k = std::max(2, opt.k_min); k <= opt.k_max; ++k) {
      Rng rng = b.stream(3, k);
      const int npts = std::max(4, opt.points / 5);
      for (int n = 0; n < npts; ++n) {
        const SymPoint pt = random_sym_point(rng, k, opt.s_norm);
        b.add(1e-9, [pt, cfg]() {
          double worst = 0.0;
          for (int h = 0; h <= 2 * pt.k(); ++h) {
            const Complex lhs = scalar_psi(pt, EntireFunction::one(), h, cfg);
            const Complex rhs = newton_power_sum(pt, h);
            worst = std::max(worst,
                             std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
          }
          ResidualReport rep;
          rep.identity = "newton_psi";
          rep.k = pt.k();
          rep.point = pt.coords();
          rep.params = {{"f", "one"}};
          rep.residual = worst;
          return rep;
        });
      }
    }
    append(report.residuals, b.run());
  }

  // ---- system (@) --------------------------------------------------------
  if (wants("system")) {
    const auto fs = sweep_functions();
    for (int k = opt.k_min; k <= opt.k_max; ++k) {
      Rng rng = b.stream(4, k);
      CVector dir(k);
      for (int i = 0; i < k; ++i) dir(i) = rng.unit();
      for (int n = 0; n < opt.points; ++n) {
        const SymPoint pt = random_sym_point(rng, k, opt.s_norm);
        for (const auto& f : fs) {
          for (int h = 1; h <= k - 1; ++h) {
            if (opt.perturb > 0.0) {
              const double eps = opt.perturb;
              b.add(1e-7, [pt, f, h, cfg, eps, dir]() {
                const auto field = perturbed_phi_field(f, cfg, eps, dir);
                auto rep = residual_at_for(field, pt, h);
                rep.params = {{"h", std::to_string(h)},
                              {"f", f.describe()},
                              {"perturb", format_double(eps)}};
                return rep;
              });
            } else {
              b.add(1e-7,
                    [pt, f, h, cfg]() { return residual_at(pt, f, h, cfg); });
            }
          }
        }
      }
    }
    append(report.residuals, b.run());
  }

  // ---- closure: A Phi solves (@) ------------------------------------------
  if (wants("closure")) {
    const auto fs = sweep_functions();
    for (int k = opt.k_min; k <= opt.k_max; ++k) {
      Rng rng = b.stream(5, k);
      for (int n = 0; n < opt.points; ++n) {
        const SymPoint pt = random_sym_point(rng, k, opt.s_norm);
        for (const auto& f : fs) {
          for (int h = 1; h <= k - 1; ++h) {
            b.add(1e-7, [pt, f, h, cfg]() {
              auto rep = residual_at_for(a_phi_field(f, cfg), pt, h);
              rep.identity = "closure@";
              rep.params = {{"h", std::to_string(h)}, {"f", f.describe()}};
              return rep;
            });
          }
        }
      }
    }
    append(report.residuals, b.run());
  }

  // ---- Psi = P'(A) Phi bridge, valid on the discriminant too --------------
  if (wants("bridge")) {
    for (int k = opt.k_min; k <= opt.k_max; ++k) {
      Rng rng = b.stream(6, k);
      const int npts = std::max(4, opt.points / 2);
      for (int n = 0; n < npts; ++n) {
        const SymPoint pt = random_sym_point(rng, k, opt.s_norm);
        b.add(10.0 * opt.tol, [pt, cfg]() {
          return bridge_residual(pt, EntireFunction::exp_t({1, 0}), cfg);
        });
      }
      // a point exactly on the discriminant: double root at 1
      std::vector<Complex> rts = {Complex(1, 0), Complex(1, 0)};
      for (int i = 2; i < k; ++i) rts.emplace_back(-0.5 + 0.3 * i, 0.1 * i);
      const SymPoint ondelta(elementary_from_roots(rts));
      b.add(10.0 * opt.tol, [ondelta, cfg]() {
        return bridge_residual(ondelta, EntireFunction::exp_t({1, 0}), cfg);
      });
    }
    append(report.residuals, b.run());
  }

  // ---- system (@@) --------------------------------------------------------
  if (wants("system2")) {
    const auto fs = sweep_functions();
    for (int k = opt.k_min; k <= opt.k_max; ++k) {
      Rng rng = b.stream(7, k);
      for (int n = 0; n < opt.points; ++n) {
        const SymPoint pt = point_off_discriminant(rng, k, opt.s_norm, 0.5);
        for (const auto& f : fs) {
          for (int h = 1; h <= k - 1; ++h) {
            const double floor = opt.delta_floor;
            b.add(1e-6, [pt, f, h, cfg, floor]() {
              return residual_atat(pt, f, h, cfg, floor);
            });
          }
        }
      }
    }
    append(report.residuals, b.run());
  }

  // ---- correspondence: solve P'(A) x = Psi, recover Phi --------------------
  if (wants("correspondence")) {
    for (int k = opt.k_min; k <= opt.k_max; ++k) {
      Rng rng = b.stream(8, k);
      const int npts = std::max(4, opt.points / 2);
      for (int n = 0; n < npts; ++n) {
        const SymPoint pt = point_off_discriminant(rng, k, opt.s_norm, 0.5);
        const double floor = opt.delta_floor;
        b.add(1e-6, [pt, cfg, floor]() {
          return correspondence_roundtrip(pt, EntireFunction::exp_t({1, 0}), cfg,
                                          floor);
        });
      }
    }
    append(report.residuals, b.run());
  }

  // ---- mixed second partials depend only on h+j ----------------------------
  if (wants("mixed")) {
    for (int k = opt.k_min; k <= std::min(4, opt.k_max); ++k) {
      Rng rng = b.stream(9, k);
      const int npts = std::max(4, opt.points / 5);
      for (int n = 0; n < npts; ++n) {
        const SymPoint pt = random_sym_point(rng, k, opt.s_norm);
        const auto f = EntireFunction::exp_t({1, 0});
        for (int p = 1; p <= k - 1; ++p)
          for (int q = p + 1; q <= k - 1; ++q) {
            b.add(1e-7, [pt, f, p, q, cfg]() {
              return mixed_partial_check(pt, f, p, q, cfg);
            });
          }
        for (int sum = 2; sum <= 2 * k; ++sum) {
          b.add(1e-7, [pt, f, sum, cfg]() {
            ResidualReport rep;
            rep.identity = "mixed_equal_sum";
            rep.k = pt.k();
            rep.point = pt.coords();
            rep.params = {{"sum", std::to_string(sum)}, {"f", f.describe()}};
            rep.residual = d2_equal_sum_spread(pt, f, sum, cfg);
            return rep;
          });
        }
      }
    }
    append(report.residuals, b.run());
  }

  // ---- d/dz action: both formulas and the Leibniz relation -----------------
  if (wants("dzaction")) {
    const std::vector<EntireFunction> fs = {EntireFunction::exp_t({1, 0}),
                                            EntireFunction::monomial(2),
                                            EntireFunction::monomial(3)};
    for (int k = opt.k_min; k <= opt.k_max; ++k) {
      Rng rng = b.stream(10, k);
      const int npts = std::max(4, opt.points / 5);
      for (int n = 0; n < npts; ++n) {
        const SymPoint pt = random_sym_point(rng, k, opt.s_norm);
        for (const auto& f : fs) {
          b.add(1e-6, [pt, f, cfg]() { return residual_dz_action(pt, f, cfg); });
          b.add(1e-6, [pt, f, cfg]() {
            return residual_dz_action_star2(pt, f, cfg);
          });
          b.add(1e-6, [pt, f, cfg]() { return residual_leibniz(pt, f, cfg); });
        }
        // f_t = e^{tz}: Phi_{f'} = t Phi_f
        b.add(1e-7, [pt, cfg]() {
          const Complex t{1.0, 0.0};
          const auto f = EntireFunction::exp_t(t);
          const auto lhs = phi(pt, f.derivative(), cfg);
          const auto base = phi(pt, f, cfg);
          double worst = 0.0;
          for (int i = 0; i < pt.k(); ++i)
            worst = std::max(worst, std::abs(lhs.comp[i] - t * base.comp[i]) /
                                        (1.0 + std::abs(base.comp[i])));
          ResidualReport rep;
          rep.identity = "dz_exp_tphi";
          rep.k = pt.k();
          rep.point = pt.coords();
          rep.params = {{"t", format_complex(t)}};
          rep.residual = worst;
          return rep;
        });
      }
    }
    append(report.residuals, b.run());
  }

  // ---- Theta annihilates scalar integrals (k = 2) ---------------------------
  if (wants("theta") && opt.k_min <= 2 && 2 <= opt.k_max) {
    Rng rng = b.stream(11, 2);
    const std::vector<EntireFunction> fs = {EntireFunction::one(),
                                            EntireFunction::monomial(1),
                                            EntireFunction::exp_t({1, 0})};
    for (int n = 0; n < opt.points; ++n) {
      const Complex s1 = rng.complex_box(1.5), s2 = rng.complex_box(1.5);
      for (const auto& f : fs) {
        for (int m = 0; m <= 5; ++m) {
          b.add(1e-7, [s1, s2, f, m, cfg]() {
            return residual_theta_k2(s1, s2, f, m, cfg);
          });
        }
      }
    }
    append(report.residuals, b.run());
  }

  // ---- e^{tz} connection ------------------------------------------------
  if (wants("expconn")) {
    const std::vector<Complex> ts = {{1, 0}, {2, 0}, {1, 1}};
    for (int k = std::max(2, opt.k_min); k <= std::min(3, opt.k_max); ++k) {
      Rng rng = b.stream(12, k);
      for (int n = 0; n < 10; ++n) {
        const SymPoint pt = random_sym_point(rng, k, 2.5);
        const SymPoint ptd = point_off_discriminant(rng, k, 2.5, 0.5);
        for (const Complex& t : ts) {
          b.add(1e-6, [pt, t, cfg]() {
            return residual_exp_connection(pt, t, cfg);
          });
          const double floor = opt.delta_floor;
          b.add(1e-6, [ptd, t, cfg, floor]() {
            return residual_exp_connection_psi(ptd, t, cfg, floor);
          });
        }
      }
    }
    append(report.residuals, b.run());
  }

  // ---- finite-difference derivative oracle ---------------------------------
  if (wants("fdcheck")) {
    QuadratureConfig tight = cfg;
    tight.tol = std::min(cfg.tol, 1e-12);
    for (int k = opt.k_min; k <= std::min(4, opt.k_max); ++k) {
      Rng rng = b.stream(13, k);
      const int npts = std::max(3, opt.points / 8);
      for (int n = 0; n < npts; ++n) {
        const SymPoint pt = random_sym_point(rng, k, 2.0);
        for (int h = 1; h <= k; ++h) {
          b.add(1e-6, [pt, h, tight]() {
            return fd_cross_check(pt, EntireFunction::exp_t({1, 0}), h, tight);
          });
        }
      }
    }
    append(report.residuals, b.run());
  }

  // ---- exact identities -----------------------------------------------------
  if (wants("identities")) {
    struct IdTask {
      std::function<IdentityRecord()> run;
    };
    std::vector<IdTask> tasks;
    const std::uint64_t seed = opt.seed;
    const int spts = opt.shadow_points;
    auto add_id = [&](std::function<exact::IdentityReport()> verify,
                      std::function<double(Rng)> shadow, double shadow_threshold,
                      std::uint64_t salt) {
      tasks.push_back({[verify = std::move(verify), shadow = std::move(shadow),
                        shadow_threshold, seed, salt]() {
        IdentityRecord rec;
        rec.report = verify();
        rec.shadow = shadow(Rng(seed).fork(14 * kSuiteSalt + salt));
        rec.shadow_threshold = shadow_threshold;
        rec.pass = rec.report.exact_zero && rec.shadow < shadow_threshold;
        return rec;
      }});
    };

    std::uint64_t salt = 0;
    for (int k = 2; k <= opt.id_k_max; ++k) {
      for (int p = 0; p <= 2 * k; ++p) {
        add_id([k, p] { return exact::verify_block_power(k, p); },
               [k, p, spts](Rng r) {
                 return exact::shadow_block_power(k, p, r, spts);
               },
               1e-9, ++salt);
        add_id([k, p] { return exact::verify_E7(k, p); },
               [k, p, spts](Rng r) { return exact::shadow_E7(k, p, r, spts); },
               1e-9, ++salt);
        for (int h = 1; h <= k; ++h) {
          add_id([k, p, h] { return exact::verify_simple2(k, p, h); },
                 [k, p, h, spts](Rng r) {
                   return exact::shadow_simple2(k, p, h, r, spts);
                 },
                 1e-9, ++salt);
        }
        if (p >= 1) {
          add_id([k, p] { return exact::verify_nabla_identity(k, p); },
                 [k, p, spts](Rng r) {
                   return exact::shadow_nabla_identity(k, p, r, spts);
                 },
                 1e-9, ++salt);
        }
      }
      add_id([k] { return exact::verify_E7bis(k); },
             [k, spts](Rng r) { return exact::shadow_E7bis(k, r, spts); }, 1e-9,
             ++salt);
      add_id(
          [k] {
            exact::IdentityReport rep;
            rep.name = "sylvester_discriminant";
            rep.k = k;
            rep.exact_zero = true;  // the polynomial is the object itself
            return rep;
          },
          [k, spts](Rng r) { return exact::shadow_discriminant(k, r, spts); },
          1e-8, ++salt);
    }

    std::vector<IdentityRecord> recs(tasks.size());
    parallel_for(tasks.size(), [&](std::size_t i) { recs[i] = tasks[i].run(); });
    for (auto& r : recs) report.identities.push_back(std::move(r));
  }

  return report;
}

int VerifyReport::failures() const {
  int n = 0;
  for (const auto& r : residuals)
    if (!r.pass) ++n;
  for (const auto& r : identities)
    if (!r.pass) ++n;
  return n;
}

double VerifyReport::max_residual() const {
  double m = 0.0;
  for (const auto& r : residuals) m = std::max(m, r.report.residual);
  return m;
}

const ResidualRecord* VerifyReport::worst() const {
  const ResidualRecord* w = nullptr;
  for (const auto& r : residuals)
    if (!w || r.report.residual > w->report.residual) w = &r;
  return w;
}

std::string VerifyReport::to_json(const std::string& command) const {
  JsonWriter w;
  w.begin_object();
  w.field("command", command);
  w.field("seed", options.seed);
  w.field("suite", options.suite);
  w.field("k_min", options.k_min);
  w.field("k_max", options.k_max);
  w.field("points", options.points);
  w.field("s_norm", options.s_norm);
  w.field("tol", options.tol);
  w.field("perturb", options.perturb);
  w.field("delta_floor", options.delta_floor);
  w.field("id_k_max", options.id_k_max);

  w.begin_array("residuals");
  for (const auto& rec : residuals) {
    w.object_element();
    w.field("identity", rec.report.identity);
    w.field("k", rec.report.k);
    w.begin_array("s");
    for (const Complex& c : rec.report.point) w.element(c);
    w.end_array();
    w.begin_object("params");
    for (const auto& [key, value] : rec.report.params) w.field(key, value);
    w.end_object();
    w.field("residual", rec.report.residual);
    w.field("threshold", rec.threshold);
    w.field("method", rec.report.method == ResidualReport::Method::Analytic
                          ? "analytic"
                          : "finite_difference");
    w.field("seed", rec.report.seed);
    w.field("pass", rec.pass);
    w.end_object();
  }
  w.end_array();

  w.begin_array("identities");
  for (const auto& rec : identities) {
    w.object_element();
    w.field("name", rec.report.name);
    w.begin_object("params");
    w.field("k", rec.report.k);
    if (rec.report.p) w.field("p", *rec.report.p);
    if (rec.report.h) w.field("h", *rec.report.h);
    w.end_object();
    w.field("verdict", rec.report.exact_zero ? "ExactZero" : "Failed");
    if (rec.report.witness) {
      w.begin_object("witness");
      w.field("row", rec.report.witness->row);
      w.field("col", rec.report.witness->col);
      w.field("entry", rec.report.witness->entry);
      w.end_object();
    }
    w.field("shadow", rec.shadow);
    w.field("shadow_threshold", rec.shadow_threshold);
    w.field("pass", rec.pass);
    w.end_object();
  }
  w.end_array();

  w.begin_object("summary");
  w.field("residual_records", static_cast<int>(residuals.size()));
  w.field("identity_records", static_cast<int>(identities.size()));
  w.field("failures", failures());
  w.field("max_residual", max_residual());
  w.end_object();

  w.end_object();
  return w.str();
}

}  // namespace lisbon
