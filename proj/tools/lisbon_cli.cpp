// Command-line front end: evaluate Lisbon integrals, run the verification
// sweeps, tabulate grids, run the exact identity certificates.
//
// Exit codes: 0 success, 1 verification failure, 2 parse/usage error,
// 3 numeric refusal (budget exhausted, root finder did not converge).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "lisbon/companion.hpp"
#include "lisbon/contour.hpp"
#include "lisbon/errors.hpp"
#include "lisbon/jobspec.hpp"
#include "lisbon/report.hpp"
#include "lisbon/residuals.hpp"
#include "lisbon/roots.hpp"
#include "lisbon/sweeps.hpp"

namespace {

using lisbon::Complex;
using lisbon::JobSpec;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    if (content.empty() || content.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << content;
}

lisbon::QuadratureConfig quadrature_config(const JobSpec& spec) {
  lisbon::QuadratureConfig cfg;
  cfg.tol = spec.tol;
  if (spec.radius > 0.0) {
    cfg.radius_policy = lisbon::QuadratureConfig::RadiusPolicy::Fixed;
    cfg.fixed_radius = spec.radius;
  }
  return cfg;
}

int cmd_eval(const JobSpec& spec) {
  if (static_cast<int>(spec.s.size()) != spec.k)
    throw std::invalid_argument("--s must list exactly k complex values");
  const lisbon::SymPoint pt(spec.s);
  const auto f = lisbon::make_function(spec.f);
  const auto cfg = quadrature_config(spec);

  lisbon::LisbonVector v;
  if (spec.kind == "phi")
    v = lisbon::phi(pt, f, cfg);
  else if (spec.kind == "psi")
    v = lisbon::psi(pt, f, cfg);
  else
    throw std::invalid_argument("--kind must be phi or psi");

  std::string text;
  if (spec.format == "json") {
    lisbon::JsonWriter w;
    w.begin_object();
    w.field("command", "eval");
    w.field("k", spec.k);
    w.begin_array("s");
    for (const Complex& c : spec.s) w.element(c);
    w.end_array();
    w.field("f", spec.f);
    w.field("kind", spec.kind);
    w.begin_array("components");
    for (const Complex& c : v.comp) w.element(c);
    w.end_array();
    w.field("accuracy", v.accuracy);
    w.end_object();
    text = w.str();
  } else if (spec.format == "csv") {
    text = "h,re,im,accuracy\n";
    for (int h = 0; h < v.k(); ++h) {
      text += std::to_string(h) + "," + lisbon::format_double(v.comp[h].real()) +
              "," + lisbon::format_double(v.comp[h].imag()) + "," +
              lisbon::format_double(v.accuracy) + "\n";
    }
  } else {
    throw std::invalid_argument("--format must be json or csv");
  }
  write_output(spec.out, text);
  return 0;
}

lisbon::SweepOptions sweep_options(const JobSpec& spec) {
  lisbon::SweepOptions opt;
  opt.seed = spec.seed;
  opt.suite = spec.suite;
  opt.tol = spec.tol;
  opt.perturb = spec.perturb;
  if (spec.k_max > 0) {
    opt.k_max = spec.k_max;
    opt.id_k_max = std::min(spec.k_max, 5);
  }
  return opt;
}

int cmd_verify(const JobSpec& spec) {
  const auto opt = sweep_options(spec);
  const auto report = lisbon::run_verify(opt);
  write_output(spec.out, report.to_json("verify"));
  if (!report.ok()) {
    std::cerr << "verify: " << report.failures() << " failing record(s)\n";
    // list the worst offenders
    std::vector<const lisbon::ResidualRecord*> bad;
    for (const auto& r : report.residuals)
      if (!r.pass) bad.push_back(&r);
    std::sort(bad.begin(), bad.end(), [](auto* a, auto* b) {
      return a->report.residual > b->report.residual;
    });
    for (std::size_t i = 0; i < bad.size() && i < 5; ++i) {
      std::cerr << "  " << bad[i]->report.identity
                << " k=" << bad[i]->report.k
                << " residual=" << lisbon::format_double(bad[i]->report.residual)
                << " threshold=" << lisbon::format_double(bad[i]->threshold)
                << "\n";
    }
    for (const auto& r : report.identities)
      if (!r.pass)
        std::cerr << "  " << r.report.name << " k=" << r.report.k
                  << (r.report.exact_zero ? " (shadow failed)"
                                          : " (not exactly zero)")
                  << "\n";
    return 1;
  }
  return 0;
}

int cmd_identities(const JobSpec& spec, bool dump_witness) {
  lisbon::SweepOptions opt;
  opt.seed = spec.seed;
  opt.suite = "identities";
  opt.id_k_max = spec.k_max > 0 ? spec.k_max : 5;
  const auto report = lisbon::run_verify(opt);
  write_output(spec.out, report.to_json("identities"));
  bool ok = true;
  for (const auto& r : report.identities) {
    if (!r.pass) ok = false;
    if (dump_witness && r.report.witness) {
      std::cout << r.report.name << " k=" << r.report.k;
      if (r.report.p) std::cout << " p=" << *r.report.p;
      if (r.report.h) std::cout << " h=" << *r.report.h;
      std::cout << " witness(" << r.report.witness->row << ","
                << r.report.witness->col << ") = " << r.report.witness->entry
                << "\n";
    }
  }
  return ok ? 0 : 1;
}

struct GridSpec {
  int ax1 = 1, ax2 = 2;
  double lo = -2.0, hi = 2.0;
  int steps = 0;
};

GridSpec parse_grid(const std::string& text, int k) {
  const auto parts = [&] {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
      if (c == ',') {
        out.push_back(cur);
        cur.clear();
      } else
        cur += c;
    }
    out.push_back(cur);
    return out;
  }();
  if (parts.size() != 5)
    throw std::invalid_argument("--grid expects ax1,ax2,min,max,steps");
  GridSpec g;
  try {
    g.ax1 = std::stoi(parts[0]);
    g.ax2 = std::stoi(parts[1]);
    g.lo = std::stod(parts[2]);
    g.hi = std::stod(parts[3]);
    g.steps = std::stoi(parts[4]);
  } catch (...) {
    throw std::invalid_argument("--grid expects ax1,ax2,min,max,steps");
  }
  if (g.ax1 < 1 || g.ax1 > k || g.ax2 < 1 || g.ax2 > k || g.ax1 == g.ax2 ||
      g.steps < 0)
    throw std::invalid_argument("--grid axes out of range");
  return g;
}

int cmd_grid(const JobSpec& spec) {
  if (spec.k < 2) throw std::invalid_argument("grid needs k >= 2");
  std::vector<Complex> base = spec.s;
  if (base.empty()) base.assign(spec.k, Complex(0, 0));
  if (static_cast<int>(base.size()) != spec.k)
    throw std::invalid_argument("--s must list exactly k complex values");
  const GridSpec g = parse_grid(spec.grid, spec.k);
  const auto f = lisbon::make_function(spec.f);
  const auto cfg = quadrature_config(spec);

  std::string csv;
  for (int h = 1; h <= spec.k; ++h) csv += "s_" + std::to_string(h) + ",";
  csv +=
      "abs_disc,phi_norm,psi_norm,pprime_inv_norm,residual_at_max,"
      "residual_atat_max\n";

  auto grid_value = [&](int i) {
    return g.steps == 1 ? g.lo : g.lo + (g.hi - g.lo) * i / (g.steps - 1);
  };

  for (int i = 0; i < g.steps; ++i) {
    for (int j = 0; j < g.steps; ++j) {
      std::vector<Complex> coords = base;
      coords[g.ax1 - 1] = grid_value(i);
      coords[g.ax2 - 1] = grid_value(j);
      const lisbon::SymPoint pt(coords);

      const double adisc = std::abs(lisbon::discriminant(pt));
      const auto vphi = lisbon::phi(pt, f, cfg);
      const auto vpsi = lisbon::psi(pt, f, cfg);

      std::string inv_norm = "inf";
      if (adisc > 1e-12) {
        const lisbon::CMatrix inv = lisbon::pprime_of_companion(pt).inverse();
        const double n = inv.cwiseAbs().rowwise().sum().maxCoeff();
        inv_norm = std::isfinite(n) ? lisbon::format_double(n) : "inf";
      }

      double res_at = 0.0;
      for (int h = 1; h <= spec.k - 1; ++h)
        res_at = std::max(res_at,
                          lisbon::residual_at(pt, f, h, cfg).residual);

      std::string res_atat = "inf";
      if (adisc > 1e-3) {
        double worst = 0.0;
        for (int h = 1; h <= spec.k - 1; ++h)
          worst = std::max(
              worst, lisbon::residual_atat(pt, f, h, cfg, 1e-6).residual);
        res_atat = lisbon::format_double(worst);
      }

      for (const Complex& c : coords) csv += lisbon::format_complex(c) + ",";
      csv += lisbon::format_double(adisc) + "," +
             lisbon::format_double(vphi.max_abs()) + "," +
             lisbon::format_double(vpsi.max_abs()) + "," + inv_norm + "," +
             lisbon::format_double(res_at) + "," + res_atat + "\n";
    }
  }
  write_output(spec.out, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lisbon integrals: evaluation and machine verification"};
  app.require_subcommand(1);

  JobSpec spec;
  bool dump_witness = false;
  std::string s_text, seed_text;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--k", spec.k, "degree k");
    sub->add_option("--s", s_text,
                    "comma-separated complex coordinates s_1,...,s_k "
                    "(e.g. 1.5-2i,0.25)");
    sub->add_option("--f", spec.f,
                    "integrand: one | z | monomial:p | poly:c0,c1,... | exp:t");
    sub->add_option("--kind", spec.kind, "phi | psi");
    sub->add_option("--tol", spec.tol, "quadrature tolerance");
    sub->add_option("--radius", spec.radius, "fixed contour radius (0 = auto)");
    sub->add_option("--seed", seed_text, "sweep seed (decimal)");
    sub->add_option("--suite", spec.suite, "verification suite or 'all'");
    sub->add_option("--perturb", spec.perturb,
                    "negative control: perturb the field by this amount");
    sub->add_option("--k-max", spec.k_max, "sweep bound on k");
    sub->add_option("--out", spec.out, "output path (default stdout)");
    sub->add_option("--format", spec.format, "json | csv");
    sub->add_option("--grid", spec.grid, "grid spec: ax1,ax2,min,max,steps");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate Phi or Psi at a point");
  add_common(eval);
  CLI::App* verify = app.add_subcommand("verify", "run the verification sweeps");
  add_common(verify);
  CLI::App* grid = app.add_subcommand("grid", "tabulate a grid as CSV");
  add_common(grid);
  CLI::App* identities =
      app.add_subcommand("identities", "run the exact identity certificates");
  add_common(identities);
  identities->add_flag("--dump-witness", dump_witness,
                       "print witnesses of failed identities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!s_text.empty()) spec.s = lisbon::parse_complex_list(s_text);
    if (!seed_text.empty()) spec.seed = std::stoull(seed_text);

    if (eval->parsed()) {
      spec.command = "eval";
      return cmd_eval(spec);
    }
    if (verify->parsed()) {
      spec.command = "verify";
      return cmd_verify(spec);
    }
    if (grid->parsed()) {
      spec.command = "grid";
      return cmd_grid(spec);
    }
    spec.command = "identities";
    return cmd_identities(spec, dump_witness);
  } catch (const lisbon::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const lisbon::NonConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const lisbon::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const lisbon::NearDiscriminant& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
