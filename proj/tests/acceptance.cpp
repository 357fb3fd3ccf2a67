// Acceptance suite: runs every verification criterion at its fixed
// tolerance and prints one pass/fail line per criterion. Exits nonzero if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "lisbon/sweeps.hpp"

namespace {

using Clock = std::chrono::steady_clock;

int g_failures = 0;

struct SuiteOutcome {
  bool pass = true;
  int records = 0;
  double max_residual = 0.0;
  double min_residual = 1e300;
  std::string detail;
};

SuiteOutcome run_suite(const lisbon::SweepOptions& opt) {
  SuiteOutcome out;
  const auto rep = lisbon::run_verify(opt);
  out.records = static_cast<int>(rep.residuals.size() + rep.identities.size());
  for (const auto& r : rep.residuals) {
    out.max_residual = std::max(out.max_residual, r.report.residual);
    out.min_residual = std::min(out.min_residual, r.report.residual);
    if (!r.pass) {
      out.pass = false;
      if (out.detail.empty())
        out.detail = r.report.identity + " residual " +
                     std::to_string(r.report.residual);
    }
  }
  for (const auto& r : rep.identities) {
    if (!r.pass) {
      out.pass = false;
      if (out.detail.empty()) out.detail = r.report.name + " failed";
    }
  }
  return out;
}

void report(int index, const std::string& name, bool pass, double seconds,
            const std::string& note) {
  std::printf("[%s] %02d %-28s %s (%.2fs)\n", pass ? "PASS" : "FAIL", index,
              name.c_str(), note.c_str(), seconds);
  if (!pass) ++g_failures;
}

double elapsed(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string residual_note(const SuiteOutcome& o) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d records, max residual %.2e", o.records,
                o.max_residual);
  return o.detail.empty() ? buf : std::string(buf) + "; first failure: " + o.detail;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(LISBON_CLI_PATH) + " " + args;
  return WEXITSTATUS(std::system(cmd.c_str()));
}

}  // namespace

int main() {
  lisbon::SweepOptions base;  // seed, tolerances, sweep sizes: library defaults

  // 1. f == 1 closed form, k in {2..5}, 50 points with |s| <= 5, 1e-9.
  {
    const auto t0 = Clock::now();
    lisbon::SweepOptions opt = base;
    opt.suite = "f1";
    opt.k_min = 2;
    opt.k_max = 5;
    opt.points = 50;
    const auto out = run_suite(opt);
    const double secs = elapsed(t0);
    report(1, "f==1 closed form", out.pass && secs < 5.0, secs,
           residual_note(out));
  }

  // 2. Oracle equivalence, contour vs residue, 1e-8 normalized, |D| >= 0.1.
  {
    const auto t0 = Clock::now();
    lisbon::SweepOptions opt = base;
    opt.suite = "oracle";
    opt.k_min = 2;
    opt.k_max = 5;
    const auto out = run_suite(opt);
    const double secs = elapsed(t0);
    report(2, "oracle equivalence", out.pass && secs < 10.0, secs,
           residual_note(out));
  }

  // 3. psi against Newton power sums, h <= 2k, k <= 5, 1e-9.
  {
    const auto t0 = Clock::now();
    lisbon::SweepOptions opt = base;
    opt.suite = "newton";
    opt.k_min = 2;
    opt.k_max = 5;
    const auto out = run_suite(opt);
    report(3, "Newton power sums", out.pass, elapsed(t0), residual_note(out));
  }

  // 4. System (@) sweep at 1e-7 plus the perturbed negative control.
  {
    const auto t0 = Clock::now();
    lisbon::SweepOptions opt = base;
    opt.suite = "system";
    const auto out = run_suite(opt);

    lisbon::SweepOptions neg = base;
    neg.suite = "system";
    neg.perturb = 1e-2;
    neg.k_max = 2;
    const auto nout = run_suite(neg);
    const bool control_fails = !nout.pass && nout.min_residual > 1e-4;

    const double secs = elapsed(t0);
    std::string note = residual_note(out);
    note += control_fails ? "; control residual > 1e-4" : "; CONTROL DID NOT FAIL";
    report(4, "system (@)", out.pass && control_fails && secs < 30.0, secs, note);
  }

  // 5. Closure: A Phi passes the same sweep at the same threshold.
  {
    const auto t0 = Clock::now();
    lisbon::SweepOptions opt = base;
    opt.suite = "closure";
    const auto out = run_suite(opt);
    report(5, "closure A*Phi", out.pass, elapsed(t0), residual_note(out));
  }

  // 6. System (@@) at 1e-6 for |D| > 0.5, and the Phi -> Psi -> Phi
  //    round-trip below 1e-6.
  {
    const auto t0 = Clock::now();
    lisbon::SweepOptions opt = base;
    opt.suite = "system2";
    const auto out = run_suite(opt);
    lisbon::SweepOptions opt2 = base;
    opt2.suite = "correspondence";
    const auto out2 = run_suite(opt2);
    SuiteOutcome merged;
    merged.pass = out.pass && out2.pass;
    merged.records = out.records + out2.records;
    merged.max_residual = std::max(out.max_residual, out2.max_residual);
    merged.detail = out.detail.empty() ? out2.detail : out.detail;
    report(6, "system (@@) + roundtrip", merged.pass, elapsed(t0),
           residual_note(merged));
  }

  // 7. Exact identities over k in [2,5], p in [0,2k], h in [1,k]; shadows.
  {
    const auto t0 = Clock::now();
    lisbon::SweepOptions opt = base;
    opt.suite = "identities";
    opt.id_k_max = 5;
    const auto out = run_suite(opt);
    const double secs = elapsed(t0);
    report(7, "exact identities", out.pass && secs < 60.0, secs,
           residual_note(out));
  }

  // 8. Theta annihilates phi_m, k = 2, m in [0,5], 1e-7.
  {
    const auto t0 = Clock::now();
    lisbon::SweepOptions opt = base;
    opt.suite = "theta";
    const auto out = run_suite(opt);
    report(8, "theta operator (k=2)", out.pass, elapsed(t0), residual_note(out));
  }

  // 9. d/dz action: both formulas, the Leibniz relation (1e-6), and
  //    Phi_{f'} = t Phi_f for f = e^{tz} (1e-7).
  {
    const auto t0 = Clock::now();
    lisbon::SweepOptions opt = base;
    opt.suite = "dzaction";
    const auto out = run_suite(opt);
    report(9, "d/dz action", out.pass, elapsed(t0), residual_note(out));
  }

  // 10. e^{tz} connection, t in {1, 2, 1+i}, k in {2, 3}, 1e-6.
  {
    const auto t0 = Clock::now();
    lisbon::SweepOptions opt = base;
    opt.suite = "expconn";
    const auto out = run_suite(opt);
    report(10, "exp(tz) connection", out.pass, elapsed(t0), residual_note(out));
  }

  // 11. Mixed partials equal for equal h+j, k <= 4, 1e-7.
  {
    const auto t0 = Clock::now();
    lisbon::SweepOptions opt = base;
    opt.suite = "mixed";
    const auto out = run_suite(opt);
    report(11, "mixed partials", out.pass, elapsed(t0), residual_note(out));
  }

  // 12. Determinism: cmd_verify twice with one seed, byte-identical reports.
  {
    const auto t0 = Clock::now();
    const std::string a = "/tmp/lisbon_acc_a_" + std::to_string(getpid()) + ".json";
    const std::string b = "/tmp/lisbon_acc_b_" + std::to_string(getpid()) + ".json";
    const int ra = run_cli("verify --seed 424242 --out " + a);
    const int rb = run_cli("verify --seed 424242 --out " + b);
    const std::string ca = slurp(a), cb = slurp(b);
    const bool pass = ra == 0 && rb == 0 && !ca.empty() && ca == cb;
    std::remove(a.c_str());
    std::remove(b.c_str());
    char note[96];
    std::snprintf(note, sizeof note, "%zu bytes, %s", ca.size(),
                  pass ? "byte-identical" : "MISMATCH");
    report(12, "determinism", pass, elapsed(t0), note);
  }

  if (g_failures == 0) {
    std::printf("acceptance: all 12 criteria passed\n");
  } else {
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  }
  return g_failures == 0 ? 0 : 1;
}
