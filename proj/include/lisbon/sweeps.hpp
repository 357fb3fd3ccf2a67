#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lisbon/identities.hpp"
#include "lisbon/residuals.hpp"

namespace lisbon {

struct SweepOptions {
  std::uint64_t seed = 0x4c6973626f6eULL;
  std::string suite = "all";
  int k_min = 2;
  int k_max = 4;
  int points = 25;
  double s_norm = 3.0;
  double tol = 1e-10;
  double perturb = 0.0;      // > 0 injects a broken field into the (@) sweep
  double delta_floor = 1e-3;
  int id_k_max = 4;          // exact-identity bound when run under verify
  int shadow_points = 20;
};

struct ResidualRecord {
  ResidualReport report;
  double threshold = 0.0;
  bool pass = false;
};

struct IdentityRecord {
  exact::IdentityReport report;
  double shadow = 0.0;
  double shadow_threshold = 0.0;
  bool pass = false;
};

struct VerifyReport {
  SweepOptions options;
  std::vector<ResidualRecord> residuals;
  std::vector<IdentityRecord> identities;

  int failures() const;
  double max_residual() const;
  bool ok() const { return failures() == 0; }
  const ResidualRecord* worst() const;

  // Canonical serialization: fixed key order, 17 significant digits,
  // record order independent of execution order.
  std::string to_json(const std::string& command) const;
};

// All suite names, in canonical report order.
const std::vector<std::string>& suite_names();

// Runs the seeded verification sweeps (options.suite == "all" or one name).
// Sweep items fan out across threads (capped by LISBON_THREADS); the record
// order is the canonical construction order.
VerifyReport run_verify(const SweepOptions& options);

}  // namespace lisbon
