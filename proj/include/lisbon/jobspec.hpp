#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lisbon/sym_point.hpp"

namespace lisbon {

// Everything a CLI invocation needs, in one serializable value. A parsed
// spec round-trips through its JSON form unchanged.
struct JobSpec {
  std::string command = "eval";  // eval | verify | grid | identities
  int k = 2;
  std::vector<Complex> s;
  std::string f = "one";     // one | z | monomial:p | poly:c0,c1,... | exp:t
  std::string kind = "phi";  // phi | psi
  double tol = 1e-10;
  double radius = 0.0;  // 0 = auto
  std::uint64_t seed = 0x4c6973626f6eULL;
  std::string suite = "all";
  double perturb = 0.0;
  int k_max = 0;  // 0 = command default
  std::string out;
  std::string format = "json";  // json | csv
  std::string grid;             // "ax1,ax2,min,max,steps"

  bool operator==(const JobSpec& o) const = default;

  std::string to_json() const;
  static JobSpec from_json(const std::string& text);
};

// Builds the integrand named by a JobSpec f-descriptor; throws
// std::invalid_argument on an unknown descriptor.
class EntireFunction;
EntireFunction make_function(const std::string& descriptor);

}  // namespace lisbon
