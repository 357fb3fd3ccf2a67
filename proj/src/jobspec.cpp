#include "lisbon/jobspec.hpp"

#include <json.hpp>
#include <stdexcept>

#include "lisbon/entire_function.hpp"
#include "lisbon/report.hpp"

namespace lisbon {

std::string JobSpec::to_json() const {
  JsonWriter w;
  w.begin_object();
  w.field("command", command);
  w.field("k", k);
  w.begin_array("s");
  for (const Complex& c : s) w.element(c);
  w.end_array();
  w.field("f", f);
  w.field("kind", kind);
  w.field("tol", tol);
  w.field("radius", radius);
  w.field("seed", seed);
  w.field("suite", suite);
  w.field("perturb", perturb);
  w.field("k_max", k_max);
  w.field("out", out);
  w.field("format", format);
  w.field("grid", grid);
  w.end_object();
  return w.str();
}

JobSpec JobSpec::from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  JobSpec spec;
  spec.command = j.at("command").get<std::string>();
  spec.k = j.at("k").get<int>();
  spec.s.clear();
  for (const auto& c : j.at("s"))
    spec.s.emplace_back(c.at("re").get<double>(), c.at("im").get<double>());
  spec.f = j.at("f").get<std::string>();
  spec.kind = j.at("kind").get<std::string>();
  spec.tol = j.at("tol").get<double>();
  spec.radius = j.at("radius").get<double>();
  spec.seed = j.at("seed").get<std::uint64_t>();
  spec.suite = j.at("suite").get<std::string>();
  spec.perturb = j.at("perturb").get<double>();
  spec.k_max = j.at("k_max").get<int>();
  spec.out = j.at("out").get<std::string>();
  spec.format = j.at("format").get<std::string>();
  spec.grid = j.at("grid").get<std::string>();
  return spec;
}

EntireFunction make_function(const std::string& descriptor) {
  if (descriptor == "one") return EntireFunction::one();
  if (descriptor == "z") return EntireFunction::monomial(1);
  const auto colon = descriptor.find(':');
  const std::string head = descriptor.substr(0, colon);
  const std::string tail =
      colon == std::string::npos ? "" : descriptor.substr(colon + 1);
  if (head == "monomial") {
    const int p = std::stoi(tail);
    return EntireFunction::monomial(p);
  }
  if (head == "exp") return EntireFunction::exp_t(parse_complex(tail));
  if (head == "poly") return EntireFunction::poly(parse_complex_list(tail));
  throw std::invalid_argument("unknown integrand descriptor: " + descriptor);
}

}  // namespace lisbon
