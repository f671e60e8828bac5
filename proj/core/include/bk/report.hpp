#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bk/brieskorn.hpp"

namespace bk {

using Json = nlohmann::ordered_json;

std::string version();

Json to_json(const Rational& q);
Json to_json(const DifferentialForm& omega, const std::vector<std::string>& vars);
Json to_json(const VectorField& xi, const std::vector<std::string>& vars);
Json germ_json(const GermProblem& problem);

DifferentialForm form_from_json(const Json& j, std::size_t nvars);
GermProblem germ_from_json(const Json& j);

/// Self-contained certificate records (the germ travels with each one).
Json torsion_certificate_json(const GermProblem& problem, const DifferentialForm& omega,
                              const TorsionCertificate& cert);
Json kernel_certificate_json(const GermProblem& problem, const DifferentialForm& generator);
/// d(eta) = omega ^ g^k dg over h = f + g, eta killed by dh ^.
Json vanish_certificate_json(const GermProblem& h, const DifferentialForm& omega_h, const Polynomial& g_h, int k,
                             const DifferentialForm& eta);

struct Report {
  std::string command;
  std::string input_digest;
  Json result = Json::object();
  Json certificates = Json::array();
  Json bounds = Json::object();
};

Json report_json(const Report& r);

/// JSON (two-space indent) or an indented key: value rendering.
std::string render(const Json& j, const std::string& format);

struct ReplayResult {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Re-checks every certificate of a report from its recorded data alone.
ReplayResult replay_certificates(const Json& report);

}  // namespace bk
