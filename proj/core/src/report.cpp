#include "bk/report.hpp"

#include <sstream>

#include "bk/errors.hpp"

namespace bk {

std::string version() { return BK_VERSION; }

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const DifferentialForm& omega, const std::vector<std::string>& vars) {
  Json terms = Json::array();
  for (const auto& t : serialize_terms(omega))
    terms.push_back(Json{{"coeff", to_string(t.coeff)}, {"exponents", t.exponents}, {"wedge", t.wedge}});
  return Json{{"degree", omega.degree()}, {"text", to_string(omega, vars)}, {"terms", terms}};
}

Json to_json(const VectorField& xi, const std::vector<std::string>& vars) {
  Json comps = Json::array();
  for (const auto& c : xi.components) comps.push_back(to_string(c, vars));
  return comps;
}

Json germ_json(const GermProblem& problem) {
  Json w = Json::array();
  for (const auto& x : problem.weights().weights) w.push_back(to_string(x));
  return Json{{"name", problem.name()},
              {"variables", problem.variables()},
              {"weights", w},
              {"polynomial", to_string(problem.f(), problem.variables())},
              {"degree", to_string(problem.degree())}};
}

DifferentialForm form_from_json(const Json& j, std::size_t nvars) {
  std::vector<FormTerm> terms;
  for (const auto& t : j.at("terms"))
    terms.push_back(FormTerm{parse_rational(t.at("coeff").get<std::string>()), t.at("exponents").get<std::vector<int>>(),
                             t.at("wedge").get<std::vector<int>>()});
  return deserialize_terms(nvars, j.at("degree").get<int>(), terms);
}

GermProblem germ_from_json(const Json& j) {
  return make_germ(j.at("name").get<std::string>(), j.at("variables").get<std::vector<std::string>>(),
                   j.at("weights").get<std::vector<std::string>>(), j.at("polynomial").get<std::string>());
}

Json torsion_certificate_json(const GermProblem& problem, const DifferentialForm& omega,
                              const TorsionCertificate& cert) {
  Json chain = Json::array();
  for (const auto& w : cert.witness) chain.push_back(to_json(w, problem.variables()));
  return Json{{"type", cert.kind == TorsionCertificate::Kind::T ? "torsion_t" : "torsion_s"},
              {"germ", germ_json(problem)},
              {"omega", to_json(omega, problem.variables())},
              {"order", cert.order},
              {"witness", chain}};
}

Json kernel_certificate_json(const GermProblem& problem, const DifferentialForm& generator) {
  return Json{{"type", "kernel_generator"},
              {"germ", germ_json(problem)},
              {"form", to_json(generator, problem.variables())}};
}

Json vanish_certificate_json(const GermProblem& h, const DifferentialForm& omega_h, const Polynomial& g_h, int k,
                             const DifferentialForm& eta) {
  return Json{{"type", "vanish_g_k_dg"},
              {"germ", germ_json(h)},
              {"omega", to_json(omega_h, h.variables())},
              {"g", to_string(g_h, h.variables())},
              {"k", k},
              {"eta", to_json(eta, h.variables())}};
}

Json report_json(const Report& r) {
  return Json{{"command", r.command},
              {"input_digest", r.input_digest},
              {"result", r.result},
              {"certificates", r.certificates},
              {"bounds", r.bounds},
              {"version", version()}};
}

namespace {

void render_text(const Json& j, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty()) {
        out << pad << k << ":\n";
        render_text(v, indent + 2, out);
      } else {
        out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured() && !v.empty()) {
        out << pad << "-\n";
        render_text(v, indent + 2, out);
      } else {
        out << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

bool check_one(const Json& c, std::string& why) {
  const std::string type = c.at("type").get<std::string>();
  const GermProblem g = germ_from_json(c.at("germ"));
  const std::size_t n = g.nvars();
  if (type == "torsion_t" || type == "torsion_s") {
    TorsionCertificate cert{type == "torsion_t" ? TorsionCertificate::Kind::T : TorsionCertificate::Kind::S,
                            c.at("order").get<int>(),
                            {}};
    for (const auto& w : c.at("witness")) cert.witness.push_back(form_from_json(w, n));
    const DifferentialForm omega = form_from_json(c.at("omega"), n);
    if (!df_wedge(g.f(), omega).is_zero()) {
      why = "omega is not killed by df^";
      return false;
    }
    if (!verify_certificate(g, omega, cert)) {
      why = "witness equations fail";
      return false;
    }
    return true;
  }
  if (type == "kernel_generator") {
    if (!df_wedge(g.f(), form_from_json(c.at("form"), n)).is_zero()) {
      why = "df ^ generator != 0";
      return false;
    }
    return true;
  }
  if (type == "vanish_g_k_dg") {
    const DifferentialForm omega = form_from_json(c.at("omega"), n);
    const DifferentialForm eta = form_from_json(c.at("eta"), n);
    const Polynomial gh = parse_polynomial(c.at("g").get<std::string>(), g.variables());
    const int k = c.at("k").get<int>();
    const DifferentialForm target = wedge(omega, differential(gh) * gh.pow(static_cast<unsigned>(k)));
    if (!df_wedge(g.f(), eta).is_zero()) {
      why = "eta is not killed by dh^";
      return false;
    }
    if (!(exterior_derivative(eta) == target)) {
      why = "d(eta) != omega ^ g^k dg";
      return false;
    }
    return true;
  }
  why = "unknown certificate type " + type;
  return false;
}

}  // namespace

std::string render(const Json& j, const std::string& format) {
  if (format == "json") return j.dump(2) + "\n";
  std::ostringstream out;
  render_text(j, 0, out);
  return out.str();
}

ReplayResult replay_certificates(const Json& report) {
  ReplayResult r;
  if (!report.is_object() || !report.contains("certificates")) throw InputError("not a report: no certificates key");
  std::size_t index = 0;
  for (const auto& c : report.at("certificates")) {
    std::string why;
    bool ok = false;
    try {
      ok = check_one(c, why);
    } catch (const std::exception& e) {
      why = e.what();
    }
    ++r.checked;
    if (!ok) r.failures.push_back("certificate " + std::to_string(index) + ": " + why);
    ++index;
  }
  return r;
}

}  // namespace bk
