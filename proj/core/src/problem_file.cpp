#include "bk/problem_file.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>
#include <openssl/evp.h>

#include "bk/errors.hpp"

namespace bk {

namespace {

std::optional<int> optional_int(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  if (!j.at(key).is_number_integer()) throw InputError(std::string("option ") + key + " must be an integer");
  return j.at(key).get<int>();
}

std::string weight_text(const nlohmann::json& w) {
  if (w.is_string()) return w.get<std::string>();
  if (w.is_number_integer()) return std::to_string(w.get<long>());
  throw InputError("weights must be strings \"p/q\" or integers");
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("problem file is not valid JSON: ") + e.what());
  }
  ProblemFile p;
  p.source = text;
  try {
    if (!j.is_object()) throw InputError("problem file must be a JSON object");
    p.name = j.value("name", std::string("unnamed"));
    p.variables = j.at("variables").get<std::vector<std::string>>();
    for (const auto& w : j.at("weights")) p.weights.push_back(weight_text(w));
    p.polynomial = j.at("polynomial").get<std::string>();
    if (j.contains("options")) {
      const auto& o = j.at("options");
      p.options.max_degree = optional_int(o, "max_degree");
      p.options.max_t_power = optional_int(o, "max_t_power");
      p.options.max_s_power = optional_int(o, "max_s_power");
      p.options.degree = optional_int(o, "degree");
    }
    if (j.contains("classes")) {
      for (const auto& c : j.at("classes")) {
        ClassSpec spec;
        spec.label = c.value("label", std::string());
        spec.degree = c.at("degree").get<int>();
        for (const auto& t : c.at("terms"))
          spec.terms.push_back(ClassTerm{t.at("coefficient").get<std::string>(),
                                         t.at("wedge").get<std::vector<std::string>>()});
        p.classes.push_back(std::move(spec));
      }
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed problem file: ") + e.what());
  }
  return p;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ProblemFile load_problem(const std::string& path) { return parse_problem(read_file(path)); }

GermProblem ProblemFile::germ() const {
  try {
    return make_germ(name, variables, weights, polynomial);
  } catch (const ParseError& e) {
    throw InputError(std::string("polynomial: ") + e.what());
  }
}

DifferentialForm ProblemFile::class_form(const ClassSpec& spec, const GermProblem& germ) const {
  const auto& vars = germ.variables();
  DifferentialForm out(germ.nvars(), spec.degree);
  for (const auto& t : spec.terms) {
    if (static_cast<int>(t.wedge.size()) != spec.degree)
      throw InputError("class " + spec.label + ": wedge length differs from the degree");
    std::vector<int> idx;
    for (const auto& name : t.wedge) {
      auto it = std::find(vars.begin(), vars.end(), name);
      if (it == vars.end()) throw InputError("class " + spec.label + ": unknown variable " + name);
      idx.push_back(static_cast<int>(it - vars.begin()));
    }
    // sort the wedge factors, tracking the permutation sign
    int sign = 1;
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        if (idx[a] == idx[b]) throw InputError("class " + spec.label + ": repeated wedge factor");
        if (idx[a] > idx[b]) {
          std::swap(idx[a], idx[b]);
          sign = -sign;
        }
      }
    Polynomial c;
    try {
      c = parse_polynomial(t.coefficient, vars);
    } catch (const ParseError& e) {
      throw InputError("class " + spec.label + ": " + e.what());
    }
    out.add(wedge_of(idx), sign > 0 ? c : -c);
  }
  return out;
}

std::string digest(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream hex;
  hex << "sha256:";
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return hex.str();
}

}  // namespace bk
