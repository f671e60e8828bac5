#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bk/forms.hpp"
#include "bk/germ.hpp"

namespace bk {

struct ProblemOptions {
  std::optional<int> max_degree;
  std::optional<int> max_t_power;
  std::optional<int> max_s_power;
  std::optional<int> degree;  // form degree for kernel / check-p
};

/// One term c * dx_I of a class listed in a problem file: "coefficient" is a
/// polynomial expression, "wedge" a list of variable names.
struct ClassTerm {
  std::string coefficient;
  std::vector<std::string> wedge;
};

struct ClassSpec {
  std::string label;
  std::vector<ClassTerm> terms;
  int degree = 0;
};

/// JSON problem file:
///   {"name": ..., "variables": [...], "weights": ["1", "-1", ...],
///    "polynomial": "...", "options": {"max_degree": 12, ...},
///    "classes": [{"label": "vol", "degree": 3,
///                 "terms": [{"coefficient": "z", "wedge": ["x","y","z"]}]}]}
struct ProblemFile {
  std::string name;
  std::vector<std::string> variables;
  std::vector<std::string> weights;
  std::string polynomial;
  ProblemOptions options;
  std::vector<ClassSpec> classes;
  std::string source;  // raw bytes, for the digest

  /// Builds and validates the germ (throws InputError).
  GermProblem germ() const;
  DifferentialForm class_form(const ClassSpec& spec, const GermProblem& germ) const;
};

ProblemFile parse_problem(const std::string& text);
ProblemFile load_problem(const std::string& path);

std::string read_file(const std::string& path);

/// "sha256:<hex>" of the given bytes.
std::string digest(const std::string& bytes);

}  // namespace bk
