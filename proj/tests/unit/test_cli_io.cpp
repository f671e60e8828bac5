#include <doctest.h>

#include "bk/errors.hpp"
#include "bk/problem_file.hpp"
#include "bk/report.hpp"

using namespace bk;

namespace {

const char* kCusp = R"({"name": "cusp", "variables": ["x", "y"], "weights": ["3", 2],
  "polynomial": "x^2 + y^3", "options": {"max_t_power": 4},
  "classes": [{"label": "w", "degree": 2, "terms": [{"coefficient": "y", "wedge": ["y", "x"]}]}]})";

}  // namespace

TEST_CASE("problem files") {
  const ProblemFile p = parse_problem(kCusp);
  CHECK(p.name == "cusp");
  CHECK(p.weights == std::vector<std::string>{"3", "2"});
  CHECK(p.options.max_t_power == 4);
  CHECK_FALSE(p.options.max_degree.has_value());
  const GermProblem g = p.germ();
  CHECK(g.degree() == 6);
  // dy ^ dx = -dx ^ dy
  const auto w = p.class_form(p.classes[0], g);
  CHECK(w == DifferentialForm::volume(parse_polynomial("-y", g.variables())));
}

TEST_CASE("problem file errors") {
  CHECK_THROWS_AS(parse_problem("{"), InputError);
  CHECK_THROWS_AS(parse_problem("[]"), InputError);
  CHECK_THROWS_AS(parse_problem(R"({"variables": ["x"], "weights": ["1"]})"), InputError);
  CHECK_THROWS_AS(parse_problem(R"({"variables": ["x"], "weights": ["1"], "polynomial": "x^2 +"})").germ(), InputError);
  // not quasi-homogeneous for the given weights
  CHECK_THROWS_AS(parse_problem(R"({"variables": ["x","y"], "weights": ["1","1"], "polynomial": "x^2 + y^3"})").germ(),
                  InputError);
  CHECK_THROWS_AS(parse_problem(R"({"variables": ["x"], "weights": ["1"], "polynomial": "x", "options": {"max_degree": "9"}})"),
                  InputError);
  CHECK_THROWS_AS(load_problem("/nonexistent/problem.json"), InputError);
}

TEST_CASE("sha256 digest") {
  CHECK(digest("abc") == "sha256:ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(digest("") == "sha256:e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("form JSON round trip") {
  const std::vector<std::string> v{"x", "y", "z"};
  DifferentialForm w(3, 2);
  w.add(0b011, parse_polynomial("1/2*x^2 - z", v));
  w.add(0b110, parse_polynomial("y", v));
  const Json j = to_json(w, v);
  CHECK(j.at("degree") == 2);
  CHECK(form_from_json(j, 3) == w);
  CHECK(to_json(Rational(-3) / 4) == "-3/4");
}

TEST_CASE("certificate replay") {
  const auto g = std::make_shared<GermProblem>(
      make_germ("b35", {"x", "y", "z"}, {"1", "1", "-1"}, "1/5*x^5 + 1/5*y^5 + 1/3*x^3*y^3*z"));
  const CohomologyClass c(g, DifferentialForm::volume(Polynomial::constant(3, 1)));
  const auto r = torsion_order_t(c, 3, {12});
  REQUIRE(std::holds_alternative<TorsionCertificate>(r));
  Report rep;
  rep.command = "torsion";
  rep.certificates.push_back(torsion_certificate_json(*g, c.representative(), std::get<TorsionCertificate>(r)));
  for (const auto& k : kernel_form_generators(*g, 2)) rep.certificates.push_back(kernel_certificate_json(*g, k));
  Json j = report_json(rep);
  CHECK(j.at("version") == version());
  const auto ok = replay_certificates(Json::parse(render(j, "json")));
  CHECK(ok.ok());
  CHECK(ok.checked == rep.certificates.size());

  // tamper with the witness: the replay must notice
  j["certificates"][0]["witness"][0]["terms"][0]["coeff"] = "12345";
  const auto bad = replay_certificates(j);
  CHECK_FALSE(bad.ok());
  CHECK(bad.failures.size() == 1u);
  CHECK_THROWS_AS(replay_certificates(Json::array()), InputError);
}

TEST_CASE("text rendering") {
  const Json j{{"a", 1}, {"b", Json::array({"x", "y"})}, {"c", Json::object()}};
  CHECK(render(j, "text") == "a: 1\nb:\n  - x\n  - y\nc: {}\n");
}
