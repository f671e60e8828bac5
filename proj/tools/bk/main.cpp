#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <random>

#include <CLI11.hpp>

#include "bk/brieskorn.hpp"
#include "bk/errors.hpp"
#include "bk/gm_model.hpp"
#include "bk/microdiff.hpp"
#include "bk/nc_log.hpp"
#include "bk/problem_file.hpp"
#include "bk/report.hpp"
#include "bk/thom_sebastiani.hpp"

using namespace bk;

namespace {

struct Flags {
  std::optional<int> max_degree, max_t_power, max_s_power;
  std::string format = "json";
  std::string out;
  std::string verify;
  std::uint64_t seed = 0;
};

struct Bounds {
  int max_t = 10;
  int max_s = 3;
  std::optional<int> max_degree;
};

Bounds resolve(const Flags& fl, const ProblemOptions& o) {
  Bounds b;
  b.max_degree = fl.max_degree ? fl.max_degree : o.max_degree;
  if (o.max_t_power) b.max_t = *o.max_t_power;
  if (fl.max_t_power) b.max_t = *fl.max_t_power;
  if (o.max_s_power) b.max_s = *o.max_s_power;
  if (fl.max_s_power) b.max_s = *fl.max_s_power;
  if (b.max_t < 0 || b.max_s < 0 || (b.max_degree && *b.max_degree < 0)) throw InputError("bounds must be nonnegative");
  return b;
}

Json bounds_json(const Bounds& b, const Flags& fl, bool cap_relative) {
  return Json{{"max_degree", b.max_degree ? Json(*b.max_degree) : Json(nullptr)},
              {"max_t_power", b.max_t},
              {"max_s_power", b.max_s},
              {"seed", fl.seed},
              {"cap_relative", cap_relative}};
}

Json rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_json(q));
  return a;
}

struct Loaded {
  ProblemFile file;
  GermPtr germ;
};

Loaded load(const std::string& path) {
  Loaded l{load_problem(path), nullptr};
  l.germ = std::make_shared<GermProblem>(l.file.germ());
  return l;
}

std::vector<std::pair<std::string, CohomologyClass>> file_classes(const Loaded& l) {
  std::vector<std::pair<std::string, CohomologyClass>> out;
  for (const auto& spec : l.file.classes)
    out.emplace_back(spec.label, CohomologyClass(l.germ, l.file.class_form(spec, *l.germ)));
  return out;
}

Json germ_summary(const GermProblem& g) {
  Json j = germ_json(g);
  const auto mu = milnor_number(g);
  j["isolated"] = mu.has_value();
  j["milnor_number"] = mu ? Json(*mu) : Json(nullptr);
  return j;
}

Json torsion_entry(const TorsionResult& r, const GermProblem& g, const DifferentialForm& omega, Report& rep) {
  if (const auto* c = std::get_if<TorsionCertificate>(&r)) {
    rep.certificates.push_back(torsion_certificate_json(g, omega, *c));
    return Json{{"found", true}, {"order", c->order}, {"certificate", rep.certificates.size() - 1}};
  }
  return Json{{"found", false}, {"bound", std::get<NotFoundWithin>(r).bound}};
}

bool found(const TorsionResult& r) { return std::holds_alternative<TorsionCertificate>(r); }

// ---- commands ---------------------------------------------------------------

int cmd_analyze(const std::string& path, const Flags& fl, Report& rep) {
  const Loaded l = load(path);
  const GermProblem& g = *l.germ;
  const Bounds b = resolve(fl, l.file.options);
  const SliceOptions opts{b.max_degree};
  const int n = static_cast<int>(g.nvars());
  const int deg = l.file.options.degree.value_or(std::max(n - 1, 1));
  rep.input_digest = digest(l.file.source);
  rep.result["germ"] = germ_summary(g);

  const auto gens = kernel_form_generators(g, deg);
  Json kernel = Json::array();
  for (const auto& k : gens) {
    rep.certificates.push_back(kernel_certificate_json(g, k));
    kernel.push_back(to_json(k, g.variables()));
  }
  rep.result["kernel"] = Json{{"degree", deg}, {"generators", kernel}};

  // df ^ i_xi omega = f omega on seeded random combinations of the generators
  std::mt19937_64 rng(fl.seed);
  std::uniform_int_distribution<int> coeff(-3, 3), var(0, n - 1);
  const VectorField xi = g.normalized_euler();
  int passed = 0, samples = gens.empty() ? 0 : 20;
  for (int s = 0; s < samples; ++s) {
    DifferentialForm omega(g.nvars(), deg);
    for (const auto& k : gens) {
      Polynomial m = Polynomial::constant(g.nvars(), coeff(rng));
      if (coeff(rng) > 0) m = m * Polynomial::variable(g.nvars(), static_cast<std::size_t>(var(rng)));
      omega += k * m;
    }
    if (df_wedge(g.f(), interior_product(xi, omega)) == omega * g.f()) ++passed;
  }
  if (passed != samples) throw InvariantViolation("contraction identity failed on a kernel element");
  rep.result["contraction_checks"] = Json{{"samples", samples}, {"passed", passed}};

  const auto classes = file_classes(l);
  Json cls = Json::array();
  std::map<std::pair<int, Rational>, std::vector<const CohomologyClass*>> by_weight;
  bool cap_relative = !g.all_weights_positive();
  for (const auto& [label, c] : classes) {
    Json e{{"label", label},
           {"form", to_json(c.representative(), g.variables())},
           {"weight", to_json(c.weight())},
           {"exponent", to_json(c.exponent())}};
    e["t_torsion"] = torsion_entry(torsion_order_t(c, b.max_t, opts), g, c.representative(), rep);
    e["s_torsion"] = torsion_entry(torsion_order_s(c, b.max_s, opts), g, c.representative(), rep);
    cls.push_back(e);
    by_weight[{c.degree(), c.weight()}].push_back(&c);
  }
  rep.result["classes"] = cls;

  bool independent = true;
  for (const auto& [key, members] : by_weight) {
    const HSlice h = h_slice(g, key.first, key.second, opts);
    cap_relative = cap_relative || h.cap_relative();
    std::vector<SparseVec> coords;
    for (const auto* c : members) coords.push_back(h.class_coordinates(c->representative()));
    if (rank_of(coords) != members.size()) independent = false;
  }
  rep.result["classes_independent"] = independent;

  if (g.all_weights_positive() && milnor_number(g)) {
    const auto top = top_structure(g);
    std::vector<Rational> ex;
    for (const auto& t : top.generators) ex.push_back(t.exponent);
    rep.result["spectrum"] = rationals(ex);
  }
  rep.bounds = bounds_json(b, fl, cap_relative);
  return 0;
}

int cmd_kernel(const std::string& path, const Flags& fl, Report& rep) {
  const Loaded l = load(path);
  const GermProblem& g = *l.germ;
  const Bounds b = resolve(fl, l.file.options);
  const int n = static_cast<int>(g.nvars());
  const int deg = l.file.options.degree.value_or(std::max(n - 1, 1));
  if (deg < 0 || deg > n) throw InputError("form degree out of range");
  rep.input_digest = digest(l.file.source);
  Json gens = Json::array();
  for (const auto& k : kernel_form_generators(g, deg)) {
    rep.certificates.push_back(kernel_certificate_json(g, k));
    gens.push_back(to_json(k, g.variables()));
  }
  rep.result = Json{{"germ", germ_json(g)}, {"degree", deg}, {"generators", gens}};
  rep.bounds = bounds_json(b, fl, false);
  return 0;
}

int cmd_torsion(const std::string& path, const Flags& fl, Report& rep) {
  const Loaded l = load(path);
  const GermProblem& g = *l.germ;
  const Bounds b = resolve(fl, l.file.options);
  const SliceOptions opts{b.max_degree};
  rep.input_digest = digest(l.file.source);
  const auto classes = file_classes(l);
  if (classes.empty()) throw InputError("torsion needs at least one class in the problem file");
  bool all_found = true;
  Json cls = Json::array();
  for (const auto& [label, c] : classes) {
    const auto rt = torsion_order_t(c, b.max_t, opts);
    const auto rs = torsion_order_s(c, b.max_s, opts);
    all_found = all_found && found(rt) && found(rs);
    cls.push_back(Json{{"label", label},
                       {"weight", to_json(c.weight())},
                       {"t_torsion", torsion_entry(rt, g, c.representative(), rep)},
                       {"s_torsion", torsion_entry(rs, g, c.representative(), rep)},
                       {"agree", found(rt) == found(rs)}});
  }
  rep.result = Json{{"germ", germ_json(g)}, {"classes", cls}};
  rep.bounds = bounds_json(b, fl, !g.all_weights_positive());
  return all_found ? 0 : 2;
}

int cmd_spectrum(const std::string& path, const Flags& fl, Report& rep) {
  const Loaded l = load(path);
  const GermProblem& g = *l.germ;
  const Bounds b = resolve(fl, l.file.options);
  rep.input_digest = digest(l.file.source);
  const int n = static_cast<int>(g.nvars());
  const ElementaryGMModule m = from_brieskorn(g, n);
  std::vector<Rational> ex;
  for (const auto& p : m.pieces())
    for (int k = 0; k < p.dim; ++k) ex.push_back(p.alpha);
  const PsiPhi pp = psi_phi(m);
  Json v = Json::array();
  for (const auto& p : m.pieces()) v.push_back(Json{{"alpha", to_json(p.alpha)}, {"dim", v_dim(m, p.alpha)}});
  Json psi = Json::array(), phi = Json::array();
  for (const auto& p : pp.psi) psi.push_back(Json{{"alpha", to_json(p.alpha)}, {"dim", p.dim}});
  for (const auto& p : pp.phi) phi.push_back(Json{{"alpha", to_json(p.alpha)}, {"dim", p.dim}});
  rep.result = Json{{"germ", germ_summary(g)},
                    {"exponents", rationals(ex)},
                    {"rank", m.total_dimension()},
                    {"gr_v", v},
                    {"psi", psi},
                    {"phi", phi},
                    {"can_surjective", can_map(m).surjective}};
  rep.bounds = bounds_json(b, fl, false);
  return 0;
}

int cmd_nc(const std::string& path, const Flags& fl, Report& rep) {
  const ProblemFile pf = load_problem(path);
  const GermProblem g = pf.germ();
  rep.input_digest = digest(pf.source);
  const auto& terms = g.f().terms();
  if (terms.size() != 1 || terms[0].coeff != 1) throw InputError("nc expects a monic monomial prod x_i^m_i");
  const MonomialGerm mg = MonomialGerm::make(terms[0].monomial.exponents);
  Bounds b = resolve(fl, pf.options);
  const int bound = b.max_degree.value_or(6);
  b.max_degree = bound;
  const int n = static_cast<int>(mg.nvars());

  Json ranks = Json::array();
  for (int p = 0; p < n; ++p) {
    const auto ev = residue_eigenvalues(mg, p);
    bool distinct = true;
    for (std::size_t k = 1; k < ev.size(); ++k) distinct = distinct && ev[k] != ev[k - 1];
    const Integer binom = binomial(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(p));
    ranks.push_back(Json{{"degree", p},
                         {"basis_size", log_relative_basis(mg, p).size()},
                         {"expected", to_string(Rational(Integer(mg.e) * binom))},
                         {"eigenvalues", rationals(ev)},
                         {"distinct", distinct}});
  }
  Json checks = Json::array();
  for (int i = 1; i <= n; ++i) {
    const NcCheck c = verify_a_equals_g_atilde(mg, i, bound);
    Json e{{"degree", i}, {"holds", c.holds}, {"slices_checked", c.slices_checked},
           {"kernel_dimension", c.kernel_dimension}};
    if (c.witness) e["witness"] = to_json(*c.witness, g.variables());
    checks.push_back(e);
  }
  rep.result = Json{{"germ", germ_json(g)}, {"e", mg.e}, {"log_ranks", ranks}, {"a_equals_g_atilde", checks}};
  rep.bounds = bounds_json(b, fl, true);
  return 0;
}

int cmd_micro(const std::string& word, const Flags& fl, Report& rep) {
  const int cap = fl.max_s_power.value_or(kDefaultSkewCap);
  const int kmax = fl.max_t_power.value_or(10);
  const int pq = fl.max_degree.value_or(8);
  if (cap < 1 || kmax < 0 || pq < 2) throw InputError("micro bounds out of range");
  rep.input_digest = digest("micro\n" + word + "\n" + std::to_string(cap) + "\n" + std::to_string(kmax) + "\n" +
                            std::to_string(pq));
  if (!word.empty()) rep.result["normal_order"] = to_string(normal_order(parse_word(word), cap));

  Json expansion = Json::array();
  for (int s = 2; s <= pq; ++s)
    for (int p = 1; p < s; ++p) {
      const auto c = st_expansion_certificate(p, s - p, cap);
      expansion.push_back(Json{{"p", p},
                           {"q", s - p},
                           {"pure_coefficient", to_json(c.pure_coefficient)},
                           {"expected", to_string(Rational(c.expected))},
                           {"holds", c.holds()}});
    }
  rep.result["st_expansion"] = expansion;

  Json spd = Json::array();
  for (int p = 1; 2 * p <= cap && p <= 5; ++p) {
    const auto sol = s_power_decomposition(p, cap);
    spd.push_back(Json{{"p", p}, {"solved", sol.has_value()}, {"lambda", sol ? rationals(*sol) : Json(nullptr)}});
  }
  rep.result["s_power_decomposition"] = spd;

  TruncatedSeries u = TruncatedSeries::constant(1, kmax);
  for (int k = 0; k < kmax; ++k) u = integrate_series(u).series;
  rep.result["integrate"] = Json{{"k", kmax}, {"coefficient", to_json(u.coefficient(kmax))}};
  rep.bounds = Json{{"skew_cap", cap}, {"max_t_power", kmax}, {"max_p_plus_q", pq}, {"seed", fl.seed}};
  return 0;
}

int cmd_ts(const std::string& pf, const std::string& pg, const Flags& fl, Report& rep) {
  const Loaded lf = load(pf), lg = load(pg);
  const Bounds b = resolve(fl, lf.file.options);
  rep.input_digest = digest(digest(lf.file.source) + "\n" + digest(lg.file.source));
  const TsReport r = ts_compare(*lf.germ, *lg.germ);
  Json mism = rationals(r.slice_mismatches);
  rep.result = Json{{"f", germ_json(*lf.germ)},
                    {"g", germ_json(*lg.germ)},
                    {"left", Json{{"rank", r.left.rank}, {"exponents", rationals(r.left.exponents)}}},
                    {"right", Json{{"rank", r.right.rank}, {"exponents", rationals(r.right.exponents)}}},
                    {"ranks_equal", r.ranks_equal()},
                    {"exponents_equal", r.exponents_equal()},
                    {"slices_compared", r.slices_compared},
                    {"slice_mismatches", mism},
                    {"holds", r.holds()}};

  // omega ^ g^k dg is exact in A_h for the first listed class of f
  auto classes = file_classes(lf);
  if (classes.empty()) {
    const auto top = top_structure(*lf.germ);
    if (!top.generators.empty())
      classes.emplace_back("generator", CohomologyClass(lf.germ, top.generators.front().representative));
  }
  bool all_found = true;
  if (!classes.empty()) {
    const auto& omega = classes.front().second;
    const GermProblem h = join(*lf.germ, *lg.germ);
    const std::size_t n = h.nvars();
    const Polynomial gh = lg.germ->f().embed(n, lf.germ->nvars());
    Json van = Json::array();
    for (int k = 0; k <= std::min(b.max_t, 3); ++k) {
      const auto eta = vanish_g_k_dg(omega, *lg.germ, k, {b.max_degree});
      Json e{{"k", k}, {"found", eta.has_value()}};
      if (eta) {
        rep.certificates.push_back(
            vanish_certificate_json(h, omega.representative().embed(n, 0), gh, k, *eta));
        e["certificate"] = rep.certificates.size() - 1;
      }
      all_found = all_found && eta.has_value();
      van.push_back(e);
    }
    rep.result["vanish_g_k_dg"] = Json{{"class", classes.front().first}, {"results", van}};
  }
  rep.bounds = bounds_json(b, fl, false);
  return all_found ? 0 : 2;
}

int cmd_check_p(const std::string& path, const Flags& fl, Report& rep) {
  const Loaded l = load(path);
  const GermProblem& g = *l.germ;
  Bounds b = resolve(fl, l.file.options);
  const int bound = b.max_degree.value_or(10);
  b.max_degree = bound;
  const int n = static_cast<int>(g.nvars());
  const int deg = l.file.options.degree.value_or(n);
  if (deg < 2 || deg > n) throw InputError("check-p needs a form degree in [2, n]");
  rep.input_digest = digest(l.file.source);
  const PPrimeResult r = check_p_prime(g, deg, bound);
  rep.result = Json{{"germ", germ_json(g)},
                    {"degree", deg},
                    {"holds", r.holds},
                    {"slices_checked", r.slices_checked},
                    {"witness", r.witness ? to_json(*r.witness, g.variables()) : Json(nullptr)}};
  rep.bounds = bounds_json(b, fl, r.cap_relative);
  return 0;
}

int verify_report(const std::string& path, Report& rep) {
  const std::string bytes = read_file(path);
  Json j;
  try {
    j = Json::parse(bytes);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("report is not valid JSON: ") + e.what());
  }
  const ReplayResult r = replay_certificates(j);
  rep.command = "verify";
  rep.input_digest = digest(bytes);
  rep.result = Json{{"checked", r.checked}, {"failures", r.failures}, {"ok", r.ok()}};
  return r.ok() ? 0 : 3;
}

void emit(const Report& rep, const Flags& fl) {
  const std::string text = render(report_json(rep), fl.format);
  if (fl.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(fl.out, std::ios::binary);
  if (!out) throw InputError("cannot write " + fl.out);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brieskorn module engine for quasi-homogeneous germs"};
  app.fallthrough();
  app.set_version_flag("--version", version());
  Flags fl;
  app.add_option("--max-degree", fl.max_degree, "cap on |a|+|I| of forms x^a dx_I");
  app.add_option("--max-t-power", fl.max_t_power, "bound on p in f^p omega = d eta");
  app.add_option("--max-s-power", fl.max_s_power, "bound on the s-chain length");
  app.add_option("--format", fl.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", fl.out, "write the report here instead of stdout");
  app.add_option("--verify", fl.verify, "replay the certificates of a report");
  app.add_option("--seed", fl.seed, "seed for sampled checks");

  std::string file, file2, word;
  std::string command;
  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->callback([&command, name] { command = name; });
    return s;
  };
  for (auto [name, help] : {std::pair{"analyze", "kernel, torsion and spectrum summary"},
                            std::pair{"kernel", "generators of Ker(df ^)"},
                            std::pair{"torsion", "t- and s-torsion searches on listed classes"},
                            std::pair{"spectrum", "exponents and nearby/vanishing cycle data"},
                            std::pair{"nc", "normal crossing log-form checks"},
                            std::pair{"check-p", "degreewise check of condition P'"}})
    sub(name, help)->add_option("file", file, "problem file")->required();
  sub("micro", "microdifferential identities")->add_option("word", word, "word in t and s to normal-order");
  auto* ts = sub("ts", "external product comparison for f + g");
  ts->add_option("f", file, "problem file of f")->required();
  ts->add_option("g", file2, "problem file of g")->required();
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  Report rep;
  rep.command = command;
  try {
    int code = 0;
    if (!fl.verify.empty()) {
      if (!command.empty()) throw InputError("--verify takes no subcommand");
      code = verify_report(fl.verify, rep);
    } else if (command == "analyze") {
      code = cmd_analyze(file, fl, rep);
    } else if (command == "kernel") {
      code = cmd_kernel(file, fl, rep);
    } else if (command == "torsion") {
      code = cmd_torsion(file, fl, rep);
    } else if (command == "spectrum") {
      code = cmd_spectrum(file, fl, rep);
    } else if (command == "nc") {
      code = cmd_nc(file, fl, rep);
    } else if (command == "micro") {
      code = cmd_micro(word, fl, rep);
    } else if (command == "ts") {
      code = cmd_ts(file, file2, fl, rep);
    } else if (command == "check-p") {
      code = cmd_check_p(file, fl, rep);
    } else {
      std::cerr << app.help();
      return 1;
    }
    emit(rep, fl);
    return code;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
