#include "bk/gm_model.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "bk/brieskorn.hpp"
#include "bk/errors.hpp"
#include "bk/linalg.hpp"

namespace bk {

namespace {

RationalMatrix zero_matrix(std::size_t rows, std::size_t cols) {
  return RationalMatrix(rows, std::vector<Rational>(cols, Rational(0)));
}

RationalMatrix identity(std::size_t n) {
  RationalMatrix m = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RationalMatrix r = zero_matrix(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

bool is_zero(const RationalMatrix& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

bool is_nilpotent(const RationalMatrix& n) {
  RationalMatrix p = n;
  for (std::size_t k = 1; k < n.size(); ++k) p = multiply(p, n);
  return n.empty() || is_zero(p);
}

// representative of alpha mod 1 in (-1, 0]
Rational into_psi(const Rational& a) { return reduce_mod_one(a, Rational(-1), true); }
// representative of alpha mod 1 in [-1, 0)
Rational into_phi(const Rational& a) { return reduce_mod_one(a, Rational(-1), false); }

void add_piece(std::map<Rational, GMPiece>& acc, const GMPiece& p, const Rational& alpha) {
  auto [it, inserted] = acc.try_emplace(alpha, GMPiece{alpha, 0, {}});
  // pieces merging into one exponent: block-diagonal N
  const std::size_t old = static_cast<std::size_t>(it->second.dim);
  const std::size_t add = static_cast<std::size_t>(p.dim);
  RationalMatrix n = zero_matrix(old + add, old + add);
  for (std::size_t i = 0; i < old; ++i)
    for (std::size_t j = 0; j < old; ++j) n[i][j] = it->second.N[i][j];
  for (std::size_t i = 0; i < add; ++i)
    for (std::size_t j = 0; j < add; ++j) n[old + i][old + j] = p.N[i][j];
  it->second.N = std::move(n);
  it->second.dim += p.dim;
}

std::vector<GMPiece> values(const std::map<Rational, GMPiece>& m) {
  std::vector<GMPiece> out;
  for (const auto& [a, p] : m) out.push_back(p);
  return out;
}

}  // namespace

std::size_t matrix_rank(const RationalMatrix& m) {
  std::vector<SparseVec> rows;
  for (const auto& r : m) {
    std::map<int, Rational> e;
    for (std::size_t j = 0; j < r.size(); ++j)
      if (r[j] != 0) e[static_cast<int>(j)] = r[j];
    rows.push_back(SparseVec::from_map(e));
  }
  return rank_of(rows);
}

ElementaryGMModule ElementaryGMModule::make(std::vector<GMPiece> pieces, bool periodic,
                                            std::optional<RationalMatrix> can_unipotent) {
  ElementaryGMModule m;
  std::sort(pieces.begin(), pieces.end(), [](const GMPiece& a, const GMPiece& b) { return a.alpha < b.alpha; });
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    auto& p = pieces[k];
    if (k > 0 && pieces[k - 1].alpha == p.alpha) throw InputError("duplicate exponent " + to_string(p.alpha));
    if (p.dim < 1) throw InputError("piece dimension must be positive");
    if (p.N.empty()) p.N = zero_matrix(static_cast<std::size_t>(p.dim), static_cast<std::size_t>(p.dim));
    if (p.N.size() != static_cast<std::size_t>(p.dim)) throw InputError("N has the wrong size");
    for (const auto& row : p.N)
      if (row.size() != static_cast<std::size_t>(p.dim)) throw InputError("N must be square");
    if (!is_nilpotent(p.N)) throw InputError("N is not nilpotent at exponent " + to_string(p.alpha));
  }
  m.pieces_ = std::move(pieces);
  m.periodic_ = periodic;
  if (can_unipotent) {
    if (periodic) throw InputError("periodic models fix can; no matrix may be given");
    const GMPiece* src = m.piece(0);
    const GMPiece* dst = m.piece(-1);
    const std::size_t rows = dst ? static_cast<std::size_t>(dst->dim) : 0;
    const std::size_t cols = src ? static_cast<std::size_t>(src->dim) : 0;
    if (can_unipotent->size() != rows) throw InputError("can matrix needs dim M^{-1} rows");
    for (const auto& r : *can_unipotent)
      if (r.size() != cols) throw InputError("can matrix needs dim M^0 columns");
    m.can_ = std::move(can_unipotent);
  }
  return m;
}

int ElementaryGMModule::total_dimension() const {
  int s = 0;
  for (const auto& p : pieces_) s += p.dim;
  return s;
}

const GMPiece* ElementaryGMModule::piece(const Rational& alpha) const {
  for (const auto& p : pieces_)
    if (p.alpha == alpha) return &p;
  return nullptr;
}

ElementaryGMModule from_brieskorn(const GermProblem& problem, int degree) {
  const std::size_t n = problem.nvars();
  if (static_cast<std::size_t>(degree) != n) throw InputError("models are built from the top degree only");
  if (!problem.all_weights_positive()) throw InputError("models need positive weights");
  const auto mu = milnor_number(problem);
  if (!mu) throw NonIsolated("f does not have an isolated singularity");
  const bool reduced = n == 1;
  const TModuleStructure s = t_module_structure(problem, degree, generator_weight_bound(problem), {}, reduced);
  if (!s.t_injective) throw InvariantViolation("t is not injective on H^n of an isolated germ");
  std::map<Rational, int> count;
  for (const auto& g : s.generators) {
    if (g.exponent <= -1 || g.exponent >= static_cast<long>(n) - 1)
      throw InvariantViolation("exponent " + to_string(g.exponent) + " outside (-1, n-1)");
    ++count[g.exponent];
  }
  std::vector<GMPiece> pieces;
  for (const auto& [a, k] : count) pieces.push_back(GMPiece{a, k, zero_matrix(static_cast<std::size_t>(k), static_cast<std::size_t>(k))});
  return ElementaryGMModule::make(std::move(pieces), true);
}

PsiPhi psi_phi(const ElementaryGMModule& module) {
  std::map<Rational, GMPiece> psi, phi;
  for (const auto& p : module.pieces()) {
    if (module.periodic()) {
      add_piece(psi, p, into_psi(p.alpha));
      add_piece(phi, p, into_phi(p.alpha));
    } else {
      if (p.alpha > -1 && p.alpha <= 0) add_piece(psi, p, p.alpha);
      if (p.alpha >= -1 && p.alpha < 0) add_piece(phi, p, p.alpha);
    }
  }
  PsiPhi out;
  out.psi = values(psi);
  out.phi = values(phi);
  for (const auto& p : out.psi) out.psi_dim += p.dim;
  for (const auto& p : out.phi) out.phi_dim += p.dim;
  return out;
}

CanMap can_map(const ElementaryGMModule& module) {
  const PsiPhi pp = psi_phi(module);
  CanMap out;
  auto find = [](const std::vector<GMPiece>& v, const Rational& a) -> const GMPiece* {
    for (const auto& p : v)
      if (p.alpha == a) return &p;
    return nullptr;
  };
  for (const auto& src : pp.psi) {
    if (src.alpha == 0) continue;
    const std::size_t d = static_cast<std::size_t>(src.dim);
    out.blocks.push_back(CanBlock{src.alpha, src.alpha, identity(d)});
  }
  const GMPiece* zero = find(pp.psi, 0);
  const GMPiece* minus_one = find(pp.phi, -1);
  const std::size_t rows = minus_one ? static_cast<std::size_t>(minus_one->dim) : 0;
  const std::size_t cols = zero ? static_cast<std::size_t>(zero->dim) : 0;
  if (zero || minus_one) {
    RationalMatrix m;
    if (module.periodic()) {
      // d_t : M^0 -> M^{-1} is bijective; both are the same reduced piece
      m = identity(cols);
    } else {
      m = module.can_unipotent() ? *module.can_unipotent() : zero_matrix(rows, cols);
    }
    out.blocks.push_back(CanBlock{0, -1, m});
    if (matrix_rank(m) != rows) out.surjective = false;
  }
  return out;
}

int v_dim(const ElementaryGMModule& module, const Rational& alpha) {
  const GMPiece* p = module.piece(alpha);
  return p ? p->dim : 0;
}

int v_filtration_dim(const ElementaryGMModule& module, const Rational& alpha) {
  int s = 0;
  for (const auto& p : module.pieces())
    if (p.alpha >= alpha) s += p.dim;
  return s;
}

int dt_kernel_dim(const ElementaryGMModule& module) {
  if (module.periodic()) return 0;
  const GMPiece* zero = module.piece(0);
  if (!zero) return 0;
  const RationalMatrix m = module.can_unipotent()
                               ? *module.can_unipotent()
                               : zero_matrix(module.piece(-1) ? static_cast<std::size_t>(module.piece(-1)->dim) : 0,
                                             static_cast<std::size_t>(zero->dim));
  return zero->dim - static_cast<int>(matrix_rank(m));
}

ElementaryGMModule load_gm_model(const std::string& json_text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("model file is not valid JSON: ") + e.what());
  }
  auto rational = [](const json& v) -> Rational {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw InputError("rationals must be strings \"p/q\" or integers");
  };
  auto matrix = [&](const json& v) {
    RationalMatrix m;
    for (const auto& row : v) {
      std::vector<Rational> r;
      for (const auto& x : row) r.push_back(rational(x));
      m.push_back(std::move(r));
    }
    return m;
  };
  try {
    std::vector<GMPiece> pieces;
    for (const auto& p : j.at("pieces")) {
      GMPiece g{rational(p.at("alpha")), p.at("dim").get<int>(), {}};
      if (p.contains("N")) g.N = matrix(p.at("N"));
      pieces.push_back(std::move(g));
    }
    std::optional<RationalMatrix> can;
    if (j.contains("can")) can = matrix(j.at("can"));
    return ElementaryGMModule::make(std::move(pieces), j.value("periodic", false), can);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed model file: ") + e.what());
  }
}

std::string dump_gm_model(const ElementaryGMModule& module) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["periodic"] = module.periodic();
  j["pieces"] = ordered_json::array();
  for (const auto& p : module.pieces()) {
    ordered_json n = ordered_json::array();
    for (const auto& row : p.N) {
      ordered_json r = ordered_json::array();
      for (const auto& x : row) r.push_back(to_string(x));
      n.push_back(r);
    }
    j["pieces"].push_back({{"alpha", to_string(p.alpha)}, {"dim", p.dim}, {"N", n}});
  }
  return j.dump(2);
}

}  // namespace bk
