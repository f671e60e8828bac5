#include "bk/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>

namespace bk {

namespace {

struct MTerm {
  std::uint32_t comp;
  Monomial mono;
  Rational coeff;
};

using MPoly = std::vector<MTerm>;

// Position over term: a smaller component index is larger.
struct ModuleOrder {
  const MonomialOrder& order;

  int compare(std::uint32_t ca, const Monomial& a, std::uint32_t cb, const Monomial& b) const {
    if (ca != cb) return ca < cb ? 1 : -1;
    return order.compare(a, b);
  }
  int compare(const MTerm& a, const MTerm& b) const { return compare(a.comp, a.mono, b.comp, b.mono); }
};

MPoly from_vector(const PolyVector& v, const ModuleOrder& ord) {
  MPoly out;
  for (std::uint32_t c = 0; c < v.size(); ++c)
    for (const auto& t : v[c].terms()) out.push_back(MTerm{c, t.monomial, t.coeff});
  std::sort(out.begin(), out.end(), [&](const MTerm& a, const MTerm& b) { return ord.compare(a, b) > 0; });
  return out;
}

PolyVector to_vector(const MPoly& p, std::size_t rank, std::size_t nvars) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : p) parts.at(t.comp).push_back(Term{t.mono, t.coeff});
  PolyVector out;
  out.reserve(rank);
  for (auto& part : parts) out.push_back(Polynomial::from_terms(nvars, std::move(part)));
  return out;
}

void make_monic(MPoly& p) {
  if (p.empty() || p.front().coeff == 1) return;
  const Rational inv = 1 / p.front().coeff;
  for (auto& t : p) t.coeff *= inv;
}

// p[from..] - c * m * g, where m * lead(g) == p[from].mono. Terms before
// `from` are left untouched.
void subtract_multiple(MPoly& p, std::size_t from, const Rational& c, const Monomial& m, const MPoly& g,
                       const ModuleOrder& ord) {
  MPoly out;
  out.reserve(p.size() + g.size());
  for (std::size_t k = 0; k < from; ++k) out.push_back(std::move(p[k]));
  std::size_t i = from, j = 0;
  while (i < p.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(std::move(p[i++]));
      continue;
    }
    Monomial gm = g[j].mono * m;
    const int cmp = i == p.size() ? -1 : ord.compare(p[i].comp, p[i].mono, g[j].comp, gm);
    if (cmp > 0) {
      out.push_back(std::move(p[i++]));
    } else if (cmp < 0) {
      out.push_back(MTerm{g[j].comp, std::move(gm), -c * g[j].coeff});
      ++j;
    } else {
      Rational v = p[i].coeff - c * g[j].coeff;
      if (v != 0) out.push_back(MTerm{p[i].comp, std::move(p[i].mono), std::move(v)});
      ++i;
      ++j;
    }
  }
  p = std::move(out);
}

class Reducer {
 public:
  Reducer(const std::vector<MPoly>& basis, const ModuleOrder& ord) : basis_(basis), ord_(ord) {}

  const MPoly* find_divisor(const MTerm& t) const {
    for (const auto& g : basis_)
      if (!g.empty() && g.front().comp == t.comp && g.front().mono.divides(t.mono)) return &g;
    return nullptr;
  }

  // Full reduction when `full`, otherwise only the leading term is cleared.
  MPoly reduce(MPoly p, bool full) const {
    std::size_t pos = 0;
    while (pos < p.size()) {
      const MPoly* g = find_divisor(p[pos]);
      if (g == nullptr) {
        if (!full) return p;
        ++pos;
        continue;
      }
      const Rational c = p[pos].coeff / g->front().coeff;
      const Monomial m = p[pos].mono / g->front().mono;
      subtract_multiple(p, pos, c, m, *g, ord_);
    }
    return p;
  }

 private:
  const std::vector<MPoly>& basis_;
  const ModuleOrder& ord_;
};

class Buchberger {
 public:
  Buchberger(const MonomialOrder& order, bool ideal) : ord_{order}, ideal_(ideal) {}

  std::vector<MPoly> run(std::vector<MPoly> input) {
    std::sort(input.begin(), input.end(), [&](const MPoly& a, const MPoly& b) {
      if (a.empty() || b.empty()) return !a.empty() && b.empty();
      return ord_.compare(a.front(), b.front()) < 0;
    });
    for (auto& f : input) {
      MPoly r = Reducer(basis_, ord_).reduce(std::move(f), true);
      if (!r.empty()) insert(std::move(r));
    }
    while (!pairs_.empty()) {
      const std::size_t k = select_pair();
      const Pair pair = pairs_[k];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(k));
      MPoly s = s_polynomial(pair);
      MPoly r = Reducer(basis_, ord_).reduce(std::move(s), true);
      if (!r.empty()) insert(std::move(r));
    }
    return finalize();
  }

 private:
  struct Pair {
    std::size_t i, j;
    std::uint32_t comp;
    Monomial lcm;
  };

  bool disjoint(std::size_t i, std::size_t j) const {
    if (!ideal_) return false;
    const auto& a = basis_[i].front().mono.exponents;
    const auto& b = basis_[j].front().mono.exponents;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] != 0 && b[k] != 0) return false;
    return true;
  }

  std::size_t select_pair() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const int c = ord_.compare(pairs_[k].comp, pairs_[k].lcm, pairs_[best].comp, pairs_[best].lcm);
      if (c < 0) best = k;
    }
    return best;
  }

  MPoly s_polynomial(const Pair& p) const {
    const MPoly& f = basis_[p.i];
    const MPoly& g = basis_[p.j];
    MPoly a;
    const Monomial mf = p.lcm / f.front().mono;
    for (const auto& t : f) a.push_back(MTerm{t.comp, t.mono * mf, t.coeff});
    const Monomial mg = p.lcm / g.front().mono;
    // both are monic, so cancelling the leads is a plain subtraction
    subtract_multiple(a, 0, Rational(1), mg, g, ord_);
    return a;
  }

  void insert(MPoly h) {
    make_monic(h);
    const std::size_t k = basis_.size();
    basis_.push_back(std::move(h));
    const MTerm& lead = basis_[k].front();

    std::vector<Pair> candidates;
    for (std::size_t i = 0; i < k; ++i) {
      if (basis_[i].empty() || basis_[i].front().comp != lead.comp) continue;
      candidates.push_back(Pair{i, k, lead.comp, Monomial::lcm(basis_[i].front().mono, lead.mono)});
    }

    // Gebauer-Moeller: drop candidates whose lcm is a proper multiple of
    // another candidate's lcm, keep one per equal lcm (preferring a
    // disjoint pair, which then kills the whole class).
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      bool dominated = false;
      for (std::size_t b = 0; b < candidates.size() && !dominated; ++b) {
        if (a == b) continue;
        const auto& la = candidates[a].lcm;
        const auto& lb = candidates[b].lcm;
        if (lb.divides(la) && !(la == lb)) dominated = true;
      }
      if (!dominated) kept.push_back(candidates[a]);
    }
    std::vector<Pair> unique;
    for (const auto& p : kept) {
      auto it = std::find_if(unique.begin(), unique.end(), [&](const Pair& q) { return q.lcm == p.lcm; });
      if (it == unique.end()) {
        unique.push_back(p);
      } else if (disjoint(p.i, p.j)) {
        *it = p;
      }
    }
    std::vector<Pair> fresh;
    for (const auto& p : unique)
      if (!disjoint(p.i, p.j)) fresh.push_back(p);

    // Chain criterion on old pairs.
    std::vector<Pair> survivors;
    survivors.reserve(pairs_.size() + fresh.size());
    for (auto& p : pairs_) {
      if (p.comp == lead.comp && lead.mono.divides(p.lcm)) {
        const Monomial li = Monomial::lcm(basis_[p.i].front().mono, lead.mono);
        const Monomial lj = Monomial::lcm(basis_[p.j].front().mono, lead.mono);
        if (!(li == p.lcm) && !(lj == p.lcm)) continue;
      }
      survivors.push_back(std::move(p));
    }
    for (auto& p : fresh) survivors.push_back(std::move(p));
    pairs_ = std::move(survivors);
  }

  std::vector<MPoly> finalize() {
    // minimal basis: drop elements whose lead is divisible by another lead
    std::vector<MPoly> minimal;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const MTerm& li = basis_[i].front();
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (i == j) continue;
        const MTerm& lj = basis_[j].front();
        if (lj.comp != li.comp || !lj.mono.divides(li.mono)) continue;
        // equal leads: keep the earliest
        if (!(lj.mono == li.mono) || j < i) redundant = true;
      }
      if (!redundant) minimal.push_back(basis_[i]);
    }
    std::vector<MPoly> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      MPoly head{minimal[i].front()};
      MPoly tail(minimal[i].begin() + 1, minimal[i].end());
      std::vector<MPoly> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      MPoly t = Reducer(others, ord_).reduce(std::move(tail), true);
      for (auto& term : t) head.push_back(std::move(term));
      reduced.push_back(std::move(head));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const MPoly& a, const MPoly& b) { return ord_.compare(a.front(), b.front()) < 0; });
    return reduced;
  }

  ModuleOrder ord_;
  bool ideal_;
  std::vector<MPoly> basis_;
  std::vector<Pair> pairs_;
};

// ---- cache ---------------------------------------------------------------

class GroebnerCache {
 public:
  static GroebnerCache& instance() {
    static GroebnerCache cache;
    return cache;
  }

  std::optional<std::vector<PolyVector>> find(const std::string& key) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  void store(const std::string& key, const std::vector<PolyVector>& basis) {
    std::unique_lock lock(mutex_);
    entries_.emplace(key, basis);
  }

  std::size_t clear() {
    std::unique_lock lock(mutex_);
    const std::size_t n = entries_.size();
    entries_.clear();
    return n;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, std::vector<PolyVector>> entries_;
};

std::string cache_key(const SubmoduleOfFree& m, const MonomialOrder& order, std::size_t nvars) {
  std::string key = order.key() + "|" + std::to_string(nvars) + "|" + std::to_string(m.rank);
  for (const auto& g : m.generators) {
    key += "|";
    for (std::size_t c = 0; c < g.size(); ++c) {
      key += "[";
      for (const auto& t : g[c].terms()) {
        key += to_string(t.coeff) + ":";
        for (int e : t.monomial.exponents) key += std::to_string(e) + ",";
        key += ";";
      }
      key += "]";
    }
  }
  return key;
}

std::size_t nvars_of(const SubmoduleOfFree& m) {
  for (const auto& g : m.generators)
    for (const auto& p : g)
      if (p.nvars() != 0) return p.nvars();
  return 0;
}

std::vector<PolyVector> compute_module_basis(const SubmoduleOfFree& module, const MonomialOrder& order) {
  const std::size_t nvars = nvars_of(module);
  const std::string key = cache_key(module, order, nvars);
  if (auto hit = GroebnerCache::instance().find(key)) return *hit;

  ModuleOrder ord{order};
  std::vector<MPoly> input;
  for (const auto& g : module.generators) {
    if (g.size() != module.rank) throw std::invalid_argument("generator length does not match module rank");
    MPoly p = from_vector(g, ord);
    if (!p.empty()) input.push_back(std::move(p));
  }
  std::vector<MPoly> gb = Buchberger(order, module.rank == 1).run(std::move(input));
  std::vector<PolyVector> out;
  out.reserve(gb.size());
  for (const auto& p : gb) out.push_back(to_vector(p, module.rank, nvars));
  GroebnerCache::instance().store(key, out);
  return out;
}

// Drops variable 0 from polynomials that do not involve it.
Polynomial drop_first_variable(const Polynomial& p) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    Monomial m(std::vector<int>(t.monomial.exponents.begin() + 1, t.monomial.exponents.end()));
    out.push_back(Term{std::move(m), t.coeff});
  }
  return Polynomial::from_terms(p.nvars() - 1, std::move(out));
}

}  // namespace

std::vector<Polynomial> groebner_basis(std::span<const Polynomial> gens, const MonomialOrder& order) {
  SubmoduleOfFree m{1, {}};
  for (const auto& g : gens) m.generators.push_back(PolyVector{g});
  std::vector<Polynomial> out;
  for (auto& v : compute_module_basis(m, order)) out.push_back(std::move(v[0]));
  return out;
}

Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw std::invalid_argument("leading monomial of zero");
  const Monomial* best = &p.terms().front().monomial;
  for (const auto& t : p.terms())
    if (order.compare(t.monomial, *best) > 0) best = &t.monomial;
  return *best;
}

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> basis, const MonomialOrder& order) {
  std::vector<PolyVector> b;
  for (const auto& g : basis) b.push_back(PolyVector{g});
  return module_normal_form(PolyVector{p}, b, order)[0];
}

PolyVector module_normal_form(const PolyVector& v, std::span<const PolyVector> basis, const MonomialOrder& order) {
  ModuleOrder ord{order};
  std::vector<MPoly> b;
  for (const auto& g : basis) {
    MPoly m = from_vector(g, ord);
    if (!m.empty()) b.push_back(std::move(m));
  }
  std::size_t nvars = 0;
  for (const auto& p : v) nvars = std::max(nvars, p.nvars());
  MPoly r = Reducer(b, ord).reduce(from_vector(v, ord), true);
  return to_vector(r, v.size(), nvars);
}

bool ideal_contains(std::span<const Polynomial> gens, const Polynomial& p) {
  if (p.is_zero()) return true;
  const auto gb = groebner_basis(gens);
  return normal_form(p, gb).is_zero();
}

std::vector<Polynomial> ideal_intersect(std::span<const Polynomial> I, std::span<const Polynomial> J) {
  std::size_t n = 0;
  for (const auto& p : I) n = std::max(n, p.nvars());
  for (const auto& p : J) n = std::max(n, p.nvars());
  const Polynomial T = Polynomial::variable(n + 1, 0);
  const Polynomial one_minus_T = Polynomial::constant(n + 1, 1) - T;
  std::vector<Polynomial> gens;
  for (const auto& p : I) gens.push_back(T * p.embed(n + 1, 1));
  for (const auto& p : J) gens.push_back(one_minus_T * p.embed(n + 1, 1));
  std::vector<Polynomial> out;
  for (const auto& g : groebner_basis(gens, MonomialOrder::elimination(1)))
    if (g.is_zero() || std::all_of(g.terms().begin(), g.terms().end(),
                                   [](const Term& t) { return t.monomial.exponents[0] == 0; }))
      out.push_back(drop_first_variable(g));
  return out;
}

std::optional<std::size_t> quotient_dimension(std::span<const Polynomial> I) {
  const auto gb = groebner_basis(I);
  std::size_t n = 0;
  for (const auto& p : I) n = std::max(n, p.nvars());
  if (gb.empty()) return n == 0 ? std::optional<std::size_t>(1) : std::nullopt;
  std::vector<Monomial> leads;
  for (const auto& g : gb) leads.push_back(leading_monomial(g, MonomialOrder::grevlex()));
  for (const auto& l : leads)
    if (l.total_degree() == 0) return 0;
  // finite iff each variable has a pure power among the leading monomials
  std::vector<int> bound(n, -1);
  for (const auto& l : leads) {
    int nonzero = -1, count = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (l.exponents[i] != 0) {
        nonzero = static_cast<int>(i);
        ++count;
      }
    if (count == 1) {
      const int e = l.exponents[static_cast<std::size_t>(nonzero)];
      int& b = bound[static_cast<std::size_t>(nonzero)];
      b = b < 0 ? e : std::min(b, e);
    }
  }
  for (int b : bound)
    if (b < 0) return std::nullopt;
  // count standard monomials in the box
  std::size_t count = 0;
  Monomial m(n);
  for (;;) {
    bool standard = true;
    for (const auto& l : leads)
      if (l.divides(m)) {
        standard = false;
        break;
      }
    if (standard) ++count;
    std::size_t k = 0;
    while (k < n) {
      if (++m.exponents[k] < bound[k]) break;
      m.exponents[k] = 0;
      ++k;
    }
    if (k == n) break;
  }
  return count;
}

bool radical_contains(std::span<const Polynomial> I, const Polynomial& p) {
  const std::size_t n = p.nvars();
  std::vector<Polynomial> gens;
  for (const auto& g : I) gens.push_back(g.embed(n + 1, 1));
  gens.push_back(Polynomial::constant(n + 1, 1) - Polynomial::variable(n + 1, 0) * p.embed(n + 1, 1));
  const auto gb = groebner_basis(gens);
  return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

std::vector<PolyVector> module_groebner_basis(const SubmoduleOfFree& module, const MonomialOrder& order) {
  return compute_module_basis(module, order);
}

bool module_contains(const SubmoduleOfFree& module, const PolyVector& v) {
  const auto gb = module_groebner_basis(module);
  const PolyVector r = module_normal_form(v, gb);
  return std::all_of(r.begin(), r.end(), [](const Polynomial& p) { return p.is_zero(); });
}

bool modules_equal(const SubmoduleOfFree& a, const SubmoduleOfFree& b) {
  if (a.rank != b.rank) return false;
  for (const auto& g : a.generators)
    if (!module_contains(b, g)) return false;
  for (const auto& g : b.generators)
    if (!module_contains(a, g)) return false;
  return true;
}

SubmoduleOfFree module_kernel(const PolyMatrix& matrix, std::size_t ncols) {
  const std::size_t m = matrix.size();
  std::size_t nvars = 0;
  for (const auto& row : matrix) {
    if (row.size() != ncols) throw std::invalid_argument("ragged matrix");
    for (const auto& p : row) nvars = std::max(nvars, p.nvars());
  }
  SubmoduleOfFree graph{m + ncols, {}};
  for (std::size_t c = 0; c < ncols; ++c) {
    PolyVector v(m + ncols, Polynomial(nvars));
    for (std::size_t r = 0; r < m; ++r) v[r] = matrix[r][c];
    v[m + c] = Polynomial::constant(nvars, 1);
    graph.generators.push_back(std::move(v));
  }
  SubmoduleOfFree kernel{ncols, {}};
  for (const auto& g : module_groebner_basis(graph)) {
    bool in_kernel = true;
    for (std::size_t r = 0; r < m; ++r)
      if (!g[r].is_zero()) {
        in_kernel = false;
        break;
      }
    if (in_kernel) kernel.generators.emplace_back(g.begin() + static_cast<std::ptrdiff_t>(m), g.end());
  }
  return kernel;
}

std::size_t clear_groebner_cache() { return GroebnerCache::instance().clear(); }
std::size_t groebner_cache_size() { return GroebnerCache::instance().size(); }

}  // namespace bk
