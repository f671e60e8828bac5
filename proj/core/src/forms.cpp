#include "bk/forms.hpp"

#include <stdexcept>

namespace bk {

std::vector<int> wedge_indices(Wedge w) {
  std::vector<int> out;
  for (int i = 0; w != 0; ++i, w >>= 1)
    if (w & 1u) out.push_back(i);
  return out;
}

Wedge wedge_of(std::span<const int> indices) {
  Wedge w = 0;
  for (int i : indices) w |= Wedge{1} << i;
  return w;
}

bool WedgeLess::operator()(Wedge a, Wedge b) const {
  if (a == b) return false;
  const int da = wedge_degree(a), db = wedge_degree(b);
  if (da != db) return da < db;
  const Wedge diff = a ^ b;
  const Wedge lowest = diff & (~diff + 1);
  // the tuple containing the lowest differing index sorts first
  return (a & lowest) != 0;
}

int wedge_sign(Wedge a, Wedge b) {
  if ((a & b) != 0) return 0;
  int swaps = 0;
  for (Wedge rest = b; rest != 0; rest &= rest - 1) {
    const Wedge bit = rest & (~rest + 1);
    // factors of a to the right of this dx_j must move past it
    swaps += __builtin_popcount(a & ~(bit | (bit - 1)));
  }
  return (swaps % 2 == 0) ? 1 : -1;
}

DifferentialForm DifferentialForm::function(const Polynomial& p) {
  DifferentialForm f(p.nvars(), 0);
  f.add(0, p);
  return f;
}

DifferentialForm DifferentialForm::basis(std::size_t nvars, Wedge w, const Polynomial& coeff) {
  DifferentialForm f(nvars, wedge_degree(w));
  f.add(w, coeff);
  return f;
}

DifferentialForm DifferentialForm::volume(const Polynomial& coeff) {
  const std::size_t n = coeff.nvars();
  return basis(n, n == 32 ? ~Wedge{0} : (Wedge{1} << n) - 1, coeff);
}

Polynomial DifferentialForm::coefficient(Wedge w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? Polynomial(nvars_) : it->second;
}

void DifferentialForm::add(Wedge w, const Polynomial& c) {
  if (wedge_degree(w) != degree_) throw std::invalid_argument("wedge degree mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

DifferentialForm& DifferentialForm::operator+=(const DifferentialForm& o) {
  if (o.degree_ != degree_) throw std::invalid_argument("adding forms of different degree");
  for (const auto& [w, c] : o.coeffs_) add(w, c);
  return *this;
}

DifferentialForm& DifferentialForm::operator-=(const DifferentialForm& o) {
  if (o.degree_ != degree_) throw std::invalid_argument("subtracting forms of different degree");
  for (const auto& [w, c] : o.coeffs_) add(w, -c);
  return *this;
}

DifferentialForm DifferentialForm::operator+(const DifferentialForm& o) const {
  DifferentialForm r(*this);
  r += o;
  return r;
}

DifferentialForm DifferentialForm::operator-(const DifferentialForm& o) const {
  DifferentialForm r(*this);
  r -= o;
  return r;
}

DifferentialForm DifferentialForm::operator-() const {
  DifferentialForm r(*this);
  for (auto& [w, c] : r.coeffs_) c = -c;
  return r;
}

DifferentialForm DifferentialForm::operator*(const Polynomial& p) const {
  DifferentialForm r(nvars_, degree_);
  for (const auto& [w, c] : coeffs_) r.add(w, c * p);
  return r;
}

DifferentialForm DifferentialForm::operator*(const Rational& s) const {
  DifferentialForm r(nvars_, degree_);
  if (s == 0) return r;
  for (const auto& [w, c] : coeffs_) r.add(w, c * s);
  return r;
}

int DifferentialForm::total_degree() const {
  int best = -1;
  for (const auto& [w, c] : coeffs_) best = std::max(best, c.total_degree() + wedge_degree(w));
  return best;
}

DifferentialForm DifferentialForm::embed(std::size_t nvars, std::size_t offset) const {
  DifferentialForm r(nvars, degree_);
  for (const auto& [w, c] : coeffs_) r.add(w << offset, c.embed(nvars, offset));
  return r;
}

bool operator==(const DifferentialForm& a, const DifferentialForm& b) {
  if (a.degree_ != b.degree_ || a.coeffs_.size() != b.coeffs_.size()) return false;
  auto it = b.coeffs_.begin();
  for (const auto& [w, c] : a.coeffs_) {
    if (it->first != w || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
  DifferentialForm r(a.nvars(), a.degree() + b.degree());
  for (const auto& [wa, ca] : a.coefficients())
    for (const auto& [wb, cb] : b.coefficients()) {
      const int s = wedge_sign(wa, wb);
      if (s == 0) continue;
      Polynomial c = ca * cb;
      if (s < 0) c = -c;
      r.add(wa | wb, c);
    }
  return r;
}

Polynomial VectorField::apply(const Polynomial& g) const {
  Polynomial r(g.nvars());
  for (std::size_t i = 0; i < components.size(); ++i)
    if (!components[i].is_zero()) r += components[i] * partial_derivative(g, i);
  return r;
}

VectorField VectorField::operator*(const Rational& c) const {
  VectorField r = *this;
  for (auto& p : r.components) p *= c;
  return r;
}

bool VectorField::vanishes_at_origin() const {
  for (const auto& p : components)
    if (p.constant_term() != 0) return false;
  return true;
}

VectorField euler_field(const WeightVector& w) {
  VectorField e;
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) e.components.push_back(Polynomial::variable(n, i) * w[i]);
  return e;
}

DifferentialForm exterior_derivative(const DifferentialForm& omega) {
  const std::size_t n = omega.nvars();
  DifferentialForm r(n, omega.degree() + 1);
  for (const auto& [w, c] : omega.coefficients())
    for (std::size_t j = 0; j < n; ++j) {
      const Wedge bit = Wedge{1} << j;
      const int s = wedge_sign(bit, w);
      if (s == 0) continue;
      Polynomial dc = partial_derivative(c, j);
      if (dc.is_zero()) continue;
      r.add(bit | w, s > 0 ? dc : -dc);
    }
  return r;
}

DifferentialForm differential(const Polynomial& f) { return exterior_derivative(DifferentialForm::function(f)); }

DifferentialForm df_wedge(const Polynomial& f, const DifferentialForm& omega) { return wedge(differential(f), omega); }

DifferentialForm interior_product(const VectorField& xi, const DifferentialForm& omega) {
  const std::size_t n = omega.nvars();
  if (omega.degree() == 0) return DifferentialForm(n, -1);
  DifferentialForm r(n, omega.degree() - 1);
  for (const auto& [w, c] : omega.coefficients()) {
    int position = 0;
    for (int i : wedge_indices(w)) {
      const Polynomial& comp = xi.components.at(static_cast<std::size_t>(i));
      if (!comp.is_zero()) {
        Polynomial term = comp * c;
        if (position % 2 == 1) term = -term;
        r.add(w & ~(Wedge{1} << i), term);
      }
      ++position;
    }
  }
  return r;
}

DifferentialForm lie_derivative(const VectorField& xi, const DifferentialForm& omega) {
  DifferentialForm inner = interior_product(xi, exterior_derivative(omega));
  if (omega.degree() == 0) return inner;
  return exterior_derivative(interior_product(xi, omega)) + inner;
}

std::optional<Rational> weighted_degree(const DifferentialForm& omega, const WeightVector& w) {
  std::optional<Rational> deg;
  for (const auto& [wedge_bits, c] : omega.coefficients()) {
    Rational shift = 0;
    for (int i : wedge_indices(wedge_bits)) shift += w[static_cast<std::size_t>(i)];
    for (const auto& t : c.terms()) {
      const Rational d = w.of(t.monomial) + shift;
      if (!deg) deg = d;
      else if (*deg != d) return std::nullopt;
    }
  }
  return deg;
}

std::string to_string(const DifferentialForm& omega, std::span<const std::string> vars) {
  if (omega.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : omega.coefficients()) {
    if (!out.empty()) out += " + ";
    std::string dx;
    for (int i : wedge_indices(w)) {
      if (!dx.empty()) dx += "^";
      dx += "d" + vars[static_cast<std::size_t>(i)];
    }
    if (dx.empty()) {
      out += "(" + to_string(c, vars) + ")";
    } else {
      out += "(" + to_string(c, vars) + ") " + dx;
    }
  }
  return out;
}

std::vector<FormTerm> serialize_terms(const DifferentialForm& omega) {
  std::vector<FormTerm> out;
  for (const auto& [w, c] : omega.coefficients())
    for (const auto& t : c.terms()) out.push_back(FormTerm{t.coeff, t.monomial.exponents, wedge_indices(w)});
  return out;
}

DifferentialForm deserialize_terms(std::size_t nvars, int degree, std::span<const FormTerm> terms) {
  DifferentialForm r(nvars, degree);
  for (const auto& t : terms) {
    if (t.exponents.size() != nvars) throw std::invalid_argument("exponent vector length mismatch");
    for (std::size_t k = 1; k < t.wedge.size(); ++k)
      if (t.wedge[k - 1] >= t.wedge[k]) throw std::invalid_argument("wedge tuple not strictly increasing");
    for (int i : t.wedge)
      if (i < 0 || static_cast<std::size_t>(i) >= nvars) throw std::invalid_argument("wedge index out of range");
    r.add(wedge_of(t.wedge), Polynomial::term(Monomial(t.exponents), t.coeff));
  }
  return r;
}

}  // namespace bk
