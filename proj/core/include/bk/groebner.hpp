#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bk/monomial_order.hpp"
#include "bk/polynomial.hpp"

namespace bk {

using PolyVector = std::vector<Polynomial>;
/// Row-major m x n matrix; entry [r][c].
using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Submodule of the free module of rank `rank` given by generators.
struct SubmoduleOfFree {
  std::size_t rank = 0;
  std::vector<PolyVector> generators;
};

/// Reduced Groebner basis, sorted by ascending leading monomial. The basis
/// of the zero ideal is empty. Buchberger with the Gebauer-Moeller update
/// (product and chain criteria) and the normal selection strategy.
std::vector<Polynomial> groebner_basis(std::span<const Polynomial> gens,
                                       const MonomialOrder& order = MonomialOrder::grevlex());

/// Fully reduced remainder of p modulo a Groebner basis.
Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> basis,
                       const MonomialOrder& order = MonomialOrder::grevlex());

/// Leading monomial under `order`; p must be nonzero.
Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order);

bool ideal_contains(std::span<const Polynomial> gens, const Polynomial& p);

/// Generators of I ∩ J by eliminating an auxiliary variable T from T*I + (1-T)*J.
std::vector<Polynomial> ideal_intersect(std::span<const Polynomial> I, std::span<const Polynomial> J);

/// dim_Q of Q[x]/I, or nullopt when infinite.
std::optional<std::size_t> quotient_dimension(std::span<const Polynomial> I);

/// p vanishes on V(I): 1 ∈ I + (1 - T p) in a ring with one extra variable.
bool radical_contains(std::span<const Polynomial> I, const Polynomial& p);

/// Position-over-term module Groebner basis (component 0 is largest).
std::vector<PolyVector> module_groebner_basis(const SubmoduleOfFree& module,
                                              const MonomialOrder& order = MonomialOrder::grevlex());

PolyVector module_normal_form(const PolyVector& v, std::span<const PolyVector> basis,
                              const MonomialOrder& order = MonomialOrder::grevlex());

bool module_contains(const SubmoduleOfFree& module, const PolyVector& v);

/// True when both modules generate the same submodule.
bool modules_equal(const SubmoduleOfFree& a, const SubmoduleOfFree& b);

/// Generators of {v : matrix * v = 0} inside the rank-n free module, via a
/// Groebner basis of the graph module [matrix; identity].
SubmoduleOfFree module_kernel(const PolyMatrix& matrix, std::size_t ncols);

/// Empties the shared basis cache; returns the number of evicted entries.
std::size_t clear_groebner_cache();
std::size_t groebner_cache_size();

}  // namespace bk
