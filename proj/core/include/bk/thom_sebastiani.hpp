#pragma once

#include <optional>
#include <vector>

#include "bk/brieskorn.hpp"

namespace bk {

/// h = f + g on the disjoint union of the variables (f's first), with
/// weights rescaled to w/d on each side so that h has degree 1. Throws
/// InputError when a variable name occurs on both sides.
GermProblem join(const GermProblem& f, const GermProblem& g);

/// Class of omega ^ eta over join(f, g).
CohomologyClass external_product(const CohomologyClass& omega, const CohomologyClass& eta);

/// eta in A_h^{i} with d eta = omega ^ g^k dg, omega a class over f.
std::optional<DifferentialForm> vanish_g_k_dg(const CohomologyClass& omega, const GermProblem& g, int k,
                                              SliceOptions opts = {});

struct TsSide {
  std::size_t rank = 0;
  std::vector<Rational> exponents;  // sorted
};

struct TsReport {
  TsSide left;   // {alpha_f + alpha_g + 1} over generator pairs
  TsSide right;  // generators of H^{n_f + n_g}_h
  /// Weights (normalized degree 1) where the slice dimension of H_h
  /// differs from sum_v dim H~_g at (c - c_v).
  std::vector<Rational> slice_mismatches;
  std::size_t slices_compared = 0;
  bool ranks_equal() const { return left.rank == right.rank; }
  bool exponents_equal() const { return left.exponents == right.exponents; }
  bool holds() const { return ranks_equal() && exponents_equal() && slice_mismatches.empty(); }
};

/// Generators of the top Brieskorn module (reduced in one variable).
TModuleStructure top_structure(const GermProblem& problem);

/// Both sides of the external-product isomorphism at the level of ranks,
/// exponent multisets and slice dimensions. f must be isolated; g must have
/// positive weights.
TsReport ts_compare(const GermProblem& f, const GermProblem& g);

}  // namespace bk
