#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bk/germ.hpp"
#include "bk/rational.hpp"

namespace bk {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct GMPiece {
  Rational alpha;
  int dim = 0;
  RationalMatrix N;  // dim x dim, nilpotent
};

/// Finitely supported model of M = ⊕ M^alpha.
///
/// A periodic model stands for the module with d_t bijective, where M^alpha
/// and M^{alpha+1} are identified through t and d_t; its pieces are the
/// exponents of a lattice and nearby/vanishing cycles are read off after
/// reduction mod 1. A literal model is taken as written: only the listed
/// exponents exist, and the unipotent part of can (M^0 -> M^{-1}) is an
/// explicit matrix that defaults to zero.
class ElementaryGMModule {
 public:
  /// Validates distinct exponents, square nilpotent N of the right size, and
  /// the can matrix shape (dim M^{-1} x dim M^0). Throws InputError.
  static ElementaryGMModule make(std::vector<GMPiece> pieces, bool periodic,
                                 std::optional<RationalMatrix> can_unipotent = std::nullopt);

  const std::vector<GMPiece>& pieces() const { return pieces_; }
  bool periodic() const { return periodic_; }
  int total_dimension() const;
  const GMPiece* piece(const Rational& alpha) const;
  const std::optional<RationalMatrix>& can_unipotent() const { return can_; }

 private:
  std::vector<GMPiece> pieces_;  // sorted by alpha
  bool periodic_ = false;
  std::optional<RationalMatrix> can_;
};

/// Exponent pieces of H^n (reduced H^1 when n = 1) of an isolated
/// quasi-homogeneous germ; N = 0. Throws NonIsolated.
ElementaryGMModule from_brieskorn(const GermProblem& problem, int degree);

struct PsiPhi {
  std::vector<GMPiece> psi;  // alpha in (-1, 0]
  std::vector<GMPiece> phi;  // alpha in [-1, 0)
  int psi_dim = 0;
  int phi_dim = 0;
};
PsiPhi psi_phi(const ElementaryGMModule& module);

struct CanBlock {
  Rational source_alpha;  // exponent in psi
  Rational target_alpha;  // exponent in phi
  RationalMatrix matrix;  // target_dim x source_dim
};
struct CanMap {
  std::vector<CanBlock> blocks;
  bool surjective = true;
};
/// Identity on exponents in (-1, 0); d_t from the 0-piece to the -1-piece.
CanMap can_map(const ElementaryGMModule& module);

/// dim Gr_V^alpha.
int v_dim(const ElementaryGMModule& module, const Rational& alpha);
/// dim V^alpha = sum over beta >= alpha.
int v_filtration_dim(const ElementaryGMModule& module, const Rational& alpha);
/// Kernel dimension of d_t in the model (0 for periodic models).
int dt_kernel_dim(const ElementaryGMModule& module);

/// Model files: {"periodic": bool, "pieces": [{"alpha": "p/q", "dim": k,
/// "N": [["0", ...], ...]}], "can": [[...]]}; N and can are optional.
ElementaryGMModule load_gm_model(const std::string& json_text);
std::string dump_gm_model(const ElementaryGMModule& module);

std::size_t matrix_rank(const RationalMatrix& m);

}  // namespace bk
