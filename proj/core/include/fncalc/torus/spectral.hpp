#pragma once

#include <cstddef>
#include <string>

#include "fncalc/torus/mode_block.hpp"

namespace fncalc::torus {

/// Dimension counts of one (mode, degree) pair, all over C.
struct ModeCohomologyReport {
  Frequency frequency;
  int degree = 0;
  std::size_t ker_lie = 0;     ///< dim ker(L_{Ψ;l+q} on Λ^l)
  std::size_t im_lie = 0;      ///< rank(L_{Ψ;l}), image in Λ^l
  std::size_t harmonic = 0;    ///< dim ker L_Ψ ∩ ker L*_Ψ on Λ^l
  long cohomology = 0;         ///< ker_lie - im_lie
  std::size_t harmonic_forms = 0;  ///< harmonic ∩ ker Δ
  std::size_t d_part = 0;          ///< harmonic ∩ im d
  std::size_t dstar_part = 0;      ///< harmonic ∩ im d*
  bool regular = false;            ///< Λ^l = ker L*_{Ψ;l} ⊕ im L_{Ψ;l}
};

std::size_t harmonic_dim(const ModeOperators& ops, const Frequency& k, int l);
long cohomology_dim(const ModeOperators& ops, const Frequency& k, int l);

struct RegularityResult {
  bool regular = false;
  std::size_t ker_lie_star = 0;
  std::size_t im_lie = 0;
  std::size_t intersection = 0;
  std::size_t total = 0;  ///< C(n, l)
};

RegularityResult regularity_check(const ModeOperators& ops, const Frequency& k, int l);

/// Full report including the split of the harmonic space into its Δ-harmonic,
/// d-exact and d*-exact parts.
ModeCohomologyReport decomposition_report(const ModeOperators& ops, const Frequency& k, int l);

struct AnticommutationResult {
  bool lie_d = false;       ///< L d = -d L
  bool lie_dstar = false;   ///< L d* = -d* L
  bool lie_laplacian = false;  ///< L Δ = Δ L
  [[nodiscard]] bool ok() const { return lie_d && lie_dstar && lie_laplacian; }
};

/// Checks the identities on every degree at mode k.
AnticommutationResult anticommutation_check(const ModeOperators& ops, const Frequency& k);

enum class SymbolClass { injective, surjective, bijective, neither };
std::string to_string(SymbolClass c);

/// Classifies L_{Ψ;l}: Λ^{l-q} → Λ^l at frequency k ≠ 0 (DomainError for k = 0).
SymbolClass symbol_class(const ModeOperators& ops, const Frequency& k, int l);

/// dim ker(ad_Ψ̂) on vector fields exp(i<k,x>) v.
std::size_t tm_mode_h0(const ModeOperators& ops, const Frequency& k);

/// ker(L_{Ψ;q+1} on 1-forms) = {α : L_{α#}(*Ψ) = 0, d*α = 0} at mode k,
/// comparing the two kernels as subspaces.
bool one_form_kernel_check(const ModeOperators& ops, const Frequency& k);

/// d*(k) assembled symbolically through the Hodge star equals the conjugate
/// transpose of d(k) on Λ^{l-1} → Λ^l (flat L² adjointness) on T^n.
bool codifferential_adjoint_check(const ModelSpace& torus, const Frequency& k, int l);

/// L*_{Ψ;l} from the star formula equals the conjugate transpose of L_{Ψ;l}.
bool lie_adjoint_check(const ModeOperators& ops, const Frequency& k, int l);

/// harmonic(k, l) ≅ harmonic(k, n-l) under *, and ≅ harmonic(-k, l) under
/// complex conjugation. Checks both maps send the kernels onto each other.
bool duality_map_check(const ModeOperators& ops, const Frequency& k, int l);

}  // namespace fncalc::torus
