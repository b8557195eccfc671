#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fncalc/linfty/model.hpp"

namespace fncalc::linfty {

/// m_k(ω_1..ω_k) = P[...[[χ, I(ω_1)], I(ω_2)]..., I(ω_k)]; m_0 = P(χ).
NormalValuedForm multibracket(const FlatAssociativeModel& model, const std::vector<NormalValuedForm>& args);

/// P(L_{I(-V_1)} ... L_{I(-V_k)} χ) for degree-0 inputs, with the Lie
/// derivatives of tensors computed by the Leibniz rule. DomainError on other degrees.
NormalValuedForm mk_via_lie(const FlatAssociativeModel& model, const std::vector<NormalValuedForm>& fields);

/// All (k, l)-shuffles of 0..k+l-1 as permutations σ (σ(0) < ... < σ(k-1), σ(k) < ...).
std::vector<std::vector<int>> shuffles(int k, int l);

/// Koszul sign of rearranging homogeneous elements of the given parities into
/// the order σ(0), σ(1), ...: (-1) to the sum of p_i p_j over inverted pairs.
int koszul_sign(const std::vector<int>& sigma, const std::vector<int>& parities);

/// Σ_{k+l=n} Σ_{(k,l)-shuffles} (-1)^α m_{l+1}(m_k(a_σ(1..k)), a_σ(k+1..n)), k >= 1.
NormalValuedForm generalized_jacobi(const FlatAssociativeModel& model, const std::vector<NormalValuedForm>& args);

/// The strict identities for n = 1, 2, 3 written out term by term.
NormalValuedForm explicit_jacobi(const FlatAssociativeModel& model, const std::vector<NormalValuedForm>& args);

/// Random element of Ω^p(L, NL): up to `terms` monomial terms with
/// coefficient degree <= `max_poly` and small rational scalars.
NormalValuedForm random_normal_form(const FlatAssociativeModel& model, int degree, std::mt19937_64& rng,
                                    int terms = 3, int max_poly = 2);

/// Random element of ker P on R^7: sums of tangential-valued terms and of
/// normal-valued terms that vanish on L.
VectorValuedForm random_kernel_element(const FlatAssociativeModel& model, std::mt19937_64& rng, int terms = 3);

/// True iff P(K) = 0.
bool in_kernel(const FlatAssociativeModel& model, const VectorValuedForm& k);

struct CheckCount {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;
  [[nodiscard]] bool ok() const { return failed == 0; }
};

struct VDataReport {
  CheckCount abelian;          ///< [I(a), I(b)] = 0
  CheckCount kernel_closed;    ///< [ker P, ker P] ⊂ ker P
  bool chi_square_zero = false;  ///< [χ, χ] = 0
  bool chi_in_kernel = false;    ///< χ ∈ ker P (the plane is associative)
  [[nodiscard]] bool ok() const { return abelian.ok() && kernel_closed.ok() && chi_square_zero; }
};

/// Structured samples (all single terms of low degree) plus `random_samples`
/// seeded random pairs for each check.
VDataReport vdata_check(const FlatAssociativeModel& model, std::uint64_t seed, int random_samples = 20);

struct JacobiReport {
  std::vector<CheckCount> by_arity;       ///< index n-1: shuffle form of the n-th identity
  std::vector<CheckCount> explicit_form;  ///< index n-1: written-out identity (n <= 3)
  CheckCount symmetry;                    ///< graded symmetry under adjacent swaps
  CheckCount lie_agreement;               ///< multibracket = mk_via_lie on degree-0 inputs
  std::vector<std::size_t> nonzero_brackets;  ///< per arity: samples where m_k was nonzero
  [[nodiscard]] bool ok() const;
};

JacobiReport jacobi_suite(const FlatAssociativeModel& model, int max_arity, int samples, std::uint64_t seed);

}  // namespace fncalc::linfty
