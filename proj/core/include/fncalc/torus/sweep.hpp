#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "fncalc/torus/spectral.hpp"

namespace fncalc::torus {

struct SweepConfig {
  int max_freq = 1;
  /// Degrees to report; empty means 0..n.
  std::vector<int> degrees;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
  bool anticommutation = true;
  bool vector_fields = true;
  bool adjoint = false;      ///< L* formula vs conjugate transpose on every (k, l)
  bool duality_maps = false; ///< subspace-level duality maps on every (k, l)
  bool symbols = false;      ///< symbol classes at every degree for k != 0
};

struct ModeRecord {
  Frequency frequency;
  std::vector<ModeCohomologyReport> reports;  ///< one per swept degree, in order
  bool anticommutation = true;
  std::size_t h0 = 0;
  bool adjoint = true;
  bool duality_maps = true;
  std::vector<SymbolClass> symbols;  ///< indexed by degree 0..n when requested
};

struct DegreeTotals {
  std::size_t zero_mode_harmonic = 0;
  std::size_t nonzero_harmonic = 0;  ///< Σ over k != 0 of complex dims
  long nonzero_cohomology = 0;
  std::size_t modes_with_harmonic = 0;
  bool cohomology_equals_harmonic = true;
  bool regular = true;
  bool split_complete = true;       ///< harmonic = Δ-part + d-part + d*-part
  bool duality = true;              ///< harmonic(k, l) = harmonic(-k, n-l), when n-l is swept
  bool zero_harmonic_forms = true;  ///< no Δ-harmonic part at k != 0
};

struct SweepResult {
  SweepConfig config;
  int dim = 0;
  std::vector<int> degrees;
  std::vector<ModeRecord> records;  ///< lexicographic in k, zero mode included
  std::map<int, DegreeTotals> totals;
  std::size_t h0_total = 0;
  std::size_t h0_nonzero = 0;
  bool anticommutation = true;
  bool adjoint = true;
  bool duality_maps = true;
  /// dim d-part(k, l+1) = dim d*-part(k, l) whenever both degrees are swept.
  bool split_transfer = true;
};

/// Computes every mode with |k|_∞ <= max_freq in parallel; results are merged
/// in lexicographic frequency order, so the outcome does not depend on the
/// number of threads.
SweepResult sweep(const ModeOperators& ops, const SweepConfig& config);

/// Index of k in enumerate_modes(n, bound).
std::size_t mode_index(const Frequency& k, int bound);

}  // namespace fncalc::torus
