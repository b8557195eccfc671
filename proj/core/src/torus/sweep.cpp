#include "fncalc/torus/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

namespace fncalc::torus {

namespace {

bool is_zero_mode(const Frequency& k) {
  return std::all_of(k.begin(), k.end(), [](int v) { return v == 0; });
}

ModeRecord compute_mode(const ModeOperators& ops, const Frequency& k, const SweepConfig& config,
                        const std::vector<int>& degrees) {
  ModeRecord rec;
  rec.frequency = k;
  for (int l : degrees) {
    rec.reports.push_back(decomposition_report(ops, k, l));
    if (config.adjoint && !lie_adjoint_check(ops, k, l)) rec.adjoint = false;
    if (config.duality_maps && !duality_map_check(ops, k, l)) rec.duality_maps = false;
  }
  if (config.anticommutation) rec.anticommutation = anticommutation_check(ops, k).ok();
  if (config.vector_fields) rec.h0 = tm_mode_h0(ops, k);
  if (config.symbols && !is_zero_mode(k)) {
    for (int l = 0; l <= ops.dim(); ++l) rec.symbols.push_back(symbol_class(ops, k, l));
  }
  return rec;
}

}  // namespace

std::size_t mode_index(const Frequency& k, int bound) {
  std::size_t index = 0;
  const auto side = static_cast<std::size_t>(2 * bound + 1);
  for (int v : k) index = index * side + static_cast<std::size_t>(v + bound);
  return index;
}

SweepResult sweep(const ModeOperators& ops, const SweepConfig& config) {
  SweepResult result;
  result.config = config;
  result.dim = ops.dim();
  const int n = ops.dim();
  if (config.degrees.empty()) {
    result.degrees.resize(static_cast<std::size_t>(n) + 1);
    std::iota(result.degrees.begin(), result.degrees.end(), 0);
  } else {
    result.degrees = config.degrees;
  }
  const auto modes = enumerate_modes(n, config.max_freq);
  result.records.resize(modes.size());

  unsigned workers = config.threads != 0 ? config.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(modes.size()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= modes.size()) return;
      try {
        result.records[i] = compute_mode(ops, modes[i], config, result.degrees);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = modes.size();
        return;
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  // Ordered merge.
  for (std::size_t i = 0; i < result.records.size(); ++i) {
    const ModeRecord& rec = result.records[i];
    const bool zero = is_zero_mode(rec.frequency);
    result.h0_total += rec.h0;
    if (!zero) result.h0_nonzero += rec.h0;
    result.anticommutation = result.anticommutation && rec.anticommutation;
    result.adjoint = result.adjoint && rec.adjoint;
    result.duality_maps = result.duality_maps && rec.duality_maps;
    const ModeRecord& mirror = result.records[result.records.size() - 1 - i];
    for (std::size_t d = 0; d < result.degrees.size(); ++d) {
      const ModeCohomologyReport& rep = rec.reports[d];
      DegreeTotals& t = result.totals[rep.degree];
      if (zero) {
        t.zero_mode_harmonic += rep.harmonic;
      } else {
        t.nonzero_harmonic += rep.harmonic;
        t.nonzero_cohomology += rep.cohomology;
        if (rep.harmonic > 0) ++t.modes_with_harmonic;
        if (rep.harmonic_forms != 0) t.zero_harmonic_forms = false;
      }
      if (rep.cohomology < 0 || static_cast<std::size_t>(rep.cohomology) != rep.harmonic) {
        t.cohomology_equals_harmonic = false;
      }
      if (!rep.regular) t.regular = false;
      if (rep.harmonic_forms + rep.d_part + rep.dstar_part != rep.harmonic) t.split_complete = false;
      const auto dual = std::find(result.degrees.begin(), result.degrees.end(), n - rep.degree);
      if (dual != result.degrees.end()) {
        const auto& other = mirror.reports[static_cast<std::size_t>(dual - result.degrees.begin())];
        if (other.harmonic != rep.harmonic) t.duality = false;
      }
      const auto up = std::find(result.degrees.begin(), result.degrees.end(), rep.degree + 1);
      if (up != result.degrees.end()) {
        const auto& next_rep = rec.reports[static_cast<std::size_t>(up - result.degrees.begin())];
        if (next_rep.d_part != rep.dstar_part) result.split_transfer = false;
      }
    }
  }
  return result;
}

}  // namespace fncalc::torus
