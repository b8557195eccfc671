#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace fncalc::exterior {

/// Strictly increasing multi-index I = (i_1 < ... < i_p), stored as a bitmask
/// of 0-based coordinate indices. Text and public constructors use the
/// 1-based labels of e^1 ... e^n.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint32_t bits) : bits_(bits) {}

  /// From 1-based labels, which must be strictly increasing.
  static IndexSet from_labels(std::initializer_list<int> labels);
  static IndexSet from_labels(const std::vector<int>& labels);
  static constexpr IndexSet single(int index0) { return IndexSet(std::uint32_t{1} << index0); }
  static constexpr IndexSet full(int n) { return IndexSet((std::uint32_t{1} << n) - 1); }

  [[nodiscard]] constexpr std::uint32_t bits() const noexcept { return bits_; }
  [[nodiscard]] constexpr int size() const noexcept { return std::popcount(bits_); }
  [[nodiscard]] constexpr bool empty() const noexcept { return bits_ == 0; }
  [[nodiscard]] constexpr bool contains(int index0) const noexcept { return (bits_ >> index0) & 1U; }
  [[nodiscard]] constexpr bool disjoint(IndexSet o) const noexcept { return (bits_ & o.bits_) == 0; }

  [[nodiscard]] constexpr IndexSet with(int index0) const { return IndexSet(bits_ | (1U << index0)); }
  [[nodiscard]] constexpr IndexSet without(int index0) const { return IndexSet(bits_ & ~(1U << index0)); }
  [[nodiscard]] constexpr IndexSet complement(int n) const { return IndexSet(full(n).bits_ & ~bits_); }
  [[nodiscard]] constexpr IndexSet unite(IndexSet o) const { return IndexSet(bits_ | o.bits_); }

  /// 0-based indices in increasing order.
  [[nodiscard]] std::vector<int> indices() const;
  /// "e{1,2,3}" or "1" for the empty set.
  [[nodiscard]] std::string to_string() const;

  /// Number of elements strictly below `index0`.
  [[nodiscard]] constexpr int count_below(int index0) const noexcept {
    return std::popcount(bits_ & ((1U << index0) - 1U));
  }

  friend constexpr bool operator==(IndexSet, IndexSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Lexicographic order of the increasing index sequences (for sets of equal
/// size this is the canonical term order of forms).
struct LexLess {
  constexpr bool operator()(IndexSet a, IndexSet b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    std::uint32_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    std::uint32_t lowest = diff & (~diff + 1U);
    return (a.bits() & lowest) != 0;
  }
};

/// Sign of e^I ∧ e^J = sign · e^{I∪J}; zero when I and J overlap.
constexpr int wedge_sign(IndexSet a, IndexSet b) noexcept {
  if (!a.disjoint(b)) return 0;
  int inversions = 0;
  std::uint32_t rest = b.bits();
  while (rest) {
    int j = std::countr_zero(rest);
    rest &= rest - 1U;
    inversions += std::popcount(a.bits() >> (j + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

/// ι_{e_j} e^I = sign · e^{I \ j}; zero when j ∉ I.
constexpr int interior_sign(int index0, IndexSet set) noexcept {
  if (!set.contains(index0)) return 0;
  return (set.count_below(index0) & 1) ? -1 : 1;
}

/// All index sets of size p in {0..n-1}, in canonical (lexicographic) order.
std::vector<IndexSet> basis_sets(int n, int p);

}  // namespace fncalc::exterior
