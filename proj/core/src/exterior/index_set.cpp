#include "fncalc/exterior/index_set.hpp"

#include <algorithm>

#include "fncalc/exterior/model_space.hpp"

namespace fncalc::exterior {

IndexSet IndexSet::from_labels(std::initializer_list<int> labels) {
  return from_labels(std::vector<int>(labels));
}

IndexSet IndexSet::from_labels(const std::vector<int>& labels) {
  std::uint32_t bits = 0;
  int last = 0;
  for (int label : labels) {
    if (label < 1 || label > kMaxDim) {
      throw StructuralError("IndexSet: label " + std::to_string(label) + " out of range");
    }
    if (label <= last) throw StructuralError("IndexSet: labels must be strictly increasing");
    last = label;
    bits |= 1U << (label - 1);
  }
  return IndexSet(bits);
}

std::vector<int> IndexSet::indices() const {
  std::vector<int> out;
  std::uint32_t rest = bits_;
  while (rest) {
    out.push_back(std::countr_zero(rest));
    rest &= rest - 1U;
  }
  return out;
}

std::string IndexSet::to_string() const {
  if (bits_ == 0) return "1";
  std::string out = "e{";
  bool first = true;
  for (int i : indices()) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(i + 1);
  }
  return out + "}";
}

std::vector<IndexSet> basis_sets(int n, int p) {
  std::vector<IndexSet> out;
  if (p < 0 || p > n) return out;
  for (std::uint32_t bits = 0; bits < (1U << n); ++bits) {
    if (std::popcount(bits) == p) out.emplace_back(bits);
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

}  // namespace fncalc::exterior
