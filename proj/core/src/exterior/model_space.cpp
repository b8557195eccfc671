#include "fncalc/exterior/model_space.hpp"

namespace fncalc::exterior {

namespace {

ModelSpace make(int n, Flavor flavor) {
  if (n < 1 || n > kMaxDim) {
    throw StructuralError("ModelSpace: dimension " + std::to_string(n) + " outside [1, " +
                          std::to_string(kMaxDim) + "]");
  }
  return ModelSpace{n, flavor};
}

}  // namespace

ModelSpace ModelSpace::affine(int n) { return make(n, Flavor::affine); }
ModelSpace ModelSpace::toroidal(int n) { return make(n, Flavor::toroidal); }

std::string ModelSpace::name() const {
  return (flavor == Flavor::affine ? "R^" : "T^") + std::to_string(dim);
}

void require_same_space(const ModelSpace& a, const ModelSpace& b, const char* where) {
  if (a != b) {
    throw StructuralError(std::string(where) + ": mismatched model spaces " + a.name() + " and " +
                          b.name());
  }
}

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

}  // namespace fncalc::exterior
