#pragma once

#include <random>

#include "fncalc/exterior/vector_field.hpp"

namespace fncalc::exterior {

/// Seeded generators for property checks. Every draw goes through
/// std::mt19937_64 and uniform_int_distribution only, so a seed reproduces
/// the same samples on a given standard library.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi);
  /// Nonzero p/q with |p| <= 3, 1 <= q <= 3.
  ExactScalar rational();
  Exponent monomial(int vars, int max_degree);
  CoefficientFunction polynomial(const ModelSpace& space, int max_degree, int max_terms = 2);
  DifferentialForm form(const ModelSpace& space, int degree, int max_terms = 3, int max_poly = 2);
  VectorValuedForm vector_form(const ModelSpace& space, int degree, int max_terms = 3, int max_poly = 2);
  VectorField vector_field(const ModelSpace& space, int max_terms = 2, int max_poly = 2);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace fncalc::exterior
