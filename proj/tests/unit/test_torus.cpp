#include <random>

#include <gtest/gtest.h>

#include "fncalc/exterior/operators.hpp"
#include "fncalc/exterior/text.hpp"
#include "fncalc/g2/auxiliary.hpp"
#include "fncalc/g2/structure.hpp"
#include "fncalc/torus/spectral.hpp"
#include "fncalc/torus/sweep.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace fncalc;
using torus::Frequency;
using torus::ModeOperators;

namespace {

const exterior::ModelSpace T7 = exterior::ModelSpace::toroidal(7);

const exterior::DifferentialForm& star_phi_torus() {
  static const auto psi = g2::star_phi(g2::standard_phi(T7));
  return psi;
}

const ModeOperators& ops() {
  static const ModeOperators instance(star_phi_torus());
  return instance;
}

const oracle::ModeOracle& mode_oracle() {
  static const oracle::ModeOracle instance(oracle::of(g2::star_phi(g2::standard_phi(exterior::ModelSpace::affine(7)))));
  return instance;
}

std::vector<Frequency> sample_modes(std::size_t count, int bound, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-bound, bound);
  std::vector<Frequency> out;
  for (int j = 0; j < 7; ++j) {
    Frequency unit(7, 0);
    unit[static_cast<std::size_t>(j)] = 1;
    out.push_back(unit);
  }
  while (out.size() < count) {
    Frequency k(7);
    for (int& v : k) v = entry(rng);
    if (std::any_of(k.begin(), k.end(), [](int v) { return v != 0; })) out.push_back(k);
  }
  return out;
}

Frequency unit(int j) {
  Frequency k(7, 0);
  k[static_cast<std::size_t>(j)] = 1;
  return k;
}

}  // namespace

TEST(Torus, BlockShapes) {
  const auto block = torus::assemble_mode(unit(0), 3, star_phi_torus());
  EXPECT_EQ(block.lie.rows(), 35U);
  EXPECT_EQ(block.lie.cols(), 1U);
  EXPECT_EQ(block.d.rows(), 35U);
  EXPECT_EQ(block.d.cols(), 35U);
  EXPECT_EQ(block.lie_star.rows(), 1U);
  EXPECT_EQ(ops().lie(unit(0), 2).cols(), 0U);
}

TEST(Torus, RejectsBadPsi) {
  EXPECT_THROW((void)ModeOperators(exterior::parse_form("exp(i<1,0,0,0,0,0,0>) e{1,2}", T7)), exterior::DomainError);
  EXPECT_THROW((void)ModeOperators(exterior::parse_form("e{1,2,3}", T7)), exterior::DomainError);
  EXPECT_THROW((void)ModeOperators(exterior::parse_form("e{1,2}", exterior::ModelSpace::affine(2))), exterior::DomainError);
}

TEST(Torus, ZeroMode) {
  const Frequency zero(7, 0);
  for (int l = 0; l <= 7; ++l) {
    EXPECT_EQ(torus::harmonic_dim(ops(), zero, l), exterior::binomial(7, l));
    EXPECT_TRUE(ops().lie(zero, l).is_zero());
    EXPECT_TRUE(torus::regularity_check(ops(), zero, l).regular);
  }
  EXPECT_EQ(torus::tm_mode_h0(ops(), zero), 7U);
  EXPECT_TRUE(torus::anticommutation_check(ops(), zero).ok());
  EXPECT_TRUE(torus::one_form_kernel_check(ops(), zero));
  EXPECT_THROW((void)torus::symbol_class(ops(), zero, 3), exterior::DomainError);
}

TEST(Torus, LaplacianIsNormSquared) {
  for (const auto& k : sample_modes(20, 2, 1)) {
    for (int l = 0; l <= 7; ++l) {
      EXPECT_EQ(ops().laplacian(k, l), exact::ExactScalar(torus::norm_squared(k)) * linalg::Matrix::identity(exterior::binomial(7, l)));
    }
  }
}

// The linear-in-k fast path against per-mode symbolic assembly.
TEST(Torus, FastPathMatchesSymbolicAssembly) {
  for (const auto& k : sample_modes(12, 2, 2)) {
    for (int l = 0; l <= 7; ++l) {
      const auto block = torus::assemble_mode(k, l, star_phi_torus());
      ASSERT_EQ(block.d, ops().d(k, l));
      ASSERT_EQ(block.dstar, ops().dstar(k, l));
      ASSERT_EQ(block.laplacian, ops().laplacian(k, l));
      ASSERT_EQ(block.lie, ops().lie(k, l));
      ASSERT_EQ(block.lie_star, ops().lie_star_formula(k, l));
    }
  }
}

TEST(Torus, BlocksMatchOracle) {
  for (const auto& k : sample_modes(20, 2, 3)) {
    for (int l = 0; l <= 7; ++l) {
      ASSERT_LT(testing_support::max_abs_diff(testing_support::to_eigen(ops().d(k, l)), mode_oracle().d(k, l)), 1e-12);
      ASSERT_LT(testing_support::max_abs_diff(testing_support::to_eigen(ops().lie(k, l)), mode_oracle().lie(k, l)), 1e-12);
    }
  }
}

TEST(Torus, DimensionsMatchOracle) {
  for (const auto& k : sample_modes(40, 2, 4)) {
    for (int l = 0; l <= 7; ++l) {
      ASSERT_EQ(torus::harmonic_dim(ops(), k, l), mode_oracle().harmonic_dim(k, l));
      ASSERT_EQ(torus::cohomology_dim(ops(), k, l), mode_oracle().cohomology_dim(k, l));
    }
  }
}

TEST(Torus, NonzeroModeExamples) {
  bool positive_two = false;
  for (int j = 0; j < 7; ++j) {
    const auto k = unit(j);
    EXPECT_EQ(torus::harmonic_dim(ops(), k, 0), 0U);
    EXPECT_EQ(torus::harmonic_dim(ops(), k, 1), 0U);
    EXPECT_EQ(torus::harmonic_dim(ops(), k, 7), 0U);
    EXPECT_EQ(torus::cohomology_dim(ops(), k, 0), 0);
    EXPECT_EQ(torus::cohomology_dim(ops(), k, 7), 0);
    positive_two = positive_two || torus::harmonic_dim(ops(), k, 2) > 0;
    EXPECT_EQ(torus::tm_mode_h0(ops(), k), 0U);
  }
  EXPECT_TRUE(positive_two);
}

TEST(Torus, RegularityAndDecomposition) {
  for (const auto& k : sample_modes(15, 1, 5)) {
    for (int l = 0; l <= 7; ++l) {
      const auto reg = torus::regularity_check(ops(), k, l);
      EXPECT_TRUE(reg.regular);
      if (l <= 2) {
        EXPECT_EQ(reg.im_lie, 0U);
      }
      const auto rep = torus::decomposition_report(ops(), k, l);
      EXPECT_EQ(rep.harmonic_forms, 0U);
      EXPECT_EQ(rep.harmonic_forms + rep.d_part + rep.dstar_part, rep.harmonic);
      EXPECT_EQ(rep.cohomology, static_cast<long>(rep.harmonic));
      EXPECT_TRUE(torus::lie_adjoint_check(ops(), k, l));
      EXPECT_TRUE(torus::duality_map_check(ops(), k, l));
      Frequency minus = k;
      for (int& v : minus) v = -v;
      EXPECT_EQ(rep.harmonic, torus::harmonic_dim(ops(), minus, 7 - l));
    }
  }
}

TEST(Torus, Anticommutation) {
  EXPECT_TRUE(torus::anticommutation_check(ops(), unit(0)).ok());
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int s = 0; s < 5; ++s) {
    Frequency k(7);
    for (int& v : k) v = entry(rng);
    k[static_cast<std::size_t>(s)] = 2;
    EXPECT_TRUE(torus::anticommutation_check(ops(), k).ok());
    EXPECT_TRUE(torus::one_form_kernel_check(ops(), k));
  }
  EXPECT_TRUE(torus::one_form_kernel_check(ops(), unit(0)));
}

TEST(Torus, SymbolClassesUpToTwo) {
  std::size_t checked = 0;
  for (const auto& k : torus::enumerate_modes(7, 2)) {
    if (std::all_of(k.begin(), k.end(), [](int v) { return v == 0; })) continue;
    ASSERT_EQ(torus::symbol_class(ops(), k, 3), torus::SymbolClass::injective);
    ASSERT_EQ(torus::symbol_class(ops(), k, 7), torus::SymbolClass::surjective);
    ++checked;
  }
  EXPECT_EQ(checked, 78124U);
  for (const auto& k : sample_modes(30, 2, 7)) EXPECT_EQ(torus::symbol_class(ops(), k, 4), torus::SymbolClass::injective);
}

TEST(Torus, ModeEnumeration) {
  const auto modes = torus::enumerate_modes(3, 1);
  ASSERT_EQ(modes.size(), 27U);
  EXPECT_EQ(modes.front(), (Frequency{-1, -1, -1}));
  EXPECT_EQ(modes[13], (Frequency{0, 0, 0}));
  for (std::size_t i = 0; i < modes.size(); ++i) EXPECT_EQ(torus::mode_index(modes[i], 1), i);
}

TEST(Torus, SweepIsThreadIndependent) {
  const auto T4 = exterior::ModelSpace::toroidal(4);
  const ModeOperators kahler(g2::kahler_form(T4));
  torus::SweepConfig config;
  config.max_freq = 1;
  config.adjoint = true;
  config.duality_maps = true;
  config.symbols = true;
  config.threads = 1;
  const auto serial = torus::sweep(kahler, config);
  config.threads = 3;
  const auto parallel = torus::sweep(kahler, config);
  ASSERT_EQ(serial.records.size(), 81U);
  for (std::size_t i = 0; i < serial.records.size(); ++i) {
    const auto& a = serial.records[i];
    const auto& b = parallel.records[i];
    ASSERT_EQ(a.frequency, b.frequency);
    ASSERT_EQ(a.h0, b.h0);
    ASSERT_EQ(a.symbols, b.symbols);
    for (std::size_t d = 0; d < a.reports.size(); ++d) {
      ASSERT_EQ(a.reports[d].harmonic, b.reports[d].harmonic);
      ASSERT_EQ(a.reports[d].cohomology, b.reports[d].cohomology);
    }
  }
  for (const auto& [l, t] : serial.totals) {
    EXPECT_EQ(t.nonzero_harmonic, parallel.totals.at(l).nonzero_harmonic);
    EXPECT_TRUE(t.duality);
  }
  EXPECT_TRUE(serial.adjoint);
  EXPECT_TRUE(serial.duality_maps);
}
