#include <random>

#include <gtest/gtest.h>

#include "fncalc/exterior/bracket.hpp"
#include "fncalc/exterior/operators.hpp"
#include "fncalc/exterior/text.hpp"
#include "fncalc/g2/structure.hpp"
#include "fncalc/linfty/brackets.hpp"
#include "fncalc/linfty/model.hpp"
#include "oracle.hpp"

using namespace fncalc;
using exterior::parse_form;
using exterior::parse_vector_form;
using linfty::FlatAssociativeModel;
using linfty::NormalValuedForm;

namespace {

const exterior::ModelSpace R7 = exterior::ModelSpace::affine(7);

// Test-side lift and projection on oracle values. `plane` and `normal` hold 0-based ambient indices.
struct OracleModel {
  std::array<int, 3> plane;
  std::array<int, 4> normal;

  explicit OracleModel(const FlatAssociativeModel& m) : plane(m.plane()), normal(m.normal()) {}

  oracle::Poly lift(const oracle::Poly& p) const {
    oracle::Poly out{7, {}};
    for (const auto& [mono, c] : p.terms) {
      oracle::Mono m(7, 0);
      for (int j = 0; j < 3; ++j) m[static_cast<std::size_t>(plane[static_cast<std::size_t>(j)])] = mono[static_cast<std::size_t>(j)];
      out.terms[m] = c;
    }
    return out;
  }
  oracle::Form lift(const oracle::Form& a) const {
    oracle::Form out = oracle::zero_form(7, a.deg);
    for (const auto& [mask, poly] : a.c) {
      unsigned m = 0;
      for (int j = 0; j < 3; ++j)
        if (mask & (1U << j)) m |= 1U << plane[static_cast<std::size_t>(j)];
      out.c[m] = lift(poly);  // order of plane indices is preserved, so no sign
    }
    return out;
  }
  oracle::VForm lift(const NormalValuedForm& omega) const {
    oracle::VForm out = oracle::zero_vform(7, omega.degree());
    for (int a = 0; a < 4; ++a) out.comp[static_cast<std::size_t>(normal[static_cast<std::size_t>(a)])] = lift(oracle::of(omega.component(a)));
    return out;
  }
  std::vector<oracle::Form> project(const oracle::VForm& k) const {
    std::vector<oracle::Form> out;
    for (int a = 0; a < 4; ++a) {
      const oracle::Form& comp = k.comp[static_cast<std::size_t>(normal[static_cast<std::size_t>(a)])];
      oracle::Form r = oracle::zero_form(3, comp.deg);
      for (const auto& [mask, poly] : comp.c) {
        unsigned m = 0;
        bool tangential = true;
        for (int i = 0; i < 7; ++i) {
          if (!(mask & (1U << i))) continue;
          const auto it = std::find(plane.begin(), plane.end(), i);
          if (it == plane.end()) tangential = false;
          else m |= 1U << (it - plane.begin());
        }
        if (!tangential) continue;
        oracle::Poly p{3, {}};
        for (const auto& [mono, c] : poly.terms) {
          bool on_plane = true;
          for (int nidx : normal) on_plane = on_plane && mono[static_cast<std::size_t>(nidx)] == 0;
          if (!on_plane) continue;
          oracle::Mono q(3, 0);
          for (int j = 0; j < 3; ++j) q[static_cast<std::size_t>(j)] = mono[static_cast<std::size_t>(plane[static_cast<std::size_t>(j)])];
          p.terms[q] = c;
        }
        if (!p.is_zero()) r.c[m] = p;
      }
      out.push_back(r);
    }
    return out;
  }
};

std::vector<oracle::Form> of(const NormalValuedForm& omega) {
  std::vector<oracle::Form> out;
  for (const auto& c : omega.components()) out.push_back(oracle::of(c));
  return out;
}

oracle::VForm oracle_chi() {
  return oracle::contract(oracle::hodge(oracle::of(g2::standard_phi(R7).phi)));
}

std::vector<oracle::Form> oracle_bracket(const FlatAssociativeModel& model, const std::vector<NormalValuedForm>& args) {
  const OracleModel om(model);
  oracle::VForm acc = oracle_chi();
  for (const auto& a : args) acc = oracle::fn(acc, om.lift(a));
  return om.project(acc);
}

bool all_zero(const std::vector<oracle::Form>& v) {
  return std::all_of(v.begin(), v.end(), [](const oracle::Form& f) { return f.is_zero(); });
}

}  // namespace

TEST(Linfty, ModelFrames) {
  const FlatAssociativeModel m({4, 2, 1});
  EXPECT_EQ(m.plane(), (std::array<int, 3>{0, 1, 3}));
  EXPECT_EQ(m.normal(), (std::array<int, 4>{2, 4, 5, 6}));
  EXPECT_THROW(FlatAssociativeModel({1, 1, 2}), exterior::StructuralError);
  EXPECT_THROW(FlatAssociativeModel({1, 2, 8}), exterior::StructuralError);
}

TEST(Linfty, LiftExamples) {
  const FlatAssociativeModel m({1, 2, 3});
  const auto& L = m.plane_space();
  EXPECT_EQ(linfty::vertical_lift(m, NormalValuedForm::decomposable(m, parse_form("1", L), 0)),
            exterior::VectorValuedForm(exterior::VectorField::frame(R7, 3)));
  EXPECT_EQ(linfty::vertical_lift(m, NormalValuedForm::decomposable(m, parse_form("e{1}", L), 1)),
            parse_vector_form("e{1}⊗e5", R7));
  EXPECT_EQ(linfty::vertical_lift(m, NormalValuedForm::decomposable(m, parse_form("x1 e{2}", L), 2)),
            parse_vector_form("(x1 e{2})⊗e6", R7));
}

TEST(Linfty, ProjectionExamples) {
  const FlatAssociativeModel m({1, 2, 3});
  const auto& L = m.plane_space();
  EXPECT_EQ(linfty::project_P(m, parse_vector_form("e{1}⊗e4", R7)), NormalValuedForm::decomposable(m, parse_form("e{1}", L), 0));
  EXPECT_TRUE(linfty::project_P(m, parse_vector_form("e{4}⊗e5", R7)).is_zero());
  EXPECT_TRUE(linfty::project_P(m, parse_vector_form("e{1}⊗e2", R7)).is_zero());
  EXPECT_TRUE(linfty::project_P(m, parse_vector_form("(x4 e{1})⊗e4", R7)).is_zero());
  EXPECT_EQ(linfty::project_P(m, parse_vector_form("(x1*x5 e{1} + x2 e{1})⊗e4", R7)),
            NormalValuedForm::decomposable(m, parse_form("x2 e{1}", L), 0));
}

TEST(Linfty, LiftThenProjectIsIdentity) {
  std::mt19937_64 rng(41);
  const FlatAssociativeModel m({1, 4, 5});
  for (int s = 0; s < 40; ++s) {
    const auto omega = linfty::random_normal_form(m, s % 4, rng);
    EXPECT_EQ(linfty::project_P(m, linfty::vertical_lift(m, omega)), omega);
    EXPECT_EQ(oracle::of(linfty::vertical_lift(m, omega)), OracleModel(m).lift(omega));
  }
}

TEST(Linfty, Classification) {
  const std::pair<std::vector<int>, bool> planes[] = {{{1, 2, 3}, true}, {{1, 4, 5}, true}, {{1, 2, 4}, false}};
  for (const auto& [labels, associative] : planes) {
    const FlatAssociativeModel m(labels);
    const auto result = linfty::is_associative(m);
    const auto expected = OracleModel(m).project(oracle_chi());
    EXPECT_EQ(result.associative, associative);
    EXPECT_EQ(all_zero(expected), associative);
    EXPECT_EQ(of(result.witness), expected);
  }
  const FlatAssociativeModel m({1, 2, 4});
  const auto witness = linfty::is_associative(m).witness;
  for (int a = 0; a < 3; ++a) EXPECT_TRUE(witness.component(a).is_zero());
  EXPECT_FALSE(witness.component(3).is_zero());  // normal e7
  const std::string text = linfty::to_string(m, witness);
  EXPECT_TRUE(text.ends_with("⊗e7")) << text;
}

TEST(Linfty, LowArityExamples) {
  const FlatAssociativeModel m({1, 2, 3});
  const auto& L = m.plane_space();
  EXPECT_TRUE(linfty::multibracket(m, {}).is_zero());
  for (int a = 0; a < 4; ++a) {
    EXPECT_TRUE(linfty::multibracket(m, {NormalValuedForm::decomposable(m, parse_form("3/2", L), a)}).is_zero());
  }
  const auto p1 = NormalValuedForm::decomposable(m, parse_form("x1 e{2}", L), 1);
  EXPECT_TRUE(linfty::multibracket(m, {p1}).is_zero());
  const auto p2 = NormalValuedForm::decomposable(m, parse_form("x3^2 e{1,2}", L), 3);
  EXPECT_TRUE(linfty::multibracket(m, {p2}).is_zero());
  const auto constants = std::vector<NormalValuedForm>{NormalValuedForm::decomposable(m, parse_form("1", L), 0),
                                                       NormalValuedForm::decomposable(m, parse_form("2", L), 2)};
  EXPECT_TRUE(linfty::mk_via_lie(m, constants).is_zero());
  EXPECT_TRUE(linfty::multibracket(m, constants).is_zero());
  EXPECT_THROW((void)linfty::mk_via_lie(m, {p1}), exterior::DomainError);
}

TEST(Linfty, PolynomialPairAgreesAcrossPaths) {
  const FlatAssociativeModel m({1, 2, 3});
  const auto& L = m.plane_space();
  const std::vector<NormalValuedForm> args{NormalValuedForm::decomposable(m, parse_form("x1", L), 0),
                                           NormalValuedForm::decomposable(m, parse_form("x2", L), 1)};
  const auto direct = linfty::multibracket(m, args);
  EXPECT_EQ(direct, linfty::mk_via_lie(m, args));
  EXPECT_EQ(of(direct), oracle_bracket(m, args));
  EXPECT_EQ(direct.degree(), 3);
}

TEST(Linfty, MultibracketMatchesOracle) {
  std::mt19937_64 rng(42);
  std::size_t nonzero = 0;
  for (const auto& labels : {std::vector<int>{1, 2, 3}, std::vector<int>{1, 4, 5}}) {
    const FlatAssociativeModel m(labels);
    for (int s = 0; s < 12; ++s) {
      std::vector<NormalValuedForm> args;
      const int arity = 1 + s % 3;
      for (int i = 0; i < arity; ++i) args.push_back(linfty::random_normal_form(m, (s + i) % 5 == 0 ? 1 : 0, rng, 2, 2));
      const auto value = linfty::multibracket(m, args);
      ASSERT_EQ(of(value), oracle_bracket(m, args));
      if (!value.is_zero()) ++nonzero;
    }
  }
  EXPECT_GT(nonzero, 0U);
}

TEST(Linfty, ShufflesAndSigns) {
  for (int k = 0; k <= 3; ++k) {
    for (int l = 0; l <= 3; ++l) {
      const auto all = linfty::shuffles(k, l);
      EXPECT_EQ(all.size(), exterior::binomial(k + l, k));
      for (const auto& s : all) {
        EXPECT_TRUE(std::is_sorted(s.begin(), s.begin() + k));
        EXPECT_TRUE(std::is_sorted(s.begin() + k, s.end()));
      }
    }
  }
  EXPECT_EQ(linfty::koszul_sign({1, 0}, {1, 1}), -1);
  EXPECT_EQ(linfty::koszul_sign({1, 0}, {1, 0}), 1);
  EXPECT_EQ(linfty::koszul_sign({2, 0, 1}, {1, 1, 1}), 1);
  EXPECT_EQ(linfty::koszul_sign({0, 1, 2}, {1, 1, 1}), 1);
  EXPECT_EQ(linfty::koszul_sign({1, 2, 0}, {1, 0, 1}), -1);
}

TEST(Linfty, VDataExamples) {
  const FlatAssociativeModel m({1, 2, 3});
  const auto& L = m.plane_space();
  const auto a = linfty::vertical_lift(m, NormalValuedForm::decomposable(m, parse_form("e{1}", L), 0));
  const auto b = linfty::vertical_lift(m, NormalValuedForm::decomposable(m, parse_form("e{2}", L), 1));
  EXPECT_TRUE(exterior::fn_bracket(a, b).is_zero());
  EXPECT_TRUE(oracle::fn(oracle::of(a), oracle::of(b)).is_zero());
  const auto tangential = exterior::fn_bracket(parse_vector_form("e{1}⊗e1", R7), parse_vector_form("e{2}⊗e2", R7));
  EXPECT_TRUE(linfty::in_kernel(m, tangential));
  EXPECT_TRUE(exterior::fn_bracket(m.chi(), m.chi()).is_zero());
  EXPECT_EQ(linfty::exp_pullback(m.chi()), m.chi());
  const auto report = linfty::vdata_check(m, 5, 5);
  EXPECT_TRUE(report.ok());
  EXPECT_TRUE(report.chi_in_kernel);
  EXPECT_FALSE(linfty::vdata_check(FlatAssociativeModel({1, 2, 4}), 5, 2).chi_in_kernel);
}

TEST(Linfty, JacobiSuite) {
  const FlatAssociativeModel m({1, 2, 3});
  const auto report = linfty::jacobi_suite(m, 3, 10, 2024);
  EXPECT_TRUE(report.ok());
  ASSERT_EQ(report.by_arity.size(), 3U);
  for (const auto& c : report.by_arity) EXPECT_GT(c.checked, 0U);
  EXPECT_GT(report.nonzero_brackets.at(0), 0U);
}
