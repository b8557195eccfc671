#include <gtest/gtest.h>

#include "fncalc/exterior/bracket.hpp"
#include "fncalc/exterior/operators.hpp"
#include "fncalc/exterior/sampling.hpp"
#include "fncalc/exterior/text.hpp"
#include "oracle.hpp"

using namespace fncalc::exterior;

namespace {

const ModelSpace R2 = ModelSpace::affine(2);
const ModelSpace R3 = ModelSpace::affine(3);
const ModelSpace R4 = ModelSpace::affine(4);
const ModelSpace R7 = ModelSpace::affine(7);

DifferentialForm form(const char* text, const ModelSpace& space) { return parse_form(text, space); }
VectorValuedForm vform(const char* text, const ModelSpace& space) { return parse_vector_form(text, space); }
CoefficientFunction x(const ModelSpace& space, int label) { return CoefficientFunction::coordinate(space, label - 1); }

int sign_pow(int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

TEST(Exterior, WedgeExamples) {
  EXPECT_EQ(wedge(form("e{1}", R3), form("e{2}", R3)), form("e{1,2}", R3));
  EXPECT_TRUE(wedge(form("e{1}", R3), form("e{1}", R3)).is_zero());
  EXPECT_EQ(wedge(form("e{2}", R3), form("e{1}", R3)), form("-e{1,2}", R3));
  EXPECT_THROW((void)wedge(form("e{1}", R3), form("e{1}", R4)), StructuralError);
}

TEST(Exterior, DerivativeExamples) {
  EXPECT_EQ(ext_deriv(form("x1", R2)), form("e{1}", R2));
  EXPECT_EQ(ext_deriv(form("x1 e{2}", R2)), form("e{1,2}", R2));
  const ModelSpace T2 = ModelSpace::toroidal(2);
  EXPECT_EQ(ext_deriv(parse_form("exp(i<1,0>)", T2)), parse_form("i*exp(i<1,0>) e{1}", T2));
}

TEST(Exterior, InsertionExamples) {
  EXPECT_EQ(insert_frame(0, form("e{1,2}", R3)), form("e{2}", R3));
  EXPECT_EQ(insert_frame(1, form("e{1,2}", R3)), form("-e{1}", R3));
  EXPECT_TRUE(insert_frame(2, form("e{1,2}", R3)).is_zero());
  const auto k = vform("e{1}⊗e2", R3);
  EXPECT_EQ(insert_vvform(k, form("e{2}", R3)), form("e{1}", R3));
  EXPECT_EQ(insert_vvform(k, form("e{2,3}", R3)), form("e{1,3}", R3));
  const auto killed = insert_vvform(vform("e{1}⊗e1", R3), form("x1^2", R3));
  EXPECT_TRUE(killed.is_zero());
  EXPECT_EQ(killed.degree(), 0);
  const auto below = insert_frame(0, form("x1", R3));
  EXPECT_TRUE(below.is_zero());
  EXPECT_EQ(below.degree(), -1);
}

TEST(Exterior, LieDerivativeExamples) {
  const auto e1 = VectorField::frame(R2, 0);
  EXPECT_EQ(lie_vector_form(e1, form("x1 e{2}", R2)), form("e{2}", R2));
  EXPECT_TRUE(lie_vector_form(e1, form("e{2}", R2)).is_zero());
  // Flow of x^1 e_1 scales x^1 by e^t, so e^1 picks up the same factor.
  EXPECT_EQ(lie_vector_form(VectorField::along(0, x(R2, 1)), form("e{1}", R2)), form("e{1}", R2));
}

TEST(Exterior, VectorFieldBracketExamples) {
  EXPECT_TRUE(vf_bracket(VectorField::frame(R2, 0), VectorField::frame(R2, 1)).is_zero());
  EXPECT_EQ(vf_bracket(VectorField::frame(R2, 0), VectorField::along(1, x(R2, 1))), VectorField::frame(R2, 1));
  const auto xy = vf_bracket(VectorField::along(0, x(R2, 1)), VectorField::along(1, x(R2, 1)));
  EXPECT_EQ(xy, VectorField::along(1, x(R2, 1)));
  // Action on functions: [X, Y] f = X(Y f) - Y(X f).
  const auto f = CoefficientFunction::coordinate(R2, 1) * CoefficientFunction::coordinate(R2, 0);
  const auto X = VectorField::along(0, x(R2, 1));
  const auto Y = VectorField::along(1, x(R2, 1));
  EXPECT_EQ(xy.apply(f), X.apply(Y.apply(f)) - Y.apply(X.apply(f)));
}

TEST(Exterior, TensorLieDerivativeExamples) {
  const auto e1 = VectorField::frame(R3, 0);
  EXPECT_TRUE(lie_tensor(e1, vform("e{2}⊗e3", R3)).is_zero());
  EXPECT_EQ(lie_tensor(e1, vform("(x1 e{2})⊗e3", R3)), vform("e{2}⊗e3", R3));
  const auto X = VectorField::along(0, x(R2, 2));
  const auto K = vform("e{1}⊗e1", R2);
  const auto lhs = lie_tensor(X, K);
  EXPECT_EQ(lhs, fn_bracket(VectorValuedForm(X), K));
  EXPECT_EQ(oracle::of(lhs), oracle::fn(oracle::of(VectorValuedForm(X)), oracle::of(K)));
  EXPECT_FALSE(lhs.is_zero());
}

TEST(Exterior, BracketExamples) {
  EXPECT_TRUE(fn_bracket(vform("e{1}⊗e2", R3), vform("e{2}⊗e3", R3)).is_zero());
  EXPECT_EQ(fn_bracket(VectorValuedForm(VectorField::frame(R2, 0)), VectorValuedForm(VectorField::along(1, x(R2, 1)))),
            VectorValuedForm(VectorField::frame(R2, 1)));
  const auto K = vform("e{1}⊗e1", R2);
  const auto L = vform("(x1 e{2})⊗e2", R2);
  const auto bracket = fn_bracket(K, L);
  EXPECT_EQ(bracket, vform("e{1,2}⊗e2", R2));
  EXPECT_EQ(oracle::fn(oracle::of(K), oracle::of(L)), oracle::of(bracket));
  EXPECT_THROW((void)fn_bracket(K, vform("e{1}⊗e1", R3)), StructuralError);
}

TEST(Exterior, HodgeExamples) {
  EXPECT_EQ(hodge_star(form("e{1,2,3}", R7)), form("e{4,5,6,7}", R7));
  EXPECT_EQ(hodge_star(form("1", R7)), form("e{1,2,3,4,5,6,7}", R7));
}

TEST(Exterior, CodifferentialExamples) {
  const auto f = codifferential(form("x1^2", R3));
  EXPECT_TRUE(f.is_zero());
  EXPECT_EQ(f.degree(), -1);
  EXPECT_EQ(codifferential(form("x1 e{1}", R3)), form("-1", R3));
  EXPECT_TRUE(codifferential(form("e{1,2}", R3)).is_zero());
}

TEST(Exterior, LaplacianExamples) {
  const ModelSpace T3 = ModelSpace::toroidal(3);
  EXPECT_TRUE(laplacian(form("5", R3)).is_zero());
  EXPECT_EQ(laplacian(parse_form("exp(i<1,0,0>)", T3)), parse_form("exp(i<1,0,0>)", T3));
  const auto a = parse_form("exp(i<1,1,0>) e{3}", T3);
  EXPECT_EQ(laplacian(a), ExactScalar(2) * a);
  EXPECT_EQ(laplacian(a), ext_deriv(codifferential(a)) + codifferential(ext_deriv(a)));
}

TEST(Exterior, ContractionExamples) {
  EXPECT_EQ(contract_metric(form("e{1,2}", R2)), vform("e{2}⊗e1 - e{1}⊗e2", R2));
  EXPECT_EQ(contract_metric(form("e{1,2,3}", R3)), vform("e{2,3}⊗e1 - e{1,3}⊗e2 + e{1,2}⊗e3", R3));
  EXPECT_EQ(contract_metric(form("e{1,2} + e{3,4}", R4)), vform("e{2}⊗e1 - e{1}⊗e2 + e{4}⊗e3 - e{3}⊗e4", R4));
  EXPECT_THROW((void)contract_metric(form("x1", R2)), DomainError);
}

TEST(Exterior, MaurerCartanExamples) {
  EXPECT_TRUE(mc_check(form("e{1,2}", R2)).is_maurer_cartan);
  const auto probe = form("x1 e{1,2}", R2);
  const auto result = mc_check(probe);
  EXPECT_FALSE(result.is_maurer_cartan);
  EXPECT_EQ(to_string(result.bracket), "(4*x1 e{1,2})⊗e2");
  const auto hat = oracle::contract(oracle::of(probe));
  EXPECT_EQ(oracle::fn(hat, hat), oracle::of(result.bracket));
  EXPECT_THROW((void)mc_check(form("e{1}", R2)), DomainError);
  EXPECT_THROW((void)mc_check(form("e{1,2,3}", R3)), DomainError);
}

// Library against the oracle on random inputs.
TEST(Exterior, OperationsMatchOracle) {
  Sampler sampler(101);
  for (int s = 0; s < 120; ++s) {
    const ModelSpace space = (s % 3 == 0) ? R7 : (s % 3 == 1 ? R4 : R3);
    const auto a = sampler.form(space, sampler.integer(0, 3));
    const auto b = sampler.form(space, sampler.integer(0, 3));
    const auto K = sampler.vector_form(space, sampler.integer(0, 2));
    const auto L = sampler.vector_form(space, sampler.integer(0, 2));
    ASSERT_EQ(oracle::of(wedge(a, b)), oracle::wedge(oracle::of(a), oracle::of(b)));
    ASSERT_EQ(oracle::of(ext_deriv(a)), oracle::d(oracle::of(a)));
    ASSERT_EQ(oracle::of(hodge_star(a)), oracle::hodge(oracle::of(a)));
    ASSERT_EQ(oracle::of(insert_vvform(K, a)), oracle::insert(oracle::of(K), oracle::of(a)));
    ASSERT_EQ(oracle::of(nijenhuis_lie(K, a)), oracle::lie(oracle::of(K), oracle::of(a)));
    ASSERT_EQ(oracle::of(fn_bracket(K, L)), oracle::fn(oracle::of(K), oracle::of(L))) << to_string(K) << " , " << to_string(L);
    if (a.degree() > 0) {
      ASSERT_EQ(oracle::of(contract_metric(a)), oracle::contract(oracle::of(a)));
    }
  }
}

TEST(Exterior, DerivationLaws) {
  Sampler sampler(102);
  for (int s = 0; s < 100; ++s) {
    const ModelSpace space = s % 2 ? R4 : R3;
    const auto K = sampler.vector_form(space, sampler.integer(0, 2));
    const int k = K.degree();
    const auto a = sampler.form(space, sampler.integer(0, 2));
    const auto b = sampler.form(space, sampler.integer(0, 2));
    const int p = a.degree();
    ASSERT_EQ(insert_vvform(K, wedge(a, b)),
              wedge(insert_vvform(K, a), b) + ExactScalar(sign_pow((k - 1) * p)) * wedge(a, insert_vvform(K, b)));
    ASSERT_EQ(nijenhuis_lie(K, wedge(a, b)),
              wedge(nijenhuis_lie(K, a), b) + ExactScalar(sign_pow(k * p)) * wedge(a, nijenhuis_lie(K, b)));
  }
}

TEST(Exterior, HodgeIdentities) {
  Sampler sampler(103);
  const ModelSpace T3 = ModelSpace::toroidal(3);
  for (int s = 0; s < 80; ++s) {
    const ModelSpace space = s % 2 ? R4 : T3;
    const int n = space.dim;
    DifferentialForm a = sampler.form(space, sampler.integer(0, n));
    if (space.flavor == Flavor::toroidal) {
      // Fourier version of a random form.
      DifferentialForm t(space, a.degree());
      for (const auto& [set, coeff] : a.terms()) {
        const int k[] = {sampler.integer(-2, 2), sampler.integer(-2, 2), sampler.integer(-2, 2)};
        t += DifferentialForm::basis(space, set, CoefficientFunction::fourier_mode(space, k, sampler.rational()));
      }
      a = t;
    }
    const int l = a.degree();
    ASSERT_TRUE(ext_deriv(ext_deriv(a)).is_zero());
    ASSERT_EQ(hodge_star(hodge_star(a)), ExactScalar(sign_pow(l * (n - l))) * a);
    ASSERT_TRUE(codifferential(codifferential(a)).is_zero());
    ASSERT_EQ(laplacian(ext_deriv(a)), ext_deriv(laplacian(a)));
    ASSERT_EQ(laplacian(codifferential(a)), codifferential(laplacian(a)));
    ASSERT_EQ(laplacian(hodge_star(a)), hodge_star(laplacian(a)));
  }
}

TEST(Exterior, ZeroFormsKeepDegree) {
  const DifferentialForm z(R4, 2);
  EXPECT_EQ(ext_deriv(z).degree(), 3);
  EXPECT_EQ(hodge_star(z).degree(), 2);
  EXPECT_EQ(codifferential(z).degree(), 1);
  EXPECT_EQ(wedge(z, DifferentialForm(R4, 3)).degree(), 5);
  EXPECT_EQ(fn_bracket(VectorValuedForm(R4, 1), VectorValuedForm(R4, 2)).degree(), 3);
}
