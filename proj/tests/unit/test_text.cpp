#include <gtest/gtest.h>

#include "fncalc/exterior/sampling.hpp"
#include "fncalc/exterior/text.hpp"

using namespace fncalc::exterior;

namespace {
const ModelSpace R3 = ModelSpace::affine(3);
const ModelSpace R7 = ModelSpace::affine(7);
const ModelSpace T2 = ModelSpace::toroidal(2);
}  // namespace

TEST(Text, BasisForm) {
  const auto a = parse_form("e{1,2}", R3);
  EXPECT_EQ(a, DifferentialForm::basis(R3, IndexSet::from_labels({1, 2})));
  EXPECT_EQ(a.degree(), 2);
  EXPECT_EQ(to_string(a), "e{1,2}");
}

TEST(Text, ScalarTimesMonomial) {
  const auto a = parse_form("3/2*x1 e{2}", R3);
  const auto expected = DifferentialForm::basis(
      R3, IndexSet::from_labels({2}), ExactScalar(Rational(3, 2)) * CoefficientFunction::coordinate(R3, 0));
  EXPECT_EQ(a, expected);
  EXPECT_EQ(parse_form(to_string(a), R3), a);
}

TEST(Text, DecreasingIndicesRejected) {
  try {
    (void)parse_form("e{2,1}", R3);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_GE(e.position(), 2U);
    EXPECT_NE(std::string(e.what()).find("increas"), std::string::npos) << e.what();
  }
}

TEST(Text, Errors) {
  EXPECT_THROW((void)parse_form("e{1,4}", R3), ParseError);       // index out of range
  EXPECT_THROW((void)parse_form("x4 e{1}", R3), ParseError);      // coordinate out of range
  EXPECT_THROW((void)parse_form("x1 e{1}", T2), ParseError);      // polynomial on a torus
  EXPECT_THROW((void)parse_form("exp(i<1,0>) e{1}", R3), ParseError);  // Fourier mode on R^n
  EXPECT_THROW((void)parse_form("exp(i<1>) e{1}", T2), ParseError);    // wrong frequency length
  EXPECT_THROW((void)parse_form("e{1} + e{1,2}", R3), ParseError);     // mixed degrees
  EXPECT_THROW((void)parse_form("e{1", R3), ParseError);
  EXPECT_THROW((void)parse_form("", R3), ParseError);
  EXPECT_THROW((void)parse_form("e{1}", R3, 2), ParseError);
}

TEST(Text, ZeroKeepsRequestedDegree) {
  const auto z = parse_form("0", R3, 2);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.degree(), 2);
  EXPECT_EQ(to_string(z), "0");
  EXPECT_EQ(parse_form("e{1} - e{1}", R3).degree(), 1);
}

TEST(Text, ToroidalModes) {
  const auto a = parse_form("2i*exp(i<1,-1>) e{1} - exp(i<0,2>) e{2}", T2);
  const int k1[] = {1, -1};
  const int k2[] = {0, 2};
  const auto expected =
      DifferentialForm::basis(T2, IndexSet::from_labels({1}), CoefficientFunction::fourier_mode(T2, k1, ExactScalar(Rational(0), Rational(2)))) -
      DifferentialForm::basis(T2, IndexSet::from_labels({2}), CoefficientFunction::fourier_mode(T2, k2));
  EXPECT_EQ(a, expected);
  EXPECT_EQ(parse_form(to_string(a), T2), a);
}

TEST(Text, RandomRoundTrip) {
  Sampler sampler(77);
  for (int s = 0; s < 200; ++s) {
    const ModelSpace space = s % 2 ? R7 : R3;
    const auto a = sampler.form(space, sampler.integer(0, 3), 4, 3);
    const std::string text = to_string(a);
    const auto back = parse_form(text, space, a.degree());
    ASSERT_EQ(back, a) << text;
    ASSERT_EQ(to_string(back), text);
  }
}

TEST(Text, VectorFormRoundTrip) {
  Sampler sampler(78);
  for (int s = 0; s < 100; ++s) {
    const auto k = sampler.vector_form(R3, sampler.integer(0, 2));
    const std::string text = to_string(k);
    const auto back = parse_vector_form(text, R3, k.degree());
    ASSERT_EQ(back, k) << text;
    ASSERT_EQ(to_string(back), text);
  }
  const auto k = parse_vector_form("e{1,2}⊗e7", R7);
  EXPECT_EQ(k, VectorValuedForm::decomposable(DifferentialForm::basis(R7, IndexSet::from_labels({1, 2})), 6));
  EXPECT_EQ(parse_vector_form("(x1 e{2})⊗e_1 - (e{1})⊗e3", R3).degree(), 1);
}
