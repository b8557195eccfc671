#include <random>

#include <gtest/gtest.h>

#include "fncalc/exact/scalar.hpp"

using fncalc::exact::ExactScalar;
using fncalc::exact::Rational;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
  EXPECT_EQ(Rational(0, 5), Rational(0));
  EXPECT_EQ(Rational(-6, 3).to_string(), "-2");
  EXPECT_EQ(Rational(3, 2).to_string(), "3/2");
  EXPECT_ANY_THROW(Rational(1, 0));
  EXPECT_ANY_THROW(Rational(1) / Rational(0));
}

TEST(Rational, ParseRoundTrip) {
  for (const char* text : {"0", "7", "-7", "3/2", "-22/7"}) EXPECT_EQ(Rational::parse(text).to_string(), text);
  EXPECT_EQ(Rational::parse("4/6"), Rational(2, 3));
  EXPECT_ANY_THROW(Rational::parse("1/0"));
  EXPECT_ANY_THROW(Rational::parse("abc"));
}

// Reference: GMP rationals directly, across the small/large boundary.
TEST(Rational, MatchesGmpAcrossPromotion) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> big(-(std::int64_t{1} << 61), std::int64_t{1} << 61);
  std::uniform_int_distribution<std::int64_t> small(-50, 50);
  for (int s = 0; s < 2000; ++s) {
    const bool large = s % 2 == 0;
    std::int64_t an = large ? big(rng) : small(rng), ad = large ? big(rng) : small(rng);
    std::int64_t bn = large ? big(rng) : small(rng), bd = large ? big(rng) : small(rng);
    if (ad == 0) ad = 1;
    if (bd == 0) bd = 3;
    const Rational a(an, ad), b(bn, bd);
    mpq_class qa(mpz_class(std::to_string(an)), mpz_class(std::to_string(ad)));
    mpq_class qb(mpz_class(std::to_string(bn)), mpz_class(std::to_string(bd)));
    qa.canonicalize();
    qb.canonicalize();
    ASSERT_EQ((a + b).to_mpq(), qa + qb);
    ASSERT_EQ((a - b).to_mpq(), qa - qb);
    ASSERT_EQ((a * b).to_mpq(), qa * qb);
    if (!b.is_zero()) {
      ASSERT_EQ((a / b).to_mpq(), qa / qb);
    }
    ASSERT_EQ(a < b, qa < qb);
    ASSERT_EQ(a == Rational(qa), true);
  }
}

TEST(Rational, DemotesAfterCancellation) {
  const Rational huge(std::int64_t{1} << 62, 3);
  const Rational sum = huge * huge - huge * huge + Rational(1, 2);
  EXPECT_TRUE(sum.is_small());
  EXPECT_EQ(sum, Rational(1, 2));
}

TEST(ExactScalar, Formatting) {
  EXPECT_EQ(ExactScalar(Rational(3, 2)).to_string(), "3/2");
  EXPECT_EQ(ExactScalar::i().to_string(), "i");
  EXPECT_EQ((-ExactScalar::i()).to_string(), "-i");
  EXPECT_EQ(ExactScalar(Rational(0), Rational(2, 3)).to_string(), "2/3i");
  EXPECT_EQ(ExactScalar(Rational(1), Rational(-2)).to_string(), "(1-2i)");
  for (const char* text : {"3/2", "i", "-i", "2/3i", "(1-2i)", "(-1/2+3i)", "0"}) {
    EXPECT_EQ(ExactScalar::parse(text).to_string(), text);
  }
}

TEST(ExactScalar, FieldOperations) {
  const ExactScalar a(Rational(1, 2), Rational(3));
  const ExactScalar b(Rational(-2), Rational(1, 3));
  EXPECT_EQ(a * b / b, a);
  EXPECT_EQ((a + b) - b, a);
  EXPECT_EQ(a * a.conj(), ExactScalar(a.norm()));
  EXPECT_EQ(ExactScalar::i() * ExactScalar::i(), ExactScalar(-1));
  EXPECT_ANY_THROW(a / ExactScalar(0));
}
