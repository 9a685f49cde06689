#include <gtest/gtest.h>

#include "ekc/arith.hpp"
#include "ekc/error.hpp"

using namespace ekc;

TEST(Arith, ModIsNonnegative) {
  EXPECT_EQ(mod(-7, 5), 3);
  EXPECT_EQ(mod(7, 5), 2);
  EXPECT_EQ(mod(-10, 5), 0);
}

TEST(Arith, GcdLcmConventions) {
  EXPECT_EQ(gcd(12, 18), 6);
  EXPECT_EQ(gcd(0, 18), 18);
  EXPECT_EQ(gcd(-4, 6), 2);
  EXPECT_EQ(lcm(4, 6), 12);
  EXPECT_EQ(lcm(4, 0), 0);
}

TEST(Arith, InverseMod) {
  EXPECT_EQ(inverse_mod(3, 7), 5);
  EXPECT_EQ(mulmod(inverse_mod(17, 224), 17, 224), 1);
  EXPECT_THROW(inverse_mod(2, 4), MathError);
}

TEST(Arith, PrimeData) {
  EXPECT_EQ(ord(112, 2), 4);
  EXPECT_EQ(ord(112, 7), 1);
  EXPECT_EQ(prime_factors(112), (std::vector<Int>{2, 7}));
  EXPECT_EQ(ipow(2, 10), 1024);
}

TEST(Arith, CheckedOverflow) {
  EXPECT_THROW(checked_mul(Int{1} << 40, Int{1} << 40), MathError);
}

TEST(Arith, RationalRoundTrip) {
  EXPECT_EQ(to_string(parse_rational("-6/8")), "-3/4");
  EXPECT_EQ(to_string(parse_rational("5")), "5");
  EXPECT_THROW(parse_rational("1/0"), MathError);
  EXPECT_THROW(parse_rational("x"), MathError);
}

TEST(Residue, ReducesIntoFundamentalDomain) {
  Residue a(make_rational(-1, 8), Rational(28));
  EXPECT_EQ(a.str(), "223/8");
  EXPECT_EQ(Residue::mod1(make_rational(9, 8)).str(), "1/8");
}

TEST(Residue, ArithmeticRespectsModulus) {
  Residue a(make_rational(27, 2), Rational(28)), b(make_rational(31, 2), Rational(28));
  EXPECT_EQ((a + b).str(), "1");
  EXPECT_EQ((a - b).str(), "26");
  EXPECT_EQ((-a).str(), "29/2");
  EXPECT_TRUE(Residue(Rational(29), Rational(28)) == Residue(Rational(1), Rational(28)));
}

TEST(Residue, ReduceToDivisor) {
  Residue a(Rational(27), Rational(28));
  EXPECT_EQ(a.reduce(Rational(4)).str(), "3");
  EXPECT_THROW(a.reduce(Rational(3)), MathError);
}

TEST(Residue, ExactWhenModulusZero) {
  Residue a(make_rational(-5, 3), Rational(0));
  EXPECT_EQ(a.str(), "-5/3");
}
