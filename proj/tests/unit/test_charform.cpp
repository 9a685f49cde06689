#include <gtest/gtest.h>

#include "ekc/charform.hpp"
#include "ekc/error.hpp"
#include "suites.hpp"

using namespace ekc;

namespace {

Rational rat(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

// signatures and determinants frozen from a floating-point eigenvalue count
TEST(Signature, Frozen) {
  EXPECT_EQ(signature(ZMatrix{{2, 1}, {1, 2}}), 2);
  EXPECT_EQ(signature(ZMatrix{{1, 2}, {2, 1}}), 0);
  EXPECT_EQ(signature(ZMatrix{{0, 1}, {1, 0}}), 0);
  EXPECT_EQ(signature(ZMatrix{{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}}), -3);
  EXPECT_EQ(signature(ZMatrix{{1, 0, 0}, {0, -3, 1}, {0, 1, 5}}), 1);
  EXPECT_EQ(signature(ZMatrix{{0, 0}, {0, 0}}), 0);
  EXPECT_EQ(signature(ZMatrix{{0, 0}, {0, -4}}), -1);
}

TEST(CharForms, ParityIsChecked) {
  EXPECT_THROW(CharForm(ZMatrix{{2}}, ZVector{1}), MathError);
  EXPECT_NO_THROW(CharForm(ZMatrix{{3}}, ZVector{1}));
}

TEST(CharForms, DirectSumAddsSignatures) {
  CharForm a(ZMatrix{{2, 1}, {1, 2}}, ZVector{0, 0});
  CharForm b(ZMatrix{{-3}}, ZVector{1});
  CharForm s = direct_sum(a, b);
  EXPECT_EQ(s.rank(), 3u);
  EXPECT_EQ(signature(s.lambda), 1);
  EXPECT_EQ(s.alpha, (ZVector{0, 0, 1}));
}

TEST(Boundary, A2) {
  CharForm a2(ZMatrix{{2, 1}, {1, 2}}, ZVector{0, 0});
  Boundary B(a2);
  EXPECT_EQ(B.group(), FinAbGroup({3}, 0));
  EXPECT_EQ(B.d_pi(), 0);
  Element g = gen(B.group(), 0);
  EXPECT_EQ(Residue::mod1(B.base().b.b(g, g)), Residue::mod1(rat(2, 3)));
  EXPECT_EQ(B.gauss_at(B.default_k()), rat(-1, 4));
  EXPECT_EQ(arf(B.family_at(B.default_h())), Residue::mod1(rat(1, 4)));
}

TEST(Boundary, FreeRankOne) {
  // (Z, (8), (2)) bounds Z/8 with p = 2 e
  CharForm cf(ZMatrix{{8}}, ZVector{2});
  Boundary B(cf);
  EXPECT_EQ(B.group(), FinAbGroup({8}, 0));
  CharForm z(ZMatrix{{0}}, ZVector{4});
  Boundary Bz(z);
  EXPECT_EQ(Bz.group(), FinAbGroup({}, 1));
  EXPECT_EQ(Bz.d_pi(), 4);
  EXPECT_EQ(Bz.p(), make_element(Bz.group(), {4}));
}

TEST(Boundary, GaussIsMinusArfOnRandomForms) {
  check::Rng rng(17);
  check::SuiteResult r = check::charform_arf_suite(rng, 60);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Boundary, NegatedFormHasNegatedLinking) {
  check::Rng rng(2);
  for (int i = 0; i < 20; ++i) {
    CharForm cf = check::random_charform(rng, 3, 4);
    if (cf.lambda.determinant() == 0) continue;
    Boundary plus(cf, 1), minus(cf, -1);
    EXPECT_EQ(plus.base().b.negated(), minus.base().b);
  }
}

TEST(Neutral, Hyperbolic) {
  EXPECT_TRUE(is_neutral(CharForm(ZMatrix{{0, 1}, {1, 0}}, ZVector{0, 0})));
  EXPECT_FALSE(is_neutral(CharForm(ZMatrix{{2, 1}, {1, 2}}, ZVector{0, 0})));
}

TEST(Glue, SmallExample) {
  GlueReport g = glue_check(CharForm(ZMatrix{{8, 1}, {1, 0}}, ZVector{2, 0}), ZMatrix{{1}, {0}});
  EXPECT_TRUE(g.boundary_identity);
  EXPECT_TRUE(g.gauss_identity);
  EXPECT_EQ(g.residual, 0);
}

TEST(Glue, RejectsImprimitiveSublattice) {
  EXPECT_THROW(glue_check(CharForm(ZMatrix{{0, 1}, {1, 0}}, ZVector{0, 0}), ZMatrix{{2}, {0}}), MathError);
}

TEST(Glue, RandomNonsingularForms) {
  check::Rng rng(23);
  check::SuiteResult r = check::gluing_suite(rng, 40);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(SpinC, ZeroZetaIsTheGaussValue) {
  ZMatrix lambda{{8}};
  Boundary B(CharForm(lambda, ZVector{2}));
  Residue v = spin_c_gauss(lambda, ZVector{2}, ZVector{0}, zero(B.group()));
  EXPECT_EQ(v.value(), B.gauss_at(zero(B.group())));
  EXPECT_EQ(v.value(), rat(-1, 16));
}

TEST(SpinC, CorrectionTerms) {
  // -1/16 - 5*2/12 + 8/4
  ZMatrix lambda{{8}};
  Residue v = spin_c_gauss(lambda, ZVector{2}, ZVector{1}, zero(FinAbGroup({8}, 0)));
  EXPECT_EQ(v.value(), rat(53, 48));
}
