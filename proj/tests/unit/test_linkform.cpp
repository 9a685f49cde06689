#include <gtest/gtest.h>

#include <cmath>

#include "ekc/error.hpp"
#include "ekc/linkform.hpp"
#include "suites.hpp"

using namespace ekc;
using check::Rng;

namespace {

Rational rat(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::size_t count_isometries(const TorsionForm& b) { return iso_search(b, b, {}, SearchMode::enumerate).size(); }

}  // namespace

struct ArfCase {
  CyclicSpec spec;
  long num, den;
};

class FrozenArf : public testing::TestWithParam<ArfCase> {};

// values frozen from a standalone Gauss-sum evaluator
TEST_P(FrozenArf, Matches) {
  const ArfCase& c = GetParam();
  EXPECT_EQ(arf(cyclic_refinement(c.spec)), Residue::mod1(rat(c.num, c.den)))
      << c.spec.theta << "/" << c.spec.r << " gamma " << c.spec.gamma;
}

INSTANTIATE_TEST_SUITE_P(Cyclic, FrozenArf,
                         testing::Values(ArfCase{{1, 2, 0}, 1, 8}, ArfCase{{1, 4, 0}, 1, 8}, ArfCase{{-1, 4, 0}, 7, 8},
                                         ArfCase{{3, 4, 0}, 3, 8}, ArfCase{{1, 8, 0}, 1, 8}, ArfCase{{3, 16, 0}, 3, 8},
                                         ArfCase{{1, 32, 3}, 63, 64}, ArfCase{{5, 6, 0}, 5, 8},
                                         ArfCase{{1, 6, 1}, 1, 24}, ArfCase{{2, 5, 0}, 0, 1},
                                         ArfCase{{2, 7, 3}, 27, 28}, ArfCase{{4, 9, 2}, 1, 9},
                                         ArfCase{{1, 12, 5}, 1, 12}, ArfCase{{7, 10, 4}, 31, 40}));

TEST(Arf, MilgramOnRandomRefinements) {
  Rng rng(11);
  for (int i = 0; i < 60; ++i) {
    QuadraticRefinement q = check::random_refinement(rng, 120);
    const double n = static_cast<double>(q.group().torsion_order());
    std::complex<double> g = check::oracle_gauss(q);
    ASSERT_NEAR(std::abs(g), std::sqrt(n), 1e-9);
    if (homogeneity_defect(q) == zero(q.group())) {
      // homogeneous: the phase is a multiple of 1/8
      Rational a = arf(q).value() * 8;
      EXPECT_EQ(a.get_den(), 1);
    }
    double phase = std::arg(g) / (2 * std::acos(-1.0));
    double got = arf(q).value().get_d();
    double diff = std::remainder(phase - got, 1.0);
    EXPECT_NEAR(diff, 0.0, 1e-6);
  }
}

TEST(Arf, GaussCapThrows) {
  ArfOptions opt;
  opt.gauss_cap = 4;
  EXPECT_THROW(arf(cyclic_refinement({2, 9, 0}), opt), CapExceeded);
}

TEST(Arf, AdditiveOverOrthogonalSums) {
  Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    QuadraticRefinement a = check::random_refinement(rng, 30), b = check::random_refinement(rng, 30);
    OrthSumRefinement s = orth_sum(a, b);
    EXPECT_EQ(arf(s.refinement), arf(a) + arf(b));
  }
}

TEST(Arf, TrivialGroupSum) {
  QuadraticRefinement t = cyclic_refinement_sum({});
  EXPECT_EQ(t.group().torsion_order(), 1);
  EXPECT_TRUE(arf(orth_sum(t, t).refinement).is_zero());
}

TEST(Refinement, ShiftAndDefect) {
  Rng rng(3);
  for (int i = 0; i < 40; ++i) {
    QuadraticRefinement q = check::random_refinement(rng, 64);
    const TorsionForm& b = q.form();
    const FinAbGroup& T = q.group();
    Element a = element_at(T, std::uniform_int_distribution<Int>(0, T.torsion_order() - 1)(rng));
    QuadraticRefinement qa = shift(q, a);
    Element delta = homogeneity_defect(q);
    for_each_element(T, [&](const Element& x) {
      EXPECT_EQ(Residue::mod1(check::oracle_q(qa, x)), Residue::mod1(check::oracle_q(q, x) + b.b(a, x)));
      EXPECT_EQ(Residue::mod1(check::oracle_q(q, x) - check::oracle_q(q, neg(T, x))), Residue::mod1(b.b(delta, x)));
    });
    EXPECT_EQ(homogeneity_defect(qa), add(T, delta, scale(T, 2, a)));
    // completing the square
    EXPECT_EQ(arf(qa), arf(q) - Residue::mod1(check::oracle_q(q, a)));
  }
}

TEST(Refinement, RefinesTheForm) {
  Rng rng(9);
  for (int i = 0; i < 40; ++i) {
    QuadraticRefinement q = check::random_refinement(rng, 50);
    const FinAbGroup& T = q.group();
    for_each_element(T, [&](const Element& x) {
      for_each_element(T, [&](const Element& y) {
        Rational lhs = check::oracle_q(q, add(T, x, y)) - check::oracle_q(q, x) - check::oracle_q(q, y);
        ASSERT_EQ(Residue::mod1(lhs), Residue::mod1(q.form().b(x, y)));
      });
    });
  }
}

TEST(Forms, NegationAndUnits) {
  TorsionForm b = cyclic_form(3, 8);
  EXPECT_EQ(b.b(gen(b.group(), 0), gen(b.group(), 0)), rat(3, 8));
  EXPECT_EQ(b.negated().b(gen(b.group(), 0), gen(b.group(), 0)), rat(5, 8));
  EXPECT_THROW(cyclic_form(2, 8), MathError);  // singular
}

TEST(Forms, TransportToInvariantFactors) {
  // <1/2> + <1/3> is cyclic of order 6
  CyclicData d{{2, 3}, {{rat(1, 2), 0}, {0, rat(1, 3)}}, {rat(1, 4), rat(1, 3)}};
  Transported t = transport(d);
  EXPECT_EQ(t.form.group(), FinAbGroup({6}, 0));
  ASSERT_TRUE(t.refinement.has_value());
  for (long a = 0; a < 2; ++a)
    for (long c = 0; c < 3; ++c) {
      Element x = t.pres.canonical(std::vector<Int>{a, c});
      EXPECT_EQ(Residue::mod1(t.refinement->q(x)), Residue::mod1(eval_raw(d, ZVector{a, c})));
    }
}

// |O(b)| frozen from a standalone enumeration
TEST(Isometries, FrozenGroupOrders) {
  EXPECT_EQ(count_isometries(cyclic_form(1, 8)), 4u);
  auto two_halves = transport({{2, 2}, {{rat(1, 2), 0}, {0, rat(1, 2)}}, {}});
  EXPECT_EQ(count_isometries(two_halves.form), 2u);
  auto hyp4 = transport({{4, 4}, {{0, rat(1, 4)}, {rat(1, 4), 0}}, {}});
  EXPECT_EQ(count_isometries(hyp4.form), 16u);
  auto quarters = transport({{4, 4}, {{rat(1, 4), 0}, {0, rat(1, 4)}}, {}});
  EXPECT_EQ(count_isometries(quarters.form), 16u);
  auto thirds = transport({{3, 3}, {{rat(1, 3), 0}, {0, rat(1, 3)}}, {}});
  EXPECT_EQ(count_isometries(thirds.form), 8u);
  auto mixed = transport({{2, 4}, {{rat(1, 2), 0}, {0, rat(1, 4)}}, {}});
  EXPECT_EQ(count_isometries(mixed.form), 2u);
}

TEST(Isometries, SearchAgreesWithLiteralEnumeration) {
  Rng rng(21);
  for (int i = 0; i < 40; ++i) {
    TorsionForm b = check::random_form(rng, 64);
    auto lit = check::literal_isometries(b, b);
    ASSERT_TRUE(lit.has_value());
    auto found = iso_search(b, b, {}, SearchMode::enumerate);
    EXPECT_EQ(found.size(), lit->size()) << b.group().str();
    for (const GroupHom& f : found) EXPECT_TRUE(is_isometry(f, b, b));
  }
}

TEST(Isometries, PinsAreRespected) {
  TorsionForm b = cyclic_form(1, 8);
  const FinAbGroup& T = b.group();
  auto fs = iso_search(b, b, {{gen(T, 0), make_element(T, {3})}}, SearchMode::enumerate);
  ASSERT_EQ(fs.size(), 1u);
  EXPECT_EQ(fs[0].apply(gen(T, 0)), make_element(T, {3}));
  // 1 -> 3 changes b(1,1) from 1/8 to 9/8 = 1/8, fine; 1 -> 2 is not an isometry
  EXPECT_FALSE(isometry_exists(b, b, {{gen(T, 0), make_element(T, {2})}}));
}

TEST(Isometries, NodeBudgetThrows) {
  auto quarters = transport({{4, 4, 4}, {{rat(1, 4), 0, 0}, {0, rat(1, 4), 0}, {0, 0, rat(1, 4)}}, {}});
  SearchLimits lim;
  lim.node_budget = 3;
  EXPECT_THROW(iso_search(quarters.form, quarters.form, {}, SearchMode::enumerate, lim), CapExceeded);
}

TEST(Isometries, RefinementsUpToIsometry) {
  Rng rng(4);
  for (int i = 0; i < 30; ++i) {
    QuadraticRefinement q = check::random_refinement(rng, 40);
    EXPECT_TRUE(refinements_isomorphic(q, q));
    QuadraticRefinement m = q.negated();
    auto isos = check::literal_isometries(q.form(), m.form());
    ASSERT_TRUE(isos.has_value());
    bool literal = false;
    for (const GroupHom& f : *isos) {
      bool same = true;
      for_each_element(q.group(), [&](const Element& x) {
        same = same && Residue::mod1(check::oracle_q(m, f.apply(x))) == Residue::mod1(check::oracle_q(q, x));
      });
      literal = literal || same;
    }
    EXPECT_EQ(refinements_isomorphic(q, m), literal) << q.group().str();
  }
}

TEST(Splitting, SplitOffIsAnIsometry) {
  auto quarters = transport({{4, 2}, {{rat(1, 4), 0}, {0, rat(1, 2)}}, {}});
  const TorsionForm& b = quarters.form;
  const FinAbGroup& T = b.group();
  Element x = make_element(T, {1, 0});
  for_each_element(T, [&](const Element& y) {
    if (order(T, y) == T.exponent() && is_split(y, b)) x = y;
  });
  ASSERT_TRUE(is_split(x, b));
  SplitResult s = split_off(x, b);
  OrthSum sum = orth_sum(s.cyclic, s.complement);
  EXPECT_TRUE(is_isometry(s.iso, sum.form, b));
}
