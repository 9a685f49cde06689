#include <gtest/gtest.h>

#include "ekc/error.hpp"
#include "ekc/fgab.hpp"
#include "ekc/matrix.hpp"

using namespace ekc;

namespace {

void expect_smith(const ZMatrix& A, const std::vector<long>& diag) {
  SmithForm s = smith_decompose(A);
  EXPECT_EQ(s.U * A * s.V, s.D);
  EXPECT_EQ(s.U * s.U_inv, ZMatrix::identity(A.rows()));
  EXPECT_EQ(s.V * s.V_inv, ZMatrix::identity(A.cols()));
  ASSERT_EQ(s.diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) EXPECT_EQ(s.diag[i], diag[i]) << i;
}

}  // namespace

// diagonals frozen from an independent Smith-form implementation
TEST(Smith, FrozenDiagonals) {
  expect_smith(ZMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, {2, 6, 12});
  expect_smith(ZMatrix{{6, 4}, {4, 6}}, {2, 10});
  expect_smith(ZMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}, {1, 3, 0});
  expect_smith(ZMatrix{{0, 2}, {3, 0}}, {1, 6});
}

TEST(Smith, RankOfZeroMatrix) {
  SmithForm s = smith_decompose(ZMatrix(2, 3));
  EXPECT_EQ(s.rank, 0u);
}

TEST(Matrix, DeterminantAndKernel) {
  EXPECT_EQ(ZMatrix({{1, 0, 0}, {0, -3, 1}, {0, 1, 5}}).determinant(), -16);
  ZMatrix K = integer_kernel(ZMatrix{{1, 2, 3}, {4, 5, 6}});
  ASSERT_EQ(K.cols(), 1u);
  ZVector v = K.column(0);
  EXPECT_EQ(ZMatrix({{1, 2, 3}, {4, 5, 6}}) * v, (ZVector{0, 0}));
}

TEST(Matrix, SolveInteger) {
  ZMatrix A{{2, 0}, {0, 3}};
  EXPECT_TRUE(solve_integer(A, ZVector{4, 9}).has_value());
  EXPECT_FALSE(solve_integer(A, ZVector{1, 0}).has_value());
}

TEST(Groups, NormaliseToInvariantFactors) {
  Presentation p = normalise({6, 4});
  EXPECT_EQ(p.group, FinAbGroup({2, 12}, 0));
  Presentation q = normalise({0, 3, 1, 9});
  EXPECT_EQ(q.group, FinAbGroup({3, 9}, 1));
  // the old generators map onto elements of the right order
  EXPECT_EQ(order(p.group, p.canonical(std::vector<Int>{1, 0})), 6);
  EXPECT_EQ(order(p.group, p.canonical(std::vector<Int>{0, 1})), 4);
}

TEST(Groups, Cokernel) {
  Presentation p = cokernel(ZMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  EXPECT_EQ(p.group, FinAbGroup({2, 6, 12}, 0));
  Presentation z = cokernel(ZMatrix{{2}, {0}});
  EXPECT_EQ(z.group, FinAbGroup({2}, 1));
}

TEST(Groups, ElementArithmetic) {
  FinAbGroup G({4, 8}, 1);
  Element x = make_element(G, {3, 7, -2});
  EXPECT_EQ(add(G, x, x).c, (std::vector<Int>{2, 6, -4}));
  EXPECT_EQ(order(G, make_element(G, {2, 4, 0})), 2);
  EXPECT_EQ(order(G, x), 0);
  EXPECT_TRUE(is_torsion(G, make_element(G, {1, 1, 0})));
  EXPECT_EQ(element_index(G.torsion_subgroup(), element_at(G.torsion_subgroup(), 17)), 17);
}

TEST(Groups, Divisibility) {
  FinAbGroup G({4}, 1);
  // (2, 8) in Z/4 + Z is 2 * (1, 4) and not 4 * anything
  EXPECT_EQ(divisibility(G, make_element(G, {2, 8})), 2);
  EXPECT_EQ(divisibility(G, make_element(G, {0, 8})), 8);
  EXPECT_TRUE(divide(G, make_element(G, {2, 8}), 2).has_value());
  EXPECT_FALSE(divide(G, make_element(G, {2, 8}), 4).has_value());
  EXPECT_TRUE(is_even(G, make_element(G, {2, 8})));
  EXPECT_FALSE(is_even(G, make_element(G, {1, 8})));
}

TEST(Groups, DivisibilityTriple) {
  // p = (2^c, 2^a) in Z/2^b + Z with (a, b, c) = (3, 2, 1)
  FinAbGroup G({4}, 1);
  Element p = make_element(G, {2, 8});
  EXPECT_EQ(d_pi(G, p), 8);
  EXPECT_EQ(d_m(G, p), 4);
  EXPECT_EQ(divisibility(G, p), 2);
}

TEST(Groups, TorsionPHasZeroDivisibilities) {
  FinAbGroup G({8}, 1);
  Element p = make_element(G, {2, 0});
  EXPECT_EQ(d_pi(G, p), 0);
  EXPECT_EQ(d_m(G, p), 0);
}

TEST(Groups, HomIsoChecks) {
  FinAbGroup T({2, 4}, 0);
  GroupHom swapish(T, T, {make_element(T, {1, 2}), make_element(T, {0, 1})});
  EXPECT_TRUE(swapish.is_iso());
  GroupHom collapse(T, T, {make_element(T, {0, 2}), make_element(T, {0, 2})});
  EXPECT_FALSE(collapse.is_iso());
  EXPECT_THROW(GroupHom(T, T, {make_element(T, {0, 1}), make_element(T, {0, 1})}), MathError);
}

TEST(Groups, SubgroupEnumeration) {
  FinAbGroup T({2, 8}, 0);
  Subgroup S(T, {make_element(T, {1, 2})});
  EXPECT_EQ(S.size(), 4);
  int n = 0;
  S.for_each(zero(T), [&](const Element&) { return ++n, true; });
  EXPECT_EQ(n, 4);
}

TEST(Groups, SolveCongruences) {
  // 2 y_1 ≡ 4 (mod 8) on Z/8
  FinAbGroup T({8}, 0);
  auto sol = solve_congruences(T, {{{2}, 4, 8}});
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ(mod(2 * sol->particular.c[0], 8), 4);
  EXPECT_FALSE(solve_congruences(T, {{{2}, 1, 8}}).has_value());
}
