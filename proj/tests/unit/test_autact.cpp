#include <gtest/gtest.h>

#include "ekc/autact.hpp"
#include "ekc/catalog.hpp"
#include "ekc/error.hpp"
#include "suites.hpp"
#include "tables.hpp"

using namespace ekc;

namespace {

// e -> e + s t on Z/n + Z, identity on torsion
GroupHom shear(const FinAbGroup& G, Int s) {
  return GroupHom(G, G, {make_element(G, {1, 0}), make_element(G, {s, 1})});
}

Distillation shear_example() { return connected_sum(sphere_bundle(-112, 2), sphere_bundle(0, 112)).dist; }

}  // namespace

TEST(ImP, RExamples) {
  for (int j = 1; j <= 4; ++j) {
    EXPECT_EQ(im_P(cli::shear_r0_base(j)).r, 0) << j;
    EXPECT_EQ(im_P(cli::hyperbolic_base(j)).r, 1) << j;
  }
  for (int j = 2; j <= 4; ++j) EXPECT_EQ(im_P(cli::half_shift_r2_base(j)).r, 2) << j;
}

// For eps = +1 the image of (0,1,0) can be taken to (7,57,8); the search finds r = 0 for both signs.
TEST(ImP, SplitSumWitness) {
  const Base B = cli::split_sum_base(1);
  const FinAbGroup& G = B.G;
  GroupHom F(G, G,
             {make_element(G, {7, 56, 448, 0}), make_element(G, {7, 57, 8, 0}), make_element(G, {0, 3, 21, 0}),
              make_element(G, {0, 0, -1, 1})});
  EXPECT_TRUE(is_isometry(torsion_restriction(G, F), B.b, B.b));
  EXPECT_TRUE(preserves_base(B, F));
  EXPECT_EQ(P_of(B, F), Residue(8, 128));
  EXPECT_EQ(base_d_m(B), 8);
  EXPECT_EQ(im_P(B).r, 0);
  EXPECT_EQ(im_P(cli::split_sum_base(-1)).r, 0);
}

TEST(ImP, AgreesWithLiteralAutomorphisms) {
  check::Rng rng(101);
  check::SuiteResult r = check::im_P_suite(rng, 150);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(ImP, TorsionPIsConventional) {
  FinAbGroup G({8}, 1);
  Base B{G, cyclic_form(1, 8), make_element(G, {2, 0})};
  ImP ip = im_P(B);
  EXPECT_TRUE(ip.r_conventional);
  EXPECT_EQ(ip.d_pi, 0);
}

TEST(PHat, DisplayedShearIsNotARefinementAutomorphism) {
  Distillation D = shear_example();
  const Base& B = D.base();
  ASSERT_EQ(B.G, FinAbGroup({112}, 1));
  GroupHom F = shear(B.G, 1);
  ASSERT_TRUE(preserves_base(B, F));
  Residue P = P_of(B, F);
  EXPECT_EQ(mod(to_int(P.value().get_num()), 8), 4);
  EXPECT_FALSE(preserves_refinement(D.ref, F));
  EXPECT_THROW(P_tilde(D.ref, F), MathError);
}

TEST(PHat, GeneratorOfTheMappingClassObstruction) {
  Distillation D = shear_example();
  const Base& B = D.base();
  EXPECT_EQ(d_hat(base_d_pi(B)), 28);
  GroupHom F = shear(B.G, -2);
  ASSERT_TRUE(preserves_refinement(D.ref, F));
  Residue h = P_hat(D.ref, F);
  EXPECT_TRUE(h == Residue(1, 28) || h == Residue(-1, 28)) << h.str();
  GroupHom Fn = GroupHom::identity(B.G);
  for (int n = 1; n <= 56; ++n) {
    Fn = Fn.compose(F);
    EXPECT_EQ(P_hat(D.ref, Fn).is_zero(), n % 28 == 0) << n;
  }
}

TEST(Inertia, Formulas) {
  ImP ip;
  ip.d_pi = 112;
  ip.d_m = 16;
  ip.r = 1;
  Inertia I = inertia_from(ip);
  EXPECT_EQ(I.I.order(), 7);   // gcd(Num(32/8), 28) = 4
  EXPECT_EQ(I.I_H.order(), 1);  // gcd(112/4, 28) = 28
  ReactivityReport R = reactivity_from(Base{}, ip);
  EXPECT_EQ(R.R, 32);
  EXPECT_EQ(R.R_H, 224);
  EXPECT_EQ(R.n_plus, 4);
  EXPECT_EQ(im_P_tilde_generator(ip), 32);
}

TEST(Inertia, NumeratorHelper) {
  EXPECT_EQ(num(6, 8), 3);
  EXPECT_EQ(num(-6, 8), 3);
  EXPECT_EQ(num(0, 8), 0);
  EXPECT_THROW(num(1, 0), MathError);
}

TEST(MappingTorus, SphereAndPseudoIsotopy) {
  EXPECT_EQ(sphere_from_mapping_torus(8), Residue(1, 28));
  EXPECT_EQ(sphere_from_mapping_torus(232), Residue(1, 28));
  EXPECT_TRUE(pseudo_isotopic_to_diffeo(224));
  EXPECT_FALSE(pseudo_isotopic_to_diffeo(112));
  EXPECT_THROW(sphere_from_mapping_torus(4), MathError);
}
