#include <gtest/gtest.h>

#include "ekc/catalog.hpp"
#include "ekc/error.hpp"
#include "suites.hpp"
#include "tables.hpp"

using namespace ekc;

namespace {

Manifold sum(const Manifold& a, const Manifold& b) { return connected_sum(a, b); }

std::vector<std::string> strs(const std::vector<Residue>& v) {
  std::vector<std::string> out;
  for (const Residue& r : v) out.push_back(r.str());
  return out;
}

}  // namespace

TEST(Named, MilnorSphere) {
  Manifold m = milnor_sphere();
  EXPECT_EQ(m.str(), "M(1,3)");
  InvariantsReport r = invariants_report(m);
  ASSERT_TRUE(r.mu_spectrum.has_value());
  EXPECT_EQ(strs(*r.mu_spectrum), std::vector<std::string>{"1"});
  EXPECT_TRUE(diffeo_decision(m.dist, homotopy_sphere(1).dist));
}

TEST(Named, GromollMeyer) {
  EXPECT_TRUE(diffeo_decision(gromoll_meyer().dist, homotopy_sphere(25).dist));
}

TEST(Named, BergerAndUnitTangent) {
  InvariantsReport b = invariants_report(berger_space());
  EXPECT_EQ(b.group, "Z/10");
  InvariantsReport u = invariants_report(unit_tangent_s4());
  EXPECT_EQ(u.group, "Z/2");
  EXPECT_TRUE(u.indecomposable_candidate);
  InvariantsReport g = invariants_report(p2_gvz());
  EXPECT_EQ(g.group, "Z/2");
}

TEST(Named, Sphere) {
  InvariantsReport s = invariants_report(homotopy_sphere(0));
  EXPECT_EQ(s.group, "0");
  ASSERT_TRUE(s.n_plus.has_value());
  EXPECT_EQ(*s.n_plus, 28);
  ASSERT_TRUE(s.inertia.has_value());
  EXPECT_EQ(s.inertia->order(), 1);
  EXPECT_EQ(s.inertia_H.order(), 1);
}

TEST(Bundles, ClosedFormForSmallN) {
  check::SuiteResult r = check::bundle_suite(20);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Bundles, ParityIsRequired) {
  EXPECT_THROW(sphere_bundle(1, 2), MathError);
  EXPECT_THROW(free_piece(1, 3), MathError);
}

TEST(Examples, RZeroOneTwo) {
  const Manifold M0 = sum(sphere_bundle(-8, 0), sphere_bundle(0, 8));
  const Manifold M1 = sum(sphere_bundle(-8, 2), sphere_bundle(0, 8));
  const Manifold M2 = sum(sphere_bundle(-8, 4), sphere_bundle(0, 8));
  const int r_expected[] = {0, 1, 2};
  const Int dm_expected[] = {8, 2, 4};
  const Int order_expected[] = {28, 28, 14};
  const Manifold* ms[] = {&M0, &M1, &M2};
  for (int i = 0; i < 3; ++i) {
    InvariantsReport r = invariants_report(*ms[i]);
    EXPECT_EQ(r.d_pi, 8) << i;
    EXPECT_EQ(r.d_m, dm_expected[i]) << i;
    ASSERT_TRUE(r.r.has_value());
    EXPECT_EQ(*r.r, r_expected[i]) << i;
    EXPECT_EQ(r.inertia->order(), order_expected[i]) << i;
    // the r = 1 formula is right only for M1
    InertiaSubgroup r1 = InertiaSubgroup::generated_by(num(2 * r.d_m, 8));
    EXPECT_EQ(r1 == *r.inertia, i == 1) << i;
  }
}

TEST(Examples, FreePieces) {
  InvariantsReport a = invariants_report(free_piece(85, 2));
  EXPECT_EQ(a.n_plus, 1);
  InvariantsReport b = invariants_report(free_piece(99, 8));
  EXPECT_EQ(b.n_plus, 2);
  // I(M(Z^b, d)) = Num(d/4)
  for (Int d : {2, 4, 8, 16, 56, 112}) {
    InvariantsReport r = invariants_report(free_piece(3, d));
    EXPECT_EQ(*r.inertia, InertiaSubgroup::generated_by(num(d, 4))) << d;
  }
}

TEST(Examples, OrientationReversal) {
  Manifold a = sum(free_piece(1, 8), homotopy_sphere(1));
  EXPECT_TRUE(diffeo_decision(reverse(a).dist, a.dist));
  Manifold b = sum(free_piece(1, 16), homotopy_sphere(1));
  EXPECT_FALSE(diffeo_decision(reverse(b).dist, b.dist));
  EXPECT_TRUE(*invariants_report(a).orientation_reversible);
  EXPECT_FALSE(*invariants_report(b).orientation_reversible);
  // mu separates M(Z, 8) from M(Z, 8) # Sigma but not the homeomorphism type
  EXPECT_FALSE(diffeo_decision(free_piece(1, 8).dist, a.dist));
  EXPECT_TRUE(homeo_decision(free_piece(1, 8).dist, a.dist));
}

TEST(Examples, ExoticSpheresAndInertia) {
  // #diffeo classes among M # Sigma(s) equals gcd(28, Num(2^r d_m / 8))
  const Manifold ms[] = {sum(sphere_bundle(-8, 4), sphere_bundle(0, 8)), free_piece(1, 8), free_piece(2, 16),
                         sum(sphere_bundle(-7, 1), sphere_bundle(0, 14))};
  for (const Manifold& m : ms) {
    InvariantsReport r = invariants_report(m);
    std::vector<Distillation> reps;
    for (Int s = 0; s < 28; ++s) {
      Distillation d = sum(m, homotopy_sphere(s)).dist;
      bool seen = false;
      for (const Distillation& e : reps) seen = seen || diffeo_decision(d, e);
      if (!seen) reps.push_back(d);
    }
    EXPECT_EQ(static_cast<Int>(reps.size()), *r.n_plus) << m.str();
  }
}

TEST(Reports, RationalHomologySphere) {
  QuadraticRefinement q = cyclic_refinement({1, 4, 0});
  Manifold m = rational_homology_sphere(q, arf(q).value());
  InvariantsReport r = invariants_report(m);
  EXPECT_EQ(r.group, "Z/4");
  EXPECT_EQ(r.free_rank, 0);
  EXPECT_TRUE(r.r_conventional);
  EXPECT_TRUE(r.indecomposable_candidate);
  EXPECT_THROW(rational_homology_sphere(q, Rational(0)), MathError);
}

TEST(Reports, IndecomposableShapes) {
  EXPECT_TRUE(invariants_report(free_piece(1, 2)).indecomposable_candidate);
  EXPECT_FALSE(invariants_report(free_piece(2, 2)).indecomposable_candidate);
  EXPECT_FALSE(invariants_report(sum(sphere_bundle(6, 0), sphere_bundle(0, 2))).indecomposable_candidate);
}

TEST(Reports, Names) {
  Manifold m = reverse(sum(sphere_bundle(0, 8), homotopy_sphere(1)));
  EXPECT_EQ(m.str(), "-(M(0,8) # Sigma(1))");
}

TEST(Tables, InertiaPairs) {
  auto t = cli::run_table("inertia-pairs");
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->rows.size(), 18u);
  EXPECT_EQ(t->matches(), 18);
}

TEST(Tables, RExamples) {
  auto t = cli::run_table("r-examples");
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->unexpected(), 0);
  for (const auto& row : t->rows) EXPECT_TRUE(row.match || row.known_discrepancy) << row.label;
}

TEST(Tables, DmExample) {
  auto t = cli::run_table("dm-example");
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->matches(), static_cast<int>(t->rows.size()));
  EXPECT_FALSE(cli::run_table("no-such-table").has_value());
}
