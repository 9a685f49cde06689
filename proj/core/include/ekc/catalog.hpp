#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ekc/autact.hpp"
#include "ekc/charform.hpp"

namespace ekc {

struct ManifoldNode;

// A connected-sum expression over standard pieces, with its distillation.
struct Manifold {
  std::shared_ptr<const ManifoldNode> node;
  Distillation dist;

  std::string str() const;
};

Manifold sphere_bundle(Int n, Int p);             // M_{n,p}
Manifold free_piece(int b, Int d);                 // M(Z^b, d)
Manifold rational_homology_sphere(const QuadraticRefinement& q, const Rational& s);  // M(q, s)
Manifold homotopy_sphere(Int s);                   // Σ with μ = s mod 28
Manifold connected_sum(const Manifold& a, const Manifold& b);
Manifold reverse(const Manifold& m);

Manifold milnor_sphere();
Manifold berger_space();
Manifold unit_tangent_s4();
Manifold p2_gvz();
Manifold gromoll_meyer();

struct InvariantsReport {
  std::string expression;
  std::string group;
  std::vector<Int> torsion;
  int free_rank = 0;
  std::vector<std::vector<Rational>> linking_form;
  std::vector<Int> p;
  Int d = 0, d_pi = 0, d_m = 0;
  std::optional<int> r;
  bool r_conventional = false;
  std::optional<std::vector<Residue>> arf_spectrum;
  std::optional<std::vector<Residue>> mu_spectrum;
  std::optional<InertiaSubgroup> inertia;
  InertiaSubgroup inertia_H;
  std::optional<ReactivityReport> reactivity;
  std::optional<Int> n_plus;
  std::optional<bool> orientation_reversible;
  bool indecomposable_candidate = false;
  std::vector<std::string> caps_exceeded;
};

struct ReportOptions {
  SearchLimits search;
  ArfOptions arf;
  Int spectrum_cap = 100000;  // |T| bound for listing the spectra
};

InvariantsReport invariants_report(const Manifold& m, const ReportOptions& opt = {});

}  // namespace ekc
