#pragma once

#include <optional>
#include <vector>

#include "ekc/linkform.hpp"

namespace ekc {

// (G, b, p): b lives on the torsion subgroup T of G, p ∈ 2G.
struct Base {
  FinAbGroup G;
  TorsionForm b;
  Element p;

  const FinAbGroup& T() const { return b.group(); }
};

void validate(const Base& B);
Int base_d(const Base& B);
Int base_d_pi(const Base& B);
Int base_d_m(const Base& B);
// lcm(4, d_pi), with lcm(4, 0) = 0.
Int d_tilde(Int dpi);
// gcd(d_tilde / 4, 28), which is 28 when d_pi = 0.
Int d_hat(Int dpi);

// p - s k is torsion.
bool in_S(const Base& B, const Element& k, Int s);
// Torsion part of p - s k, as an element of T.
Element beta(const Base& B, const Element& k, Int s);
// The anchor (0, p_F / s); 0 when p is torsion.
Element default_anchor(const Base& B, Int s);
// d_pi^2 b(t,t) - 2 d_pi b(beta_k, t), a rational representative of a class mod 2 d_pi.
Rational delta(const Base& B, const Element& k, const Element& t);
Base negate(const Base& B);

// A family h -> q^h on S_2 given by its value at one anchor.
struct Refinement {
  Base base;
  Element h0;
  QuadraticRefinement q0;
};
void validate(const Refinement& R);
// q^h = q^{h0} shifted by -(h - h0).
QuadraticRefinement eval_family(const Refinement& R, const Element& h);

// Adds a Gauss refinement k -> mu(k) mod d_hat, given at one anchor.
struct Distillation {
  Refinement ref;
  Element k0;
  Residue mu0;

  const Base& base() const { return ref.base; }
};
void validate(const Distillation& D);

// Term of automorphy for mu: the class mod 2 d_tilde with
//   -Delta(k,t) mod 2 d_pi  and  -8 q^{(d/2)k}(-(d/2)t) mod 8.
Rational delta_tilde(const Refinement& R, const Element& k, const Element& t);
Residue eval_mu(const Distillation& D, const Element& k);

Distillation trivial_distillation();
Distillation sum(const Distillation& d0, const Distillation& d1);
Distillation negate(const Distillation& d);

// Full isomorphism G0 -> G1 carrying b0 to b1 and p0 to p1, when one exists.
std::optional<GroupHom> base_iso(const Base& b0, const Base& b1, const SearchLimits& lim = {});
bool almost_diffeo_decision(const Distillation& d0, const Distillation& d1, const SearchLimits& lim = {});
bool homeo_decision(const Distillation& d0, const Distillation& d1, const SearchLimits& lim = {});
bool diffeo_decision(const Distillation& d0, const Distillation& d1, const SearchLimits& lim = {});

// sigma : Z^f -> G a section of G -> G/T. Returns (k(sigma), h(sigma)).
std::pair<Element, Element> section_anchor(const Base& B, const GroupHom& sigma);

// Is F : G -> G an automorphism of the base? Of the refinement family?
bool preserves_base(const Base& B, const GroupHom& F);
bool preserves_refinement(const Refinement& R, const GroupHom& F);
// F restricted to torsion, as an endomorphism of T.
GroupHom torsion_restriction(const FinAbGroup& G, const GroupHom& F);

}  // namespace ekc
