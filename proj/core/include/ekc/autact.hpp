#pragma once

#include <string>

#include "ekc/distill.hpp"

namespace ekc {

// The subgroup (28 / g) Θ_7 ⊆ Z/28, stored by g = gcd(n, 28).
struct InertiaSubgroup {
  Int generator = 28;

  static InertiaSubgroup generated_by(Int n) { return {gcd(n, 28)}; }
  Int order() const { return 28 / generator; }
  bool operator==(const InertiaSubgroup& o) const { return generator == o.generator; }
  std::string str() const;  // "0", "Z/2", ...
};

// Numerator of a/b in lowest terms (0 for a = 0).
Int num(Int a, Int b);

// P(F) = d_pi^2 b(t,t) - 2 d_pi b(beta_k, t) mod 2 d_pi, t = F(k) - k.
Residue P_of(const Base& B, const GroupHom& F);
// P~(F) ∈ 8Z/2 d_tilde Z for F preserving the refinement family.
Residue P_tilde(const Refinement& R, const GroupHom& F);
// P~(F)/8 mod d_hat.
Residue P_hat(const Refinement& R, const GroupHom& F);

struct ImP {
  Int d_pi = 0;
  Int d_m = 0;
  Int generator = 0;  // im P = generator Z / 2 d_pi Z
  int r = 1;
  bool r_conventional = false;  // p torsion: r is not defined and 1 is reported
};
ImP im_P(const Base& B, const SearchLimits& lim = {});
// lcm(8, 2^r d_m), generating im P~ inside Z / 2 d_tilde Z.
Int im_P_tilde_generator(const ImP& ip);

struct Inertia {
  InertiaSubgroup I_H;
  InertiaSubgroup I;
};
Inertia inertia_from(const ImP& ip);
Inertia inertia(const Base& B, const SearchLimits& lim = {});

struct ReactivityReport {
  Int R = 0, R_H = 0, R_Diff = 0, R_Diff_H = 0;
  int r = 1;
  bool r_conventional = false;
  Int d = 0, d_pi = 0, d_m = 0;
  Int n_plus = 28;
};
ReactivityReport reactivity_from(const Base& B, const ImP& ip);
ReactivityReport reactivity(const Base& B, const SearchLimits& lim = {});

// The homotopy sphere of a mapping torus: p^2(f)/8 mod 28.
Residue sphere_from_mapping_torus(Int p_squared);
bool pseudo_isotopic_to_diffeo(Int p_squared);

}  // namespace ekc
