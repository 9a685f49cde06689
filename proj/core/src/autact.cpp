#include "ekc/autact.hpp"

#include <map>

#include "ekc/error.hpp"

namespace ekc {

namespace {

Rational q_of(Int v) { return Rational(Integer(static_cast<long>(v))); }

}  // namespace

std::string InertiaSubgroup::str() const {
  if (order() == 1) return "0";
  return "Z/" + std::to_string(order());
}

Int num(Int a, Int b) {
  require(b != 0, "zero denominator");
  if (a == 0) return 0;
  Int g = gcd(a, b);
  Int n = a / g;
  return n < 0 ? -n : n;
}

Residue P_of(const Base& B, const GroupHom& F) {
  require(preserves_base(B, F), "map is not an automorphism of the base");
  const Int d = base_d_pi(B);
  if (d == 0) return Residue(0, 0);
  Element k = default_anchor(B, d);
  Element t = torsion_part(B.G, sub(B.G, F.apply(k), k));
  Rational v = delta(B, k, t);
  ensure(v.get_den() == 1 && mpz_even_p(v.get_num().get_mpz_t()), "P(F) is not an even integer");
  return Residue(v, q_of(2 * d));
}

Residue P_tilde(const Refinement& R, const GroupHom& F) {
  require(preserves_refinement(R, F), "map does not preserve the refinement family");
  const Int d = base_d_pi(R.base);
  if (d == 0) return Residue(0, 0);
  Residue P = P_of(R.base, F);
  const Int dt2 = 2 * d_tilde(d);
  const Int p = to_int(P.value().get_num());
  const Int g = gcd(2 * d, 8);
  ensure(p % g == 0, "P(F) is incompatible with 0 mod 8 for a refinement automorphism");
  // x ≡ p mod 2d, x ≡ 0 mod 8
  for (Int x = p; x < dt2 + p; x += 2 * d)
    if (x % 8 == 0) return Residue(q_of(x), q_of(dt2));
  throw InternalError("no CRT solution for P~");
}

Residue P_hat(const Refinement& R, const GroupHom& F) {
  Residue Pt = P_tilde(R, F);
  const Int d = base_d_pi(R.base);
  return Residue(Pt.value() / 8, q_of(d_hat(d)));
}

ImP im_P(const Base& B, const SearchLimits& lim) {
  validate(B);
  ImP out;
  out.d_pi = base_d_pi(B);
  out.d_m = base_d_m(B);
  const Int d = out.d_pi;
  if (d == 0) {
    out.r = 1;
    out.r_conventional = true;
    return out;
  }
  const Element k = default_anchor(B, d);
  const Element bk = beta(B, k, d);
  const FinAbGroup& T = B.T();
  std::map<Element, bool> exists;
  Int g = 2 * d;
  for_each_element(T, [&](const Element& t) {
    Element v = scale(T, d, t);
    auto it = exists.find(v);
    if (it == exists.end())
      it = exists.emplace(v, isometry_exists(B.b, B.b, {{bk, sub(T, bk, v)}}, lim)).first;
    if (!it->second) return;
    Rational val = delta(B, k, t);
    ensure(val.get_den() == 1, "P value is not integral");
    g = gcd(g, to_int(val.get_num()));
  });
  out.generator = g;
  ensure(g % out.d_m == 0, "im P is not contained in d_m Z");
  ensure(gcd(4 * out.d_m, 2 * d) % g == 0, "im P does not contain 4 d_m Z");
  Int ratio = g / out.d_m;
  ensure(ratio == 1 || ratio == 2 || ratio == 4, "r outside {0, 1, 2}");
  out.r = ratio == 1 ? 0 : ratio == 2 ? 1 : 2;
  return out;
}

Int im_P_tilde_generator(const ImP& ip) { return lcm(8, ipow(2, ip.r) * ip.d_m); }

Inertia inertia_from(const ImP& ip) {
  Inertia out;
  out.I_H = {d_hat(ip.d_pi)};
  out.I = InertiaSubgroup::generated_by(num(ipow(2, ip.r) * ip.d_m, 8));
  return out;
}

Inertia inertia(const Base& B, const SearchLimits& lim) { return inertia_from(im_P(B, lim)); }

ReactivityReport reactivity_from(const Base& B, const ImP& ip) {
  ReactivityReport rep;
  rep.r = ip.r;
  rep.r_conventional = ip.r_conventional;
  rep.d = base_d(B);
  rep.d_pi = ip.d_pi;
  rep.d_m = ip.d_m;
  const Int twor_dm = ipow(2, ip.r) * ip.d_m;
  rep.R = lcm(8, twor_dm);
  rep.R_H = 2 * d_tilde(ip.d_pi);
  rep.R_Diff = lcm(224, twor_dm);
  rep.R_Diff_H = lcm(224, 2 * d_tilde(ip.d_pi));
  rep.n_plus = gcd(num(twor_dm, 8), 28);
  return rep;
}

ReactivityReport reactivity(const Base& B, const SearchLimits& lim) { return reactivity_from(B, im_P(B, lim)); }

Residue sphere_from_mapping_torus(Int p_squared) {
  require(p_squared % 8 == 0, "p^2 of a mapping torus is divisible by 8");
  return Residue(q_of(p_squared / 8), 28);
}

bool pseudo_isotopic_to_diffeo(Int p_squared) {
  require(p_squared % 8 == 0, "p^2 of a mapping torus is divisible by 8");
  return p_squared % 224 == 0;
}

}  // namespace ekc
