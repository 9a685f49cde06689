#include "ekc/distill.hpp"

#include <map>

#include "ekc/error.hpp"

namespace ekc {

void validate(const Base& B) {
  require(B.b.group() == B.G.torsion_subgroup(), "torsion form must live on the torsion subgroup");
  check_element(B.G, B.p);
  require(is_even(B.G, B.p), "p must lie in 2G");
}

Int base_d(const Base& B) { return divisibility(B.G, B.p); }
Int base_d_pi(const Base& B) { return d_pi(B.G, B.p); }
Int base_d_m(const Base& B) { return d_m(B.G, B.p); }

Int d_tilde(Int dpi) { return lcm(4, dpi); }

Int d_hat(Int dpi) {
  if (dpi == 0) return 28;
  return gcd(d_tilde(dpi) / 4, 28);
}

bool in_S(const Base& B, const Element& k, Int s) {
  check_element(B.G, k);
  return is_torsion(B.G, sub(B.G, B.p, scale(B.G, s, k)));
}

Element beta(const Base& B, const Element& k, Int s) {
  Element x = sub(B.G, B.p, scale(B.G, s, k));
  require(is_torsion(B.G, x), "element does not lie in S");
  return torsion_part(B.G, x);
}

Element default_anchor(const Base& B, Int s) {
  Element k = zero(B.G);
  if (is_torsion(B.G, B.p)) return k;
  require(s > 0, "anchor scale must be positive");
  for (std::size_t i = B.G.ntors(); i < B.G.rank(); ++i) {
    require(B.p.c[i] % s == 0, "p is not divisible by the anchor scale");
    k.c[i] = B.p.c[i] / s;
  }
  return k;
}

Rational delta(const Base& B, const Element& k, const Element& t) {
  const Int d = base_d_pi(B);
  if (d == 0) return 0;
  Element bk = beta(B, k, d);
  Rational dd(Integer(static_cast<long>(d)));
  return dd * dd * B.b.b(t, t) - 2 * dd * B.b.b(bk, t);
}

Base negate(const Base& B) { return {B.G, B.b.negated(), B.p}; }

void validate(const Refinement& R) {
  validate(R.base);
  require(R.q0.form() == R.base.b, "refinement must refine the base form");
  require(in_S(R.base, R.h0, 2), "family anchor must lie in S_2");
  require(homogeneity_defect(R.q0) == beta(R.base, R.h0, 2), "anchor refinement has the wrong homogeneity defect");
}

QuadraticRefinement eval_family(const Refinement& R, const Element& h) {
  require(in_S(R.base, h, 2), "h must lie in S_2");
  const FinAbGroup& G = R.base.G;
  Element t = torsion_part(G, sub(G, h, R.h0));
  return shift(R.q0, neg(R.base.T(), t));
}

void validate(const Distillation& D) {
  validate(D.ref);
  const Int d = base_d_pi(D.base());
  require(in_S(D.base(), D.k0, d), "Gauss anchor must lie in S_{d_pi}");
  require(D.mu0.modulus() == Rational(Integer(static_cast<long>(d_hat(d)))), "mu must be reduced mod d_hat");
}

namespace {

// x ≡ a mod m1, x ≡ b mod m2 for rationals a, b and integers m1, m2 > 0.
Rational crt(const Rational& a, Int m1, const Rational& b, Int m2) {
  const Int g = gcd(m1, m2), L = lcm(m1, m2);
  Rational diff = (b - a) / Rational(Integer(static_cast<long>(g)));
  ensure(diff.get_den() == 1, "inconsistent congruences for the term of automorphy");
  Int mg = m2 / g;
  Int s = mg == 1 ? 0 : mulmod(mod(to_int(diff.get_num() % Integer(static_cast<long>(mg))), mg), inverse_mod(m1 / g, mg), mg);
  Rational x = a + Rational(Integer(static_cast<long>(m1))) * Rational(Integer(static_cast<long>(s)));
  Rational Lq(Integer(static_cast<long>(L)));
  return x - Lq * Rational(floor(x / Lq));
}

}  // namespace

Rational delta_tilde(const Refinement& R, const Element& k, const Element& t) {
  const Base& B = R.base;
  const Int d = base_d_pi(B);
  if (d == 0) return 0;
  Rational a = -delta(B, k, t);
  QuadraticRefinement qh = eval_family(R, scale(B.G, d / 2, k));
  Rational b = -8 * qh.q(scale(B.T(), -(d / 2), t));
  return crt(a, 2 * d, b, 8);
}

Residue eval_mu(const Distillation& D, const Element& k) {
  const Base& B = D.base();
  const Int d = base_d_pi(B);
  require(in_S(B, k, d), "k must lie in S_{d_pi}");
  Element t = torsion_part(B.G, sub(B.G, k, D.k0));
  Rational v = D.mu0.value() + delta_tilde(D.ref, D.k0, t) / 8;
  return Residue(v, Rational(Integer(static_cast<long>(d_hat(d)))));
}

Distillation trivial_distillation() {
  FinAbGroup G;
  Base B{G, TorsionForm(), zero(G)};
  return {{B, zero(G), QuadraticRefinement()}, zero(G), Residue(0, 28)};
}

Distillation sum(const Distillation& d0, const Distillation& d1) {
  const Base& B0 = d0.base();
  const Base& B1 = d1.base();
  OrthSumRefinement os = orth_sum(d0.ref.q0, d1.ref.q0);
  const FinAbGroup& T = os.refinement.group();
  const int f0 = B0.G.free_rank, f1 = B1.G.free_rank;
  FinAbGroup G(T.torsion, f0 + f1);
  auto embed = [&](const Element& x0, const Element& x1) {
    std::vector<Int> tors;
    for (std::size_t i = 0; i < B0.G.ntors(); ++i) tors.push_back(x0.c[i]);
    for (std::size_t i = 0; i < B1.G.ntors(); ++i) tors.push_back(x1.c[i]);
    Element x = os.pres.canonical(tors);
    for (std::size_t i = B0.G.ntors(); i < B0.G.rank(); ++i) x.c.push_back(x0.c[i]);
    for (std::size_t i = B1.G.ntors(); i < B1.G.rank(); ++i) x.c.push_back(x1.c[i]);
    return reduce(G, x);
  };
  const Int e0 = base_d_pi(B0), e1 = base_d_pi(B1), e = gcd(e0, e1);
  Int c0 = 1, c1 = 1;
  if (e != 0) {
    c0 = e0 / e;
    c1 = e1 / e;
  }
  Base B{G, os.refinement.form(), embed(B0.p, B1.p)};
  Refinement R{B, embed(d0.ref.h0, d1.ref.h0), os.refinement};
  Element k = embed(scale(B0.G, c0, d0.k0), scale(B1.G, c1, d1.k0));
  Rational mod_new(Integer(static_cast<long>(d_hat(e))));
  Residue mu = d0.mu0.reduce(mod_new) + d1.mu0.reduce(mod_new);
  Distillation out{R, k, mu};
  ensure(in_S(B, k, e), "sum anchor left S_{d_pi}");
  return out;
}

Distillation negate(const Distillation& d) {
  Base B = negate(d.base());
  return {{B, d.ref.h0, d.ref.q0.negated()}, d.k0, -d.mu0};
}

namespace {

// Unimodular matrix whose first column is the primitive vector v.
ZMatrix completion(const std::vector<Int>& v) {
  const std::size_t f = v.size();
  ZMatrix col(f, 1);
  for (std::size_t i = 0; i < f; ++i) col(i, 0) = static_cast<long>(v[i]);
  SmithForm s = smith_decompose(col);
  ensure(s.diag.size() == 1 && s.diag[0] == 1, "anchor free part is not primitive");
  ZMatrix M = s.U_inv;
  if (s.V(0, 0) < 0)
    for (std::size_t i = 0; i < f; ++i) M(i, 0) = -M(i, 0);
  return M;
}

ZMatrix inverse_unimodular(const ZMatrix& M) {
  SmithForm s = smith_decompose(M);
  ensure(s.rank == M.rows(), "matrix is not unimodular");
  for (const auto& x : s.diag) ensure(x == 1, "matrix is not unimodular");
  return s.V * s.U;
}

std::vector<Int> free_coords(const FinAbGroup& G, const Element& x) {
  return {x.c.begin() + static_cast<std::ptrdiff_t>(G.ntors()), x.c.end()};
}

GroupHom assemble(const Base& b0, const Base& b1, const GroupHom& f, const Element& k0, const Element& k1,
                  const Element& t) {
  const FinAbGroup& G0 = b0.G;
  const FinAbGroup& G1 = b1.G;
  const std::size_t nt = G0.ntors();
  const std::size_t fr = static_cast<std::size_t>(G0.free_rank);
  std::vector<Element> imgs;
  for (std::size_t i = 0; i < nt; ++i) imgs.push_back(embed_torsion(G1, f.images[i]));
  ZMatrix A = ZMatrix::identity(fr);
  std::vector<Int> w(fr, 0);
  if (base_d_pi(b0) != 0) {
    ZMatrix M0 = completion(free_coords(G0, k0));
    ZMatrix M1 = completion(free_coords(G1, k1));
    ZMatrix M0i = inverse_unimodular(M0);
    A = M1 * M0i;
    for (std::size_t j = 0; j < fr; ++j) w[j] = to_int(M0i(0, j));
  }
  for (std::size_t j = 0; j < fr; ++j) {
    Element y = embed_torsion(G1, scale(b1.T(), w[j], t));
    for (std::size_t i = 0; i < fr; ++i) y.c[nt + i] = to_int(A(i, j));
    imgs.push_back(y);
  }
  return GroupHom(G0, G1, imgs);
}

bool same_shape(const Base& b0, const Base& b1) {
  return b0.G == b1.G && base_d_pi(b0) == base_d_pi(b1);
}

// Cached existence of torsion isometries f with f(beta0) = beta1 - v.
class PinnedSearch {
 public:
  PinnedSearch(const Base& b0, const Base& b1, Element beta0, Element beta1, const SearchLimits& lim)
      : b0_(b0), b1_(b1), beta0_(std::move(beta0)), beta1_(std::move(beta1)), lim_(lim) {}

  std::optional<GroupHom> find(const Element& v) {
    auto it = cache_.find(v);
    if (it != cache_.end()) return it->second;
    Element target = sub(b1_.T(), beta1_, v);
    auto res = iso_search(b0_.b, b1_.b, {{beta0_, target}}, SearchMode::find_one, lim_);
    std::optional<GroupHom> out;
    if (!res.empty()) out = res.front();
    cache_.emplace(v, out);
    return out;
  }

 private:
  const Base& b0_;
  const Base& b1_;
  Element beta0_, beta1_;
  SearchLimits lim_;
  std::map<Element, std::optional<GroupHom>> cache_;
};

enum class Level { almost, diffeo };

bool decide(const Distillation& d0, const Distillation& d1, Level level, const SearchLimits& lim) {
  const Base& B0 = d0.base();
  const Base& B1 = d1.base();
  if (!same_shape(B0, B1)) return false;
  const Int d = base_d_pi(B0);
  const Element k0 = default_anchor(B0, d), k1 = default_anchor(B1, d);
  PinnedSearch pins(B0, B1, beta(B0, k0, d), beta(B1, k1, d), lim);
  const Element h0 = scale(B0.G, d / 2, k0), h1 = scale(B1.G, d / 2, k1);
  const Residue A0 = arf(eval_family(d0.ref, h0));
  const QuadraticRefinement q1 = eval_family(d1.ref, h1);
  const Residue A1 = arf(q1);
  const Residue mu0 = eval_mu(d0, k0);
  const FinAbGroup& T1 = B1.T();
  bool found = false;
  auto consider = [&](const Element& t) {
    if (found) return;
    // A(q^{h+s}) = A(q^h) - q^h(-s)
    Residue A1t = A1 - eval_q(q1, scale(T1, -(d / 2), t));
    if (A1t != A0) return;
    if (level == Level::diffeo && eval_mu(d1, add(B1.G, k1, embed_torsion(B1.G, t))) != mu0) return;
    if (pins.find(scale(T1, d, t))) found = true;
  };
  if (d == 0)
    consider(zero(T1));
  else
    for_each_element(T1, consider);
  return found;
}

}  // namespace

std::optional<GroupHom> base_iso(const Base& b0, const Base& b1, const SearchLimits& lim) {
  validate(b0);
  validate(b1);
  if (!same_shape(b0, b1)) return std::nullopt;
  const Int d = base_d_pi(b0);
  const Element k0 = default_anchor(b0, d), k1 = default_anchor(b1, d);
  PinnedSearch pins(b0, b1, beta(b0, k0, d), beta(b1, k1, d), lim);
  const FinAbGroup& T1 = b1.T();
  std::vector<Element> gens;
  for (std::size_t i = 0; i < T1.ntors(); ++i) gens.push_back(scale(T1, d, gen(T1, i)));
  Subgroup dT(T1, gens);
  std::optional<GroupHom> out;
  dT.for_each(zero(T1), [&](const Element& v) {
    auto f = pins.find(v);
    if (!f) return true;
    Element t = zero(T1);
    if (d != 0) {
      auto q = divide(T1, v, d);
      ensure(q.has_value(), "element of dT is not divisible by d");
      t = *q;
    }
    out = assemble(b0, b1, *f, k0, k1, t);
    return false;
  });
  if (out) {
    ensure(out->apply(b0.p) == b1.p, "assembled base isomorphism does not carry p");
    ensure(out->is_iso(), "assembled base isomorphism is not bijective");
  }
  return out;
}

bool almost_diffeo_decision(const Distillation& d0, const Distillation& d1, const SearchLimits& lim) {
  return decide(d0, d1, Level::almost, lim);
}

bool homeo_decision(const Distillation& d0, const Distillation& d1, const SearchLimits& lim) {
  return almost_diffeo_decision(d0, d1, lim);
}

bool diffeo_decision(const Distillation& d0, const Distillation& d1, const SearchLimits& lim) {
  return decide(d0, d1, Level::diffeo, lim);
}

std::pair<Element, Element> section_anchor(const Base& B, const GroupHom& sigma) {
  const FinAbGroup& G = B.G;
  require(sigma.source == FinAbGroup({}, G.free_rank) && sigma.target == G, "section has the wrong shape");
  for (int j = 0; j < G.free_rank; ++j) {
    Element img = sigma.images[static_cast<std::size_t>(j)];
    for (int i = 0; i < G.free_rank; ++i)
      require(img.c[G.ntors() + static_cast<std::size_t>(i)] == (i == j ? 1 : 0), "not a section of the projection");
  }
  const Int d = base_d_pi(B);
  if (d == 0) return {zero(G), zero(G)};
  std::vector<Int> v;
  for (std::size_t i = G.ntors(); i < G.rank(); ++i) v.push_back(B.p.c[i] / d);
  Element k = sigma.apply(Element{v});
  return {k, scale(G, d / 2, k)};
}

GroupHom torsion_restriction(const FinAbGroup& G, const GroupHom& F) {
  FinAbGroup T = G.torsion_subgroup();
  std::vector<Element> imgs;
  for (std::size_t i = 0; i < G.ntors(); ++i) imgs.push_back(torsion_part(G, F.images[i]));
  return GroupHom(T, T, imgs);
}

bool preserves_base(const Base& B, const GroupHom& F) {
  if (!(F.source == B.G) || !(F.target == B.G)) return false;
  if (!(F.apply(B.p) == B.p)) return false;
  if (!F.is_iso()) return false;
  return is_isometry(torsion_restriction(B.G, F), B.b, B.b);
}

bool preserves_refinement(const Refinement& R, const GroupHom& F) {
  if (!preserves_base(R.base, F)) return false;
  GroupHom f = torsion_restriction(R.base.G, F);
  QuadraticRefinement moved = eval_family(R, F.apply(R.h0));
  for (std::size_t i = 0; i < R.base.T().ntors(); ++i) {
    Element x = gen(R.base.T(), i);
    if (moved.q(f.apply(x)) != R.q0.q(x)) return false;
  }
  return true;
}

}  // namespace ekc
