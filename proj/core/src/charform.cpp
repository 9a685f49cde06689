#include "ekc/charform.hpp"

#include "ekc/error.hpp"

namespace ekc {

CharForm::CharForm(ZMatrix l, ZVector a) : lambda(std::move(l)), alpha(std::move(a)) {
  require(lambda.rows() == lambda.cols(), "lambda must be square");
  require(lambda.is_symmetric(), "lambda must be symmetric");
  require(alpha.size() == lambda.rows(), "alpha has the wrong length");
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    Integer diff = lambda(i, i) - alpha[i];
    require(mpz_even_p(diff.get_mpz_t()), "alpha is not characteristic for lambda");
  }
}

CharForm CharForm::scaled(int sign) const {
  ZMatrix l = lambda;
  for (std::size_t i = 0; i < l.rows(); ++i)
    for (std::size_t j = 0; j < l.cols(); ++j) l(i, j) *= sign;
  return CharForm(l, alpha);
}

int signature(const ZMatrix& lambda) {
  require(lambda.rows() == lambda.cols() && lambda.is_symmetric(), "signature needs a symmetric matrix");
  const std::size_t n = lambda.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(lambda(i, j));
  int sig = 0;
  std::vector<bool> done(n, false);
  auto eliminate = [&](std::size_t k) {
    const Rational piv = a[k][k];
    sig += piv > 0 ? 1 : -1;
    done[k] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || a[i][k] == 0) continue;
      Rational f = a[i][k] / piv;
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[k][j];
    }
    for (std::size_t j = 0; j < n; ++j)
      if (!done[j]) a[j][k] = a[k][j] = 0;
  };
  for (;;) {
    std::optional<std::size_t> piv;
    for (std::size_t i = 0; i < n && !piv; ++i)
      if (!done[i] && a[i][i] != 0) piv = i;
    if (piv) {
      eliminate(*piv);
      continue;
    }
    std::optional<std::pair<std::size_t, std::size_t>> off;
    for (std::size_t i = 0; i < n && !off; ++i)
      for (std::size_t j = i + 1; j < n && !off; ++j)
        if (!done[i] && !done[j] && a[i][j] != 0) off = {i, j};
    if (!off) break;
    // zero diagonal: replace e_i by e_i + e_j, whose norm is 2 a_ij
    auto [i, j] = *off;
    for (std::size_t c = 0; c < n; ++c) a[i][c] += a[j][c];
    for (std::size_t r = 0; r < n; ++r) a[r][i] += a[r][j];
    eliminate(i);
  }
  return sig;
}

CharForm direct_sum(const CharForm& x, const CharForm& y) {
  const std::size_t n = x.rank(), m = y.rank();
  ZMatrix l(n + m, n + m);
  ZVector a;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) l(i, j) = x.lambda(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) l(n + i, n + j) = y.lambda(i, j);
  a = x.alpha;
  a.insert(a.end(), y.alpha.begin(), y.alpha.end());
  return CharForm(l, a);
}

Boundary::Boundary(const CharForm& cf, int sign) : cf_(cf), sign_(sign) {
  require(sign == 1 || sign == -1, "sign must be +1 or -1");
  sigma_ = sign * signature(cf.lambda);
  sf_ = smith_decompose(cf.lambda);
  const std::size_t n = cf.rank();
  std::vector<Int> tors;
  int free = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (sf_.diag[i] == 1) continue;
    kept_.push_back(i);
    if (sf_.diag[i] == 0)
      ++free;
    else
      tors.push_back(to_int(sf_.diag[i]));
  }
  G_ = FinAbGroup(tors, free);
  const FinAbGroup T = G_.torsion_subgroup();
  std::vector<std::vector<Rational>> gram(T.ntors(), std::vector<Rational>(T.ntors()));
  std::vector<ZVector> lifts;
  for (std::size_t a = 0; a < T.ntors(); ++a) lifts.push_back(lift(embed_torsion(G_, gen(T, a))));
  for (std::size_t a = 0; a < T.ntors(); ++a)
    for (std::size_t b = 0; b < T.ntors(); ++b) gram[a][b] = inv(lifts[a], lifts[b]);
  b_ = TorsionForm(T, gram);
  p_ = j(cf.alpha);
  ensure(is_even(G_, p_), "image of a characteristic covector is not even");
  dpi_ = ekc::d_pi(G_, p_);
}

Element Boundary::j(const ZVector& y) const {
  require(y.size() == cf_.rank(), "covector has the wrong length");
  ZVector w = sf_.U * y;
  std::vector<Int> c;
  for (std::size_t i = 0; i < kept_.size(); ++i) {
    const std::size_t r = kept_[i];
    Integer v = w[r];
    if (sf_.diag[r] != 0) {
      Integer m;
      mpz_fdiv_r(m.get_mpz_t(), v.get_mpz_t(), sf_.diag[r].get_mpz_t());
      v = m;
    }
    c.push_back(to_int(v));
  }
  return Element{c};
}

ZVector Boundary::lift(const Element& x) const {
  check_element(G_, x);
  ZVector w(cf_.rank(), 0);
  for (std::size_t i = 0; i < kept_.size(); ++i) w[kept_[i]] = x.c[i];
  return sf_.U_inv * w;
}

bool Boundary::in_rational_image(const ZVector& x) const {
  ZVector w = sf_.U * x;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (sf_.diag[i] == 0 && w[i] != 0) return false;
  return true;
}

Rational Boundary::inv(const ZVector& x, const ZVector& y) const {
  require(in_rational_image(x), "lambda^{-1} is undefined off the rational image");
  const std::size_t n = cf_.rank();
  ZVector w = sf_.U * x;
  std::vector<Rational> u(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (sf_.diag[i] == 0 || w[i] == 0) continue;
    Rational c(w[i], sf_.diag[i]);
    c.canonicalize();
    for (std::size_t l = 0; l < n; ++l) u[l] += c * Rational(sf_.V(l, i));
  }
  Rational s = 0;
  for (std::size_t l = 0; l < n; ++l) s += Rational(y[l]) * u[l];
  return sign_ * s;
}

Base Boundary::base() const { return {G_, b_, p_}; }

Element Boundary::default_h() const { return default_anchor(base(), 2); }
Element Boundary::default_k() const { return default_anchor(base(), dpi_); }

QuadraticRefinement Boundary::family_at(const Element& h) const {
  Base B = base();
  require(in_S(B, h, 2), "h must lie in S_2");
  ZVector m = lift(h);
  ZVector am(cf_.rank());
  for (std::size_t i = 0; i < am.size(); ++i) am[i] = cf_.alpha[i] - 2 * m[i];
  ensure(in_rational_image(am), "alpha_m is not in the rational image of lambda");
  const FinAbGroup& T = b_.group();
  std::vector<Rational> q;
  for (std::size_t a = 0; a < T.ntors(); ++a) {
    ZVector y = lift(embed_torsion(G_, gen(T, a)));
    q.push_back((inv(y, y) + inv(y, am)) / 2);
  }
  return QuadraticRefinement(b_, q);
}

Rational Boundary::gauss_at(const Element& k) const {
  Base B = base();
  require(in_S(B, k, dpi_), "k must lie in S_{d_pi}");
  ensure(dpi_ % 2 == 0, "d_pi must be even");
  ZVector n = lift(k);
  ZVector an(cf_.rank());
  for (std::size_t i = 0; i < an.size(); ++i) an[i] = cf_.alpha[i] - Integer(static_cast<long>(dpi_)) * n[i];
  ensure(in_rational_image(an), "alpha_n is not in the rational image of lambda");
  return (inv(an, an) - sigma_) / 8;
}

Base boundary_base(const CharForm& cf, int sign) { return Boundary(cf, sign).base(); }

BoundaryData boundary_data(const CharForm& cf, int sign) {
  Boundary B(cf, sign);
  Element h0 = B.default_h(), k0 = B.default_k();
  Rational m(Integer(static_cast<long>(d_tilde(B.d_pi()))), 4);
  m.canonicalize();
  return {B.base(), h0, B.family_at(h0), k0, Residue(B.gauss_at(k0), m)};
}

Distillation distillation_of(const CharForm& cf) {
  Boundary minus(cf, -1), plus(cf, 1);
  Base B = minus.base();
  Element h0 = minus.default_h(), k0 = minus.default_k();
  Refinement R{B, h0, minus.family_at(h0)};
  Residue mu(plus.gauss_at(k0), Rational(Integer(static_cast<long>(d_hat(minus.d_pi())))));
  return {R, k0, mu};
}

bool is_neutral(const CharForm& cf) {
  Integer det = cf.lambda.determinant();
  if (det != 1 && det != -1) return false;
  Boundary B(cf);
  return B.inv(cf.alpha, cf.alpha) == signature(cf.lambda);
}

namespace {

ZMatrix restrict_form(const ZMatrix& lambda, const ZMatrix& basis) { return basis.transpose() * lambda * basis; }

ZVector restrict_covector(const ZVector& alpha, const ZMatrix& basis) { return basis.transpose() * alpha; }

}  // namespace

GlueReport glue_check(const CharForm& cf, const ZMatrix& B0) {
  const std::size_t n = cf.rank();
  require(B0.rows() == n, "sublattice basis has the wrong ambient rank");
  Integer det = cf.lambda.determinant();
  require(det == 1 || det == -1, "gluing needs a nonsingular form");
  SmithForm s0 = smith_decompose(B0);
  require(s0.rank == B0.cols(), "sublattice basis is not independent");
  for (std::size_t i = 0; i < s0.rank; ++i) require(s0.diag[i] == 1, "sublattice is not primitive");
  ZMatrix B1 = integer_kernel(B0.transpose() * cf.lambda);
  ZMatrix both = B0.hconcat(B1);
  require(both.cols() == n && both.determinant() != 0, "sublattice and its complement do not span a finite-index sublattice");

  CharForm c0(restrict_form(cf.lambda, B0), restrict_covector(cf.alpha, B0));
  CharForm c1(restrict_form(cf.lambda, B1), restrict_covector(cf.alpha, B1));
  Boundary b0(c0, -1), b1(c1, 1);
  const FinAbGroup& G0 = b0.group();
  const FinAbGroup& G1 = b1.group();
  ensure(G0.is_finite() && G1.is_finite(), "restricted forms must be nondegenerate");

  GlueReport rep;
  Boundary whole(cf);
  rep.residual = (whole.inv(cf.alpha, cf.alpha) - signature(cf.lambda)) / 8;

  // F: pick x ∈ H with lambda(x, -)|H0 = y, send y to lambda(x, -)|H1.
  ZMatrix P0 = B0.transpose() * cf.lambda;
  ZMatrix P1 = B1.transpose() * cf.lambda;
  std::vector<Element> imgs;
  for (std::size_t a = 0; a < G0.ntors(); ++a) {
    ZVector y = b0.lift(gen(G0, a));
    auto sol = solve_integer(P0, y);
    ensure(sol.has_value(), "restriction to a primitive sublattice is not onto");
    imgs.push_back(b1.j(P1 * sol->particular));
  }
  if (G0 == G1) {
    GroupHom F(G0, G1, imgs);
    QuadraticRefinement q0 = b0.family_at(zero(G0));
    QuadraticRefinement q1 = b1.family_at(zero(G1));
    bool ok = F.is_iso() && is_isometry(F, q0.form(), q1.form());
    for (std::size_t a = 0; ok && a < G0.ntors(); ++a) ok = q1.q(F.images[a]) == q0.q(gen(G0, a));
    rep.boundary_identity = ok;
  }
  Rational g1 = b1.gauss_at(zero(G1));
  Rational g0 = b0.gauss_at(zero(G0));
  rep.gauss_identity = (g1 - g0) == rep.residual;
  return rep;
}

Residue spin_c_gauss(const ZMatrix& lambda, const ZVector& p_hat, const ZVector& zeta, const Element& k) {
  CharForm cf(lambda, p_hat);
  require(zeta.size() == cf.rank(), "zeta has the wrong length");
  Boundary B(cf);
  Rational g = B.gauss_at(k);
  Integer pz = 0, zz = 0;
  for (std::size_t i = 0; i < zeta.size(); ++i) {
    pz += p_hat[i] * zeta[i];
    for (std::size_t j = 0; j < zeta.size(); ++j) zz += zeta[i] * lambda(i, j) * zeta[j];
  }
  g += -Rational(Integer(5 * pz), Integer(12)) + Rational(zz, Integer(4));
  g.canonicalize();
  Rational m(Integer(static_cast<long>(d_tilde(B.d_pi()))), 4);
  m.canonicalize();
  return Residue(g, m);
}

}  // namespace ekc
