#pragma once

#include "ekc/distill.hpp"
#include "ekc/matrix.hpp"

namespace ekc {

// (H, lambda, alpha) with H = Z^n, lambda symmetric, lambda_ii ≡ alpha_i mod 2.
struct CharForm {
  ZMatrix lambda;
  ZVector alpha;

  CharForm() = default;
  CharForm(ZMatrix lambda, ZVector alpha);
  std::size_t rank() const { return lambda.rows(); }
  CharForm scaled(int sign) const;
};

// Exact signature by congruence diagonalisation over Q.
int signature(const ZMatrix& lambda);

// Orthogonal direct sum of characteristic forms.
CharForm direct_sum(const CharForm& a, const CharForm& b);

// coker(lambda) with the Smith bookkeeping needed for lambda^{-1}. A sign s
// stands for the form s*lambda on the same lattice.
class Boundary {
 public:
  Boundary(const CharForm& cf, int sign = 1);

  const FinAbGroup& group() const { return G_; }
  Int d_pi() const { return dpi_; }
  int sign() const { return sign_; }
  // j : H* -> G
  Element j(const ZVector& y) const;
  // A lift in H* of an element of G.
  ZVector lift(const Element& x) const;
  // (s lambda)^{-1}(x, y); x must lie in the rational image of lambda.
  Rational inv(const ZVector& x, const ZVector& y) const;
  bool in_rational_image(const ZVector& x) const;

  Base base() const;
  Element p() const { return p_; }
  // q^h(y) = ((s lambda)^{-1}(y,y) + (s lambda)^{-1}(alpha_m, y)) / 2 with jm = h.
  QuadraticRefinement family_at(const Element& h) const;
  // (lambda^{-1}(alpha_n, alpha_n) - sigma) / 8 for s lambda, as an exact rational; jn = k.
  Rational gauss_at(const Element& k) const;
  Element default_h() const;
  Element default_k() const;

 private:
  CharForm cf_;
  int sign_;
  int sigma_;
  SmithForm sf_;
  std::vector<std::size_t> kept_;  // Smith rows with d != 1, in canonical order
  FinAbGroup G_;
  TorsionForm b_;
  Element p_;
  Int dpi_ = 0;
};

struct BoundaryData {
  Base base;
  Element h0;
  QuadraticRefinement q_h0;
  Element k0;
  Residue g_k0;  // mod d_tilde / 4
};

Base boundary_base(const CharForm& cf, int sign = 1);
BoundaryData boundary_data(const CharForm& cf, int sign = 1);

// Manifold-facing policy: family from (H, -lambda, alpha), mu from (H, +lambda, alpha).
Distillation distillation_of(const CharForm& cf);

bool is_neutral(const CharForm& cf);

struct GlueReport {
  bool boundary_identity = false;  // F^# of the H1 boundary equals the boundary of (H0, -lambda_0)
  bool gauss_identity = false;     // difference of Gauss values equals the residual
  Rational residual;               // (lambda^{-1}(alpha, alpha) - sigma) / 8
};
// cf nonsingular, H0 given by basis columns of a primitive sublattice.
GlueReport glue_check(const CharForm& cf, const ZMatrix& H0_basis);

// (lambda^{-1}(a_n, a_n) - sigma)/8 - 5 <p_hat, zeta>/12 + lambda(zeta, zeta)/4, a_n = p_hat - d_pi n, jn = k.
Residue spin_c_gauss(const ZMatrix& lambda, const ZVector& p_hat, const ZVector& zeta, const Element& k);

}  // namespace ekc
