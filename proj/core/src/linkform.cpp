#include "ekc/linkform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ekc/error.hpp"

namespace ekc {

namespace {

Int mod128(__int128 v, Int n) {
  __int128 r = v % n;
  if (r < 0) r += n;
  return static_cast<Int>(r);
}

Int rational_to_units(const Rational& v, Int scale, Int modulus, const char* what) {
  Rational s = v * Rational(Integer(static_cast<long>(scale)));
  require(s.get_den() == 1, what);
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), s.get_num().get_mpz_t(), Integer(static_cast<long>(modulus)).get_mpz_t());
  return to_int(r);
}

}  // namespace

TorsionForm::TorsionForm(FinAbGroup T, const std::vector<std::vector<Rational>>& gram) : T_(std::move(T)) {
  require(T_.is_finite(), "torsion forms live on finite groups");
  N_ = T_.exponent();
  const std::size_t k = T_.ntors();
  require(gram.size() == k, "gram matrix has the wrong size");
  B_.assign(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    require(gram[i].size() == k, "gram matrix has the wrong size");
    for (std::size_t j = 0; j < k; ++j)
      B_[i * k + j] = rational_to_units(gram[i][j], N_, N_, "form value is not well defined on the group");
  }
  validate();
}

TorsionForm TorsionForm::from_units(FinAbGroup T, std::vector<Int> units) {
  TorsionForm b;
  b.T_ = std::move(T);
  require(b.T_.is_finite(), "torsion forms live on finite groups");
  b.N_ = b.T_.exponent();
  require(units.size() == b.T_.ntors() * b.T_.ntors(), "gram matrix has the wrong size");
  for (auto& u : units) u = mod(u, b.N_);
  b.B_ = std::move(units);
  b.validate();
  return b;
}

void TorsionForm::validate() const {
  const std::size_t k = T_.ntors();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      require(unit(i, j) == unit(j, i), "form is not symmetric");
      require(mulmod(T_.torsion[i], unit(i, j), N_) == 0, "form value is not well defined on the group");
    }
  // Nonsingular: the adjoint Z^k -> ⊕ Z/n_j must be onto.
  ZMatrix A(k, 2 * k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) A(j, i) = static_cast<long>(T_.torsion[j] * unit(i, j) / N_);
    A(j, k + j) = static_cast<long>(T_.torsion[j]);
  }
  SmithForm s = smith_decompose(A);
  bool onto = s.rank == k && std::all_of(s.diag.begin(), s.diag.end(), [](const Integer& d) { return d == 1; });
  require(onto, "form is singular");
}

Int TorsionForm::b_units(const Element& x, const Element& y) const {
  const std::size_t k = T_.ntors();
  require(x.c.size() == k && y.c.size() == k, "element does not belong to the form's group");
  __int128 s = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (x.c[i] == 0) continue;
    __int128 row = 0;
    for (std::size_t j = 0; j < k; ++j) row += static_cast<__int128>(B_[i * k + j]) * y.c[j];
    s += static_cast<__int128>(x.c[i]) * mod128(row, N_);
    s %= N_;
  }
  return mod128(s, N_);
}

Rational TorsionForm::b(const Element& x, const Element& y) const { return make_rational(b_units(x, y), N_); }

Rational TorsionForm::gram(std::size_t i, std::size_t j) const { return make_rational(unit(i, j), N_); }

std::vector<Int> TorsionForm::adjoint_units(const Element& y) const {
  std::vector<Int> out(T_.ntors());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = b_units(gen(T_, i), y);
  return out;
}

TorsionForm TorsionForm::negated() const {
  std::vector<Int> u = B_;
  for (auto& v : u) v = mod(-v, N_);
  return from_units(T_, u);
}

QuadraticRefinement::QuadraticRefinement(TorsionForm b, const std::vector<Rational>& qgen) : b_(std::move(b)) {
  const Int M = 2 * b_.N();
  require(qgen.size() == b_.size(), "one refinement value per generator is required");
  for (const auto& v : qgen) Q_.push_back(rational_to_units(v, M, M, "refinement value has the wrong denominator"));
  *this = from_units(b_, Q_);
}

QuadraticRefinement QuadraticRefinement::from_units(TorsionForm b, std::vector<Int> units) {
  QuadraticRefinement q;
  q.b_ = std::move(b);
  const Int M = 2 * q.b_.N();
  require(units.size() == q.b_.size(), "one refinement value per generator is required");
  for (std::size_t i = 0; i < units.size(); ++i) {
    units[i] = mod(units[i], M);
    Int n = q.b_.group().torsion[i];
    __int128 c = static_cast<__int128>(n) * units[i] + static_cast<__int128>(n) * (n - 1) % M * q.b_.unit(i, i);
    require(mod128(c, M) == 0, "refinement values inconsistent with generator orders");
  }
  q.Q_ = std::move(units);
  return q;
}

Int QuadraticRefinement::q_units(const Element& x) const {
  const std::size_t k = b_.size();
  require(x.c.size() == k, "element does not belong to the refinement's group");
  const Int M = 2 * b_.N();
  __int128 s = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const Int a = x.c[i];
    if (a == 0) continue;
    s += static_cast<__int128>(a) * Q_[i];
    s += static_cast<__int128>(mod128(static_cast<__int128>(a) * (a - 1), M)) * b_.unit(i, i);
    for (std::size_t j = i + 1; j < k; ++j) {
      if (x.c[j] == 0) continue;
      s += static_cast<__int128>(mod128(static_cast<__int128>(2 * a) * x.c[j], M)) * b_.unit(i, j);
    }
    s %= M;
  }
  return mod128(s, M);
}

Rational QuadraticRefinement::q(const Element& x) const { return make_rational(q_units(x), 2 * b_.N()); }

QuadraticRefinement QuadraticRefinement::negated() const {
  std::vector<Int> u = Q_;
  for (auto& v : u) v = -v;
  return from_units(b_.negated(), u);
}

TorsionForm cyclic_form(Int theta, Int r) {
  require(r >= 1, "cyclic order must be positive");
  require(gcd(theta, r) == 1, "theta must be coprime to r");
  if (r == 1) return TorsionForm();
  return TorsionForm(FinAbGroup({r}, 0), {{make_rational(theta, r)}});
}

QuadraticRefinement cyclic_refinement(const CyclicSpec& s) {
  require(s.r >= 1 && gcd(s.theta, s.r) == 1, "theta must be coprime to r");
  require((s.theta * s.r) % 2 == 0, "<theta/2r> is not well defined when theta*r is odd");
  TorsionForm b = cyclic_form(s.theta, s.r);
  if (s.r == 1) return QuadraticRefinement(b, {});
  // q(1) = theta (1 + 2 gamma) / 2r
  return QuadraticRefinement(b, {make_rational(s.theta * (1 + 2 * s.gamma), 2 * s.r)});
}

Rational eval_raw(const CyclicData& d, const ZVector& a) {
  const std::size_t k = d.orders.size();
  Rational s = 0;
  for (std::size_t i = 0; i < k; ++i) {
    s += Rational(a[i]) * d.qvals[i] + Rational(a[i] * (a[i] - 1) / 2) * d.gram[i][i];
    for (std::size_t j = i + 1; j < k; ++j) s += Rational(a[i] * a[j]) * d.gram[i][j];
  }
  return s;
}

Transported transport(const CyclicData& d) {
  for (Int o : d.orders) require(o >= 1, "cyclic data must be finite");
  Presentation pres = normalise(d.orders);
  const FinAbGroup& T = pres.group;
  const std::size_t k = T.ntors(), n = d.orders.size();
  std::vector<std::vector<Rational>> gram(k, std::vector<Rational>(k));
  std::vector<ZVector> cols;
  for (std::size_t a = 0; a < k; ++a) cols.push_back(pres.from_canonical.column(a));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      Rational s = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s += Rational(cols[a][i] * cols[b][j]) * d.gram[i][j];
      gram[a][b] = s - Rational(floor(s));
    }
  Transported out{pres, TorsionForm(T, gram), std::nullopt};
  if (!d.qvals.empty()) {
    std::vector<Rational> q;
    for (std::size_t a = 0; a < k; ++a) {
      Rational v = eval_raw(d, cols[a]);
      q.push_back(v - Rational(floor(v)));
    }
    out.refinement = QuadraticRefinement(out.form, q);
  }
  return out;
}

QuadraticRefinement cyclic_refinement_sum(const std::vector<CyclicSpec>& specs) {
  CyclicData d;
  const std::size_t n = specs.size();
  d.gram.assign(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = specs[i];
    require(s.r >= 1 && gcd(s.theta, s.r) == 1, "theta must be coprime to r");
    require((s.theta * s.r) % 2 == 0, "<theta/2r> is not well defined when theta*r is odd");
    d.orders.push_back(s.r);
    d.gram[i][i] = make_rational(s.theta, s.r);
    d.qvals.push_back(make_rational(s.theta * (1 + 2 * s.gamma), 2 * s.r));
  }
  Transported t = transport(d);
  return t.refinement ? *t.refinement : QuadraticRefinement(t.form, {});
}

Residue eval_q(const QuadraticRefinement& q, const Element& x) { return Residue::mod1(q.q(x)); }

Element homogeneity_defect(const QuadraticRefinement& q) {
  const TorsionForm& b = q.form();
  const FinAbGroup& T = b.group();
  const std::size_t k = T.ntors();
  std::vector<Congruence> rows;
  for (std::size_t i = 0; i < k; ++i) {
    Congruence c;
    for (std::size_t j = 0; j < k; ++j) c.coef.push_back(b.unit(i, j));
    // q(g) - q(-g) = 2q(g) - b(g,g), in units of 1/N
    c.rhs = mod(q.unit(i) - b.unit(i, i), b.N());
    c.modulus = b.N();
    rows.push_back(c);
  }
  auto sol = solve_congruences(T, rows);
  require(sol.has_value(), "no homogeneity defect exists: corrupted refinement data");
  ensure(sol->generators.empty(), "homogeneity defect not unique: form is singular");
  return sol->particular;
}

QuadraticRefinement shift(const QuadraticRefinement& q, const Element& a) {
  const TorsionForm& b = q.form();
  check_element(b.group(), a);
  std::vector<Int> u(b.size());
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = q.unit(i) + 2 * b.b_units(gen(b.group(), i), a);
  return QuadraticRefinement::from_units(b, u);
}

QuadraticRefinement any_refinement(const TorsionForm& b) {
  const Int M = 2 * b.N();
  std::vector<Int> u;
  for (std::size_t i = 0; i < b.size(); ++i) {
    Int n = b.group().torsion[i];
    Int rhs = mod(-mulmod(mulmod(n, n - 1, M), b.unit(i, i), M), M);
    Int g = gcd(n, M);
    ensure(rhs % g == 0, "form admits no refinement");
    Int m = M / g;
    u.push_back(m == 1 ? 0 : mulmod(rhs / g, inverse_mod(n / g, m), m));
  }
  return QuadraticRefinement::from_units(b, u);
}

namespace {

std::vector<Element> halves(const FinAbGroup& T, const Element& x) {
  // All-coordinate solutions of 2a = x, at most two distinct choices returned.
  Element a = zero(T);
  std::optional<std::size_t> even_coord;
  for (std::size_t i = 0; i < T.ntors(); ++i) {
    Int n = T.torsion[i];
    if (n % 2 == 1) {
      a.c[i] = mulmod(x.c[i], (n + 1) / 2, n);
    } else {
      require(x.c[i] % 2 == 0, "element is not divisible by 2");
      a.c[i] = x.c[i] / 2;
      if (!even_coord) even_coord = i;
    }
  }
  std::vector<Element> out{a};
  if (even_coord) {
    Element a2 = a;
    a2.c[*even_coord] = mod(a2.c[*even_coord] + T.torsion[*even_coord] / 2, T.torsion[*even_coord]);
    out.push_back(a2);
  }
  return out;
}

std::complex<double> gauss_sum_histogram(const QuadraticRefinement& q) {
  const Int M = 2 * q.form().N();
  std::vector<Int> hist(static_cast<std::size_t>(M), 0);
  for_each_element(q.group(), [&](const Element& x) { ++hist[static_cast<std::size_t>(q.q_units(x))]; });
  std::complex<double> s = 0;
  for (Int m = 0; m < M; ++m)
    if (hist[static_cast<std::size_t>(m)]) s += static_cast<double>(hist[static_cast<std::size_t>(m)]) * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(M));
  return s;
}

}  // namespace

std::complex<double> gauss_sum_bruteforce(const QuadraticRefinement& q, Int cap) {
  if (q.group().torsion_order() > cap) throw CapExceeded("gauss sum cap exceeded");
  std::complex<double> s = 0;
  const double M = static_cast<double>(2 * q.form().N());
  for_each_element(q.group(), [&](const Element& x) {
    s += std::exp(std::complex<double>(0, 2 * std::numbers::pi * static_cast<double>(q.q_units(x)) / M));
  });
  return s;
}

Residue arf(const QuadraticRefinement& q, const ArfOptions& opt) {
  const FinAbGroup& T = q.group();
  if (T.torsion_order() > opt.gauss_cap) throw CapExceeded("gauss sum cap exceeded");
  Element beta = homogeneity_defect(q);
  std::optional<Residue> result;
  for (const Element& a : halves(T, neg(T, beta))) {
    QuadraticRefinement qa = shift(q, a);
    ensure(is_zero(homogeneity_defect(qa)), "homogenisation failed");
    std::complex<double> gs = gauss_sum_histogram(qa);
    double root = std::sqrt(static_cast<double>(T.torsion_order()));
    if (std::abs(std::abs(gs) - root) > opt.tolerance * std::max(1.0, root))
      throw MathError("gauss sum modulus check failed");
    double turns = std::arg(gs) / (2 * std::numbers::pi);
    double k = std::round(8 * turns);
    if (std::abs(turns - k / 8) > opt.tolerance) throw MathError("gauss sum angle is not a multiple of 1/8");
    // A(q_a) = A(q) - q(a)
    Residue A = Residue::mod1(make_rational(static_cast<Int>(k), 8) + q.q(a));
    if (result && *result != A) throw InternalError("arf depends on the choice of halving");
    result = A;
  }
  return *result;
}

bool is_split(const Element& x, const TorsionForm& b) {
  const FinAbGroup& T = b.group();
  check_element(T, x);
  require(!is_zero(x), "is_split needs a nonzero element");
  Int n = order(T, x);
  Int u = b.b_units(x, x);
  return b.N() / gcd(u, b.N()) == n;
}

OrthSum orth_sum(const TorsionForm& b0, const TorsionForm& b1) {
  const std::size_t k0 = b0.size(), k1 = b1.size();
  CyclicData d;
  d.orders = b0.group().torsion;
  d.orders.insert(d.orders.end(), b1.group().torsion.begin(), b1.group().torsion.end());
  d.gram.assign(k0 + k1, std::vector<Rational>(k0 + k1, Rational(0)));
  for (std::size_t i = 0; i < k0; ++i)
    for (std::size_t j = 0; j < k0; ++j) d.gram[i][j] = b0.gram(i, j);
  for (std::size_t i = 0; i < k1; ++i)
    for (std::size_t j = 0; j < k1; ++j) d.gram[k0 + i][k0 + j] = b1.gram(i, j);
  Transported t = transport(d);
  return {t.pres, t.form};
}

OrthSumRefinement orth_sum(const QuadraticRefinement& q0, const QuadraticRefinement& q1) {
  const std::size_t k0 = q0.form().size(), k1 = q1.form().size();
  CyclicData d;
  d.orders = q0.group().torsion;
  d.orders.insert(d.orders.end(), q1.group().torsion.begin(), q1.group().torsion.end());
  d.gram.assign(k0 + k1, std::vector<Rational>(k0 + k1, Rational(0)));
  for (std::size_t i = 0; i < k0; ++i) {
    for (std::size_t j = 0; j < k0; ++j) d.gram[i][j] = q0.form().gram(i, j);
    d.qvals.push_back(q0.q(gen(q0.group(), i)));
  }
  for (std::size_t i = 0; i < k1; ++i) {
    for (std::size_t j = 0; j < k1; ++j) d.gram[k0 + i][k0 + j] = q1.form().gram(i, j);
    d.qvals.push_back(q1.q(gen(q1.group(), i)));
  }
  Transported t = transport(d);
  if (!t.refinement) t.refinement = QuadraticRefinement(t.form, {});  // both summands trivial
  return {t.pres, *t.refinement};
}

SplitResult split_off(const Element& x, const TorsionForm& b) {
  require(is_split(x, b), "element does not generate a split summand");
  const FinAbGroup& T = b.group();
  const Int n = order(T, x), N = b.N();
  const Int u = b.b_units(x, x) / (N / n);
  const Int uinv = inverse_mod(u, n);
  std::vector<Element> gens;
  for (std::size_t i = 0; i < T.ntors(); ++i) {
    Element g = gen(T, i);
    Int v = b.b_units(x, g) / (N / n);
    gens.push_back(sub(T, g, scale(T, mulmod(v, uinv, n), x)));
  }
  Subgroup comp(T, gens);
  const auto& w = comp.basis();
  const std::size_t m = w.size();
  std::vector<std::vector<Rational>> cg(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) cg[i][j] = b.b(w[i], w[j]);
  SplitResult r;
  r.cyclic = TorsionForm(FinAbGroup({n}, 0), {{b.b(x, x)}});
  r.complement = TorsionForm(FinAbGroup(comp.factors(), 0), cg);
  OrthSum s = orth_sum(r.cyclic, r.complement);
  std::vector<Element> old{x};
  old.insert(old.end(), w.begin(), w.end());
  std::vector<Element> imgs;
  for (std::size_t a = 0; a < s.form.size(); ++a) {
    Element y = zero(T);
    for (std::size_t i = 0; i < old.size(); ++i) {
      Integer c = s.pres.from_canonical(i, a);
      Integer cm;
      mpz_fdiv_r(cm.get_mpz_t(), c.get_mpz_t(), Integer(static_cast<long>(T.exponent())).get_mpz_t());
      y = add(T, y, scale(T, to_int(cm), old[i]));
    }
    imgs.push_back(y);
  }
  r.iso = GroupHom(s.form.group(), T, imgs);
  ensure(r.iso.is_iso() && is_isometry(r.iso, s.form, b), "split_off produced a non-isometry");
  return r;
}

bool is_isometry(const GroupHom& f, const TorsionForm& b0, const TorsionForm& b1) {
  if (!(f.source == b0.group()) || !(f.target == b1.group())) return false;
  for (std::size_t i = 0; i < b0.size(); ++i)
    for (std::size_t j = i; j < b0.size(); ++j)
      if (b1.b(f.images[i], f.images[j]) != b0.gram(i, j)) return false;
  return f.is_iso();
}

namespace {

class IsoSearcher {
 public:
  IsoSearcher(const TorsionForm& b0, const TorsionForm& b1, const std::vector<Pin>& pins, SearchMode mode,
              const SearchLimits& lim)
      : b0_(b0), b1_(b1), pins_(pins), mode_(mode), lim_(lim), T0_(b0.group()), T1_(b1.group()) {}

  std::vector<GroupHom> run() {
    if (!(T0_.torsion == T1_.torsion)) return {};
    if (mode_ == SearchMode::enumerate && T0_.torsion_order() > lim_.enumeration_cap)
      throw CapExceeded("automorphism enumeration cap exceeded");
    const std::size_t k = T0_.ntors();
    for (const auto& p : pins_) {
      check_element(T0_, p.x);
      check_element(T1_, p.y);
    }
    // Generators touched by pins first, then the rest, larger orders first.
    std::vector<bool> used(k, false);
    auto push_desc = [&](const std::vector<std::size_t>& cand) {
      std::vector<std::size_t> c = cand;
      std::stable_sort(c.begin(), c.end(), [&](std::size_t a, std::size_t b) { return T0_.torsion[a] > T0_.torsion[b]; });
      for (std::size_t i : c)
        if (!used[i]) {
          used[i] = true;
          order_.push_back(i);
        }
    };
    for (const auto& p : pins_) {
      std::vector<std::size_t> sup;
      for (std::size_t i = 0; i < k; ++i)
        if (p.x.c[i] != 0) sup.push_back(i);
      push_desc(sup);
    }
    std::vector<std::size_t> all(k);
    for (std::size_t i = 0; i < k; ++i) all[i] = i;
    push_desc(all);
    std::vector<std::size_t> pos(k);
    for (std::size_t s = 0; s < k; ++s) pos[order_[s]] = s;
    ready_.assign(k, {});
    for (std::size_t pi = 0; pi < pins_.size(); ++pi) {
      std::optional<std::size_t> last;
      for (std::size_t i = 0; i < k; ++i)
        if (pins_[pi].x.c[i] != 0 && (!last || pos[i] > pos[*last])) last = i;
      if (!last) {
        if (!is_zero(pins_[pi].y)) return {};
      } else {
        ready_[pos[*last]].push_back(pi);
      }
    }
    images_.assign(k, zero(T1_));
    placed_.assign(k, false);
    recurse(0);
    return std::move(results_);
  }

 private:
  bool recurse(std::size_t step) {
    const std::size_t k = T0_.ntors();
    if (step == k) {
      results_.emplace_back(T0_, T1_, images_);
      if (results_.size() > lim_.max_results) throw CapExceeded("too many isometries to enumerate");
      return mode_ == SearchMode::enumerate;
    }
    const std::size_t i = order_[step];
    const Int n = T0_.torsion[i];
    std::vector<Congruence> rows;
    for (std::size_t l = 0; l < k; ++l) {
      if (n % T1_.torsion[l] == 0) continue;
      Congruence c;
      c.coef.assign(k, 0);
      c.coef[l] = n;
      c.modulus = T1_.torsion[l];
      rows.push_back(c);
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (!placed_[j]) continue;
      Congruence c;
      c.coef = b1_.adjoint_units(images_[j]);
      c.rhs = b0_.unit(i, j);
      c.modulus = b1_.N();
      rows.push_back(c);
    }
    for (std::size_t pi : ready_[step]) {
      const Pin& p = pins_[pi];
      Element rhs = p.y;
      for (std::size_t j = 0; j < k; ++j)
        if (j != i && p.x.c[j] != 0) rhs = sub(T1_, rhs, scale(T1_, p.x.c[j], images_[j]));
      for (std::size_t l = 0; l < k; ++l) {
        Congruence c;
        c.coef.assign(k, 0);
        c.coef[l] = p.x.c[i];
        c.rhs = rhs.c[l];
        c.modulus = T1_.torsion[l];
        rows.push_back(c);
      }
    }
    auto sol = solve_congruences(T1_, rows);
    if (!sol) return true;
    Subgroup K(T1_, sol->generators);
    const Int norm = b0_.unit(i, i);
    bool keep_going = true;
    K.for_each(sol->particular, [&](const Element& y) {
      if (--nodes_left_ < 0) throw CapExceeded("isometry search node budget exhausted");
      if (b1_.b_units(y, y) != norm || order(T1_, y) != n) return true;
      images_[i] = y;
      placed_[i] = true;
      keep_going = recurse(step + 1);
      placed_[i] = false;
      return keep_going;
    });
    return keep_going;
  }

  const TorsionForm& b0_;
  const TorsionForm& b1_;
  const std::vector<Pin>& pins_;
  SearchMode mode_;
  SearchLimits lim_;
  const FinAbGroup& T0_;
  const FinAbGroup& T1_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::size_t>> ready_;
  std::vector<Element> images_;
  std::vector<bool> placed_;
  std::vector<GroupHom> results_;
  Int nodes_left_ = 0;

 public:
  void set_budget(Int b) { nodes_left_ = b; }
};

}  // namespace

std::vector<GroupHom> iso_search(const TorsionForm& b0, const TorsionForm& b1, const std::vector<Pin>& pins,
                                 SearchMode mode, const SearchLimits& limits) {
  IsoSearcher s(b0, b1, pins, mode, limits);
  s.set_budget(limits.node_budget);
  return s.run();
}

bool isometry_exists(const TorsionForm& b0, const TorsionForm& b1, const std::vector<Pin>& pins,
                     const SearchLimits& limits) {
  return !iso_search(b0, b1, pins, SearchMode::find_one, limits).empty();
}

bool refinements_isomorphic(const QuadraticRefinement& q0, const QuadraticRefinement& q1, const ArfOptions& arf_opt,
                            const SearchLimits& limits) {
  if (!(q0.group().torsion == q1.group().torsion)) return false;
  if (arf(q0, arf_opt) != arf(q1, arf_opt)) return false;
  return isometry_exists(q0.form(), q1.form(), {{homogeneity_defect(q0), homogeneity_defect(q1)}}, limits);
}

}  // namespace ekc
