#include "suites.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "ekc/error.hpp"

namespace ekc::check {

void SuiteResult::fail(const std::string& what) {
  if (failures++ == 0) first_failure = what;
}

namespace {

Int uniform(Rng& rng, Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }

Rational frac(const Rational& v) {
  Rational r = v - Rational(floor(v));
  r.canonicalize();
  return r;
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); }
};

Element random_element(Rng& rng, const FinAbGroup& T) {
  return element_at(T, uniform(rng, 0, T.torsion_order() - 1));
}

std::vector<Element> elements(const FinAbGroup& T) {
  std::vector<Element> out;
  for_each_element(T, [&](const Element& x) { out.push_back(x); });
  return out;
}

// b in units of 1/N read off the rational Gram matrix.
struct UnitForm {
  Int N = 1;
  std::vector<std::vector<Int>> g;

  explicit UnitForm(const TorsionForm& b) : N(b.group().exponent()), g(b.size(), std::vector<Int>(b.size())) {
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) {
        Rational v = b.gram(i, j) * N;
        v.canonicalize();
        g[i][j] = to_int(v.get_num());
      }
  }
  Int operator()(const Element& x, const Element& y) const {
    Int s = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (x.c[i])
        for (std::size_t j = 0; j < g.size(); ++j) s = mod(s + mulmod(mulmod(x.c[i], y.c[j], N), g[i][j], N), N);
    return s;
  }
};

}  // namespace

TorsionForm random_form(Rng& rng, Int max_order, int max_blocks) {
  std::vector<Int> orders;
  std::vector<std::vector<Rational>> blocks;  // dense, grown as we go
  auto grow = [&](const std::vector<Int>& o, const std::vector<std::vector<Rational>>& g) {
    const std::size_t n = orders.size(), m = o.size();
    for (auto& row : blocks) row.resize(n + m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Rational> row(n + m, Rational(0));
      for (std::size_t j = 0; j < m; ++j) row[n + j] = g[i][j];
      blocks.push_back(row);
    }
    orders.insert(orders.end(), o.begin(), o.end());
  };
  Int size = 1;
  int want = static_cast<int>(uniform(rng, 0, max_blocks));
  for (int attempt = 0; attempt < 50 && want > 0; ++attempt) {
    Int kind = uniform(rng, 0, 4);
    if (kind <= 2) {
      Int n = uniform(rng, 2, 16);
      if (size * n > max_order) continue;
      Int theta;
      do theta = uniform(rng, 1, n - 1);
      while (gcd(theta, n) != 1);
      grow({n}, {{make_rational(theta, n)}});
      size *= n;
    } else {
      Int m = ipow(2, static_cast<int>(uniform(rng, 1, 3)));
      if (size * m * m > max_order) continue;
      Rational off = make_rational(1, m), diag = kind == 3 ? Rational(0) : make_rational(2, m);
      grow({m, m}, {{diag, off}, {off, diag}});
      size *= m * m;
    }
    --want;
  }
  if (orders.empty()) return TorsionForm(FinAbGroup(), {});
  CyclicData d{orders, blocks, {}};
  return transport(d).form;
}

QuadraticRefinement random_refinement(Rng& rng, Int max_order, int max_blocks) {
  TorsionForm b = random_form(rng, max_order, max_blocks);
  QuadraticRefinement q = any_refinement(b);
  return shift(q, random_element(rng, b.group()));
}

Base random_base(Rng& rng, Int max_order, int free_rank, int max_blocks) {
  require(free_rank == 0 || free_rank == 1, "random bases have free rank 0 or 1");
  TorsionForm b = random_form(rng, max_order, max_blocks);
  FinAbGroup G(b.group().torsion, free_rank);
  Element x = embed_torsion(G, random_element(rng, b.group()));
  if (free_rank == 1) {
    static const Int free_choices[] = {1, 2, 3, 4, 6, 8, 16};
    x.c.back() = free_choices[uniform(rng, 0, 6)];
  }
  return Base{G, b, scale(G, 2, x)};
}

CharForm random_charform(Rng& rng, int rank, int entry_bound) {
  const std::size_t n = static_cast<std::size_t>(rank);
  ZMatrix l(n, n);
  ZVector a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) l(i, j) = l(j, i) = static_cast<long>(uniform(rng, -entry_bound, entry_bound));
  for (std::size_t i = 0; i < n; ++i) {
    Integer par = l(i, i) % 2;
    if (par < 0) par += 2;
    a[i] = par + 2 * static_cast<long>(uniform(rng, -2, 2));
  }
  return CharForm(l, a);
}

ZMatrix random_unimodular(Rng& rng, std::size_t n, int steps) {
  ZMatrix u = ZMatrix::identity(n);
  if (n < 2) return u;
  for (int s = 0; s < steps; ++s) {
    std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<Int>(n) - 1));
    std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<Int>(n) - 2));
    if (j >= i) ++j;
    long c = static_cast<long>(uniform(rng, -2, 2));
    if (c == 0) c = -1;
    for (std::size_t k = 0; k < n; ++k) u(i, k) += c * u(j, k);
  }
  return u;
}

Rational oracle_b(const TorsionForm& b, const Element& x, const Element& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (x.c[i] && y.c[j]) s += Rational(Integer(static_cast<long>(x.c[i] * y.c[j]))) * b.gram(i, j);
  return frac(s);
}

// q(sum a_i g_i) = sum a_i q(g_i) + C(a_i, 2) b(g_i, g_i) + sum_{i<j} a_i a_j b(g_i, g_j)
Rational oracle_q(const QuadraticRefinement& q, const Element& x) {
  const TorsionForm& b = q.form();
  const FinAbGroup& T = b.group();
  Rational s = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const long a = static_cast<long>(x.c[i]);
    if (!a) continue;
    s += Rational(Integer(a)) * q.q(gen(T, i));
    s += Rational(Integer(a * (a - 1)), Integer(2)) * b.gram(i, i);
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (x.c[j]) s += Rational(Integer(a * static_cast<long>(x.c[j]))) * b.gram(i, j);
  }
  return frac(s);
}

std::complex<double> oracle_gauss(const QuadraticRefinement& q) {
  std::complex<double> s = 0;
  for_each_element(q.group(), [&](const Element& x) {
    s += std::polar(1.0, 2 * std::numbers::pi * oracle_q(q, x).get_d());
  });
  return s;
}

bool visit_literal_isometries(const TorsionForm& b0, const TorsionForm& b1, const LiteralLimits& lim,
                              const std::function<void(const std::vector<Element>&)>& f) {
  const FinAbGroup& T0 = b0.group();
  const FinAbGroup& T1 = b1.group();
  if (T0.torsion_order() != T1.torsion_order()) return true;
  const std::size_t k = T0.ntors();
  const std::vector<Element> all1 = elements(T1);
  const UnitForm u0(b0), u1(b1);
  if (u0.N != u1.N) return true;
  // pairing table on T1, indexed like all1 (small groups only)
  const std::size_t n1 = all1.size();
  std::vector<Int> pair(n1 * n1);
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = a; b < n1; ++b) pair[a * n1 + b] = pair[b * n1 + a] = u1(all1[a], all1[b]);
  std::vector<std::vector<std::size_t>> cand(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t a = 0; a < n1; ++a)
      if (is_zero(scale(T1, T0.torsion[i], all1[a])) && pair[a * n1 + a] == u0.g[i][i]) cand[i].push_back(a);
  std::vector<std::size_t> idx(k);
  std::vector<Element> img(k);
  long visited = 0;
  bool capped = false;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (capped) return;
    if (++visited > lim.tuple_cap) {
      capped = true;
      return;
    }
    if (i == k) {
      // b0 is nonsingular, so a form-preserving hom is injective; orders agree, so it is onto
      for (std::size_t j = 0; j < k; ++j) img[j] = all1[idx[j]];
      f(img);
      return;
    }
    for (std::size_t a : cand[i]) {
      bool ok = true;
      for (std::size_t j = 0; ok && j < i; ++j) ok = pair[a * n1 + idx[j]] == u0.g[i][j];
      if (!ok) continue;
      idx[i] = a;
      rec(i + 1);
    }
  };
  rec(0);
  return !capped;
}

std::optional<std::vector<GroupHom>> literal_isometries(const TorsionForm& b0, const TorsionForm& b1,
                                                        const LiteralLimits& lim) {
  std::vector<GroupHom> out;
  if (!visit_literal_isometries(b0, b1, lim, [&](const std::vector<Element>& img) {
        out.emplace_back(b0.group(), b1.group(), img);
      }))
    return std::nullopt;
  return out;
}

std::optional<Int> literal_im_P(const Base& B, const LiteralLimits& lim) {
  require(B.G.free_rank <= 1, "literal enumeration needs free rank <= 1");
  const FinAbGroup& T = B.T();
  const Int pf = B.G.free_rank ? B.p.c.back() : 0;
  if (pf == 0) return Int{0};
  const Int d = pf < 0 ? -pf : pf;
  Element beta = torsion_part(B.G, B.p);
  const std::vector<Element> all = elements(T);
  std::map<Element, std::vector<std::size_t>> by_dt;
  for (std::size_t i = 0; i < all.size(); ++i) by_dt[scale(T, d, all[i])].push_back(i);
  std::vector<bool> feasible(all.size(), false);
  std::set<Element> seen;
  bool complete = visit_literal_isometries(B.b, B.b, lim, [&](const std::vector<Element>& img) {
    Element fb = zero(T);
    for (std::size_t i = 0; i < img.size(); ++i) fb = add(T, fb, scale(T, beta.c[i], img[i]));
    // F = f on T, e -> e + t; F(p) = p iff f(beta) + d t = beta
    if (!seen.insert(fb).second) return;
    auto it = by_dt.find(sub(T, beta, fb));
    if (it == by_dt.end()) return;
    for (std::size_t i : it->second) feasible[i] = true;
  });
  if (!complete) return std::nullopt;
  Int g = 2 * d;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!feasible[i]) continue;
    const Element& t = all[i];
    Rational P = Rational(Integer(static_cast<long>(d * d))) * oracle_b(B.b, t, t) -
                 Rational(Integer(static_cast<long>(2 * d))) * oracle_b(B.b, beta, t);
    P.canonicalize();
    if (P.get_den() != 1) throw InternalError("automorphism with nonintegral P");
    g = gcd(g, mod(to_int(P.get_num()), 2 * d));
  }
  return g;
}

std::optional<bool> literal_decision(const Distillation& d0, const Distillation& d1, Level level,
                                     const LiteralLimits& lim) {
  const Base& B0 = d0.base();
  const Base& B1 = d1.base();
  require(B0.G.free_rank <= 1, "literal enumeration needs free rank <= 1");
  if (!(B0.G == B1.G)) return false;
  auto isos = literal_isometries(B0.b, B1.b, lim);
  if (!isos) return std::nullopt;
  const FinAbGroup& G = B0.G;
  const FinAbGroup& T1 = B1.T();
  const std::vector<Element> T0all = elements(B0.T());
  const std::vector<Element> T1all = elements(T1);
  const Int d = base_d_pi(B0);
  const Element h = default_anchor(B0, 2);
  const Element k = default_anchor(B0, d);
  const QuadraticRefinement q0 = eval_family(d0.ref, h);
  const Residue mu0 = eval_mu(d0, k);
  for (const GroupHom& f : *isos) {
    std::vector<Element> base_imgs;
    for (const Element& y : f.images) base_imgs.push_back(embed_torsion(G, y));
    std::vector<std::vector<Element>> choices;
    if (G.free_rank == 0) {
      choices.push_back(base_imgs);
    } else {
      for (Int eps : {1, -1})
        for (const Element& t : T1all) {
          Element e = embed_torsion(G, t);
          e.c.back() = eps;
          auto imgs = base_imgs;
          imgs.push_back(e);
          choices.push_back(imgs);
        }
    }
    for (const auto& imgs : choices) {
      GroupHom F(G, G, imgs);
      if (!(F.apply(B0.p) == B1.p)) continue;
      if (level != Level::base) {
        const QuadraticRefinement q1 = eval_family(d1.ref, F.apply(h));
        bool same = true;
        for (std::size_t i = 0; same && i < T0all.size(); ++i)
          same = oracle_q(q1, torsion_part(G, F.apply(embed_torsion(G, T0all[i])))) == oracle_q(q0, T0all[i]);
        if (!same) continue;
      }
      if (level == Level::diffeo && eval_mu(d1, F.apply(k)) != mu0) continue;
      return true;
    }
  }
  return false;
}

SuiteResult milgram_suite(Rng& rng, int cases, Int max_order) {
  Timer tm;
  SuiteResult res{"milgram"};
  for (int c = 0; c < cases; ++c) {
    QuadraticRefinement q = random_refinement(rng, max_order, 4);
    const FinAbGroup& T = q.group();
    ++res.cases;
    std::complex<double> gs = oracle_gauss(q);
    const double root = std::sqrt(static_cast<double>(T.torsion_order()));
    if (std::abs(std::abs(gs) - root) > 1e-9 * std::max(1.0, root)) {
      res.fail("|GS| != sqrt|T| on " + T.str());
      continue;
    }
    // homogenise: 2a = -beta
    Element beta = homogeneity_defect(q);
    auto a = divide(T, neg(T, beta), 2);
    if (!a) {
      res.fail("defect not divisible by 2 on " + T.str());
      continue;
    }
    QuadraticRefinement qh = shift(q, *a);
    if (!is_zero(homogeneity_defect(qh))) {
      res.fail("homogenisation failed on " + T.str());
      continue;
    }
    Residue A = arf(qh);
    Rational eightA = A.value() * 8;
    eightA.canonicalize();
    double angle = std::arg(oracle_gauss(qh)) / (2 * std::numbers::pi);
    double diff = angle - A.value().get_d();
    diff -= std::round(diff);
    if (eightA.get_den() != 1 || std::abs(diff) > 1e-6) res.fail("homogeneous Arf not in Z/8 on " + T.str());
  }
  res.seconds = tm.seconds();
  return res;
}

SuiteResult arf_cyclic_suite(Int rmax) {
  Timer tm;
  SuiteResult res{"arf-cyclic"};
  for (Int r = 1; r <= rmax; ++r)
    for (Int theta = 1; theta < 2 * r; ++theta) {
      if (gcd(theta, r) != 1 || (theta * r) % 2) continue;
      for (Int gamma = 0; gamma < r; ++gamma) {
        ++res.cases;
        QuadraticRefinement q = cyclic_refinement({theta, r, gamma});
        std::complex<double> gs = oracle_gauss(q);
        double angle = std::arg(gs) / (2 * std::numbers::pi);
        Residue A = arf(q);
        double diff = angle - A.value().get_d();
        diff -= std::round(diff);
        // snapped to the grid (1/8r)Z the angle must be the exact value
        const Int grid = 8 * r;
        Rational snapped(Integer(static_cast<long>(std::llround(angle * static_cast<double>(grid)))),
                         Integer(static_cast<long>(grid)));
        snapped.canonicalize();
        if (std::abs(diff) > 1e-6 || Residue::mod1(snapped) != A) {
          std::ostringstream os;
          os << "<" << theta << "/" << 2 * r << ">_" << gamma << ": arf " << A.str() << " vs angle " << angle;
          res.fail(os.str());
        }
      }
    }
  res.seconds = tm.seconds();
  return res;
}

SuiteResult charform_arf_suite(Rng& rng, int cases) {
  Timer tm;
  SuiteResult res{"charform-arf"};
  while (res.cases < cases) {
    CharForm cf = random_charform(rng, static_cast<int>(uniform(rng, 1, 6)), 5);
    Integer det = cf.lambda.determinant();
    if (det == 0 || abs(det) > 20000) {
      ++res.skipped;
      continue;
    }
    ++res.cases;
    Boundary B(cf);
    const Element zero_h = zero(B.group());
    Residue A = arf(B.family_at(zero_h));
    Residue g = Residue::mod1(B.gauss_at(zero_h));
    if (!(A + g).is_zero()) res.fail("-A(q) != gauss value for lambda = " + cf.lambda.str());
  }
  res.seconds = tm.seconds();
  return res;
}

SuiteResult gluing_suite(Rng& rng, int cases) {
  Timer tm;
  SuiteResult res{"gluing"};
  while (res.cases < cases) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 8));
    ZMatrix D(n, n);
    for (std::size_t i = 0; i < n;) {
      if (i + 1 < n && uniform(rng, 0, 2) == 0) {
        D(i, i + 1) = D(i + 1, i) = 1;
        i += 2;
      } else {
        D(i, i) = uniform(rng, 0, 1) ? 1 : -1;
        ++i;
      }
    }
    ZMatrix U = random_unimodular(rng, n, static_cast<int>(2 * n));
    ZMatrix lambda = U.transpose() * D * U;
    ZVector alpha(n);
    for (std::size_t i = 0; i < n; ++i) {
      Integer par = lambda(i, i) % 2;
      if (par < 0) par += 2;
      alpha[i] = par + 2 * static_cast<long>(uniform(rng, -2, 2));
    }
    ZMatrix V = random_unimodular(rng, n, static_cast<int>(2 * n));
    std::vector<std::size_t> cols;
    const std::size_t k = static_cast<std::size_t>(uniform(rng, 1, static_cast<Int>(n) - 1));
    for (std::size_t j = 0; j < k; ++j) cols.push_back(j);
    ZMatrix B0 = V.select_columns(cols);
    Integer det0 = (B0.transpose() * lambda * B0).determinant();
    if (det0 == 0 || abs(det0) > 5000) {
      ++res.skipped;
      continue;
    }
    ++res.cases;
    GlueReport g = glue_check(CharForm(lambda, alpha), B0);
    if (!g.boundary_identity || !g.gauss_identity)
      res.fail(std::string(g.boundary_identity ? "gauss" : "boundary") + " identity fails for lambda = " + lambda.str());
  }
  res.seconds = tm.seconds();
  return res;
}

SuiteResult bundle_suite(Int nmax) {
  Timer tm;
  SuiteResult res{"bundle-closed-form"};
  ++res.cases;
  if (milnor_sphere().dist.mu0 != Residue(Rational(1), Rational(28))) res.fail("mu(M_{1,3}) != 1");
  for (Int n = -nmax; n <= nmax; ++n) {
    if (n == 0) continue;
    for (Int p = -nmax; p <= nmax; ++p) {
      if (mod(n - p, 2)) continue;
      ++res.cases;
      try {
        sphere_bundle(n, p);  // asserts the closed form internally
      } catch (const std::exception& e) {
        res.fail("M(" + std::to_string(n) + "," + std::to_string(p) + "): " + e.what());
      }
    }
  }
  res.seconds = tm.seconds();
  return res;
}

SuiteResult im_P_suite(Rng& rng, int cases) {
  Timer tm;
  SuiteResult res{"im-P-reduction"};
  int seen[4] = {0, 0, 0, 0};
  while (res.cases < cases) {
    Base B = random_base(rng, 64, uniform(rng, 0, 9) ? 1 : 0);
    auto lit = literal_im_P(B);
    if (!lit) {
      ++res.skipped;
      continue;
    }
    ++res.cases;
    ImP ip = im_P(B);
    ++seen[ip.r_conventional ? 3 : ip.r];
    if (ip.generator != *lit)
      res.fail("im P generator " + std::to_string(ip.generator) + " vs literal " + std::to_string(*lit) + " on " +
               B.G.str() + " p = " + str(B.p));
  }
  res.detail = "r=0: " + std::to_string(seen[0]) + ", r=1: " + std::to_string(seen[1]) + ", r=2: " +
               std::to_string(seen[2]) + ", torsion p: " + std::to_string(seen[3]);
  res.seconds = tm.seconds();
  return res;
}

namespace {

// Another distillation on the same base: random family value with the right defect, random mu.
Distillation random_distillation(Rng& rng, const Base& B) {
  const FinAbGroup& T = B.T();
  const Element h0 = default_anchor(B, 2);
  QuadraticRefinement q = any_refinement(B.b);
  // shifting by a moves the defect by 2a
  auto a = divide(T, sub(T, beta(B, h0, 2), homogeneity_defect(q)), 2);
  ensure(a.has_value(), "defect difference not divisible by 2");
  Element s = *a;
  for (std::size_t i = 0; i < T.ntors(); ++i)
    if (T.torsion[i] % 2 == 0 && uniform(rng, 0, 1)) s.c[i] = mod(s.c[i] + T.torsion[i] / 2, T.torsion[i]);
  q = shift(q, s);
  const Int d = base_d_pi(B);
  Distillation D{{B, h0, q}, default_anchor(B, d), Residue()};
  Residue A = arf(eval_family(D.ref, scale(B.G, d / 2, D.k0)));
  D.mu0 = Residue(A.value() + Rational(Integer(static_cast<long>(uniform(rng, 0, 27)))),
                  Rational(Integer(static_cast<long>(d_hat(d)))));
  return D;
}

// Transport a distillation along a random automorphism built from elementary moves.
Distillation push(Rng& rng, const Distillation& D) {
  const Base& B = D.base();
  const FinAbGroup& G = B.G;
  const FinAbGroup& T = B.T();
  GroupHom F = GroupHom::identity(G), Finv = GroupHom::identity(G);
  auto elementary = [&](std::size_t i, std::size_t j, Int c) {
    std::vector<Element> imgs;
    for (std::size_t m = 0; m < G.rank(); ++m) imgs.push_back(gen(G, m));
    imgs[i] = add(G, imgs[i], scale(G, c, gen(G, j)));
    return GroupHom(G, G, imgs);
  };
  for (int step = 0; step < 8 && G.rank() >= 2; ++step) {
    std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<Int>(G.rank()) - 1));
    std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<Int>(G.rank()) - 1));
    Int c = uniform(rng, 1, 3);
    if (i == j || G.gen_order(j) == 0) continue;
    // g_i -> g_i + c g_j is a homomorphism iff ord(g_i) c g_j = 0
    if (G.gen_order(i) != 0 && !is_zero(scale(G, G.gen_order(i) * c, gen(G, j)))) continue;
    F = F.compose(elementary(i, j, c));
    Finv = elementary(i, j, -c).compose(Finv);
  }
  for (std::size_t i = 0; i < T.ntors(); ++i)
    if (uniform(rng, 0, 1)) {
      std::vector<Element> imgs;
      for (std::size_t m = 0; m < G.rank(); ++m) imgs.push_back(m == i ? neg(G, gen(G, m)) : gen(G, m));
      GroupHom N(G, G, imgs);
      F = F.compose(N);
      Finv = N.compose(Finv);
    }
  std::vector<std::vector<Rational>> gram(T.ntors(), std::vector<Rational>(T.ntors()));
  std::vector<Rational> qv(T.ntors());
  for (std::size_t i = 0; i < T.ntors(); ++i) {
    Element xi = torsion_part(G, Finv.apply(gen(G, i)));
    for (std::size_t j = 0; j < T.ntors(); ++j) gram[i][j] = oracle_b(B.b, xi, torsion_part(G, Finv.apply(gen(G, j))));
    qv[i] = oracle_q(D.ref.q0, xi);
  }
  TorsionForm b1(T, gram);
  return {{Base{G, b1, F.apply(B.p)}, F.apply(D.ref.h0), QuadraticRefinement(b1, qv)}, F.apply(D.k0), D.mu0};
}

CharForm bundle_form(Int n, Int p) { return CharForm(ZMatrix{{static_cast<long>(n)}}, ZVector{Integer(static_cast<long>(p))}); }

}  // namespace

SuiteResult decision_suite(Rng& rng, int cases) {
  Timer tm;
  SuiteResult res{"decisions"};
  while (res.cases < cases) {
    Base B = random_base(rng, 32, uniform(rng, 0, 4) ? 1 : 0, 2);
    Distillation D0 = random_distillation(rng, B);
    Distillation D1;
    switch (uniform(rng, 0, 3)) {
      case 0: D1 = push(rng, D0); break;
      case 1: D1 = push(rng, random_distillation(rng, B)); break;
      case 2: D1 = random_distillation(rng, B); break;
      default: D1 = random_distillation(rng, random_base(rng, 32, B.G.free_rank, 2)); break;
    }
    validate(D1);
    bool capped = false;
    for (Level lv : {Level::base, Level::almost, Level::diffeo}) {
      auto lit = literal_decision(D0, D1, lv);
      if (!lit) {
        capped = true;
        break;
      }
      bool got = lv == Level::base     ? base_iso(D0.base(), D1.base()).has_value()
                 : lv == Level::almost ? almost_diffeo_decision(D0, D1)
                                       : diffeo_decision(D0, D1);
      if (lv == Level::almost && homeo_decision(D0, D1) != got) res.fail("homeo and almost-diffeo disagree");
      if (got != *lit) {
        static const char* names[] = {"base", "almost", "diffeo"};
        res.fail(std::string(names[static_cast<int>(lv)]) + " decision " + (got ? "true" : "false") +
                 " vs literal on " + B.G.str() + " p = " + str(B.p));
      }
    }
    if (capped)
      ++res.skipped;
    else
      ++res.cases;
  }
  res.seconds = tm.seconds();
  return res;
}

SuiteResult connected_sum_suite(Rng& rng, int cases) {
  Timer tm;
  SuiteResult res{"connected-sum"};
  for (int c = 0; c < cases; ++c) {
    // pieces given both as manifolds and as characteristic forms
    auto piece = [&](CharForm& cf) {
      if (uniform(rng, 0, 2)) {
        Int n = uniform(rng, -12, 12);
        Int p = 2 * uniform(rng, -6, 6) + mod(n, 2);
        cf = bundle_form(n, p);
        return sphere_bundle(n, p);
      }
      Int d = 2 * uniform(rng, 0, 6);
      cf = CharForm(ZMatrix(1, 1), ZVector{Integer(static_cast<long>(d))});
      return free_piece(1, d);
    };
    CharForm ca, cb;
    Manifold a = piece(ca), b = piece(cb);
    Manifold s = connected_sum(a, b);
    ++res.cases;
    Distillation glued = distillation_of(direct_sum(ca, cb));
    if (!diffeo_decision(glued, s.dist)) res.fail("sum of distillations differs from the glued form for " + s.str());
    if (!diffeo_decision(reverse(reverse(s)).dist, s.dist)) res.fail("--M not diffeomorphic to M for " + s.str());
    if (!diffeo_decision(connected_sum(s, homotopy_sphere(0)).dist, s.dist))
      res.fail("M # S7 not diffeomorphic to M for " + s.str());
    Manifold sig = connected_sum(s, homotopy_sphere(1));
    if (!(eval_mu(sig.dist, sig.dist.k0) == eval_mu(s.dist, s.dist.k0) + Residue(Rational(1), sig.dist.mu0.modulus())))
      res.fail("mu(M # Sigma) != mu(M) + 1 for " + s.str());
  }
  res.seconds = tm.seconds();
  return res;
}

}  // namespace ekc::check
