#include "ekc/fgab.hpp"

#include <algorithm>
#include <sstream>

#include "ekc/error.hpp"

namespace ekc {

FinAbGroup::FinAbGroup(std::vector<Int> torsion_orders, int free) : torsion(std::move(torsion_orders)), free_rank(free) {
  require(free_rank >= 0, "negative free rank");
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    require(torsion[i] >= 2, "torsion order must be at least 2");
    if (i + 1 < torsion.size()) require(torsion[i + 1] % torsion[i] == 0, "torsion orders must form a divisibility chain");
  }
}

Int FinAbGroup::torsion_order() const {
  Int n = 1;
  for (Int t : torsion) n = checked_mul(n, t);
  return n;
}

Int FinAbGroup::exponent() const { return torsion.empty() ? 1 : torsion.back(); }

std::string FinAbGroup::str() const {
  std::ostringstream os;
  bool first = true;
  for (Int t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  for (int i = 0; i < free_rank; ++i) {
    os << (first ? "" : " + ") << "Z";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Element zero(const FinAbGroup& G) { return Element{std::vector<Int>(G.rank(), 0)}; }

Element gen(const FinAbGroup& G, std::size_t i) {
  Element e = zero(G);
  e.c.at(i) = 1;
  return reduce(G, e);
}

Element reduce(const FinAbGroup& G, Element x) {
  require(x.c.size() == G.rank(), "element does not belong to this group");
  for (std::size_t i = 0; i < G.ntors(); ++i) x.c[i] = mod(x.c[i], G.torsion[i]);
  return x;
}

Element make_element(const FinAbGroup& G, std::vector<Int> coords) { return reduce(G, Element{std::move(coords)}); }

void check_element(const FinAbGroup& G, const Element& x) {
  require(x.c.size() == G.rank(), "element does not belong to this group");
  for (std::size_t i = 0; i < G.ntors(); ++i)
    require(x.c[i] >= 0 && x.c[i] < G.torsion[i], "unreduced torsion coordinate");
}

Element add(const FinAbGroup& G, const Element& x, const Element& y) {
  require(x.c.size() == G.rank() && y.c.size() == G.rank(), "element does not belong to this group");
  Element r = zero(G);
  for (std::size_t i = 0; i < G.rank(); ++i) r.c[i] = checked_add(x.c[i], y.c[i]);
  return reduce(G, r);
}

Element neg(const FinAbGroup& G, const Element& x) {
  Element r = x;
  for (auto& v : r.c) v = -v;
  return reduce(G, r);
}

Element sub(const FinAbGroup& G, const Element& x, const Element& y) { return add(G, x, neg(G, y)); }

Element scale(const FinAbGroup& G, Int s, const Element& x) {
  require(x.c.size() == G.rank(), "element does not belong to this group");
  Element r = x;
  for (std::size_t i = 0; i < G.rank(); ++i)
    r.c[i] = i < G.ntors() ? mulmod(s, x.c[i], G.torsion[i]) : checked_mul(s, x.c[i]);
  return r;
}

bool is_zero(const Element& x) {
  return std::all_of(x.c.begin(), x.c.end(), [](Int v) { return v == 0; });
}

bool is_torsion(const FinAbGroup& G, const Element& x) {
  for (std::size_t i = G.ntors(); i < G.rank(); ++i)
    if (x.c[i] != 0) return false;
  return true;
}

Int order(const FinAbGroup& G, const Element& x) {
  if (!is_torsion(G, x)) return 0;
  Int o = 1;
  for (std::size_t i = 0; i < G.ntors(); ++i) o = lcm(o, G.torsion[i] / gcd(G.torsion[i], mod(x.c[i], G.torsion[i])));
  return o;
}

Element torsion_part(const FinAbGroup& G, const Element& x) {
  return Element{std::vector<Int>(x.c.begin(), x.c.begin() + static_cast<long>(G.ntors()))};
}

Element free_part(const FinAbGroup& G, const Element& x) {
  Element r = x;
  for (std::size_t i = 0; i < G.ntors(); ++i) r.c[i] = 0;
  return r;
}

Element embed_torsion(const FinAbGroup& G, const Element& t) {
  require(t.c.size() == G.ntors(), "not an element of the torsion subgroup");
  Element r = zero(G);
  std::copy(t.c.begin(), t.c.end(), r.c.begin());
  return reduce(G, r);
}

std::string str(const Element& x) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < x.c.size(); ++i) os << (i ? "," : "") << x.c[i];
  os << ")";
  return os.str();
}

Int element_index(const FinAbGroup& T, const Element& x) {
  Int idx = 0;
  for (std::size_t i = T.ntors(); i-- > 0;) idx = idx * T.torsion[i] + mod(x.c[i], T.torsion[i]);
  return idx;
}

Element element_at(const FinAbGroup& T, Int index) {
  Element x = zero(T);
  for (std::size_t i = 0; i < T.ntors(); ++i) {
    x.c[i] = index % T.torsion[i];
    index /= T.torsion[i];
  }
  return x;
}

void for_each_element(const FinAbGroup& T, const std::function<void(const Element&)>& f) {
  require(T.is_finite(), "cannot enumerate an infinite group");
  Element x = zero(T);
  for (;;) {
    f(x);
    std::size_t i = 0;
    while (i < T.ntors()) {
      if (++x.c[i] < T.torsion[i]) break;
      x.c[i] = 0;
      ++i;
    }
    if (i == T.ntors()) return;
  }
}

bool divisible_by(const FinAbGroup& G, const Element& x, Int s) {
  require(s > 0, "divisor must be positive");
  for (std::size_t i = 0; i < G.rank(); ++i) {
    if (i < G.ntors()) {
      if (mod(x.c[i], G.torsion[i]) % gcd(s, G.torsion[i]) != 0) return false;
    } else if (x.c[i] % s != 0) {
      return false;
    }
  }
  return true;
}

std::optional<int> prime_divisibility(const FinAbGroup& G, const Element& x, Int l) {
  std::optional<int> best;
  auto cap = [&](int e) { best = best ? std::min(*best, e) : e; };
  for (std::size_t i = 0; i < G.rank(); ++i) {
    if (i < G.ntors()) {
      Int n = G.torsion[i], t = mod(x.c[i], n);
      if (n % l != 0 || t == 0) continue;
      int ot = ord(t, l);
      if (ot < ord(n, l)) cap(ot);
    } else if (x.c[i] != 0) {
      cap(ord(x.c[i], l));
    }
  }
  return best;
}

Int divisibility(const FinAbGroup& G, const Element& x) {
  if (is_torsion(G, x)) return 0;
  Int g = 0;
  for (std::size_t i = G.ntors(); i < G.rank(); ++i) g = gcd(g, x.c[i]);
  Int s = 1;
  for (Int l : prime_factors(g)) s = checked_mul(s, ipow(l, *prime_divisibility(G, x, l)));
  return s;
}

std::optional<Element> divide(const FinAbGroup& G, const Element& x, Int s) {
  if (!divisible_by(G, x, s)) return std::nullopt;
  Element y = zero(G);
  for (std::size_t i = 0; i < G.rank(); ++i) {
    if (i < G.ntors()) {
      Int n = G.torsion[i], g = gcd(s, n), m = n / g;
      Int t = mod(x.c[i], n) / g;
      y.c[i] = m == 1 ? 0 : mulmod(t, inverse_mod(s / g, m), m);
    } else {
      y.c[i] = x.c[i] / s;
    }
  }
  return y;
}

bool is_even(const FinAbGroup& G, const Element& p) { return divisible_by(G, p, 2); }

Int d_pi(const FinAbGroup& G, const Element& p) {
  Int g = 0;
  for (std::size_t i = G.ntors(); i < G.rank(); ++i) g = gcd(g, p.c[i]);
  return g;
}

namespace {

// max(0, ord_l div(l^e p) - 2e) for one e.
int local_dm_value(const FinAbGroup& G, const Element& p, Int l, int e) {
  Element q = scale(G, ipow(l, e), p);
  auto pd = prime_divisibility(G, q, l);
  ensure(pd.has_value(), "non-torsion element with unbounded divisibility");
  return std::max(0, *pd - 2 * e);
}

int local_dm_bound(const FinAbGroup& G, Int dpi, Int l) {
  Int ex = G.exponent();
  return (ex % l == 0 ? ord(ex, l) : 0) + ord(dpi, l);
}

}  // namespace

Int d_m(const FinAbGroup& G, const Element& p) {
  require(is_even(G, p), "p must lie in 2G");
  Int dpi = d_pi(G, p);
  if (dpi == 0) return 0;
  Int s = 1;
  for (Int l : prime_factors(dpi)) {
    int best = 0;
    int bound = local_dm_bound(G, dpi, l);
    for (int e = 0; e <= bound; ++e) best = std::max(best, local_dm_value(G, p, l, e));
    s = checked_mul(s, ipow(l, best));
  }
  return s;
}

std::set<int> extremal_exponents_2(const FinAbGroup& G, const Element& p) {
  Int dm = d_m(G, p);
  std::set<int> out;
  if (dm == 0) return out;
  int target = ord(dm, 2);
  int bound = local_dm_bound(G, d_pi(G, p), 2);
  for (int e = 0; e <= bound; ++e)
    if (local_dm_value(G, p, 2, e) == target) out.insert(e);
  return out;
}

GroupHom::GroupHom(FinAbGroup src, FinAbGroup tgt, std::vector<Element> imgs)
    : source(std::move(src)), target(std::move(tgt)), images(std::move(imgs)) {
  require(images.size() == source.rank(), "homomorphism needs one image per source generator");
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i] = reduce(target, images[i]);
    if (i < source.ntors())
      require(is_zero(scale(target, source.torsion[i], images[i])), "homomorphism is not well defined");
  }
}

GroupHom GroupHom::identity(const FinAbGroup& G) {
  std::vector<Element> imgs;
  for (std::size_t i = 0; i < G.rank(); ++i) imgs.push_back(gen(G, i));
  return GroupHom(G, G, imgs);
}

Element GroupHom::apply(const Element& x) const {
  require(x.c.size() == source.rank(), "element not in the source group");
  Element r = zero(target);
  for (std::size_t i = 0; i < x.c.size(); ++i)
    if (x.c[i] != 0) r = add(target, r, scale(target, x.c[i], images[i]));
  return r;
}

GroupHom GroupHom::compose(const GroupHom& inner) const {
  require(inner.target == source, "composition of incompatible homomorphisms");
  std::vector<Element> imgs;
  for (const auto& y : inner.images) imgs.push_back(apply(y));
  return GroupHom(inner.source, target, imgs);
}

namespace {

ZMatrix hom_with_relations(const GroupHom& f) {
  std::size_t n = f.target.rank(), m = f.source.rank();
  ZMatrix A(n, m + f.target.ntors());
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) A(i, j) = static_cast<long>(f.images[j].c[i]);
  for (std::size_t i = 0; i < f.target.ntors(); ++i) A(i, m + i) = static_cast<long>(f.target.torsion[i]);
  return A;
}

}  // namespace

bool GroupHom::is_injective() const {
  ZMatrix K = integer_kernel(hom_with_relations(*this));
  for (std::size_t j = 0; j < K.cols(); ++j)
    for (std::size_t i = 0; i < source.rank(); ++i) {
      if (i < source.ntors()) {
        if (K(i, j) % source.torsion[i] != 0) return false;
      } else if (K(i, j) != 0) {
        return false;
      }
    }
  return true;
}

bool GroupHom::is_surjective() const {
  SmithForm s = smith_decompose(hom_with_relations(*this));
  if (s.rank != target.rank()) return false;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.diag[i] != 1) return false;
  return true;
}

Element Presentation::canonical(const ZVector& old) const {
  ZVector y = to_canonical * old;
  Element e = zero(group);
  for (std::size_t i = 0; i < group.rank(); ++i) {
    if (i < group.ntors()) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), y[i].get_mpz_t(), Integer(static_cast<long>(group.torsion[i])).get_mpz_t());
      e.c[i] = to_int(r);
    } else {
      e.c[i] = to_int(y[i]);
    }
  }
  return e;
}

Element Presentation::canonical(const std::vector<Int>& old) const {
  ZVector v;
  for (Int x : old) v.emplace_back(static_cast<long>(x));
  return canonical(v);
}

ZVector Presentation::lift(const Element& x) const {
  ZVector v;
  for (Int c : x.c) v.emplace_back(static_cast<long>(c));
  return from_canonical * v;
}

Presentation cokernel(const ZMatrix& relations) {
  SmithForm s = smith_decompose(relations);
  const std::size_t n = relations.rows();
  std::vector<std::size_t> tors, fr;
  std::vector<Int> orders;
  for (std::size_t i = 0; i < n; ++i) {
    Integer d = i < s.diag.size() ? s.diag[i] : Integer(0);
    if (d == 1) continue;
    if (d == 0) {
      fr.push_back(i);
    } else {
      tors.push_back(i);
      orders.push_back(to_int(d));
    }
  }
  std::vector<std::size_t> kept = tors;
  kept.insert(kept.end(), fr.begin(), fr.end());
  Presentation p;
  p.group = FinAbGroup(orders, static_cast<int>(fr.size()));
  p.to_canonical = s.U.select_rows(kept);
  p.from_canonical = s.U_inv.select_columns(kept);
  return p;
}

Presentation normalise(const std::vector<Int>& orders) {
  ZMatrix R(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    require(orders[i] >= 0, "negative cyclic order");
    R(i, i) = static_cast<long>(orders[i]);
  }
  return cokernel(R);
}

Subgroup::Subgroup(const FinAbGroup& T, const std::vector<Element>& gens) : T_(T) {
  require(T.is_finite(), "subgroups are enumerated only in finite groups");
  const std::size_t k = T.ntors(), s = gens.size();
  if (s == 0) return;
  ZMatrix A(k, s + k);
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t i = 0; i < k; ++i) A(i, j) = static_cast<long>(gens[j].c[i]);
  for (std::size_t i = 0; i < k; ++i) A(i, s + i) = static_cast<long>(T.torsion[i]);
  ZMatrix K = integer_kernel(A);
  std::vector<std::size_t> top(s);
  for (std::size_t i = 0; i < s; ++i) top[i] = i;
  Presentation pres = cokernel(K.select_rows(top));
  ensure(pres.group.is_finite(), "subgroup of a finite group presented as infinite");
  factors_ = pres.group.torsion;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    Element w = zero(T);
    for (std::size_t i = 0; i < s; ++i) {
      Integer c = pres.from_canonical(i, j);
      Integer cm;
      mpz_fdiv_r(cm.get_mpz_t(), c.get_mpz_t(), Integer(static_cast<long>(T.exponent())).get_mpz_t());
      w = add(T, w, scale(T, to_int(cm), gens[i]));
    }
    basis_.push_back(w);
    size_ = checked_mul(size_, factors_[j]);
  }
}

bool Subgroup::for_each(const Element& offset, const std::function<bool(const Element&)>& f) const {
  Element cur = reduce(T_, offset);
  std::vector<Int> cnt(factors_.size(), 0);
  for (;;) {
    if (!f(cur)) return false;
    std::size_t j = 0;
    while (j < factors_.size()) {
      cur = add(T_, cur, basis_[j]);
      if (++cnt[j] < factors_[j]) break;
      cnt[j] = 0;
      ++j;
    }
    if (j == factors_.size()) return true;
  }
}

}  // namespace ekc

namespace ekc {

std::optional<CosetSolution> solve_congruences(const FinAbGroup& T, const std::vector<Congruence>& rows) {
  require(T.is_finite(), "congruences are solved in finite groups");
  const std::size_t k = T.ntors(), R = rows.size();
  CosetSolution sol;
  if (R == 0) {
    sol.particular = zero(T);
    for (std::size_t i = 0; i < k; ++i) sol.generators.push_back(gen(T, i));
    return sol;
  }
  ZMatrix A(R, k + R);
  ZVector b(R);
  for (std::size_t r = 0; r < R; ++r) {
    require(rows[r].coef.size() == k && rows[r].modulus > 0, "malformed congruence");
    for (std::size_t l = 0; l < k; ++l) A(r, l) = static_cast<long>(mod(rows[r].coef[l], rows[r].modulus));
    A(r, k + r) = static_cast<long>(-rows[r].modulus);
    b[r] = static_cast<long>(mod(rows[r].rhs, rows[r].modulus));
  }
  auto s = solve_integer(A, b);
  if (!s) return std::nullopt;
  auto to_elem = [&](auto get) {
    Element e = zero(T);
    for (std::size_t l = 0; l < k; ++l) {
      Integer v = get(l), r;
      mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), Integer(static_cast<long>(T.torsion[l])).get_mpz_t());
      e.c[l] = to_int(r);
    }
    return e;
  };
  sol.particular = to_elem([&](std::size_t l) { return s->particular[l]; });
  for (std::size_t j = 0; j < s->kernel.cols(); ++j) {
    Element g = to_elem([&](std::size_t l) { return s->kernel(l, j); });
    if (!is_zero(g)) sol.generators.push_back(g);
  }
  return sol;
}

}  // namespace ekc
