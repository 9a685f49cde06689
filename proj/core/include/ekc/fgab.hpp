#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ekc/arith.hpp"
#include "ekc/matrix.hpp"

namespace ekc {

// Z^free_rank ⊕ Z/n_1 ⊕ ... ⊕ Z/n_k with n_i | n_{i+1}, n_i >= 2.
// Coordinates are ordered torsion first, then free.
struct FinAbGroup {
  std::vector<Int> torsion;
  int free_rank = 0;

  FinAbGroup() = default;
  FinAbGroup(std::vector<Int> torsion_orders, int free);
  static FinAbGroup trivial() { return {}; }

  std::size_t ntors() const { return torsion.size(); }
  std::size_t rank() const { return torsion.size() + static_cast<std::size_t>(free_rank); }
  bool is_finite() const { return free_rank == 0; }
  Int torsion_order() const;
  Int exponent() const;  // of the torsion subgroup; 1 if trivial
  FinAbGroup torsion_subgroup() const { return FinAbGroup(torsion, 0); }
  // Order of the i-th generator, 0 for free generators.
  Int gen_order(std::size_t i) const { return i < torsion.size() ? torsion[i] : 0; }
  bool operator==(const FinAbGroup& o) const { return torsion == o.torsion && free_rank == o.free_rank; }
  std::string str() const;
};

struct Element {
  std::vector<Int> c;  // torsion coordinates then free coordinates
  bool operator==(const Element& o) const { return c == o.c; }
  bool operator<(const Element& o) const { return c < o.c; }
};

Element zero(const FinAbGroup& G);
Element gen(const FinAbGroup& G, std::size_t i);
Element make_element(const FinAbGroup& G, std::vector<Int> coords);  // reduces
void check_element(const FinAbGroup& G, const Element& x);
Element reduce(const FinAbGroup& G, Element x);
Element add(const FinAbGroup& G, const Element& x, const Element& y);
Element sub(const FinAbGroup& G, const Element& x, const Element& y);
Element neg(const FinAbGroup& G, const Element& x);
Element scale(const FinAbGroup& G, Int s, const Element& x);
bool is_zero(const Element& x);
bool is_torsion(const FinAbGroup& G, const Element& x);
Int order(const FinAbGroup& G, const Element& x);  // 0 if infinite
Element torsion_part(const FinAbGroup& G, const Element& x);  // element of G.torsion_subgroup()
Element free_part(const FinAbGroup& G, const Element& x);     // as element of G with torsion zeroed
Element embed_torsion(const FinAbGroup& G, const Element& t);
std::string str(const Element& x);

// Mixed-radix index of an element of a finite group, and its inverse.
Int element_index(const FinAbGroup& T, const Element& x);
Element element_at(const FinAbGroup& T, Int index);
void for_each_element(const FinAbGroup& T, const std::function<void(const Element&)>& f);

// x ∈ sG ?
bool divisible_by(const FinAbGroup& G, const Element& x, Int s);
// Largest e with x ∈ l^e G; nullopt when unbounded.
std::optional<int> prime_divisibility(const FinAbGroup& G, const Element& x, Int l);
// Largest s with x ∈ sG; 0 for torsion x (including x = 0).
Int divisibility(const FinAbGroup& G, const Element& x);
// Solve x = s y; nullopt if impossible.
std::optional<Element> divide(const FinAbGroup& G, const Element& x, Int s);

bool is_even(const FinAbGroup& G, const Element& p);
Int d_pi(const FinAbGroup& G, const Element& p);
Int d_m(const FinAbGroup& G, const Element& p);
std::set<int> extremal_exponents_2(const FinAbGroup& G, const Element& p);

// A homomorphism given by the images of the source generators (matrix columns).
struct GroupHom {
  FinAbGroup source, target;
  std::vector<Element> images;

  GroupHom() = default;
  GroupHom(FinAbGroup src, FinAbGroup tgt, std::vector<Element> imgs);
  static GroupHom identity(const FinAbGroup& G);
  Element apply(const Element& x) const;
  GroupHom compose(const GroupHom& inner) const;  // this ∘ inner
  bool is_injective() const;
  bool is_surjective() const;
  bool is_iso() const { return is_injective() && is_surjective(); }
  bool operator==(const GroupHom& o) const { return source == o.source && target == o.target && images == o.images; }
};

// Canonical form of coker(A: Z^m -> Z^n) together with coordinate changes.
struct Presentation {
  FinAbGroup group;
  ZMatrix to_canonical;    // rank(group) x n: old coordinates -> canonical coordinates (then reduce)
  ZMatrix from_canonical;  // n x rank(group): canonical generator j in old coordinates
  Element canonical(const ZVector& old) const;
  Element canonical(const std::vector<Int>& old) const;
  ZVector lift(const Element& x) const;
};

Presentation cokernel(const ZMatrix& relations);
// Direct sum of cyclic groups with the given orders (0 for Z), in any order.
Presentation normalise(const std::vector<Int>& orders);

// The subgroup of a finite group generated by some elements, enumerable in canonical order.
class Subgroup {
 public:
  Subgroup(const FinAbGroup& T, const std::vector<Element>& gens);
  Int size() const { return size_; }
  const std::vector<Int>& factors() const { return factors_; }
  const std::vector<Element>& basis() const { return basis_; }
  // Visits offset + h for every h in the subgroup; stops early when f returns false.
  bool for_each(const Element& offset, const std::function<bool(const Element&)>& f) const;

 private:
  FinAbGroup T_;
  std::vector<Int> factors_;
  std::vector<Element> basis_;
  Int size_ = 1;
};

}  // namespace ekc

namespace ekc {

// sum_l coef_l * y_l ≡ rhs (mod modulus) for y in a finite group T; every row must be
// well defined on T (coef_l * n_l ≡ 0 mod modulus).
struct Congruence {
  std::vector<Int> coef;
  Int rhs = 0;
  Int modulus = 1;
};
struct CosetSolution {
  Element particular;
  std::vector<Element> generators;  // of the solution subgroup
};
std::optional<CosetSolution> solve_congruences(const FinAbGroup& T, const std::vector<Congruence>& rows);

}  // namespace ekc
