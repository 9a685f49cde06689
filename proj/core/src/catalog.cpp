#include "ekc/catalog.hpp"

#include <algorithm>
#include <variant>

#include "ekc/error.hpp"

namespace ekc {

struct BundleNode {
  Int n, p;
};
struct FreeNode {
  int b;
  Int d;
};
struct RhsNode {
  QuadraticRefinement q;
  Rational s;
};
struct SphereNode {
  Int s;
};
struct SumNode {
  std::shared_ptr<const ManifoldNode> a, b;
};
struct ReverseNode {
  std::shared_ptr<const ManifoldNode> x;
};

struct ManifoldNode {
  std::variant<BundleNode, FreeNode, RhsNode, SphereNode, SumNode, ReverseNode> v;
};

namespace {

std::string node_str(const ManifoldNode& n, bool top) {
  struct V {
    bool top;
    std::string operator()(const BundleNode& x) const {
      return "M(" + std::to_string(x.n) + "," + std::to_string(x.p) + ")";
    }
    std::string operator()(const FreeNode& x) const {
      return "Mfree(" + std::to_string(x.b) + "," + std::to_string(x.d) + ")";
    }
    std::string operator()(const RhsNode& x) const {
      std::string s = "RHS(";
      const auto& T = x.q.group();
      for (std::size_t i = 0; i < T.ntors(); ++i) {
        if (i) s += "+";
        s += "[" + std::to_string(T.torsion[i]) + ":" + to_string(x.q.q(gen(T, i))) + "]";
      }
      return s + "," + to_string(x.s) + ")";
    }
    std::string operator()(const SphereNode& x) const { return "Sigma(" + std::to_string(x.s) + ")"; }
    std::string operator()(const SumNode& x) const {
      std::string s = node_str(*x.a, false) + " # " + node_str(*x.b, false);
      return top ? s : "(" + s + ")";
    }
    std::string operator()(const ReverseNode& x) const { return "-" + node_str(*x.x, false); }
  };
  return std::visit(V{top}, n.v);
}

Rational q_of(Int v) { return Rational(Integer(static_cast<long>(v))); }

Manifold make(ManifoldNode n, Distillation d) {
  validate(d);
  return {std::make_shared<const ManifoldNode>(std::move(n)), std::move(d)};
}

}  // namespace

std::string Manifold::str() const { return node ? node_str(*node, true) : "S7"; }

Manifold sphere_bundle(Int n, Int p) {
  require(mod(n - p, 2) == 0, "sphere bundle needs n ≡ p mod 2");
  CharForm cf(ZMatrix{{static_cast<long>(n)}}, ZVector{Integer(static_cast<long>(p))});
  Distillation d = distillation_of(cf);
  if (n != 0) {
    Int an = n < 0 ? -n : n;
    Residue closed(Rational(Integer(static_cast<long>(p * p - an)), Integer(static_cast<long>(8 * n))), 28);
    ensure(closed == d.mu0, "closed form for the bundle invariant disagrees with the boundary computation");
  }
  return make({BundleNode{n, p}}, d);
}

Manifold free_piece(int b, Int d) {
  require(b >= 1, "free piece needs b >= 1");
  require(d >= 0 && d % 2 == 0, "free piece needs an even d >= 0");
  ZMatrix l(static_cast<std::size_t>(b), static_cast<std::size_t>(b));
  ZVector a(static_cast<std::size_t>(b), 0);
  a[0] = static_cast<long>(d);
  return make({FreeNode{b, d}}, distillation_of(CharForm(l, a)));
}

Manifold rational_homology_sphere(const QuadraticRefinement& q, const Rational& s) {
  const FinAbGroup& T = q.group();
  Base B{T, q.form(), homogeneity_defect(q)};
  Residue A = arf(q);
  require(Residue::mod1(s) == A, "mu must reduce to the Arf invariant mod 1");
  Distillation d{{B, zero(T), q}, zero(T), Residue(s, 28)};
  return make({RhsNode{q, s}}, d);
}

Manifold homotopy_sphere(Int s) {
  Distillation d = trivial_distillation();
  d.mu0 = Residue(q_of(s), 28);
  return make({SphereNode{s}}, d);
}

Manifold connected_sum(const Manifold& a, const Manifold& b) {
  return make({SumNode{a.node, b.node}}, sum(a.dist, b.dist));
}

Manifold reverse(const Manifold& m) { return make({ReverseNode{m.node}}, negate(m.dist)); }

Manifold milnor_sphere() { return sphere_bundle(1, 3); }
Manifold berger_space() { return sphere_bundle(10, 8); }
Manifold unit_tangent_s4() { return sphere_bundle(2, 0); }
Manifold p2_gvz() { return connected_sum(sphere_bundle(2, 2), reverse(milnor_sphere())); }
Manifold gromoll_meyer() { return sphere_bundle(-1, -5); }

namespace {

bool prime_power(Int n) { return n >= 2 && prime_factors(n).size() == 1; }

bool indecomposable_shape(const FinAbGroup& G) {
  if (G.free_rank == 1) return G.torsion.empty();
  if (G.free_rank > 1) return false;
  if (G.torsion.empty()) return true;
  if (G.torsion.size() == 1) return prime_power(G.torsion[0]);
  return G.torsion.size() == 2 && G.torsion[0] == G.torsion[1] && prime_factors(G.torsion[0]) == std::vector<Int>{2};
}

void sort_unique(std::vector<Residue>& v) {
  std::sort(v.begin(), v.end(), [](const Residue& a, const Residue& b) { return a.value() < b.value(); });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

InvariantsReport invariants_report(const Manifold& m, const ReportOptions& opt) {
  InvariantsReport rep;
  const Distillation& D = m.dist;
  const Base& B = D.base();
  const FinAbGroup& T = B.T();
  rep.expression = m.str();
  rep.group = B.G.str();
  rep.torsion = B.G.torsion;
  rep.free_rank = B.G.free_rank;
  for (std::size_t i = 0; i < T.ntors(); ++i) {
    rep.linking_form.emplace_back();
    for (std::size_t j = 0; j < T.ntors(); ++j) rep.linking_form.back().push_back(B.b.gram(i, j));
  }
  rep.p = B.p.c;
  rep.d = base_d(B);
  rep.d_pi = base_d_pi(B);
  rep.d_m = base_d_m(B);
  rep.inertia_H = {d_hat(rep.d_pi)};
  rep.indecomposable_candidate = indecomposable_shape(B.G);

  const Int d = rep.d_pi;
  if (T.torsion_order() <= opt.spectrum_cap) {
    const Element k0 = default_anchor(B, d);
    std::vector<Residue> mus;
    auto each_t = [&](const std::function<void(const Element&)>& f) {
      if (d == 0)
        f(zero(T));
      else
        for_each_element(T, f);
    };
    each_t([&](const Element& t) { mus.push_back(eval_mu(D, add(B.G, k0, embed_torsion(B.G, t)))); });
    sort_unique(mus);
    rep.mu_spectrum = mus;
    try {
      const QuadraticRefinement qh = eval_family(D.ref, scale(B.G, d / 2, k0));
      const Residue A = arf(qh, opt.arf);
      std::vector<Residue> arfs;
      each_t([&](const Element& t) { arfs.push_back(A - eval_q(qh, scale(T, -(d / 2), t))); });
      sort_unique(arfs);
      rep.arf_spectrum = arfs;
    } catch (const CapExceeded&) {
      rep.caps_exceeded.push_back("arf_spectrum");
    }
  } else {
    rep.caps_exceeded.push_back("arf_spectrum");
    rep.caps_exceeded.push_back("mu_spectrum");
  }

  try {
    ImP ip = im_P(B, opt.search);
    rep.r = ip.r;
    rep.r_conventional = ip.r_conventional;
    rep.inertia = inertia_from(ip).I;
    rep.reactivity = reactivity_from(B, ip);
    rep.n_plus = rep.reactivity->n_plus;
  } catch (const CapExceeded&) {
    for (const char* f : {"r", "inertia", "reactivity", "n_plus"}) rep.caps_exceeded.push_back(f);
  }
  try {
    rep.orientation_reversible = diffeo_decision(D, negate(D), opt.search);
  } catch (const CapExceeded&) {
    rep.caps_exceeded.push_back("orientation_reversible");
  }
  return rep;
}

}  // namespace ekc
