#include "tables.hpp"

#include <chrono>
#include <sstream>

namespace ekc::cli {

int Table::matches() const {
  int n = 0;
  for (const auto& r : rows) n += r.match;
  return n;
}

int Table::unexpected() const {
  int n = 0;
  for (const auto& r : rows) n += !r.match && !r.known_discrepancy;
  return n;
}

const std::vector<std::string>& table_names() {
  static const std::vector<std::string> names{"inertia-pairs", "r-examples", "dm-example"};
  return names;
}

std::optional<Table> run_table(const std::string& name, const SearchLimits& lim) {
  if (name == "inertia-pairs") return inertia_pairs_table(lim);
  if (name == "r-examples") return r_examples_table(lim);
  if (name == "dm-example") return dm_example_table();
  return std::nullopt;
}

namespace {

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Rational q(Int a, Int b) { return make_rational(a, b); }

Base with_free(const std::vector<Int>& torsion, const std::vector<std::vector<Rational>>& gram, std::vector<Int> p) {
  FinAbGroup T(torsion, 0);
  FinAbGroup G(torsion, 1);
  return Base{G, TorsionForm(T, gram), make_element(G, std::move(p))};
}

}  // namespace

Table inertia_pairs_table(const SearchLimits& lim) {
  auto t0 = std::chrono::steady_clock::now();
  struct Fixture {
    Manifold m;
    const char* I_H;
    const char* I;
  };
  auto M = sphere_bundle;
  auto S = connected_sum;
  // 112 where the source table prints 102; the two relabelled rows are read off their listed bases
  const std::vector<Fixture> fx{
      {homotopy_sphere(0), "0", "0"},
      {M(0, 56), "Z/2", "Z/2"},
      {M(0, 28), "Z/4", "Z/4"},
      {M(0, 16), "Z/7", "Z/7"},
      {M(0, 8), "Z/14", "Z/14"},
      {M(0, 4), "Z/28", "Z/28"},
      {S(M(-16, 0), M(0, 112)), "0", "Z/2"},
      {S(M(-8, 0), M(0, 56)), "Z/2", "Z/4"},
      {S(M(-16, 2), M(0, 112)), "0", "Z/4"},
      {S(M(-16, 0), M(0, 16)), "Z/7", "Z/14"},
      {S(M(-8, 0), M(0, 8)), "Z/14", "Z/28"},
      {S(M(-16, 2), M(0, 16)), "Z/7", "Z/28"},
      {S(M(-7, 1), M(0, 112)), "0", "Z/7"},
      {S(M(-7, 1), M(0, 56)), "Z/2", "Z/14"},
      {S(M(-7, 1), M(0, 14)), "Z/4", "Z/28"},
      {S(M(-112, 16), M(0, 112)), "0", "Z/14"},
      {S(M(-56, 8), M(0, 56)), "Z/2", "Z/28"},
      {S(M(-112, 2), M(0, 112)), "0", "Z/28"},
  };
  Table t{"inertia-pairs", {}, 0};
  for (const auto& f : fx) {
    const Base& B = f.m.dist.base();
    Inertia in = inertia(B, lim);
    TableRow row;
    row.label = f.m.str();
    row.expected = std::string("(") + f.I_H + ", " + f.I + ")";
    row.got = "(" + in.I_H.str() + ", " + in.I.str() + ")";
    row.match = row.expected == row.got;
    t.rows.push_back(row);
  }
  t.seconds = since(t0);
  return t;
}

Base shear_r0_base(int j) {
  const Int n = ipow(2, j);
  return with_free({n}, {{q(1, n)}}, {0, n});
}

Base half_shift_r2_base(int j) {
  const Int n = ipow(2, j);
  return with_free({n}, {{q(1, n)}}, {n / 2, n});
}

Base hyperbolic_base(int j) {
  const Int n = ipow(2, j);
  return with_free({n, n}, {{q(0, 1), q(1, n)}, {q(1, n), q(0, 1)}}, {0, 0, n});
}

Base split_sum_base(int eps) {
  return with_free({8, 64, 512},
                   {{q(1, 8), q(0, 1), q(0, 1)}, {q(0, 1), q(1, 64), q(0, 1)}, {q(0, 1), q(0, 1), q(eps, 512)}},
                   {0, 8, 0, 64});
}

Table r_examples_table(const SearchLimits& lim) {
  auto t0 = std::chrono::steady_clock::now();
  struct Fixture {
    std::string label;
    Base B;
    int r;
    bool known = false;
    std::string note{};
  };
  const std::vector<Fixture> fx{
      {"shear Z+Z/8, p=(8,0)", shear_r0_base(3), 0},
      {"half shift Z+Z/8, p=(8,4)", half_shift_r2_base(3), 2},
      {"hyperbolic Z+(Z/8)^2, p=(8,0,0)", hyperbolic_base(3), 1},
      {"split sum eps=+1", split_sum_base(1), 1, true,
       "printed value; f = [(7,56,448),(7,57,8),(0,3,21)] is an isometry with f(beta) = beta - 64(0,0,-1), "
       "giving P = 8 = d_m"},
      {"split sum eps=-1", split_sum_base(-1), 0},
  };
  Table t{"r-examples", {}, 0};
  for (const auto& f : fx) {
    ImP ip = im_P(f.B, lim);
    TableRow row{f.label, std::to_string(f.r), std::to_string(ip.r), ip.r == f.r, f.known && ip.r != f.r, f.note};
    t.rows.push_back(row);
  }
  t.seconds = since(t0);
  return t;
}

Table dm_example_table() {
  auto t0 = std::chrono::steady_clock::now();
  Table t{"dm-example", {}, 0};
  auto set_str = [](const std::set<int>& s) {
    std::string out = "{";
    for (int e : s) out += (out.size() > 1 ? "," : "") + std::to_string(e);
    return out + "}";
  };
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b)
      for (int c = 1; c <= std::min(a, b); ++c) {
        FinAbGroup G({ipow(2, b)}, 1);
        Element p = make_element(G, {ipow(2, c), ipow(2, a)});
        std::set<int> exps;
        if (a <= b) exps.insert(0);
        if (a >= b) exps.insert(b - c);
        std::ostringstream want, got;
        want << "d_pi=" << ipow(2, a) << " d_m=" << std::max(ipow(2, c), ipow(2, a - b + c)) << " exps=" << set_str(exps);
        got << "d_pi=" << d_pi(G, p) << " d_m=" << d_m(G, p) << " exps=" << set_str(extremal_exponents_2(G, p));
        TableRow row;
        row.label = "(a,b,c)=(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
        row.expected = want.str();
        row.got = got.str();
        if (a == 3 && b == 2 && c == 1) {
          row.expected = "d=2 " + row.expected;
          row.got = "d=" + std::to_string(divisibility(G, p)) + " " + row.got;
        }
        row.match = row.expected == row.got;
        t.rows.push_back(row);
      }
  t.seconds = since(t0);
  return t;
}

}  // namespace ekc::cli
