#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "ekc/fgab.hpp"

namespace ekc {

// Nonsingular symmetric form T x T -> Q/Z on a finite group, stored as
// integers B_ij with b(g_i, g_j) = B_ij / N, N the exponent of T.
class TorsionForm {
 public:
  TorsionForm() = default;
  TorsionForm(FinAbGroup T, const std::vector<std::vector<Rational>>& gram);
  static TorsionForm from_units(FinAbGroup T, std::vector<Int> units);

  const FinAbGroup& group() const { return T_; }
  Int N() const { return N_; }
  std::size_t size() const { return T_.ntors(); }
  Int unit(std::size_t i, std::size_t j) const { return B_[i * T_.ntors() + j]; }
  Int b_units(const Element& x, const Element& y) const;
  Rational b(const Element& x, const Element& y) const;
  Rational gram(std::size_t i, std::size_t j) const;
  // (b(g_0, y), ..., b(g_{k-1}, y)) in units of 1/N.
  std::vector<Int> adjoint_units(const Element& y) const;
  TorsionForm negated() const;
  bool operator==(const TorsionForm& o) const { return T_ == o.T_ && B_ == o.B_; }

 private:
  void validate() const;
  FinAbGroup T_;
  Int N_ = 1;
  std::vector<Int> B_;
};

// Quadratic refinement q of b, stored by q(g_i) = Q_i / (2N).
class QuadraticRefinement {
 public:
  QuadraticRefinement() = default;
  QuadraticRefinement(TorsionForm b, const std::vector<Rational>& qgen);
  static QuadraticRefinement from_units(TorsionForm b, std::vector<Int> units);

  const TorsionForm& form() const { return b_; }
  const FinAbGroup& group() const { return b_.group(); }
  Int unit(std::size_t i) const { return Q_[i]; }
  Int q_units(const Element& x) const;  // modulo 2N
  Rational q(const Element& x) const;
  QuadraticRefinement negated() const;
  bool operator==(const QuadraticRefinement& o) const { return b_ == o.b_ && Q_ == o.Q_; }

 private:
  TorsionForm b_;
  std::vector<Int> Q_;
};

struct CyclicSpec {
  Int theta = 1;
  Int r = 1;
  Int gamma = 0;
};

TorsionForm cyclic_form(Int theta, Int r);                         // <theta/r>
QuadraticRefinement cyclic_refinement(const CyclicSpec& s);         // <theta/2r>_gamma
QuadraticRefinement cyclic_refinement_sum(const std::vector<CyclicSpec>& specs);

// A form and refinement given on a non-canonical cyclic decomposition (orders >= 1),
// transported to invariant-factor coordinates.
struct CyclicData {
  std::vector<Int> orders;
  std::vector<std::vector<Rational>> gram;
  std::vector<Rational> qvals;  // may be empty when only the form is wanted
};
Rational eval_raw(const CyclicData& d, const ZVector& coeffs);
struct Transported {
  Presentation pres;
  TorsionForm form;
  std::optional<QuadraticRefinement> refinement;
};
Transported transport(const CyclicData& d);

Residue eval_q(const QuadraticRefinement& q, const Element& x);
Element homogeneity_defect(const QuadraticRefinement& q);
QuadraticRefinement shift(const QuadraticRefinement& q, const Element& a);
// Some refinement of b (the first solution generator by generator).
QuadraticRefinement any_refinement(const TorsionForm& b);

struct ArfOptions {
  Int gauss_cap = 100000;
  double tolerance = 1e-6;
};
Residue arf(const QuadraticRefinement& q, const ArfOptions& opt = {});
std::complex<double> gauss_sum_bruteforce(const QuadraticRefinement& q, Int cap = 100000);

bool is_split(const Element& x, const TorsionForm& b);

struct OrthSum {
  Presentation pres;  // old coordinates are the concatenation of both summands
  TorsionForm form;
};
OrthSum orth_sum(const TorsionForm& b0, const TorsionForm& b1);
struct OrthSumRefinement {
  Presentation pres;
  QuadraticRefinement refinement;
};
OrthSumRefinement orth_sum(const QuadraticRefinement& q0, const QuadraticRefinement& q1);

struct SplitResult {
  TorsionForm cyclic;
  TorsionForm complement;
  GroupHom iso;  // from orth_sum(cyclic, complement).form.group() onto T
};
SplitResult split_off(const Element& x, const TorsionForm& b);

struct Pin {
  Element x;
  Element y;
};
enum class SearchMode { find_one, enumerate };
struct SearchLimits {
  Int enumeration_cap = 2000;       // |T| bound for enumerate mode
  std::size_t max_results = 200000;
  Int node_budget = 50000000;
};
// Isometries (T0, b0) -> (T1, b1) satisfying the pins. Throws CapExceeded when a limit is hit,
// so an empty result is a proof that none exists.
std::vector<GroupHom> iso_search(const TorsionForm& b0, const TorsionForm& b1, const std::vector<Pin>& pins,
                                 SearchMode mode, const SearchLimits& limits = {});
bool isometry_exists(const TorsionForm& b0, const TorsionForm& b1, const std::vector<Pin>& pins,
                     const SearchLimits& limits = {});
bool refinements_isomorphic(const QuadraticRefinement& q0, const QuadraticRefinement& q1,
                            const ArfOptions& arf_opt = {}, const SearchLimits& limits = {});
bool is_isometry(const GroupHom& f, const TorsionForm& b0, const TorsionForm& b1);

}  // namespace ekc
