#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ekc/catalog.hpp"

namespace ekc::check {

using Rng = std::mt19937_64;

struct SuiteResult {
  explicit SuiteResult(std::string n) : name(std::move(n)) {}

  std::string name;
  int cases = 0;
  int failures = 0;
  int skipped = 0;
  double seconds = 0;
  std::string first_failure;
  std::string detail;  // suite-specific coverage counts

  bool ok() const { return failures == 0 && cases > 0; }
  void fail(const std::string& what);
};

// Random data. Forms are orthogonal sums of cyclic, hyperbolic and E-type blocks.
TorsionForm random_form(Rng& rng, Int max_order, int max_blocks = 3);
QuadraticRefinement random_refinement(Rng& rng, Int max_order, int max_blocks = 3);
// free_rank is 0 or 1; p = 2x for a random x with nonzero free part when free_rank = 1.
Base random_base(Rng& rng, Int max_order, int free_rank, int max_blocks = 3);
CharForm random_charform(Rng& rng, int rank, int entry_bound);
ZMatrix random_unimodular(Rng& rng, std::size_t n, int steps);

// Oracles. These use only the Gram matrix and generator values, never the unit tables.
Rational oracle_b(const TorsionForm& b, const Element& x, const Element& y);
Rational oracle_q(const QuadraticRefinement& q, const Element& x);
std::complex<double> oracle_gauss(const QuadraticRefinement& q);

struct LiteralLimits {
  long tuple_cap = 400000;  // torsion image tuples visited before giving up
};
// Every isometry T0 -> T1 of torsion forms, by enumerating generator images.
std::optional<std::vector<GroupHom>> literal_isometries(const TorsionForm& b0, const TorsionForm& b1,
                                                        const LiteralLimits& lim = {});
// im P generator from all automorphisms of a base with free rank <= 1.
std::optional<Int> literal_im_P(const Base& B, const LiteralLimits& lim = {});
// base: an isomorphism of (G, b, p); almost: also of the refinement family (homeomorphism is the same
// relation); diffeo: also of mu.
enum class Level { base, almost, diffeo };
std::optional<bool> literal_decision(const Distillation& d0, const Distillation& d1, Level level,
                                     const LiteralLimits& lim = {});

// Property suites. Sizes are case counts.
SuiteResult milgram_suite(Rng& rng, int cases, Int max_order = 200);
SuiteResult arf_cyclic_suite(Int rmax = 50);
SuiteResult charform_arf_suite(Rng& rng, int cases);
SuiteResult gluing_suite(Rng& rng, int cases);
SuiteResult bundle_suite(Int nmax = 20);
SuiteResult im_P_suite(Rng& rng, int cases);
SuiteResult decision_suite(Rng& rng, int cases);
SuiteResult connected_sum_suite(Rng& rng, int cases);

}  // namespace ekc::check
