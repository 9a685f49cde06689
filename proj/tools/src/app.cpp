#include "app.hpp"

#include <chrono>
#include <iomanip>

#include "CLI11.hpp"
#include "ekc/error.hpp"
#include "expr.hpp"
#include "report.hpp"
#include "suites.hpp"
#include "tables.hpp"

namespace ekc::cli {

namespace {

struct Caps {
  long long aut_cap = SearchLimits{}.node_budget;
  long long gauss_cap = ArfOptions{}.gauss_cap;

  ReportOptions report() const {
    ReportOptions o;
    o.search.node_budget = aut_cap;
    o.arf.gauss_cap = gauss_cap;
    o.spectrum_cap = gauss_cap;
    return o;
  }
};

std::optional<Manifold> parse_or_report(const std::string& text, std::ostream& err) {
  try {
    return parse_expression(text);
  } catch (const ParseError& e) {
    err << render_error(text, e);
    return std::nullopt;
  }
}

int cmd_invariants(const std::string& text, bool as_json, const Caps& caps, std::ostream& out, std::ostream& err) {
  auto m = parse_or_report(text, err);
  if (!m) return 2;
  InvariantsReport r = invariants_report(*m, caps.report());
  if (as_json)
    out << to_json(r).dump(2) << "\n";
  else
    out << to_text(r);
  if (!r.caps_exceeded.empty()) {
    err << "cap exceeded for: ";
    for (std::size_t i = 0; i < r.caps_exceeded.size(); ++i) err << (i ? ", " : "") << r.caps_exceeded[i];
    err << "\n";
    return 3;
  }
  return 0;
}

int cmd_compare(const std::string& a, const std::string& b, const std::string& relation, bool as_json,
                const Caps& caps, std::ostream& out, std::ostream& err) {
  auto m0 = parse_or_report(a, err);
  if (!m0) return 2;
  auto m1 = parse_or_report(b, err);
  if (!m1) return 2;
  const SearchLimits lim = caps.report().search;
  std::optional<bool> verdict;
  std::string level = "none";
  try {
    const bool almost = almost_diffeo_decision(m0->dist, m1->dist, lim);
    const bool diffeo = almost && diffeo_decision(m0->dist, m1->dist, lim);
    level = diffeo ? "diffeo" : almost ? "almostdiffeo" : "none";
    verdict = relation == "diffeo" ? diffeo : almost;
  } catch (const CapExceeded& e) {
    err << "undecided: " << e.what() << "\n";
    level = "undecided";
  }
  if (as_json) {
    nlohmann::json j;
    j["relation"] = relation;
    j["equivalent"] = verdict ? nlohmann::json(*verdict) : nlohmann::json("undecided");
    j["witness_level"] = level;
    out << j.dump(2) << "\n";
  } else {
    out << "relation       " << relation << "\n"
        << "equivalent     " << (verdict ? (*verdict ? "yes" : "no") : "undecided") << "\n"
        << "finest holding " << level << "\n";
  }
  if (!verdict) return 3;
  return *verdict ? 0 : 1;
}

int cmd_table(const std::string& name, bool as_json, const Caps& caps, std::ostream& out, std::ostream& err) {
  std::optional<Table> t;
  try {
    t = run_table(name, caps.report().search);
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 3;
  }
  if (!t) {
    err << "unknown table '" << name << "'\n";
    return 2;
  }
  out << (as_json ? to_json(*t).dump(2) + "\n" : to_text(*t));
  return t->unexpected() ? 1 : 0;
}

int cmd_selftest(unsigned long long seed, const std::string& size, std::ostream& out) {
  const int f = size == "full" ? 5 : 1;
  check::Rng rng(seed);
  std::vector<check::SuiteResult> results;
  auto t0 = std::chrono::steady_clock::now();
  auto report = [&](check::SuiteResult r) {
    out << std::left << std::setw(20) << r.name << std::right << std::setw(6) << r.cases << " cases  "
        << std::setw(3) << r.failures << " failed";
    if (r.skipped) out << "  " << r.skipped << " skipped";
    out << "  (" << std::fixed << std::setprecision(2) << r.seconds << " s)\n";
    if (!r.detail.empty()) out << "    " << r.detail << "\n";
    if (!r.first_failure.empty()) out << "    first failure: " << r.first_failure << "\n";
    out.flush();
    results.push_back(std::move(r));
  };
  report(check::milgram_suite(rng, 200 * f));
  report(check::arf_cyclic_suite(50));
  report(check::charform_arf_suite(rng, 100 * f));
  report(check::gluing_suite(rng, 100 * f));
  report(check::bundle_suite(20));
  report(check::im_P_suite(rng, 500 * f));
  report(check::decision_suite(rng, 100 * f));
  report(check::connected_sum_suite(rng, 50 * f));
  bool ok = true;
  for (const auto& r : results) ok = ok && r.ok();
  out << (ok ? "selftest passed" : "selftest FAILED") << " (seed " << seed << ", " << size << ", "
      << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s)\n";
  return ok ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of 2-connected spin 7-manifolds"};
  app.require_subcommand(1);
  Caps caps;
  app.add_option("--aut-cap", caps.aut_cap, "node budget for automorphism searches")->check(CLI::PositiveNumber);
  app.add_option("--gauss-cap", caps.gauss_cap, "largest group for Gauss sums and spectra")->check(CLI::PositiveNumber);

  std::string expr, expr_b, relation = "diffeo", table, size = "small";
  bool as_json = false, as_text = false;
  unsigned long long seed = 0;

  auto* inv = app.add_subcommand("invariants", "invariant report of a connected-sum expression");
  inv->add_option("expr", expr, "expression, e.g. 'M(-8,2) # M(0,8)'")->required();
  auto* jflag = inv->add_flag("--json", as_json, "JSON output");
  inv->add_flag("--text", as_text, "text output (default)")->excludes(jflag);

  auto* cmp = app.add_subcommand("compare", "decide equivalence of two expressions");
  cmp->add_option("a", expr, "first expression")->required();
  cmp->add_option("b", expr_b, "second expression")->required();
  cmp->add_option("--relation", relation, "homeo, almostdiffeo or diffeo")
      ->check(CLI::IsMember({"homeo", "almostdiffeo", "diffeo"}));
  cmp->add_flag("--json", as_json, "JSON output");

  auto* tab = app.add_subcommand("table", "recompute a reference table");
  tab->add_option("name", table, "inertia-pairs, r-examples or dm-example")->required();
  tab->add_flag("--json", as_json, "JSON output");

  auto* st = app.add_subcommand("selftest", "run the randomized property suites");
  st->add_option("--seed", seed, "random seed");
  st->add_option("--size", size, "small or full")->check(CLI::IsMember({"small", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*inv) return cmd_invariants(expr, as_json, caps, out, err);
    if (*cmp) return cmd_compare(expr, expr_b, relation, as_json, caps, out, err);
    if (*tab) return cmd_table(table, as_json, caps, out, err);
    if (*st) return cmd_selftest(seed, size, out);
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const MathError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace ekc::cli
