#include <gtest/gtest.h>

#include <sstream>

#include "app.hpp"
#include "expr.hpp"
#include "json.hpp"
#include "report.hpp"

using namespace ekc;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<const char*> args) {
  args.insert(args.begin(), "ekc");
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Parser, Atoms) {
  EXPECT_EQ(cli::parse_expression("M(1,3)").str(), "M(1,3)");
  EXPECT_EQ(cli::parse_expression(" Mfree( 99 , 8 ) ").str(), "Mfree(99,8)");
  EXPECT_EQ(cli::parse_expression("Sigma(29)").str(), "Sigma(1)");
  EXPECT_EQ(cli::parse_expression("M(0,8) # Sigma(1)").str(), "M(0,8) # Sigma(1)");
  EXPECT_EQ(cli::parse_expression("-(M(0,8)#Sigma(1))").str(), "-(M(0,8) # Sigma(1))");
}

TEST(Parser, RationalHomologySphere) {
  Manifold a = cli::parse_expression("RHS(C(1,4,0), 1/8)");
  Manifold b = cli::parse_expression(R"(RHS({"orders": [4], "gram": [["1/4"]], "q": ["1/8"]}, 1/8))");
  EXPECT_TRUE(diffeo_decision(a.dist, b.dist));
}

TEST(Parser, ErrorSpans) {
  try {
    cli::parse_expression("M(0,8) # M(1,2)");
    FAIL() << "parity error not reported";
  } catch (const cli::ParseError& e) {
    EXPECT_EQ(e.span().begin, 9u);
    EXPECT_EQ(e.span().end, 15u);
    std::string r = cli::render_error("M(0,8) # M(1,2)", e);
    EXPECT_NE(r.find("  M(0,8) # M(1,2)\n           ^^^^^^\n"), std::string::npos) << r;
  }
  EXPECT_THROW(cli::parse_expression("M(1,"), cli::ParseError);
  EXPECT_THROW(cli::parse_expression("N(1,3)"), cli::ParseError);
  EXPECT_THROW(cli::parse_expression("M(1,3) #"), cli::ParseError);
  EXPECT_THROW(cli::parse_expression("Mfree(0,2)"), cli::ParseError);
  EXPECT_THROW(cli::parse_expression("RHS(C(1,4,0), 0)"), cli::ParseError);
}

TEST(Cli, InvariantsJsonRoundTrips) {
  for (const char* e : {"M(1,3)", "Mfree(99,8)", "M(-8,4) # M(0,8)", "RHS(C(1,6,1), 1/24)"}) {
    Result r = run({"invariants", e, "--json"});
    ASSERT_EQ(r.code, 0) << e << r.err;
    json j = json::parse(r.out);
    EXPECT_EQ(j.dump(2) + "\n", r.out) << e;
    for (const char* key : {"group", "linking_form", "p", "d", "d_pi", "d_m", "r", "arf_spectrum", "mu_spectrum",
                            "inertia", "inertia_H", "reactivity", "n_plus", "orientation_reversible", "caps_exceeded"})
      EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(Cli, InvariantsValues) {
  json a = json::parse(run({"invariants", "M(1,3)", "--json"}).out);
  EXPECT_EQ(a["mu_spectrum"], json::array({"1"}));
  json b = json::parse(run({"invariants", "Mfree(99,8)", "--json"}).out);
  EXPECT_EQ(b["n_plus"], 2);
  json c = json::parse(run({"invariants", "RHS(C(1,8,0), 1/8)", "--json"}).out);
  EXPECT_EQ(c["linking_form"], json::array({json::array({"1/8"})}));
}

TEST(Cli, TextOutput) {
  Result r = run({"invariants", "M(2,0)", "--text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Z/2"), std::string::npos);
}

TEST(Cli, Compare) {
  Result d = run({"compare", "M(0,8)", "M(0,8)#Sigma(1)", "--relation", "diffeo"});
  EXPECT_EQ(d.code, 1);
  Result h = run({"compare", "M(0,8)", "M(0,8)#Sigma(1)", "--relation", "homeo"});
  EXPECT_EQ(h.code, 0);
  Result o = run({"compare", "--relation", "diffeo", "--json", "--", "-(M(0,8)#Sigma(1))", "M(0,8)#Sigma(1)"});
  EXPECT_EQ(o.code, 0) << o.err;
  json j = json::parse(o.out);
  EXPECT_EQ(j["equivalent"], true);
  EXPECT_EQ(j["witness_level"], "diffeo");
}

TEST(Cli, Tables) {
  Result t = run({"table", "inertia-pairs", "--json"});
  EXPECT_EQ(t.code, 0);
  json j = json::parse(t.out);
  EXPECT_EQ(j.dump(2) + "\n", t.out);
  Result dm = run({"table", "dm-example"});
  EXPECT_EQ(dm.code, 0);
  EXPECT_NE(dm.out.find("(3,2,1)"), std::string::npos) << dm.out.substr(0, 300);
  EXPECT_EQ(run({"table", "nope"}).code, 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"invariants", "M(1,"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"compare", "M(0,8)", "M(0,8)", "--relation", "bogus"}).code, 2);
  // a Gauss-sum cap of 1 leaves the spectra unknown
  Result c = run({"--gauss-cap", "1", "invariants", "M(-8,4) # M(0,8)", "--json"});
  EXPECT_EQ(c.code, 3);
  EXPECT_FALSE(json::parse(c.out)["caps_exceeded"].empty());
}

TEST(Cli, ParseErrorMessageGoesToStderr) {
  Result r = run({"invariants", "M(1,2)"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("^"), std::string::npos);
}
