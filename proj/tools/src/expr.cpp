#include "expr.hpp"

#include <cctype>
#include <charconv>

#include "ekc/error.hpp"
#include "json.hpp"

namespace ekc::cli {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Manifold parse() {
    Manifold m = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected input after expression", {pos_, s_.size()});
    return m;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) throw ParseError(std::string("expected '") + c + "'", here());
    ++pos_;
  }
  Span here() const { return {pos_, std::min(pos_ + 1, s_.size())}; }

  std::string ident() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }

  Int integer() {
    skip();
    std::size_t b = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    Int v = 0;
    const char* first = s_.data() + b + (b < s_.size() && s_[b] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, s_.data() + pos_, v);
    if (ec != std::errc() || ptr != s_.data() + pos_ || pos_ == b) {
      if (ec == std::errc::result_out_of_range) throw ParseError("integer out of range", {b, pos_});
      throw ParseError("expected an integer", {b, std::max(pos_, b + 1)});
    }
    return v;
  }

  Rational rational() {
    skip();
    std::size_t b = pos_;
    Int n = integer();
    Int d = 1;
    if (peek('/')) {
      ++pos_;
      d = integer();
      if (d == 0) throw ParseError("zero denominator", {b, pos_});
    }
    return make_rational(n, d);
  }

  Manifold expr() {
    Manifold m = term();
    while (peek('#')) {
      ++pos_;
      m = connected_sum(m, term());
    }
    return m;
  }

  Manifold term() {
    if (peek('-')) {
      ++pos_;
      return reverse(term());
    }
    return atom();
  }

  template <class F>
  Manifold build(Span span, F&& f) {
    try {
      return f();
    } catch (const MathError& e) {
      throw ParseError(e.what(), span);
    }
  }

  Manifold atom() {
    skip();
    const std::size_t b = pos_;
    if (peek('(')) {
      ++pos_;
      Manifold m = expr();
      expect(')');
      return m;
    }
    std::string name = ident();
    if (name.empty()) throw ParseError("expected a manifold", here());
    if (name == "S7") return homotopy_sphere(0);
    if (name == "M" || name == "Mfree") {
      expect('(');
      Int x = integer();
      expect(',');
      Int y = integer();
      expect(')');
      if (name == "M") return build({b, pos_}, [&] { return sphere_bundle(x, y); });
      if (x < 1 || x > 10000) throw ParseError("Mfree needs 1 <= b <= 10000", {b, pos_});
      return build({b, pos_}, [&] { return free_piece(static_cast<int>(x), y); });
    }
    if (name == "Sigma") {
      expect('(');
      Int x = integer();
      expect(')');
      return homotopy_sphere(mod(x, 28));
    }
    if (name == "RHS") {
      expect('(');
      QuadraticRefinement q = refinement();
      expect(',');
      Rational s = rational();
      expect(')');
      return build({b, pos_}, [&] { return rational_homology_sphere(q, s); });
    }
    throw ParseError("unknown manifold '" + name + "'", {b, pos_});
  }

  QuadraticRefinement refinement() {
    skip();
    const std::size_t b = pos_;
    if (peek('{')) return json_refinement();
    std::vector<CyclicSpec> specs;
    do {
      if (!specs.empty()) ++pos_;
      skip();
      std::size_t cb = pos_;
      if (ident() != "C") throw ParseError("expected C(theta,r,gamma)", {cb, std::max(pos_, cb + 1)});
      expect('(');
      CyclicSpec c;
      c.theta = integer();
      expect(',');
      c.r = integer();
      expect(',');
      c.gamma = integer();
      expect(')');
      specs.push_back(c);
    } while (peek('+'));
    try {
      return cyclic_refinement_sum(specs);
    } catch (const MathError& e) {
      throw ParseError(e.what(), {b, pos_});
    }
  }

  QuadraticRefinement json_refinement() {
    const std::size_t b = pos_;
    int depth = 0;
    bool in_string = false;
    std::size_t e = pos_;
    for (; e < s_.size(); ++e) {
      char c = s_[e];
      if (in_string) {
        if (c == '\\') ++e;
        else if (c == '"') in_string = false;
      } else if (c == '"') {
        in_string = true;
      } else if (c == '{') {
        ++depth;
      } else if (c == '}' && --depth == 0) {
        ++e;
        break;
      }
    }
    if (depth != 0) throw ParseError("unterminated refinement block", {b, s_.size()});
    pos_ = e;
    try {
      auto j = nlohmann::json::parse(s_.substr(b, e - b));
      CyclicData d;
      d.orders = j.at("orders").get<std::vector<Int>>();
      for (const auto& row : j.at("gram")) {
        d.gram.emplace_back();
        for (const auto& v : row) d.gram.back().push_back(parse_rational(v.get<std::string>()));
      }
      for (const auto& v : j.at("q")) d.qvals.push_back(parse_rational(v.get<std::string>()));
      require(d.gram.size() == d.orders.size() && d.qvals.size() == d.orders.size(),
              "refinement block sizes disagree");
      for (const auto& row : d.gram) require(row.size() == d.orders.size(), "gram matrix is not square");
      Transported t = transport(d);
      return t.refinement ? *t.refinement : QuadraticRefinement(t.form, {});
    } catch (const nlohmann::json::exception& ex) {
      throw ParseError(std::string("bad refinement block: ") + ex.what(), {b, e});
    } catch (const std::exception& ex) {
      throw ParseError(ex.what(), {b, e});
    }
  }
};

}  // namespace

Manifold parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string render_error(std::string_view text, const ParseError& e) {
  Span sp = e.span();
  sp.begin = std::min(sp.begin, text.size());
  sp.end = std::max(std::min(sp.end, text.size()), sp.begin + 1);
  std::string out = "error: " + std::string(e.what()) + " at " + std::to_string(sp.begin + 1) + "\n  ";
  out += text;
  out += "\n  " + std::string(sp.begin, ' ') + std::string(sp.end - sp.begin, '^') + "\n";
  return out;
}

}  // namespace ekc::cli
