#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "ekc/catalog.hpp"

namespace ekc::cli {

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, Span span) : std::runtime_error(what), span_(span) {}
  Span span() const { return span_; }

 private:
  Span span_;
};

// expr := term ('#' term)* ; term := '-' term | atom ;
// atom := M(n,p) | Mfree(b,d) | Sigma(s) | S7 | RHS(refinement, rational) | ( expr )
// refinement := C(theta,r,gamma) ('+' C(...))* | {"orders": [...], "gram": [[...]], "q": [...]}
Manifold parse_expression(std::string_view text);

// The message, the source line and a caret line under the span.
std::string render_error(std::string_view text, const ParseError& e);

}  // namespace ekc::cli
