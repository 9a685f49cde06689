#pragma once

#include <ostream>

namespace ekc::cli {

// Exit codes: 0 ok / equivalent, 1 not equivalent / mismatch / failure, 2 usage or parse error,
// 3 a search or Gauss-sum cap was hit.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ekc::cli
