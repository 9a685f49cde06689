#pragma once

#include <stdexcept>
#include <string>

namespace ekc {

// Precondition or data-consistency failure in a mathematical operation.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured search or enumeration cap was hit; the answer is unknown.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal consistency assertion that should never fire on valid input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// const char* overloads keep hot paths free of string construction
inline void require(bool cond, const char* msg) {
  if (!cond) throw MathError(msg);
}
inline void require(bool cond, const std::string& msg) {
  if (!cond) throw MathError(msg);
}

inline void ensure(bool cond, const char* msg) {
  if (!cond) throw InternalError(msg);
}
inline void ensure(bool cond, const std::string& msg) {
  if (!cond) throw InternalError(msg);
}

}  // namespace ekc
