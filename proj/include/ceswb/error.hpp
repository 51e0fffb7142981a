#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ceswb {

/// Raised when an argument violates an operation's precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exhaustive search is asked for a size above the configured bound.
class BoundExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Default limit on the rank accepted by the exhaustive enumerators.
inline constexpr int kDefaultSearchBound = 6;

/// Search bound, overridable through the CESWB_BOUND environment variable.
int search_bound();

void require_within_bound(int n, int bound, const char* what);

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline std::int64_t neg(std::int64_t a) {
  if (a == INT64_MIN) throw OverflowError("integer overflow in negation");
  return -a;
}

inline std::int64_t abs(std::int64_t a) { return a < 0 ? neg(a) : a; }

}  // namespace checked
}  // namespace ceswb
