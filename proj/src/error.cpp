#include "ceswb/error.hpp"

#include <cstdlib>
#include <string>

namespace ceswb {

int search_bound() {
  const char* env = std::getenv("CESWB_BOUND");
  if (env == nullptr || *env == '\0') return kDefaultSearchBound;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 64) {
    throw PreconditionError(std::string("CESWB_BOUND must be a positive integer, got '") + env + "'");
  }
  return static_cast<int>(v);
}

void require_within_bound(int n, int bound, const char* what) {
  if (n > bound) {
    throw BoundExceededError(std::string(what) + ": n = " + std::to_string(n) +
                             " exceeds the search bound " + std::to_string(bound));
  }
}

}  // namespace ceswb
