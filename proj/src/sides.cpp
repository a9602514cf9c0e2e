#include "octacount/sides.hpp"

#include <stdexcept>
#include <string>

namespace octa {

namespace {

// Generous cap; it only exists so absurd inputs fail fast instead of
// attempting astronomically sized allocations.
constexpr long long kMaxSide = 1'000'000;

int checked_side(long long value, const char* name) {
  if (value < 1) {
    throw std::invalid_argument(std::string("side ") + name +
                                " must be a positive integer, got " +
                                std::to_string(value));
  }
  if (value > kMaxSide) {
    throw std::invalid_argument(std::string("side ") + name +
                                " is out of range (max " +
                                std::to_string(kMaxSide) + ")");
  }
  return static_cast<int>(value);
}

}  // namespace

Sides Sides::checked(long long a, long long b, long long c, long long d) {
  return Sides{checked_side(a, "a"), checked_side(b, "b"), checked_side(c, "c"),
               checked_side(d, "d")};
}

long long tile_count(const Sides& s) {
  const long long a = s.a, b = s.b, c = s.c, d = s.d;
  return a * b + a * c + a * d + b * c + b * d + c * d;
}

}  // namespace octa
