#pragma once

#include <stdexcept>

namespace rw {

using i64 = long long;

// All counting and polynomial arithmetic in this library is exact. Results at
// the scales we enumerate (symmetric groups up to S7) fit comfortably in 64
// bits; these helpers turn any silent wraparound into a hard error.
inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in add");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in mul");
  return r;
}

inline i64 factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  i64 r = 1;
  for (int k = 2; k <= n; ++k) r = checked_mul(r, k);
  return r;
}

}  // namespace rw
