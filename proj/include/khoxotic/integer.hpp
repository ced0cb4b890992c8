#pragma once

#include <cstdint>
#include <stdexcept>

#include <gmpxx.h>

namespace khoxotic {

using i64 = std::int64_t;

// Sparse elimination works in machine integers; any overflow aborts the
// computation instead of wrapping.
inline i64 mul_checked(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in sparse elimination");
  return r;
}

inline i64 add_checked(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in sparse elimination");
  return r;
}

inline i64 to_i64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("value does not fit in 64 bits");
  return z.get_si();
}

}  // namespace khoxotic
