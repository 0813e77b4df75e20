#pragma once

// Exact residue arithmetic shared by every other module.  All values are
// plain signed 64-bit; intermediate products go through wide_t so nothing
// ever rounds or wraps.

#include <cstdint>
#include <limits>
#include <numeric>

#include "lsk/errors.hpp"

#ifdef LSK_ARBITRARY_PRECISION
#include <boost/multiprecision/cpp_int.hpp>
#endif

namespace lsk {

using int_t = std::int64_t;

#ifdef LSK_ARBITRARY_PRECISION
using wide_t = boost::multiprecision::cpp_int;
// No modulus guard: intermediates never overflow.
inline constexpr int_t max_modulus = std::numeric_limits<int_t>::max();
#else
using wide_t = __int128;
// Products of two reduced values stay exact in __int128 for moduli < 2^40.
inline constexpr int_t max_modulus = int_t{1} << 40;
#endif

inline int_t to_int(const wide_t& v) {
#ifdef LSK_ARBITRARY_PRECISION
  return v.template convert_to<int_t>();
#else
  return static_cast<int_t>(v);
#endif
}

// Narrows a wide value back to int_t, refusing silently wrong answers.
inline int_t checked_int(const wide_t& v) {
  if (v > wide_t(std::numeric_limits<int_t>::max()) ||
      v < wide_t(std::numeric_limits<int_t>::min()))
    throw usage_error("result exceeds the 63-bit output range");
  return to_int(v);
}

// Canonical representative of x mod n in {0, ..., n-1}.  Negative x is
// normalized by floored division.
inline int_t rep(int_t x, int_t n) {
  if (n < 2) throw usage_error("rep: modulus must be >= 2, got " + std::to_string(n));
  int_t r = x % n;
  return r < 0 ? r + n : r;
}

// [a*b]_n computed through wide_t.
inline int_t rep_prod(int_t a, int_t b, int_t n) {
  wide_t prod = wide_t(rep(a, n)) * wide_t(rep(b, n));
  return to_int(prod % wide_t(n));
}

// Inverse of x mod n; throws not_a_unit_error (carrying the gcd) otherwise.
inline int_t inv(int_t x, int_t n) {
  int_t a = rep(x, n);
  int_t g = std::gcd(a, n);
  if (g != 1) throw not_a_unit_error(x, n, g);
  int_t r0 = n, r1 = a;
  int_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    int_t q = r0 / r1;
    int_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    int_t s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  return rep(s0, n);
}

// k^2 as a modulus, guarded against overflow and the fixed-width limit.
inline int_t square_modulus(int_t k) {
  if (k < 2) throw usage_error("k must be >= 2, got " + std::to_string(k));
  if (k > (max_modulus - 1) / k)
    throw usage_error("k^2 exceeds the modulus guard (rebuild with "
                      "LSK_ARBITRARY_PRECISION for larger k)");
  return k * k;
}

// The sign map on the classes +-1 mod n: identity for n > 2, constant -1
// for n = 2, constant +1 for n = 1.
inline int sigma(int_t n, int_t s) {
  if (n < 1) throw usage_error("sigma: n must be >= 1");
  if (n == 1) return +1;
  int_t r = rep(s, n);
  if (n == 2) {
    if (r != 1) throw usage_error("sigma: s must be congruent to +-1 mod n");
    return -1;
  }
  if (r == 1) return +1;
  if (r == n - 1) return -1;
  throw usage_error("sigma: s must be congruent to +-1 mod n");
}

}  // namespace lsk
