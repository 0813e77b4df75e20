#pragma once

// Test-only brute-force oracles.  These walk intervals and count, sharing
// no code with the library paths they check.

#include <numeric>
#include <random>
#include <vector>

#include "lsk/invariants.hpp"

namespace lsk::test {

// v(x, y) by walking the lifted interval and testing membership per point.
inline int_t v_counting_oracle(const Triple& t, int_t x, int_t y) {
  const int_t p = t.p;
  int_t delta = rep(y - x, p);
  if (delta == 0) return 0;
  std::vector<char> in_q(static_cast<size_t>(p), 0);
  for (int_t a = 0; a < t.k; ++a) in_q[static_cast<size_t>(rep(a * t.q, p))] = 1;
  int_t x0 = rep(x, p);
  int_t count = 0;
  for (int_t s = x0 + 1; s <= x0 + delta; ++s) count += in_q[static_cast<size_t>(s % p)];
  return delta * t.k - count * p;
}

// Degree of the f staircase recomputed with explicit multiplication.
inline int_t degree_oracle(const Triple& t) {
  int_t f = 0, mx = 0, mn = 0;
  for (int_t i = 0; i < t.p; ++i) {
    if (i > 0) {
      mx = std::max(mx, f);
      mn = std::min(mn, f);
    }
    f += (rep(i * t.q, t.p) < t.k) ? (t.k - t.p) : t.k;
  }
  return mx - mn;
}

// A pseudo-random valid triple with p <= p_max.
inline Triple random_triple(std::mt19937_64& rng, int_t p_max) {
  std::uniform_int_distribution<int_t> pd(2, p_max);
  for (;;) {
    int_t p = pd(rng);
    std::uniform_int_distribution<int_t> rd(1, p - 1);
    int_t q = rd(rng);
    if (std::gcd(q, p) != 1) continue;
    int_t k = rd(rng);
    return Triple::checked(p, q, k);
  }
}

}  // namespace lsk::test
