#include <doctest.h>

#include <random>

#include "lsk/modmath.hpp"

using namespace lsk;

TEST_CASE("rep picks the canonical representative") {
  CHECK(rep(-125, 49) == 22);
  CHECK(rep(0, 7) == 0);
  CHECK(rep(90, 49) == 41);
  CHECK(rep(-1, 4) == 3);
  CHECK_THROWS_AS(rep(5, 1), usage_error);
  CHECK_THROWS_AS(rep(5, 0), usage_error);
}

TEST_CASE("rep is a congruence") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int_t> xs(-1'000'000'000, 1'000'000'000);
  std::uniform_int_distribution<int_t> ns(2, 100'000);
  for (int it = 0; it < 2000; ++it) {
    int_t x = xs(rng), n = ns(rng);
    int_t r = rep(x, n);
    CHECK(0 <= r);
    CHECK(r < n);
    CHECK((x - r) % n == 0);
  }
}

TEST_CASE("inv inverts units") {
  CHECK(inv(30, 49) == 18);
  CHECK(inv(1, 10) == 1);
  CHECK(inv(49, 79) == 50);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int_t> ns(2, 1'000'000);
  for (int it = 0; it < 2000; ++it) {
    int_t n = ns(rng);
    std::uniform_int_distribution<int_t> xs(1, n - 1);
    int_t x = xs(rng);
    if (std::gcd(x, n) != 1) continue;
    int_t y = inv(x, n);
    CHECK(rep_prod(x, y, n) == 1);
    CHECK(inv(y, n) == rep(x, n));  // involution back to the representative
  }
}

TEST_CASE("inv reports the gcd of a non-unit") {
  try {
    inv(6, 49 * 2);  // gcd 2
    FAIL("expected not_a_unit_error");
  } catch (const not_a_unit_error& e) {
    CHECK(e.gcd == 2);
  }
  CHECK_THROWS_AS(inv(7, 49), not_a_unit_error);
}

TEST_CASE("sigma sign map") {
  CHECK(sigma(7, rep(6, 7)) == -1);
  CHECK(sigma(7, 1) == +1);
  CHECK(sigma(2, 1) == -1);   // constant -1 at n = 2
  CHECK(sigma(2, -1) == -1);
  CHECK(sigma(1, 0) == +1);   // constant +1 at n = 1
  CHECK(sigma(5, -1) == -1);
  CHECK_THROWS_AS(sigma(7, 3), usage_error);
  CHECK_THROWS_AS(sigma(2, 0), usage_error);
  CHECK_THROWS_AS(sigma(0, 1), usage_error);
}

TEST_CASE("rep_prod matches direct products in range") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int_t> ns(2, 1'000'000);
  for (int it = 0; it < 1000; ++it) {
    int_t n = ns(rng);
    std::uniform_int_distribution<int_t> xs(-n, n);
    int_t a = xs(rng), b = xs(rng);
    CHECK(rep_prod(a, b, n) == rep(rep(a, n) * rep(b, n), n));
  }
}
