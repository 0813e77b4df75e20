#include <doctest.h>

#include <numeric>
#include <random>

#include "lsk/invariants.hpp"
#include "oracles.hpp"

using namespace lsk;

TEST_CASE("triple validation") {
  CHECK_THROWS_AS(Triple::checked(1, 1, 1), usage_error);
  CHECK_THROWS_AS(Triple::checked(10, 4, 3), not_a_unit_error);  // gcd(4,10)=2
  CHECK_THROWS_AS(Triple::checked(10, 3, 0), usage_error);
  CHECK_THROWS_AS(Triple::checked(10, 3, 20), usage_error);  // k = 0 mod p
  auto t = Triple::checked(10, -3, -1);
  CHECK(t.q == 7);
  CHECK(t.k == 9);
}

TEST_CASE("v_pair on the worked triple (5,3,2)") {
  auto t = Triple::checked(5, 3, 2);
  CHECK(v_pair(t, 0, 3) == 1);
  CHECK(v_pair(t, 3, 0) == -1);
  CHECK(v_pair(t, 2, 2) == 0);
}

TEST_CASE("v_pair agrees with the counting oracle") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 300; ++it) {
    Triple t = test::random_triple(rng, 200);
    VContext vc(t);
    std::uniform_int_distribution<int_t> xs(0, t.p - 1);
    for (int rep_ = 0; rep_ < 10; ++rep_) {
      int_t x = xs(rng), y = xs(rng);
      CHECK(vc.v(x, y) == test::v_counting_oracle(t, x, y));
    }
  }
}

TEST_CASE("v additivity over consistent lifts and modularity") {
  std::mt19937_64 rng(19);
  for (int it = 0; it < 200; ++it) {
    Triple t = test::random_triple(rng, 300);
    VContext vc(t);
    std::uniform_int_distribution<int_t> xs(0, t.p - 1);
    int_t x = xs(rng);
    std::uniform_int_distribution<int_t> ds(0, t.p - 1);
    int_t d1 = ds(rng), d2 = ds(rng);
    if (d1 + d2 >= t.p) continue;
    int_t y = rep(x + d1, t.p), z = rep(x + d1 + d2, t.p);
    CHECK(vc.v(x, z) == vc.v(x, y) + vc.v(y, z));
    // v(x,y) = [y-x]_p * kappa (mod p)
    CHECK(rep(vc.v(x, y), t.p) == rep_prod(d1, t.k, t.p));
  }
}

TEST_CASE("f profile of the worked examples") {
  auto fp = f_profile(Triple::checked(5, 2, 2));
  CHECK(fp.values == std::vector<int_t>{0, -3, -1, 1, -2, 0});
  CHECK(fp.degree == 4);
  CHECK(f_profile(Triple::checked(5, 4, 2)).degree == 6);
}

TEST_CASE("f profile closes and matches the streaming degree") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 200; ++it) {
    Triple t = test::random_triple(rng, 500);
    auto fp = f_profile(t);
    CHECK(fp.values.front() == 0);
    CHECK(fp.values.back() == 0);
    for (size_t i = 0; i + 1 < fp.values.size(); ++i) {
      int_t step = fp.values[i + 1] - fp.values[i];
      CHECK((step == t.k || step == t.k - t.p));
    }
    CHECK(fp.degree == big_g(t));
    CHECK(fp.degree == test::degree_oracle(t));
  }
}

TEST_CASE("big_g examples and determinism") {
  auto t = Triple::checked(5, 2, 2);
  CHECK(big_g(t) == 4);
  CHECK(big_g(t) == big_g(t));
  CHECK(big_g(Triple::checked(5, 4, 2)) == 6);
}

TEST_CASE("genus of the worked examples") {
  CHECK(genus(Triple::checked(5, 2, 2)) == 0);
  CHECK(genus(Triple::checked(5, 4, 2)) == 1);
  // degree p-1 forces genus 0
  CHECK(genus(Triple::checked(7, 1, 1)) == 0);
}

TEST_CASE("genus rejects triples whose degree has the wrong parity") {
  // (6,5,2): G = 8, so (G - p + 1) = 3 is odd.  Happens only for
  // gcd(k, p) > 1.
  CHECK(big_g(Triple::checked(6, 5, 2)) == 8);
  CHECK_THROWS_AS(genus(Triple::checked(6, 5, 2)), usage_error);
}

TEST_CASE("genus parity always holds when gcd(k, p) = 1") {
  for (int_t p = 2; p <= 60; ++p)
    for (int_t q = 1; q < p; ++q) {
      if (std::gcd(q, p) != 1) continue;
      for (int_t k = 1; k < p; ++k) {
        if (std::gcd(k, p) != 1) continue;
        int_t g = big_g(Triple{p, q, k});
        CHECK((g - p + 1) % 2 == 0);
        CHECK(g >= p - 1);
      }
    }
}

TEST_CASE("gbar worked examples across all three modes") {
  for (auto mode : {GbarMode::Fast, GbarMode::Oracle, GbarMode::FullDomain}) {
    CHECK(gbar(Triple::checked(5, 3, 2), mode).gbar == 4);
    CHECK(gbar(Triple::checked(25, 6, 5), mode).gbar == 40);
    CHECK(gbar(Triple::checked(49, 30, 7), mode).gbar == 84);
  }
  CHECK(gbar(Triple::checked(25, 6, 5)).argmax_count == 1);
}

TEST_CASE("gbar equals the degree of the inverse-q triple") {
  // Gbar(5,3,2) = G(5,2,2)
  CHECK(gbar(Triple::checked(5, 3, 2)).gbar == big_g(Triple::checked(5, 2, 2)));
}

TEST_CASE("three gbar routes agree on random triples") {
  std::mt19937_64 rng(29);
  for (int it = 0; it < 150; ++it) {
    Triple t = test::random_triple(rng, 400);
    int_t fast = gbar(t, GbarMode::Fast).gbar;
    CHECK(fast == gbar(t, GbarMode::Oracle).gbar);
    CHECK(fast == gbar(t, GbarMode::FullDomain).gbar);
  }
}

TEST_CASE("gbar symmetries") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 150; ++it) {
    Triple t = test::random_triple(rng, 400);
    int_t g = gbar(t).gbar;
    CHECK(gbar(Triple::checked(t.p, -t.q, t.k)).gbar == g);
    CHECK(gbar(Triple::checked(t.p, t.q, -t.k)).gbar == g);
    CHECK(gbar(Triple::checked(t.p, inv(t.q, t.p), rep_prod(t.q, t.k, t.p))).gbar == g);
  }
}

TEST_CASE("genus-minimizing predicate") {
  CHECK(is_genus_minimizing(Triple::checked(25, 6, 5)));
  CHECK_FALSE(is_genus_minimizing(Triple::checked(25, 2, 5)));
  CHECK(q_max_abs_v(Triple::checked(25, 2, 5)) >= 30);  // >= k(k+1)
  CHECK(is_genus_minimizing(Triple::checked(5, 4, 2)));

  // gm <=> gbar < 2p, on random triples
  std::mt19937_64 rng(37);
  for (int it = 0; it < 200; ++it) {
    Triple t = test::random_triple(rng, 300);
    CHECK(is_genus_minimizing(t) == (gbar(t).gbar < 2 * t.p));
  }
}

TEST_CASE("argmax pair attains max |v| over Q pairs") {
  std::mt19937_64 rng(41);
  std::vector<int_t> scratch;
  for (int it = 0; it < 100; ++it) {
    Triple t = test::random_triple(rng, 150);
    auto qp = q_potential(t, scratch);
    VContext vc(t);
    CHECK(vc.v(qp.max_pair.first, qp.max_pair.second) == qp.max_abs_v);
    // exhaustive max over Q x Q (best = 0 degenerates to all kappa^2 pairs)
    int_t best = 0;
    int_t count = 0;
    const auto& qs = vc.sorted_q();
    for (int_t x : qs)
      for (int_t y : qs) {
        int_t v = vc.v(x, y);
        if (v > best) {
          best = v;
          count = 1;
        } else if (v == best) {
          ++count;
        }
      }
    CHECK(best == qp.max_abs_v);
    CHECK(count == qp.argmax_count);
  }
}
