#include <doctest.h>

#include <numeric>
#include <random>
#include <tuple>

#include "lsk/classify.hpp"
#include "oracles.hpp"

using namespace lsk;

TEST_CASE("gm_q_set(5) worked example") {
  std::set<int_t> expect{4, 6, 7, 9, 11, 14, 16, 18, 19, 21};
  CHECK(gm_q_set(5) == expect);
}

TEST_CASE("gm_q_set members are units and the set is inverse-closed") {
  for (int_t k = 2; k <= 60; ++k) {
    const int_t kk = k * k;
    auto s = gm_q_set(k);
    for (int_t q : s) {
      CHECK(std::gcd(q, kk) == 1);
      CHECK(s.count(inv(q, kk)) == 1);
    }
  }
  CHECK_THROWS_AS(gm_q_set(1), usage_error);
}

TEST_CASE("closed forms equal the brute-force set for small k") {
  for (int_t k = 2; k <= 25; ++k) {
    const int_t kk = k * k;
    std::set<int_t> brute;
    for (int_t q = 1; q < kk; ++q)
      if (std::gcd(q, kk) == 1 && is_genus_minimizing(Triple::checked(kk, q, k)))
        brute.insert(q);
    CHECK(brute == gm_q_set(k));
  }
}

TEST_CASE("family matching worked examples") {
  auto fs = match_families(79, 7);
  REQUIRE(fs.coprime);
  bool has_iii = false;
  for (const auto& m : fs.matches)
    if (m.family == Family::III && m.sign == +1 && m.witness == 2) has_iii = true;
  CHECK(has_iii);

  CHECK(match_families(50, 7).matches.empty());

  for (int_t k : {3, 5, 8, 11}) {
    auto f2 = match_families(k * k + k + 1, k);
    bool has = false;
    for (const auto& m : f2.matches)
      if (m.family == Family::I_II && m.sign == +1 && m.witness == 1) has = true;
    CHECK(has);
  }

  auto flagged = match_families(21, 7);
  CHECK_FALSE(flagged.coprime);
  CHECK(flagged.matches.empty());
}

TEST_CASE("family matches depend only on p mod k^2") {
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<int_t> ks(2, 40);
  for (int it = 0; it < 300; ++it) {
    int_t k = ks(rng);
    std::uniform_int_distribution<int_t> ps(1, 4 * k * k);
    int_t p = ps(rng);
    auto a = match_families(p, k);
    auto b = match_families(p + k * k, k);
    CHECK(a.coprime == b.coprime);
    CHECK(a.matches == b.matches);
  }
}

TEST_CASE("matches are sorted by (family, sign, witness)") {
  auto fs = match_families(79, 7);
  for (size_t i = 0; i + 1 < fs.matches.size(); ++i) {
    auto key = [](const FamilyMatch& m) {
      return std::make_tuple(static_cast<int>(m.family), m.sign > 0 ? 0 : 1, m.witness);
    };
    CHECK(key(fs.matches[i]) < key(fs.matches[i + 1]));
  }
}

TEST_CASE("reduce_p worked examples") {
  auto rt = reduce_p(79, 7);
  CHECK(rt.p_mod == 30);
  CHECK(rt.q == 18);
  CHECK(rt.eps_p == 19);
  CHECK(rt.n == 3);
  CHECK((rt.n * 79 + 1) % 7 == 0);

  for (int_t k : {2, 5, 9}) {
    auto r1 = reduce_p(k * k + 1, k);
    CHECK(r1.q == 1);
  }

  CHECK_THROWS_AS(reduce_p(49, 7), usage_error);
  CHECK_THROWS_AS(reduce_p(30, 7), usage_error);
  CHECK_THROWS_AS(reduce_p(70, 7), usage_error);  // gcd > 1
}

TEST_CASE("reduction preserves the genus-minimizing status") {
  for (int_t k = 2; k <= 15; ++k) {
    const int_t kk = k * k;
    for (int_t p = kk + 1; p <= 2 * kk; ++p) {
      if (std::gcd(rep(p, k), k) != 1) continue;
      bool lhs = is_genus_minimizing(Triple::checked(p, inv(rep(kk, p), p), k));
      bool rhs = is_genus_minimizing(reduce_p(p, k).triple());
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("scaled v-bridge between the A and B triples") {
  // k^2 v_B(x, y) = p v_A(x, y) + k (y - x) over the shared lift set,
  // where A = (k^2, [-p], n k) and B = (p, k^2, (n p + 1)/k).
  std::mt19937_64 rng(73);
  std::uniform_int_distribution<int_t> ks(2, 18);
  int done = 0;
  while (done < 60) {
    int_t k = ks(rng);
    const int_t kk = k * k;
    std::uniform_int_distribution<int_t> ps(kk + 1, 2 * kk);
    int_t p = ps(rng);
    if (std::gcd(rep(p, k), k) != 1) continue;
    auto rt = reduce_p(p, k);

    Triple a = Triple::checked(kk, rt.eps_p, rep_prod(rt.n, k, kk));
    Triple b = Triple::checked(p, rep(kk, p), (rt.n * p + 1) / k);
    VContext va(a), vb(b);

    // the two lift sets agree inside [0, p)
    std::set<int_t> qa, qb;
    for (int_t u : va.sorted_q())
      for (int_t lift = u; lift < p; lift += kk) qa.insert(lift);
    for (int_t u : vb.sorted_q()) qb.insert(u);
    REQUIRE(qa == qb);

    std::vector<int_t> shared(qa.begin(), qa.end());
    std::uniform_int_distribution<size_t> pick(0, shared.size() - 1);
    for (int it = 0; it < 40; ++it) {
      int_t x = shared[pick(rng)], y = shared[pick(rng)];
      if (x > y) std::swap(x, y);
      wide_t lhs = wide_t(kk) * vb.v_lifted(x, y);
      wide_t rhs = wide_t(p) * va.v_lifted(x, y) + wide_t(k) * (y - x);
      CHECK(lhs == rhs);
    }
    ++done;
  }
}

TEST_CASE("conjecture check worked examples") {
  auto cc = conjecture_check(79, 49, 7);
  CHECK(cc.congruence_ok);
  CHECK_FALSE(cc.families.empty());
  CHECK(cc.gm);
  CHECK(cc.eligible);
  CHECK(cc.consistent);
  CHECK(cc.gbar < 2 * 79);

  auto c2 = conjecture_check(79, 3, 7);
  CHECK_FALSE(c2.congruence_ok);
  CHECK_FALSE(c2.eligible);

  auto c3 = conjecture_check(50, 49, 7);
  CHECK(c3.congruence_ok);
  CHECK(c3.families.empty());
  CHECK_FALSE(c3.gm);
  CHECK(c3.consistent);
  CHECK(c3.gbar >= 100);

  CHECK_THROWS_AS(conjecture_check(49, 1, 7), usage_error);   // p = k^2
  CHECK_THROWS_AS(conjecture_check(40, 1, 7), usage_error);   // p < k^2
}

TEST_CASE("theorem holds on a small window") {
  const int_t k = 7, kk = 49;
  for (int_t p = kk + 1; p <= 2 * kk; ++p) {
    if (std::gcd(rep(p, k), k) != 1) continue;
    CHECK(conjecture_check(p, rep(kk, p), k).consistent);
  }
}
