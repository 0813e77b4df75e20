#include "lsk/classify.hpp"

#include <algorithm>
#include <string>
#include <tuple>

namespace lsk {

const char* family_name(Family f) {
  switch (f) {
    case Family::I_II: return "I_II";
    case Family::III: return "III";
    case Family::IV: return "IV";
    case Family::V: return "V";
  }
  return "?";
}

std::string family_token(const FamilyMatch& m) {
  return std::string(family_name(m.family)) + (m.sign > 0 ? ":+:" : ":-:") +
         std::to_string(m.witness);
}

namespace {

std::vector<int_t> divisors(int_t n) {
  std::vector<int_t> out;
  for (int_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool odd(int_t x) { return x % 2 != 0; }

}  // namespace

std::set<int_t> gm_q_set(int_t k) {
  const int_t kk = square_modulus(k);
  std::set<int_t> out;
  auto add_pm = [&](int_t v) {
    out.insert(rep(v, kk));
    out.insert(rep(-v, kk));
  };
  // form 0: ik +- 1 with gcd(i, k) in {1, 2}
  for (int_t i = 0; i < k; ++i) {
    int_t g = std::gcd(i, k);
    if (g == 1 || g == 2) {
      out.insert(rep(i * k + 1, kk));
      out.insert(rep(i * k - 1, kk));
    }
  }
  // form 1: +-((k+1)/d)(k+1) with odd quotient, and the k-1 twin
  for (int_t d : divisors(k + 1))
    if (odd((k + 1) / d)) add_pm((k + 1) / d * (k + 1));
  for (int_t d : divisors(k - 1))
    if (odd((k - 1) / d)) add_pm((k - 1) / d * (k - 1));
  // form 2: +-((k-1)/d)(2k+1) and +-((k+1)/d)(2k-1) with odd d
  for (int_t d : divisors(k - 1))
    if (odd(d)) add_pm((k - 1) / d * (2 * k + 1));
  for (int_t d : divisors(k + 1))
    if (odd(d)) add_pm((k + 1) / d * (2 * k - 1));
  // form 3: +-((2k+1)/d)(k-1) and +-((2k-1)/d)(k+1)
  for (int_t d : divisors(2 * k + 1)) add_pm((2 * k + 1) / d * (k - 1));
  for (int_t d : divisors(2 * k - 1)) add_pm((2 * k - 1) / d * (k + 1));

  for (int_t q : out)
    if (std::gcd(q, kk) != 1) throw internal_error("gm_q_set produced a non-unit");
  return out;
}

FamilyScan match_families(int_t p, int_t k) {
  const int_t kk = square_modulus(k);
  FamilyScan out;
  out.coprime = (std::gcd(rep(p, k), k) == 1);
  if (!out.coprime) return out;

  const int_t r = rep(p, kk);
  // (family, sign-key, witness); sign-key 0 sorts '+' before '-'
  std::set<std::tuple<int, int, int_t>> found;
  auto probe = [&](Family f, int_t witness, int_t value) {
    if (rep(value, kk) == r) found.insert({static_cast<int>(f), 0, witness});
    if (rep(-value, kk) == r) found.insert({static_cast<int>(f), 1, witness});
  };

  for (int_t i = 0; i < k; ++i) {
    int_t g = std::gcd(i, k);
    if (g != 1 && g != 2) continue;
    if (rep(i * k + 1, kk) == r) found.insert({static_cast<int>(Family::I_II), 0, i});
    if (rep(i * k - 1, kk) == r) found.insert({static_cast<int>(Family::I_II), 1, i});
  }
  for (int_t d : divisors(k - 1))
    if (odd((k - 1) / d)) probe(Family::III, d, d * (2 * k + 1));
  for (int_t d : divisors(k + 1))
    if (odd((k + 1) / d)) probe(Family::III, d, d * (2 * k - 1));
  for (int_t d : divisors(2 * k - 1)) probe(Family::IV, d, d * (k + 1));
  for (int_t d : divisors(2 * k + 1)) probe(Family::IV, d, d * (k - 1));
  for (int_t d : divisors(k + 1))
    if (odd(d)) probe(Family::V, d, d * (k + 1));
  for (int_t d : divisors(k - 1))
    if (odd(d)) probe(Family::V, d, d * (k - 1));

  for (const auto& [fam, signkey, w] : found)
    out.matches.push_back(FamilyMatch{static_cast<Family>(fam), signkey == 0 ? +1 : -1, w});
  return out;
}

ReducedTriple reduce_p(int_t p, int_t k) {
  const int_t kk = square_modulus(k);
  if (p <= kk)
    throw usage_error("reduce_p: requires p > k^2, got p = " + std::to_string(p));
  if (std::gcd(rep(p, k), k) != 1)
    throw usage_error("reduce_p: requires gcd(p, k) = 1");
  ReducedTriple rt;
  rt.k = k;
  rt.p_mod = rep(p, kk);
  rt.q = inv(rt.p_mod, kk);
  rt.eps_p = rep(-p, kk);
  rt.n = rep(-inv(p, k), k);
  if (rep(rep_prod(rt.n, p, k) + 1, k) != 0)
    throw internal_error("reduce_p: n p + 1 != 0 mod k");
  return rt;
}

ConjectureCheck conjecture_check(int_t p, int_t q, int_t k) {
  const int_t kk = square_modulus(k);
  if (p <= kk)
    throw usage_error("out of scope (p <= k^2): families VII-XII are not implemented");
  // validate the knot triple itself
  (void)Triple::checked(p, q, k);

  ConjectureCheck out;
  out.congruence_ok = (rep(q, p) == rep(kk, p));
  out.families = match_families(p, k).matches;  // coprime: inv below would throw anyway

  const int_t q_gbar = inv(rep(kk, p), p);  // k^-2 mod p
  Triple t = Triple::checked(p, q_gbar, k);
  std::vector<int_t> scratch;
  QPotential qp = q_potential(t, scratch);
  out.gm = qp.max_abs_v < p + t.k;
  out.gbar = checked_int(wide_t(qp.max_abs_v) + p - t.k);
  out.eligible = out.congruence_ok && !out.families.empty();
  out.consistent = (out.gm == !out.families.empty());
  return out;
}

}  // namespace lsk
