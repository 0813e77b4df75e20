#pragma once

// Closed-form classification: the genus-minimizing q mod k^2 (forms 0-3),
// Berge family membership of (p, k) for p > k^2, the reduction of p > k^2
// to p = k^2, and the end-to-end conjecture check.

#include <set>
#include <vector>

#include "lsk/invariants.hpp"

namespace lsk {

enum class Family { I_II, III, IV, V };

const char* family_name(Family f);

struct FamilyMatch {
  Family family;
  int sign;       // +1 / -1 for the +- congruence branch
  int_t witness;  // the i of family I/II, or the divisor d of III-V

  friend bool operator==(const FamilyMatch&, const FamilyMatch&) = default;
};

std::string family_token(const FamilyMatch& m);  // e.g. "III:+:2"

struct FamilyScan {
  bool coprime = true;  // false => gcd(p, k) > 1 and matches is empty
  std::vector<FamilyMatch> matches;  // sorted by (family, sign, witness)
};

// All residues q mod k^2 for which (k^2, q, k) is genus-minimizing,
// materialized from the closed forms 0-3.
std::set<int_t> gm_q_set(int_t k);

// Berge family congruences satisfied by p mod k^2.  Family VI is a special
// case of V and is not reported separately.
FamilyScan match_families(int_t p, int_t k);

// The p > k^2 reduction: (p, k^-2, k) is genus-minimizing iff
// (k^2, p^-1, k) is.
struct ReducedTriple {
  int_t k;
  int_t p_mod;  // [p]_{k^2}
  int_t q;      // [p^-1]_{k^2}
  int_t eps_p;  // [-p]_{k^2}
  int_t n;      // [-p^-1]_k, so n p + 1 = 0 mod k

  Triple triple() const { return Triple::checked(k * k, q, k); }
};

ReducedTriple reduce_p(int_t p, int_t k);

struct ConjectureCheck {
  bool congruence_ok;  // q = k^2 mod p
  std::vector<FamilyMatch> families;
  bool gm;             // (p, k^-2, k) genus-minimizing
  int_t gbar;          // Gbar(p, k^-2, k)
  bool eligible;       // congruence_ok and some family matches
  bool consistent;     // gm <=> some family matches
};

// Requires p > k^2 (the p < k^2 families are out of scope) and a valid
// knot triple (p, q, k) with gcd(p, k) = 1.
ConjectureCheck conjecture_check(int_t p, int_t q, int_t k);

}  // namespace lsk
