#pragma once

// The core invariants of a triple (p, q, k): the interval-counting map v,
// the Alexander-degree profile f, the degrees G and Gbar, the knot genus,
// and the genus-minimizing predicate.  Gbar has three independent routes
// (fast / oracle / full-domain) that must agree exactly.

#include <utility>
#include <vector>

#include "lsk/modmath.hpp"

namespace lsk {

// A candidate (p, q, k) with q a unit mod p and k nonzero mod p.
// q and k are stored reduced into [0, p).
struct Triple {
  int_t p, q, k;

  static Triple checked(int_t p, int_t q, int_t k);
  int_t kappa() const { return k; }  // [k]_p, already reduced
};

// The sequence f(0..p) and its degree max f - min f over one period.
struct FProfile {
  std::vector<int_t> values;
  int_t degree;
};

struct GbarResult {
  int_t gbar;
  int_t argmax_count;                // Q x Q pairs attaining max |v|
  std::pair<int_t, int_t> max_pair;  // one pair (x, y) with v(x, y) = max |v|
};

enum class GbarMode { Fast, Oracle, FullDomain };

// Max |v| over Q x Q together with argmax data, computed from the sorted
// prefix potential over Q.  `scratch` is reused across calls in sweeps.
struct QPotential {
  int_t max_abs_v;
  int_t argmax_count;
  std::pair<int_t, int_t> max_pair;
};
QPotential q_potential(const Triple& t, std::vector<int_t>& scratch);

// Signed interval count v(x, y) for residues x, y, with the lift convention
// y~ - x~ = [y - x]_p (so v is total and antisymmetric for x != y).
int_t v_pair(const Triple& t, int_t x, int_t y);

// Per-triple context for repeated v evaluations: sorts Q once.
class VContext {
 public:
  explicit VContext(const Triple& t);
  // v on residues, same lift convention as v_pair.
  int_t v(int_t x, int_t y) const;
  // v on integer lifts x <= y (interval may span several periods).
  int_t v_lifted(int_t x, int_t y) const;
  // #(Q~ intersect (a, b]) for integer lifts a <= b.
  int_t count_q(int_t a, int_t b) const;
  const std::vector<int_t>& sorted_q() const { return q_; }
  const Triple& triple() const { return t_; }

 private:
  Triple t_;
  std::vector<int_t> q_;
};

FProfile f_profile(const Triple& t);
int_t big_g(const Triple& t);
int_t genus(const Triple& t);
GbarResult gbar(const Triple& t, GbarMode mode = GbarMode::Fast);
int_t q_max_abs_v(const Triple& t);
bool is_genus_minimizing(const Triple& t);

}  // namespace lsk
