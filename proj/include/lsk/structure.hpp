#pragma once

// Combinatorial structure of Q at p = k^2: the z-tuple decomposition into d
// arithmetic runs, the floor-difference indicator theta and its partial-sum
// deviation Xi, and detection of mobile / pseudomobile / antipseudomobile
// points with their activity counts.  These are diagnostics; nothing here
// is needed to compute Gbar itself.

#include <optional>
#include <vector>

#include "lsk/invariants.hpp"
#include "lsk/params.hpp"

namespace lsk {

// Indicator of the long/short run boundary.  Both defining formulas are
// evaluated and must agree.
int theta(int_t d, int_t eps, int_t j);

// d * Xi^{d,eps}_l(j): the deviation of the running theta-sum from its
// mean, scaled by d so all arithmetic stays integral.
int_t xi_sum(int_t d, int_t eps, int_t l, int_t j);

struct ZDecomposition {
  int_t k = 0;
  int_t q = 0;  // the positive-type representative (q = xi q)
  ParamSet params;
  int_t eps = 0;                    // [-k]_d
  std::vector<int_t> n;             // n_j = floor(k/d) - theta(j)
  std::vector<std::vector<int_t>> z;  // z[j][i], i in [0, n_j]
  int_t dq = 0;                     // [d q]_{k^2}
  int_t psi = 0;                    // [dq - kq]_{k^2}
  int_t psibar = 0;                 // k^2 - psi
};

// Builds the decomposition for q with xi(q) = +1 (positive type, or type 0
// in the lower half-range).  Negative-type q must be passed as [-q].
ZDecomposition z_decompose(int_t k, int_t q);

enum class MobileKind { R, L };
// Which window a point moves in: the interval families <z_i, z_{i+1}] /
// <z_{n-(i+1)}, z_{n-i}] inside a run, or the psi / psibar gaps between
// consecutive runs.
enum class MobileWindow { Start, End, Psi, PsiBar };

struct MobilePoint {
  MobileKind kind;
  MobileWindow window;
  int_t l;  // run offset, nonzero mod d (End-frame R / Start-frame L: l != 1)
  int_t i;  // interval index for Start/End windows; 0 for Psi/PsiBar
  std::vector<int_t> active_times;  // the j at which the point sits low/high
};

struct NeutralizedPair {
  MobileWindow window;
  int_t i;
  int_t l_r, l_l;  // offsets of the R- and L-member of the pair
};

struct MobileReport {
  std::vector<MobilePoint> mobile;
  std::vector<MobilePoint> pseudomobile;
  std::vector<MobilePoint> antipseudomobile;
  std::vector<NeutralizedPair> neutralized_pairs;
};

MobileReport mobile_report(const ZDecomposition& zd);

// Closed-form activity count for a detected point: [l eps]_d, except the
// End-frame R / Start-frame L families which move with the l-1 offset.
int_t expected_active_times(const ZDecomposition& zd, const MobilePoint& mp);

// v over consecutive pairs of the flattened z-sequence z_r = [rd]_k q.
// spectrum_ok iff exactly one pair carries alpha(k - k^2) and the other
// k-1 pairs carry alpha k; r_star is the exceptional index.
struct ConsecutiveV {
  std::optional<int_t> r_star;
  bool spectrum_ok = false;
  std::vector<int_t> values;
};

ConsecutiveV consecutive_v_check(int_t k, int_t q);

}  // namespace lsk
