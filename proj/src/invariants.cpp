#include "lsk/invariants.hpp"

#include <algorithm>
#include <string>

namespace lsk {

Triple Triple::checked(int_t p, int_t q, int_t k) {
  if (p < 2) throw usage_error("triple: p must be >= 2, got " + std::to_string(p));
  if (p >= max_modulus)
    throw usage_error(
        "triple: p exceeds the fixed-width guard (rebuild with "
        "LSK_ARBITRARY_PRECISION for larger moduli)");
  int_t qr = rep(q, p);
  int_t g = std::gcd(qr, p);
  if (g != 1) throw not_a_unit_error(q, p, g);
  int_t kr = rep(k, p);
  if (kr == 0) throw usage_error("triple: k must be nonzero mod p");
  return Triple{p, qr, kr};
}

QPotential q_potential(const Triple& t, std::vector<int_t>& scratch) {
  const int_t p = t.p, kappa = t.k, q = t.q;
  scratch.clear();
  scratch.reserve(static_cast<size_t>(kappa));
  int_t r = 0;
  for (int_t a = 0; a < kappa; ++a) {
    scratch.push_back(r);
    r += q;
    if (r >= p) r -= p;
  }
  std::sort(scratch.begin(), scratch.end());

  // Prefix potential over the sorted residues t_0 < ... < t_{kappa-1}:
  // h(j) = t_j * kappa - (j+1) * p; v(t_a, t_b) = h(b) - h(a) for all a, b.
  wide_t mx = 0, mn = 0;
  int_t cmx = 0, cmn = 0;
  size_t imx = 0, imn = 0;
  bool first = true;
  for (size_t j = 0; j < scratch.size(); ++j) {
    wide_t h = wide_t(scratch[j]) * kappa - wide_t(static_cast<int_t>(j) + 1) * p;
    if (first) {
      mx = mn = h;
      cmx = cmn = 1;
      imx = imn = j;
      first = false;
      continue;
    }
    if (h > mx) {
      mx = h;
      cmx = 1;
      imx = j;
    } else if (h == mx) {
      ++cmx;
    }
    if (h < mn) {
      mn = h;
      cmn = 1;
      imn = j;
    } else if (h == mn) {
      ++cmn;
    }
  }
  QPotential out;
  out.max_abs_v = checked_int(mx - mn);
  out.argmax_count = checked_int(wide_t(cmx) * wide_t(cmn));
  out.max_pair = {scratch[imn], scratch[imx]};
  return out;
}

VContext::VContext(const Triple& t) : t_(t) {
  q_.reserve(static_cast<size_t>(t.k));
  int_t r = 0;
  for (int_t a = 0; a < t.k; ++a) {
    q_.push_back(r);
    r += t.q;
    if (r >= t.p) r -= t.p;
  }
  std::sort(q_.begin(), q_.end());
}

int_t VContext::count_q(int_t a, int_t b) const {
  if (a > b) throw internal_error("count_q: empty orientation");
  const int_t p = t_.p;
  int_t len = b - a;
  int_t full = len / p;
  int_t rest = len % p;
  wide_t cnt = wide_t(full) * wide_t(t_.k);
  if (rest > 0) {
    // residues in the circular window (ra, ra + rest]
    int_t ra = rep(a, p);
    auto upto = [&](int_t x) {  // #{u in Q : u <= x}
      return static_cast<int_t>(std::upper_bound(q_.begin(), q_.end(), x) - q_.begin());
    };
    int_t hi = ra + rest;
    if (hi < p) {
      cnt += upto(hi) - upto(ra);
    } else {
      cnt += (t_.k - upto(ra)) + upto(hi - p);
    }
  }
  return checked_int(cnt);
}

int_t VContext::v_lifted(int_t a, int_t b) const {
  if (a == b) return 0;
  if (a > b) return -v_lifted(b, a);
  wide_t val = wide_t(b - a) * wide_t(t_.k) - wide_t(count_q(a, b)) * wide_t(t_.p);
  return checked_int(val);
}

int_t VContext::v(int_t x, int_t y) const {
  int_t delta = rep(y - x, t_.p);
  if (delta == 0) return 0;
  int_t a = rep(x, t_.p);
  return v_lifted(a, a + delta);
}

int_t v_pair(const Triple& t, int_t x, int_t y) {
  return VContext(t).v(x, y);
}

FProfile f_profile(const Triple& t) {
  const int_t p = t.p, kappa = t.k;
  if (p > (int_t{1} << 25))
    throw usage_error("f_profile materializes p+1 values; use big_g for large p");
  FProfile out;
  out.values.resize(static_cast<size_t>(p) + 1);
  out.values[0] = 0;
  int_t f = 0, mx = 0, mn = 0;
  int_t r = 0;  // [i q]_p
  for (int_t i = 0; i < p; ++i) {
    f += (r < kappa) ? (kappa - p) : kappa;
    out.values[static_cast<size_t>(i) + 1] = f;
    if (i + 1 < p) {
      mx = std::max(mx, f);
      mn = std::min(mn, f);
    }
    r += t.q;
    if (r >= p) r -= p;
  }
  if (f != 0) throw internal_error("f profile does not close: f(p) != f(0)");
  out.degree = mx - mn;
  return out;
}

int_t big_g(const Triple& t) {
  const int_t p = t.p, kappa = t.k;
  wide_t f = 0, mx = 0, mn = 0;
  int_t r = 0;  // [i q]_p
  for (int_t i = 0; i < p; ++i) {
    f += (r < kappa) ? (kappa - p) : kappa;
    if (i + 1 < p) {
      if (f > mx) mx = f;
      if (f < mn) mn = f;
    }
    r += t.q;
    if (r >= p) r -= p;
  }
  if (f != 0) throw internal_error("f profile does not close: f(p) != f(0)");
  return checked_int(mx - mn);
}

int_t genus(const Triple& t) {
  int_t g = big_g(t);
  int_t d = g - t.p + 1;
  if (d < 0 || d % 2 != 0)
    throw usage_error("triple (" + std::to_string(t.p) + "," + std::to_string(t.q) +
                      "," + std::to_string(t.k) + ") has no integer genus: degree " +
                      std::to_string(g) + " vs p-1 = " + std::to_string(t.p - 1));
  return d / 2;
}

namespace {

// Direct maximization of v over all of Z/p x Z/p via the prefix potential
// H(t) = t*kappa - #(Q~ in (0,t])*p; Gbar = max H - min H over a period.
int_t gbar_full_domain(const Triple& t) {
  const int_t p = t.p, kappa = t.k;
  const int_t qi = inv(t.q, p);
  wide_t h = 0, mx = 0, mn = 0;
  int_t s = 0;  // [tt * q^-1]_p, membership: tt in Q <=> s < kappa
  for (int_t tt = 1; tt < p; ++tt) {
    s += qi;
    if (s >= p) s -= p;
    h += kappa;
    if (s < kappa) h -= p;
    if (h > mx) mx = h;
    if (h < mn) mn = h;
  }
  return checked_int(mx - mn);
}

}  // namespace

GbarResult gbar(const Triple& t, GbarMode mode) {
  std::vector<int_t> scratch;
  QPotential qp = q_potential(t, scratch);
  int_t value = 0;
  switch (mode) {
    case GbarMode::Fast:
      value = checked_int(wide_t(qp.max_abs_v) + t.p - t.k);
      break;
    case GbarMode::Oracle:
      // Gbar(p, q, k) = G(p, q^-1, k)
      value = big_g(Triple::checked(t.p, inv(t.q, t.p), t.k));
      break;
    case GbarMode::FullDomain:
      value = gbar_full_domain(t);
      break;
  }
  return GbarResult{value, qp.argmax_count, qp.max_pair};
}

int_t q_max_abs_v(const Triple& t) {
  std::vector<int_t> scratch;
  return q_potential(t, scratch).max_abs_v;
}

bool is_genus_minimizing(const Triple& t) {
  // max |v| over Q x Q < p + [k]_p, equivalent to Gbar < 2p
  return q_max_abs_v(t) < t.p + t.k;
}

}  // namespace lsk
