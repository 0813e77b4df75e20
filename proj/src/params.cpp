#include "lsk/params.hpp"

#include <string>

namespace lsk {

const char* q_type_name(QType t) {
  switch (t) {
    case QType::Type0: return "type0";
    case QType::Positive: return "positive";
    case QType::Negative: return "negative";
  }
  return "?";
}

namespace {

void validate(const ParamSet& ps, int_t k, int_t qr, int_t kk) {
  const int_t dxq = rep_prod(ps.d, ps.xi > 0 ? qr : kk - qr, kk);
  // half-range
  if (2 * dxq >= kk) throw internal_error("params: [d xi q] not in the lower half-range");
  // [d xi q]_{k^2} = (mu m + gamma c) k + alpha
  if (dxq != (ps.mu * ps.m + ps.gamma * ps.c) * k + ps.alpha)
    throw internal_error("params: [d xi q] != (mu m + gamma c)k + alpha");
  // c = 0 <=> d = 1
  if ((ps.c == 0) != (ps.d == 1)) throw internal_error("params: c = 0 <=> d = 1 violated");
  // d divides c k + alpha gamma
  int_t num = ps.c * k + ps.alpha * ps.gamma;
  if (num % ps.d != 0) throw internal_error("params: d does not divide c k + alpha gamma");
  // reconstruction: xi q = alpha gamma mu ((c k + alpha gamma)/d)(m k + alpha mu)
  int_t e1 = num / ps.d;
  int_t e2 = ps.m * k + ps.alpha * ps.mu;
  int_t rhs = rep_prod(ps.alpha * ps.gamma * ps.mu * e1, e2, kk);
  int_t lhs = ps.xi > 0 ? qr : rep(-qr, kk);
  if (lhs != rhs) throw internal_error("params: reconstruction identity failed");
}

}  // namespace

ParamSet derive_params(int_t k, int_t q) {
  if (k <= 2) throw usage_error("derive_params: k must be > 2, got " + std::to_string(k));
  const int_t kk = square_modulus(k);
  const int_t qr = rep(q, kk);
  int_t g = std::gcd(qr, kk);
  if (g != 1) throw not_a_unit_error(q, kk, g);

  const int_t qk_inv = inv(qr, k);
  const int_t d = std::min(qk_inv, rep(-qk_inv, k));
  const int_t dq = rep_prod(d, qr, kk);
  if (2 * dq == kk) throw internal_error("params: [dq] = k^2/2 for a unit");
  const int xi = (2 * dq < kk) ? +1 : -1;
  const int_t dxq = (xi > 0) ? dq : kk - dq;  // [d xi q]_{k^2}
  const int alpha = sigma(k, dq) * xi;

  int_t c = 0;
  int gamma = alpha;  // sigma_1 = +1 when d = 1
  if (d > 1) {
    const int_t ki = inv(k, d);
    c = std::min(ki, rep(-ki, d));
    gamma = sigma(d, -c * k) * alpha;
  }

  // m' = [(d xi q - alpha)/k]_k - gamma c, with the canonical representative
  // of the quotient taken first.
  if ((dxq - alpha) % k != 0) throw internal_error("params: d xi q != alpha mod k");
  const int_t mprime = rep((dxq - alpha) / k, k) - gamma * c;
  const int mu = (mprime >= 0) ? +1 : -1;
  const int_t m = rep(mu * mprime, k);

  ParamSet ps;
  ps.d = d;
  ps.xi = xi;
  ps.alpha = alpha;
  ps.c = c;
  ps.gamma = gamma;
  ps.mu = mu;
  ps.m = m;
  ps.type = (c == 0) ? QType::Type0 : (xi > 0 ? QType::Positive : QType::Negative);
  validate(ps, k, qr, kk);
  return ps;
}

}  // namespace lsk
