#include "lsk/structure.hpp"

#include <numeric>
#include <string>

namespace lsk {

namespace {

void check_theta_args(int_t d, int_t eps) {
  if (d < 2) throw usage_error("theta: d must be >= 2");
  if (d > (int_t{1} << 30)) throw usage_error("theta: d too large");
  if (eps <= 0 || eps >= d) throw usage_error("theta: eps must lie in (0, d)");
  if (std::gcd(d, eps) != 1) throw usage_error("theta: gcd(d, eps) must be 1");
}

}  // namespace

int theta(int_t d, int_t eps, int_t j) {
  check_theta_args(d, eps);
  const int_t jr = rep(j, d);
  const int t1 = (rep(jr * eps, d) >= d - eps) ? 1 : 0;
  const int t2 = static_cast<int>((jr + 1) * eps / d - jr * eps / d);
  if (t1 != t2) throw internal_error("theta: the two defining formulas disagree");
  return t1;
}

int_t xi_sum(int_t d, int_t eps, int_t l, int_t j) {
  check_theta_args(d, eps);
  const int_t lr = rep(l, d), jr = rep(j, d);
  return lr * eps - d * ((jr + lr) * eps / d - jr * eps / d);
}

ZDecomposition z_decompose(int_t k, int_t q) {
  ZDecomposition zd;
  zd.params = derive_params(k, q);
  if (zd.params.type == QType::Negative)
    throw usage_error("z_decompose: q is of negative type; pass [-q] (= xi q) instead");
  if (zd.params.xi < 0)
    throw usage_error("z_decompose: [q]_{k^2} lies in the upper half-range; pass [-q]");
  const int_t kk = k * k;
  const int_t qr = rep(q, kk);
  const int_t d = zd.params.d;
  zd.k = k;
  zd.q = qr;
  zd.dq = rep_prod(d, qr, kk);
  zd.psi = rep_prod(d - k, qr, kk);  // [dq - kq]_{k^2}
  zd.psibar = kk - zd.psi;
  zd.eps = (d == 1) ? 0 : rep(-k, d);

  zd.n.resize(static_cast<size_t>(d));
  zd.z.resize(static_cast<size_t>(d));
  int_t total = 0;
  for (int_t j = 0; j < d; ++j) {
    const int_t start = (d == 1) ? 0 : rep(j * zd.eps, d);
    const int_t nj = (d == 1) ? k - 1 : k / d - theta(d, zd.eps, j);
    zd.n[static_cast<size_t>(j)] = nj;
    auto& row = zd.z[static_cast<size_t>(j)];
    row.reserve(static_cast<size_t>(nj) + 1);
    for (int_t i = 0; i <= nj; ++i) row.push_back(rep_prod(start + i * d, qr, kk));
    total += nj + 1;
  }

  // The tuples must partition the k elements of Q, with step dq inside a
  // tuple and step psi between consecutive tuples.
  if (total != k) throw internal_error("z_decompose: tuples do not partition Q");
  for (int_t j = 0; j < d; ++j) {
    const auto& row = zd.z[static_cast<size_t>(j)];
    for (size_t i = 0; i + 1 < row.size(); ++i)
      if (rep(row[i + 1] - row[i], kk) != zd.dq)
        throw internal_error("z_decompose: in-tuple step != dq");
    const auto& next = zd.z[static_cast<size_t>((j + 1) % d)];
    if (rep(next.front() - row.back(), kk) != zd.psi)
      throw internal_error("z_decompose: inter-tuple step != psi");
  }
  if (d >= 2) {
    int_t tsum = 0;
    for (int_t j = 0; j < d; ++j) tsum += theta(d, zd.eps, j);
    if (tsum != zd.eps) throw internal_error("z_decompose: theta does not sum to eps");
  }
  // psi in terms of the parameters
  {
    const auto& ps = zd.params;
    const int_t e1 = (ps.c * k + ps.alpha * ps.gamma) / ps.d;
    const int_t expect = rep((ps.mu * ps.m + ps.gamma * ps.c) * k + ps.alpha - ps.gamma * e1 * k, kk);
    if (zd.psi != expect) throw internal_error("z_decompose: psi parameter identity failed");
  }
  return zd;
}

namespace {

// The j-indexed family of differences attains exactly two values u and
// u + dq mod k^2; min_q is u, max_q is u + dq.
struct Family {
  int_t min_q, max_q;
  std::vector<int_t> at_min, at_max;  // the times j attaining each value
};

template <typename Diff>
Family eval_family(const ZDecomposition& zd, Diff&& diff) {
  const int_t d = zd.params.d;
  const int_t kk = zd.k * zd.k;
  int_t v0 = -1, v1 = -1;
  std::vector<int_t> j0, j1;
  for (int_t j = 0; j < d; ++j) {
    int_t v = diff(j);
    if (v0 < 0 || v == v0) {
      v0 = v;
      j0.push_back(j);
    } else if (v1 < 0 || v == v1) {
      v1 = v;
      j1.push_back(j);
    } else {
      throw internal_error("mobile_report: difference family has > 2 values");
    }
  }
  if (v1 < 0) throw internal_error("mobile_report: difference family is constant");
  Family f;
  if (rep(v1 - v0, kk) == zd.dq) {
    f.min_q = v0;
    f.max_q = v1;
    f.at_min = std::move(j0);
    f.at_max = std::move(j1);
  } else if (rep(v0 - v1, kk) == zd.dq) {
    f.min_q = v1;
    f.max_q = v0;
    f.at_min = std::move(j1);
    f.at_max = std::move(j0);
  } else {
    throw internal_error("mobile_report: family values do not differ by dq");
  }
  return f;
}

void collect_neutralized(const std::vector<MobilePoint>& pts, MobileWindow w,
                         int_t d, int_t offset_sum, std::vector<NeutralizedPair>& out) {
  for (const auto& r : pts) {
    if (r.window != w || r.kind != MobileKind::R) continue;
    for (const auto& l : pts) {
      if (l.window != w || l.kind != MobileKind::L || l.i != r.i) continue;
      if (rep(r.l + l.l, d) == rep(offset_sum, d))
        out.push_back(NeutralizedPair{w, r.i, r.l, l.l});
    }
  }
}

}  // namespace

MobileReport mobile_report(const ZDecomposition& zd) {
  MobileReport out;
  const int_t d = zd.params.d;
  if (d == 1) return out;  // no nonzero offsets
  const int_t k = zd.k;
  const int_t kk = k * k;
  const int_t kd = k / d;

  auto z = [&](int_t j, int_t i) { return zd.z[static_cast<size_t>(rep(j, d))][static_cast<size_t>(i)]; };
  auto n_of = [&](int_t j) { return zd.n[static_cast<size_t>(rep(j, d))]; };

  auto in_window = [&](int_t value, int_t width) { return 0 < value && value < width; };

  for (int_t l = 0; l < d; ++l) {
    // interval families inside a run, i constant in j
    for (int_t i = 0; i + 2 <= kd; ++i) {
      if (l != 0) {
        // R-mobile z_0^{j+l} in <z_i^j, z_{i+1}^j]
        auto f = eval_family(zd, [&](int_t j) { return rep(z(j + l, 0) - z(j, i), kk); });
        if (in_window(f.min_q, zd.dq))
          out.mobile.push_back({MobileKind::R, MobileWindow::Start, l, i, f.at_min});
        // mirror: L-mobile z_{n_{j-l}}^{j-l} in <z_{n_j-(i+1)}^j, z_{n_j-i}^j]
        auto g = eval_family(zd, [&](int_t j) { return rep(z(j - l, n_of(j - l)) - z(j, n_of(j) - i), kk); });
        if (in_window(kk - g.max_q, zd.dq))  // -dq < max_q < 0
          out.mobile.push_back({MobileKind::L, MobileWindow::End, l, i, g.at_max});
      }
      if (l != 1) {
        // R-mobile z_0^{j+l} in <z_{n_j-(i+1)}^j, z_{n_j-i}^j]
        auto f = eval_family(zd, [&](int_t j) { return rep(z(j + l, 0) - z(j, n_of(j) - (i + 1)), kk); });
        if (in_window(f.min_q, zd.dq))
          out.mobile.push_back({MobileKind::R, MobileWindow::End, l, i, f.at_min});
        // mirror: L-mobile z_{n_{j-l}}^{j-l} in <z_i^j, z_{i+1}^j]
        auto g = eval_family(zd, [&](int_t j) { return rep(z(j - l, n_of(j - l)) - z(j, i + 1), kk); });
        if (in_window(kk - g.max_q, zd.dq))
          out.mobile.push_back({MobileKind::L, MobileWindow::Start, l, i, g.at_max});
      }
    }
    if (l != 0) {
      // psi window <z_{n_{j-1}}^{j-1}, z_0^j]
      auto f = eval_family(zd, [&](int_t j) { return rep(z(j + l, 0) - z(j - 1, n_of(j - 1)), kk); });
      if (in_window(f.min_q, zd.psi))
        out.pseudomobile.push_back({MobileKind::R, MobileWindow::Psi, l, 0, f.at_min});
      auto g = eval_family(zd, [&](int_t j) { return rep(z(j - 1 - l, n_of(j - 1 - l)) - z(j, 0), kk); });
      if (in_window(kk - g.max_q, zd.psi))
        out.pseudomobile.push_back({MobileKind::L, MobileWindow::Psi, l, 0, g.at_max});
      // psibar window <z_0^j, z_{n_{j-1}}^{j-1}]
      auto fb = eval_family(zd, [&](int_t j) { return rep(z(j + l, 0) - z(j, 0), kk); });
      if (in_window(fb.min_q, zd.psibar))
        out.antipseudomobile.push_back({MobileKind::R, MobileWindow::PsiBar, l, 0, fb.at_min});
      auto gb = eval_family(zd, [&](int_t j) { return rep(z(j - 1 - l, n_of(j - 1 - l)) - z(j - 1, n_of(j - 1)), kk); });
      if (in_window(kk - gb.max_q, zd.psibar))
        out.antipseudomobile.push_back({MobileKind::L, MobileWindow::PsiBar, l, 0, gb.at_max});
    }
  }

  // neutralized pairs: offsets sum to 1 for mobile points, to 0 for the
  // psi / psibar windows
  collect_neutralized(out.mobile, MobileWindow::Start, d, 1, out.neutralized_pairs);
  collect_neutralized(out.mobile, MobileWindow::End, d, 1, out.neutralized_pairs);
  collect_neutralized(out.pseudomobile, MobileWindow::Psi, d, 0, out.neutralized_pairs);
  collect_neutralized(out.antipseudomobile, MobileWindow::PsiBar, d, 0, out.neutralized_pairs);
  return out;
}

int_t expected_active_times(const ZDecomposition& zd, const MobilePoint& mp) {
  bool shifted = (mp.window == MobileWindow::Start && mp.kind == MobileKind::L) ||
                 (mp.window == MobileWindow::End && mp.kind == MobileKind::R);
  return rep((shifted ? mp.l - 1 : mp.l) * zd.eps, zd.params.d);
}

ConsecutiveV consecutive_v_check(int_t k, int_t q) {
  ParamSet ps = derive_params(k, q);
  if (ps.type == QType::Negative || ps.xi < 0)
    throw usage_error("consecutive_v_check: q must satisfy q = xi q; pass [-q]");
  const int_t kk = k * k;
  const int_t qr = rep(q, kk);
  Triple t = Triple::checked(kk, qr, k);
  VContext vc(t);

  std::vector<int_t> zs(static_cast<size_t>(k));
  for (int_t r = 0; r < k; ++r) zs[static_cast<size_t>(r)] = rep_prod(rep(r * ps.d, k), qr, kk);

  ConsecutiveV out;
  out.values.resize(static_cast<size_t>(k));
  const int_t lo = ps.alpha * (k - kk), hi = ps.alpha * k;
  int_t lo_count = 0, hi_count = 0;
  wide_t sum = 0;
  for (int_t r = 0; r < k; ++r) {
    int_t v = vc.v(zs[static_cast<size_t>(r)], zs[static_cast<size_t>(rep(r + 1, k))]);
    out.values[static_cast<size_t>(r)] = v;
    sum += v;
    if (v == lo) {
      ++lo_count;
      out.r_star = r;
    } else if (v == hi) {
      ++hi_count;
    }
  }
  if (sum != 0) throw internal_error("consecutive_v_check: values do not telescope to 0");
  out.spectrum_ok = (lo_count == 1 && hi_count == k - 1);
  if (!out.spectrum_ok) out.r_star.reset();
  return out;
}

}  // namespace lsk
