// Throughput comparison: the O(k log k) Gbar kernel against the two O(p)
// reference routes, and the k^2 sweep serial vs OpenMP.

#include <chrono>
#include <cstdio>
#include <numeric>
#include <thread>
#include <vector>

#include "lsk/invariants.hpp"
#include "lsk/sweep.hpp"

using namespace lsk;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// All units q mod k^2 in ascending order.
std::vector<int_t> units(int_t kk) {
  std::vector<int_t> out;
  for (int_t q = 1; q < kk; ++q)
    if (std::gcd(q, kk) == 1) out.push_back(q);
  return out;
}

void bench_gbar_modes(int_t k) {
  const int_t kk = k * k;
  auto qs = units(kk);
  if (qs.size() > 400) qs.resize(400);

  std::vector<int_t> scratch;
  int_t sink = 0;

  auto t0 = std::chrono::steady_clock::now();
  for (int_t q : qs) sink += q_potential(Triple{kk, q, k}, scratch).max_abs_v;
  double fast = seconds_since(t0) / static_cast<double>(qs.size());

  t0 = std::chrono::steady_clock::now();
  for (int_t q : qs) sink += gbar(Triple{kk, q, k}, GbarMode::FullDomain).gbar;
  double full = seconds_since(t0) / static_cast<double>(qs.size());

  t0 = std::chrono::steady_clock::now();
  for (int_t q : qs) sink += gbar(Triple{kk, q, k}, GbarMode::Oracle).gbar;
  double oracle = seconds_since(t0) / static_cast<double>(qs.size());

  // keep the accumulator alive
  asm volatile("" : : "r"(sink));

  std::printf("  k=%5lld (p=%8lld)  fast %9.0f ns  full %10.0f ns  oracle %10.0f ns  (x%.0f)\n",
              static_cast<long long>(k), static_cast<long long>(kk), fast * 1e9, full * 1e9,
              oracle * 1e9, oracle / fast);
}

void bench_sweep(int_t kmax) {
  SweepConfig cfg;
  cfg.k_min = 2;
  cfg.k_max = kmax;

  cfg.workers = 1;
  auto t0 = std::chrono::steady_clock::now();
  auto serial = verify_k2(cfg);
  double ts = seconds_since(t0);

  cfg.workers = 0;  // all cores
  t0 = std::chrono::steady_clock::now();
  auto parallel = verify_k2(cfg);
  double tp = seconds_since(t0);

  bool same = serial.records.size() == parallel.records.size();
  std::printf("  verify-k2 k=[2,%lld]: serial %.3fs, %u threads %.3fs, speedup %.2fx, identical=%s\n",
              static_cast<long long>(kmax), ts, std::thread::hardware_concurrency(), tp, ts / tp,
              same ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
  int_t kmax = 80;
  if (argc > 1) kmax = std::atoll(argv[1]);

  std::printf("per-triple Gbar at p = k^2 (ns/triple):\n");
  for (int_t k : {64, 128, 256, 512, 1024}) bench_gbar_modes(k);

  std::printf("sweep scaling:\n");
  bench_sweep(kmax);
  return 0;
}
