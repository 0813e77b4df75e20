#pragma once

// Sweep orchestration: the verification runs over ranges of k, parallel
// over whole k-slices with a deterministic ordered reduction, plus the
// jsonl/csv record writers.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lsk/classify.hpp"

namespace lsk {

struct SweepConfig {
  int_t k_min = 2;
  int_t k_max = 2;
  // Empty: one period k^2 < p <= 2k^2 per k.  Otherwise the explicit list.
  std::vector<int_t> p_list;
  int workers = 0;  // <= 0: use all hardware threads
};

struct VerificationRecord {
  int_t k;
  std::optional<int_t> p;  // set by the theorem/reduction sweeps
  std::optional<int_t> q;  // set by the k^2 sweep
  int_t gbar;
  bool gm;
  std::vector<FamilyMatch> families;
  bool consistent;
  std::int64_t elapsed_ns = 0;  // not serialized: output must be deterministic
};

struct SweepSummary {
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;  // gcd(p, k) > 1 or p outside the valid range
  std::vector<std::string> mismatches;
  std::vector<VerificationRecord> records;  // sorted by (k, p/q)

  bool ok() const { return mismatches.empty(); }
};

// Brute-force genus-minimizing set vs the closed forms, every unit q mod
// k^2 for each k in range.
SweepSummary verify_k2(const SweepConfig& cfg);

// conjecture_check over every p in the window with gcd(p, k) = 1.
SweepSummary verify_theorem(const SweepConfig& cfg);

// Genus-minimizing status of (p, k^-2, k) vs its p = k^2 reduction.
SweepSummary verify_reduction(const SweepConfig& cfg);

// Consecutive-v spectrum and mobile-point activity counts for every
// positive-type genus-minimizing q per k.  The structural propositions
// assume k > 100: below that the records are emitted but disagreements do
// not fail the run.
SweepSummary verify_structure(const SweepConfig& cfg);

void write_jsonl(std::ostream& os, const std::vector<VerificationRecord>& recs);
void write_csv(std::ostream& os, const std::vector<VerificationRecord>& recs);

}  // namespace lsk
