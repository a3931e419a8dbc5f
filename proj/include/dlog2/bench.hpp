#pragma once

// Cross-validation sweeps and the benchmark table behind the CLI.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dlog2/arith.hpp"
#include "dlog2/halving.hpp"
#include "dlog2/primes.hpp"

namespace dlog2 {

enum class Algorithm { kBrute, kBsgs, kHalving };

const char* to_string(Algorithm algorithm);

struct BenchRecord {
  u64 p;
  u64 b;
  Algorithm algorithm;
  u64 result;
  /// Loop passes for halving, group multiplications for the oracles.
  u64 iterations;
  std::int64_t elapsed_nanos;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

enum class BenchMode { kAll, kWorst, kSample };

struct BenchConfig {
  std::vector<u64> primes;  // explicit set; certified before running
  BenchMode mode = BenchMode::kWorst;
  u64 samples = 16;         // per prime, sample mode
  u64 seed = 1;
  /// Brute force rows are emitted only for p at or below this bound.
  u64 brute_max = 10'000'000;
  unsigned jobs = 1;
};

/// Runs every configured instance through each algorithm. Records are sorted by
/// (p, b, algorithm). Throws kNotPrime / kNotPrimitive for an uncertified
/// prime, and kVerification when algorithms disagree or a worst-case result is
/// not (p - 3) / 2.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

inline constexpr const char* kBenchHeader =
    "p,b,algorithm,result,iterations,elapsed_nanos";

/// Header line plus one LF-terminated line per record.
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

struct VerifyConfig {
  u64 p_max = 2000;
  /// Largest p_max accepted.
  u64 budget = 2000;
  unsigned jobs = 1;
};

struct VerifySummary {
  u64 primes_checked = 0;
  u64 instances_checked = 0;
  u64 oracle_mismatches = 0;
  u64 trace_violations = 0;
  u64 lemma_failures = 0;
  u64 bound_violations = 0;
  bool golden_checked = false;
  bool golden_ok = true;
  std::vector<u64> primes;
  /// First few failure descriptions, in (p, b) order.
  std::vector<std::string> failures;

  u64 total_failures() const {
    return oracle_mismatches + trace_violations + lemma_failures +
           bound_violations + (golden_ok ? 0 : 1);
  }
};

/// For each certified p <= p_max and every b: halving agrees with brute force,
/// the trace validates, the negation lemma holds for (2, b), and the pass count
/// respects the bound. When 37 is in range the F_37 reference trace is
/// compared step for step. Throws kBudgetExceeded past config.budget and
/// kBadInput for p_max < 3.
VerifySummary run_verify(const VerifyConfig& config);

void write_verify_summary(std::ostream& out, const VerifySummary& summary);

/// The six-step trace of log_2(3) = 26 in F_37.
std::vector<TraceStep> reference_trace_f37();

}  // namespace dlog2
