#pragma once

// Base-2 discrete logarithm in F_p^* by alternately stripping powers of two
// and negating, valid when 2 is a primitive root of p.
//
// With b odd and b != 1, p - b is even; dividing it by 2^k adds k to the
// running exponent and the negation adds log(-1) = (p-1)/2. The loop ends when
// b reaches 1.

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dlog2/arith.hpp"
#include "dlog2/primes.hpp"

namespace dlog2 {

enum class StepKind { kHalve, kNegate };

const char* to_string(StepKind kind);

/// One pass of the loop. k is zero for a negate step.
struct TraceStep {
  StepKind kind;
  unsigned k;
  u64 b_before;
  u64 b_after;
  u64 out_after;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct SolveReport {
  Modulus p;
  Residue b;
  Exponent result;
  std::optional<std::vector<TraceStep>> trace;
  u64 iterations;
  std::chrono::nanoseconds elapsed;
};

struct SolveOptions {
  bool record_trace = false;
  /// Loop passes allowed before giving up; 0 selects 2(p-1) + 2.
  u64 iteration_guard = 0;
  /// Abandon the solve (kDeadline) once this time passes. Checked every
  /// 2^20 passes.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// log_2(b) in F_p^*.
///
/// Throws kNotPrimitive if cp does not certify 2 as a generator, kBadInput for
/// b == 0, kModulusMismatch if b is reduced mod another prime, and
/// kIterationGuard if the loop runs past the guard, kDeadline if it runs past
/// options.deadline.
SolveReport solve_halving_negation(const CertifiedPrime& cp, const Residue& b,
                                   SolveOptions options = {});

/// The loop alone, for callers that already hold a certified modulus. Returns
/// log_2(b) and stores the pass count. No trace, no precondition checks beyond
/// the guard.
u64 halving_log2(u64 p, u64 b, u64* iterations = nullptr);

/// (p - 1) / 2, the log of -1 for every generator.
Exponent log_minus_one(const CertifiedPrime& cp);

struct WorstCase {
  Residue b;
  Exponent expected;
};

/// b = (p - 1) / 2 with log_2(b) = (p - 3) / 2. Requires p >= 5.
WorstCase worst_case_input(const CertifiedPrime& cp);

struct TraceViolation {
  /// Index into the trace, or npos for report-level violations.
  std::size_t step;
  std::string message;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Replays the recorded trace and checks every step's invariants, the
/// before/after chaining from b down to 1, that each negate lands on an even
/// value, that the last running exponent equals the result, and that
/// 2^result == b. An empty list means the report is consistent. A report
/// without a trace yields one violation.
std::vector<TraceViolation> validate_trace(const SolveReport& report);

/// Pass bound from the convergence argument: at most 2 * result + 1.
constexpr bool within_iteration_bound(u64 iterations, u64 result) {
  return iterations <= 2 * result + 1;
}

}  // namespace dlog2
