#include "dlog2/halving.hpp"

#include <string>

namespace dlog2 {

const char* to_string(StepKind kind) {
  return kind == StepKind::kHalve ? "halve" : "negate";
}

namespace {

constexpr u64 kDeadlineMask = (u64{1} << 20) - 1;

u64 default_guard(u64 p) { return 2 * (p - 1) + 2; }

[[noreturn]] void guard_exceeded(u64 p, u64 b, u64 guard) {
  throw Error(ErrorCode::kIterationGuard,
              "log_2(" + std::to_string(b) + ") mod " + std::to_string(p) +
                  " did not converge within " + std::to_string(guard) +
                  " passes");
}

}  // namespace

u64 halving_log2(u64 p, u64 b, u64* iterations) {
  const u64 order = p - 1;
  const u64 half = order / 2;
  const u64 guard = default_guard(p);
  u64 out = 0;
  u64 passes = 0;
  while (b != 1) {
    if (++passes > guard) guard_exceeded(p, b, guard);
    const auto [k, odd] = two_adic_valuation(b);
    if (k == 0) {
      b = p - b;
      out += half;
    } else {
      b = odd;
      out += k;
    }
    if (out >= order) out -= order;
  }
  if (iterations != nullptr) *iterations = passes;
  return out;
}

SolveReport solve_halving_negation(const CertifiedPrime& cp, const Residue& b,
                                   SolveOptions options) {
  if (!cp.two_is_primitive) {
    throw Error(ErrorCode::kNotPrimitive,
                "2 is not a primitive root mod " + std::to_string(cp.value()) +
                    "; the halving loop is not guaranteed to terminate");
  }
  if (b.modulus() != cp.p) {
    throw Error(ErrorCode::kModulusMismatch,
                to_string(b) + " is not a residue mod " +
                    std::to_string(cp.value()));
  }
  if (b.is_zero()) {
    throw Error(ErrorCode::kBadInput, "0 is not an element of F_" +
                                          std::to_string(cp.value()) + "^*");
  }

  const auto start = std::chrono::steady_clock::now();
  const u64 p = cp.value();
  const u64 guard =
      options.iteration_guard != 0 ? options.iteration_guard : default_guard(p);
  const u64 half = (p - 1) / 2;

  std::optional<std::vector<TraceStep>> trace;
  if (options.record_trace) trace.emplace();

  const u64 order = p - 1;
  u64 out = 0;
  u64 current = b.value();
  u64 passes = 0;
  while (current != 1) {
    if (++passes > guard) guard_exceeded(p, b.value(), guard);
    if (options.deadline && (passes & kDeadlineMask) == 0 &&
        std::chrono::steady_clock::now() > *options.deadline) {
      throw Error(ErrorCode::kDeadline,
                  "log_2(" + std::to_string(b.value()) + ") mod " +
                      std::to_string(p) + " abandoned at the deadline after " +
                      std::to_string(passes) + " passes");
    }
    const auto [k, odd] = two_adic_valuation(current);
    const u64 before = current;
    if (k == 0) {
      current = p - current;
      out += half;
    } else {
      current = odd;
      out += k;
    }
    if (out >= order) out -= order;
    if (trace) {
      trace->push_back({k == 0 ? StepKind::kNegate : StepKind::kHalve, k,
                        before, current, out});
    }
  }

  const auto elapsed = std::chrono::steady_clock::now() - start;
  return SolveReport{cp.p, b, Exponent(out, order), std::move(trace), passes,
                     std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed)};
}

Exponent log_minus_one(const CertifiedPrime& cp) {
  return Exponent((cp.value() - 1) / 2, cp.value() - 1);
}

WorstCase worst_case_input(const CertifiedPrime& cp) {
  const u64 p = cp.value();
  if (p < 5) {
    throw Error(ErrorCode::kBadInput, "worst-case input needs p >= 5");
  }
  return WorstCase{Residue((p - 1) / 2, cp.p), Exponent((p - 3) / 2, p - 1)};
}

std::vector<TraceViolation> validate_trace(const SolveReport& report) {
  std::vector<TraceViolation> violations;
  auto flag = [&violations](std::size_t step, std::string message) {
    violations.push_back({step, std::move(message)});
  };

  const u64 p = report.p.value();
  const u64 order = p - 1;
  const u64 half = order / 2;

  if (pow_mod_u64(2, report.result.value(), p) != report.b.value()) {
    flag(TraceViolation::npos,
         "2^" + std::to_string(report.result.value()) + " mod " +
             std::to_string(p) + " != " + std::to_string(report.b.value()));
  }
  if (!report.trace) {
    flag(TraceViolation::npos, "no trace recorded");
    return violations;
  }

  const auto& steps = *report.trace;
  u64 b = report.b.value();
  u64 out = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const TraceStep& s = steps[i];
    const std::string at = "step " + std::to_string(i) + ": ";
    if (s.b_before != b) {
      flag(i, at + "b_before " + std::to_string(s.b_before) +
                  " does not chain from " + std::to_string(b));
    }
    if (s.b_before == 0 || s.b_before >= p) {
      flag(i, at + "b_before out of range");
      return violations;
    }
    if (s.b_before == 1) {
      flag(i, at + "loop continued after reaching 1");
    }
    if (s.kind == StepKind::kNegate) {
      if (s.b_before % 2 == 0) flag(i, at + "negate applied to an even value");
      if (s.k != 0) flag(i, at + "negate step carries k != 0");
      if (s.b_after != p - s.b_before) {
        flag(i, at + "negate result is not p - b_before");
      }
      if (s.b_after % 2 != 0) {
        flag(i, at + "negate produced an odd value " +
                    std::to_string(s.b_after));
      }
      if (i > 0 && steps[i - 1].kind == StepKind::kNegate) {
        flag(i, at + "two consecutive negate steps");
      }
      out = (out + half) % order;
    } else {
      if (s.b_before % 2 != 0) flag(i, at + "halve applied to an odd value");
      if (s.k == 0 || s.k >= 64 ||
          (s.b_before >> s.k) << s.k != s.b_before) {
        flag(i, at + "2^" + std::to_string(s.k) + " does not divide " +
                    std::to_string(s.b_before));
      } else if (s.b_after != (s.b_before >> s.k)) {
        flag(i, at + "halve result is not b_before / 2^k");
      }
      if (s.b_after % 2 == 0) flag(i, at + "halve left an even value");
      out = (out + s.k) % order;
    }
    if (s.out_after != out) {
      flag(i, at + "running exponent " + std::to_string(s.out_after) +
                  ", expected " + std::to_string(out));
    }
    b = s.b_after;
  }
  if (b != 1) {
    flag(TraceViolation::npos,
         "trace ends at " + std::to_string(b) + " instead of 1");
  }
  if (out != report.result.value()) {
    flag(TraceViolation::npos, "final running exponent " + std::to_string(out) +
                                   " != result " +
                                   std::to_string(report.result.value()));
  }
  if (report.iterations != steps.size()) {
    flag(TraceViolation::npos, "iteration count " +
                                   std::to_string(report.iterations) +
                                   " != trace length " +
                                   std::to_string(steps.size()));
  }
  return violations;
}

}  // namespace dlog2
