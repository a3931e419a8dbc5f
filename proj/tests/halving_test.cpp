#include <random>

#include "doctest.h"
#include "dlog2/halving.hpp"
#include "reference.hpp"

using namespace dlog2;

namespace {

SolveReport solve(const CertifiedPrime& cp, u64 b, bool trace = true) {
  return solve_halving_negation(cp, Residue(b, cp.p), {.record_trace = trace});
}

// Claims certification without checking it, to reach the solver's guards.
CertifiedPrime forged(u64 p) {
  CertifiedPrime cp = certify(p);
  cp.two_is_primitive = true;
  return cp;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kBadInput;
}

}  // namespace

TEST_CASE("F_37: log_2(3) = 26 with the reference trace") {
  const CertifiedPrime cp = certify_artin2(37);
  const SolveReport r = solve(cp, 3);
  CHECK(r.result.value() == 26);
  CHECK(r.iterations == 6);
  REQUIRE(r.trace.has_value());
  const std::vector<TraceStep> expected = {
      {StepKind::kNegate, 0, 3, 34, 18}, {StepKind::kHalve, 1, 34, 17, 19},
      {StepKind::kNegate, 0, 17, 20, 1}, {StepKind::kHalve, 2, 20, 5, 3},
      {StepKind::kNegate, 0, 5, 32, 21}, {StepKind::kHalve, 5, 32, 1, 26},
  };
  CHECK(*r.trace == expected);
  CHECK(validate_trace(r).empty());
}

TEST_CASE("solve examples") {
  const CertifiedPrime p37 = certify_artin2(37);
  const CertifiedPrime p11 = certify_artin2(11);

  const SolveReport one = solve(p37, 1);
  CHECK(one.result.value() == 0);
  CHECK(one.trace->empty());
  CHECK(one.iterations == 0);

  const SolveReport minus_one = solve(p37, 36);
  CHECK(minus_one.result.value() == 18);
  // p - 1 is even, so the loop halves first; only the result is fixed.
  CHECK(within_iteration_bound(minus_one.iterations, 18));

  CHECK(solve(p11, 3).result.value() == 8);
  CHECK(solve(p11, 7).result.value() == 7);
  CHECK(solve(p37, 18).result.value() == 17);
  CHECK(solve(p37, 3, false).trace == std::nullopt);
}

TEST_CASE("solve errors") {
  const CertifiedPrime p37 = certify_artin2(37);
  CHECK(code_of([&] { solve(p37, 0); }) == ErrorCode::kBadInput);
  CHECK(code_of([&] { solve(certify(7), 3); }) == ErrorCode::kNotPrimitive);
  CHECK(code_of([&] {
          solve_halving_negation(p37, Residue(3, Modulus(11)));
        }) == ErrorCode::kModulusMismatch);
}

TEST_CASE("iteration guard stops a forged certificate") {
  // 2 has order 8 mod 17; 3 -> 14 -> 7 -> 10 -> 5 -> 12 -> 3 cycles.
  const CertifiedPrime fake = forged(17);
  CHECK(code_of([&] { solve(fake, 3); }) == ErrorCode::kIterationGuard);
  CHECK(code_of([&] { halving_log2(17, 3); }) == ErrorCode::kIterationGuard);

  const CertifiedPrime p37 = certify_artin2(37);
  CHECK(code_of([&] {
          solve_halving_negation(p37, Residue(3, p37.p),
                                 {.iteration_guard = 5});
        }) == ErrorCode::kIterationGuard);
  CHECK_NOTHROW(solve_halving_negation(p37, Residue(3, p37.p),
                                       {.iteration_guard = 6}));
}

TEST_CASE("log_minus_one and worst_case_input") {
  CHECK(log_minus_one(certify(37)).value() == 18);
  CHECK(log_minus_one(certify(3)).value() == 1);
  CHECK(log_minus_one(certify(11)).value() == 5);

  const WorstCase w37 = worst_case_input(certify(37));
  CHECK(w37.b.value() == 18);
  CHECK(w37.expected.value() == 17);
  CHECK(worst_case_input(certify(5)).b.value() == 2);
  CHECK(worst_case_input(certify(5)).expected.value() == 1);
  CHECK(worst_case_input(certify(11)).b.value() == 5);
  CHECK(worst_case_input(certify(11)).expected.value() == 4);
  CHECK_THROWS_AS(worst_case_input(certify(3)), Error);
}

TEST_CASE("validate_trace flags a perturbed running exponent") {
  const CertifiedPrime cp = certify_artin2(37);
  for (std::size_t i = 0; i < 6; ++i) {
    SolveReport r = solve(cp, 3);
    r.trace->at(i).out_after += 1;
    const auto v = validate_trace(r);
    REQUIRE(v.size() == 1);
    CHECK(v[0].step == i);
  }
}

TEST_CASE("validate_trace catches structural damage") {
  const CertifiedPrime cp = certify_artin2(37);
  {
    SolveReport r = solve(cp, 3);
    r.trace->pop_back();
    CHECK_FALSE(validate_trace(r).empty());
  }
  {
    SolveReport r = solve(cp, 3);
    r.trace->at(2).b_after = 21;  // 37 - 17 = 20
    CHECK_FALSE(validate_trace(r).empty());
  }
  {
    SolveReport r = solve(cp, 3);
    r.result = Exponent(25, 36);
    CHECK_FALSE(validate_trace(r).empty());
  }
  {
    SolveReport r = solve(cp, 3, false);
    const auto v = validate_trace(r);
    REQUIRE(v.size() == 1);
    CHECK(v[0].step == TraceViolation::npos);
  }
}

TEST_CASE("every trace in F_11 validates") {
  const CertifiedPrime cp = certify_artin2(11);
  for (u64 b = 1; b < 11; ++b) {
    CHECK(validate_trace(solve(cp, b)).empty());
  }
}

TEST_CASE("solver matches walked powers of 2 for every certified p < 2000") {
  for (u64 p : reference::artin2_below(2000)) {
    const CertifiedPrime cp = certify_artin2(p);
    const auto logs = reference::log_table(2, p);
    for (u64 b = 1; b < p; ++b) {
      const SolveReport r = solve(cp, b);
      REQUIRE(r.result.value() == logs[b]);
      REQUIRE(within_iteration_bound(r.iterations, r.result.value()));
      u64 passes = 0;
      REQUIRE(halving_log2(p, b, &passes) == logs[b]);
      REQUIRE(passes == r.iterations);

      // Negation shifts the log by (p - 1) / 2.
      const u64 diff = (logs[b] + (p - 1) - logs[p - b]) % (p - 1);
      REQUIRE(diff == (p - 1) / 2);

      const auto& steps = *r.trace;
      for (std::size_t i = 1; i < steps.size(); ++i) {
        REQUIRE_FALSE((steps[i].kind == StepKind::kNegate &&
                       steps[i - 1].kind == StepKind::kNegate));
      }
    }
  }
}

TEST_CASE("descent: each halve after a negate removes fewer than t twos") {
  for (u64 p : reference::artin2_below(102)) {
    const CertifiedPrime cp = certify_artin2(p);
    const auto logs = reference::log_table(2, p);
    for (u64 b = 1; b < p; ++b) {
      const auto steps = *solve(cp, b).trace;
      for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
        if (steps[i].kind != StepKind::kNegate) continue;
        REQUIRE(steps[i + 1].kind == StepKind::kHalve);
        CHECK(steps[i + 1].k < logs[steps[i].b_before]);
      }
    }
  }
}

TEST_CASE("worst-case identity for certified p < 10^4") {
  for (u64 p : reference::artin2_below(10000)) {
    if (p < 5) continue;
    const CertifiedPrime cp = certify_artin2(p);
    const WorstCase w = worst_case_input(cp);
    REQUIRE(solve_halving_negation(cp, w.b).result == w.expected);
  }
}

TEST_CASE("self-verification at p near 2^40") {
  const CertifiedPrime cp = certify_artin2(1099511627917ull);
  std::mt19937_64 rng(40);
  std::uniform_int_distribution<u64> pick(1, cp.value() - 1);
  for (int i = 0; i < 5; ++i) {
    const u64 b = pick(rng);
    // Random b has log ~ p/2; only small-log targets are tractable here.
    const u64 small = pow_mod_u64(2, b % 5000, cp.value());
    const SolveReport r = solve(cp, small, false);
    CHECK(pow_mod_u64(2, r.result.value(), cp.value()) == small);
    CHECK(r.result.value() == b % 5000);
  }
}
