#include "dlog2/bench.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <ostream>
#include <random>
#include <tuple>

#include "dlog2/oracles.hpp"

namespace dlog2 {

const char* to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kBrute: return "brute";
    case Algorithm::kBsgs: return "bsgs";
    case Algorithm::kHalving: return "halving";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kMaxReportedFailures = 20;

using Clock = std::chrono::steady_clock;

std::int64_t nanos_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() -
                                                              start)
      .count();
}

// Splits [0, n) into `jobs` contiguous chunks and runs fn(begin, end) on each.
template <typename Fn>
void parallel_chunks(std::size_t n, unsigned jobs, Fn fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (jobs <= 1) {
    fn(std::size_t{0}, n);
    return;
  }
  std::vector<std::future<void>> tasks;
  const std::size_t chunk = (n + jobs - 1) / jobs;
  for (std::size_t begin = 0; begin < n; begin += chunk) {
    tasks.push_back(std::async(std::launch::async, fn, begin,
                               std::min(n, begin + chunk)));
  }
  for (auto& t : tasks) t.get();  // rethrows the first failure
}

struct Instance {
  const CertifiedPrime* cp;
  u64 b;
};

void bench_instance(const Instance& inst, const BenchConfig& config,
                    std::vector<BenchRecord>& out) {
  const CertifiedPrime& cp = *inst.cp;
  const u64 p = cp.value();
  const DlpInstance dlp(cp, Residue(2, cp.p), Residue(inst.b, cp.p));

  auto start = Clock::now();
  u64 passes = 0;
  const u64 halving = halving_log2(p, inst.b, &passes);
  out.push_back({p, inst.b, Algorithm::kHalving, halving, passes,
                 nanos_since(start)});

  start = Clock::now();
  const OracleRun bsgs = run_bsgs(dlp);
  out.push_back({p, inst.b, Algorithm::kBsgs, bsgs.result.value(),
                 bsgs.group_ops, nanos_since(start)});

  if (p <= config.brute_max) {
    start = Clock::now();
    const OracleRun brute = run_brute_force(dlp);
    out.push_back({p, inst.b, Algorithm::kBrute, brute.result.value(),
                   brute.group_ops, nanos_since(start)});
  }

  for (const BenchRecord& r : out) {
    if (r.result != halving) {
      throw Error(ErrorCode::kVerification,
                  std::string(to_string(r.algorithm)) + " and halving disagree on log_2(" +
                      std::to_string(inst.b) + ") mod " + std::to_string(p));
    }
  }
  if (pow_mod_u64(2, halving, p) != inst.b) {
    throw Error(ErrorCode::kVerification,
                "2^" + std::to_string(halving) + " != " +
                    std::to_string(inst.b) + " mod " + std::to_string(p));
  }
  if (config.mode == BenchMode::kWorst && halving != (p - 3) / 2) {
    throw Error(ErrorCode::kVerification,
                "worst-case log_2((p-1)/2) mod " + std::to_string(p) + " is " +
                    std::to_string(halving) + ", expected (p-3)/2");
  }
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  std::vector<u64> sorted = config.primes;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<CertifiedPrime> primes;
  primes.reserve(sorted.size());
  for (u64 p : sorted) primes.push_back(certify_artin2(p));

  std::mt19937_64 rng(config.seed);
  std::vector<Instance> instances;
  for (const CertifiedPrime& cp : primes) {
    const u64 p = cp.value();
    switch (config.mode) {
      case BenchMode::kAll:
        for (u64 b = 1; b < p; ++b) instances.push_back({&cp, b});
        break;
      case BenchMode::kWorst:
        instances.push_back({&cp, (p - 1) / 2});
        break;
      case BenchMode::kSample: {
        std::uniform_int_distribution<u64> pick(1, p - 1);
        for (u64 i = 0; i < config.samples; ++i) {
          instances.push_back({&cp, pick(rng)});
        }
        break;
      }
    }
  }

  std::vector<std::vector<BenchRecord>> per_instance(instances.size());
  parallel_chunks(instances.size(), config.jobs,
                  [&](std::size_t begin, std::size_t end) {
                    for (std::size_t i = begin; i < end; ++i) {
                      bench_instance(instances[i], config, per_instance[i]);
                    }
                  });

  std::vector<BenchRecord> records;
  for (auto& rs : per_instance) {
    records.insert(records.end(), rs.begin(), rs.end());
  }
  std::stable_sort(records.begin(), records.end(),
                   [](const BenchRecord& a, const BenchRecord& b) {
                     return std::tuple(a.p, a.b, a.algorithm) <
                            std::tuple(b.p, b.b, b.algorithm);
                   });
  return records;
}

void write_bench_csv(std::ostream& out,
                     const std::vector<BenchRecord>& records) {
  out << kBenchHeader << '\n';
  for (const BenchRecord& r : records) {
    out << r.p << ',' << r.b << ',' << to_string(r.algorithm) << ','
        << r.result << ',' << r.iterations << ',' << r.elapsed_nanos << '\n';
  }
}

std::vector<TraceStep> reference_trace_f37() {
  using enum StepKind;
  return {
      {kNegate, 0, 3, 34, 18}, {kHalve, 1, 34, 17, 19},
      {kNegate, 0, 17, 20, 1}, {kHalve, 2, 20, 5, 3},
      {kNegate, 0, 5, 32, 21}, {kHalve, 5, 32, 1, 26},
  };
}

namespace {

void note_failure(VerifySummary& s, std::string what) {
  if (s.failures.size() < kMaxReportedFailures) {
    s.failures.push_back(std::move(what));
  }
}

VerifySummary verify_prime(const CertifiedPrime& cp) {
  VerifySummary s;
  const u64 p = cp.value();
  const Residue two(2, cp.p);
  s.primes_checked = 1;
  s.primes.push_back(p);
  const std::string where = " mod " + std::to_string(p);
  for (u64 b = 1; b < p; ++b) {
    const Residue target(b, cp.p);
    const SolveReport report =
        solve_halving_negation(cp, target, {.record_trace = true});
    ++s.instances_checked;
    const std::string inst = "log_2(" + std::to_string(b) + ")" + where;

    const Exponent brute = brute_force_dlog(DlpInstance(cp, two, target));
    if (brute != report.result) {
      ++s.oracle_mismatches;
      note_failure(s, inst + ": halving " +
                          std::to_string(report.result.value()) +
                          ", brute force " + std::to_string(brute.value()));
    }
    if (auto v = validate_trace(report); !v.empty()) {
      ++s.trace_violations;
      note_failure(s, inst + ": " + v.front().message);
    }
    if (!lemma_negation_check(cp, two, target)) {
      ++s.lemma_failures;
      note_failure(s, "negation lemma fails for a = " + std::to_string(b) +
                          where);
    }
    if (!within_iteration_bound(report.iterations, report.result.value())) {
      ++s.bound_violations;
      note_failure(s, inst + ": " + std::to_string(report.iterations) +
                          " passes exceeds 2 * result + 1");
    }
  }
  return s;
}

void merge(VerifySummary& into, VerifySummary&& from) {
  into.primes_checked += from.primes_checked;
  into.instances_checked += from.instances_checked;
  into.oracle_mismatches += from.oracle_mismatches;
  into.trace_violations += from.trace_violations;
  into.lemma_failures += from.lemma_failures;
  into.bound_violations += from.bound_violations;
  into.primes.insert(into.primes.end(), from.primes.begin(), from.primes.end());
  for (auto& f : from.failures) note_failure(into, std::move(f));
}

}  // namespace

VerifySummary run_verify(const VerifyConfig& config) {
  if (config.p_max < 3) {
    throw Error(ErrorCode::kBadInput, "verify needs p_max >= 3");
  }
  if (config.p_max > config.budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "p_max " + std::to_string(config.p_max) +
                    " exceeds the exhaustive budget of " +
                    std::to_string(config.budget));
  }
  const std::vector<CertifiedPrime> primes =
      enumerate_artin2_primes(3, config.p_max);

  std::vector<VerifySummary> parts(primes.size());
  parallel_chunks(primes.size(), config.jobs,
                  [&](std::size_t begin, std::size_t end) {
                    for (std::size_t i = begin; i < end; ++i) {
                      parts[i] = verify_prime(primes[i]);
                    }
                  });

  VerifySummary summary;
  for (auto& part : parts) merge(summary, std::move(part));

  if (config.p_max >= 37) {
    summary.golden_checked = true;
    const CertifiedPrime f37 = certify_artin2(37);
    const SolveReport golden =
        solve_halving_negation(f37, Residue(3, f37.p), {.record_trace = true});
    summary.golden_ok =
        golden.result.value() == 26 && golden.trace == reference_trace_f37();
    if (!summary.golden_ok) {
      note_failure(summary, "F_37 trace of log_2(3) differs from the reference");
    }
  }
  return summary;
}

void write_verify_summary(std::ostream& out, const VerifySummary& summary) {
  out << "certified primes: " << summary.primes_checked;
  if (!summary.primes.empty()) {
    out << " (" << summary.primes.front() << " .. " << summary.primes.back()
        << ")";
  }
  out << '\n';
  out << "instances checked: " << summary.instances_checked << '\n';
  out << "oracle mismatches: " << summary.oracle_mismatches << '\n';
  out << "trace violations: " << summary.trace_violations << '\n';
  out << "lemma failures: " << summary.lemma_failures << '\n';
  out << "iteration bound violations: " << summary.bound_violations << '\n';
  out << "F_37 reference trace: "
      << (!summary.golden_checked ? "not in range"
                                  : summary.golden_ok ? "match" : "MISMATCH")
      << '\n';
  for (const std::string& f : summary.failures) out << "  " << f << '\n';
  out << summary.total_failures() << " failures\n";
}

}  // namespace dlog2
