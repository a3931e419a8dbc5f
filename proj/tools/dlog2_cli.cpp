// dlog2: base-2 discrete logarithms in F_p^* by halving and negation.
//
//   dlog2 solve <p> <b> [--trace] [--format text|json]
//   dlog2 primes <lo> <hi>
//   dlog2 verify [--max P] [--jobs J]
//   dlog2 bench (--range LO HI | --primes P1,P2,...) [--mode all|worst|sample]
//               [--n N] [--seed S] [--out FILE] [--jobs J] [--brute-max P]
//
// Exit status: 0 success, 2 bad input, 3 primality or primitivity failure,
// 4 verification failure.

#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "dlog2/bench.hpp"
#include "dlog2/halving.hpp"
#include "dlog2/primes.hpp"
#include "dlog2/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitVerification = 4;

int exit_code_for(dlog2::ErrorCode code) {
  using dlog2::ErrorCode;
  switch (code) {
    case ErrorCode::kNotPrime:
    case ErrorCode::kNotPrimitive:
    case ErrorCode::kIterationGuard:
      return kExitPrecondition;
    case ErrorCode::kVerification:
      return kExitVerification;
    case ErrorCode::kBadInput:
    case ErrorCode::kModulusMismatch:
    case ErrorCode::kBudgetExceeded:
    case ErrorCode::kDeadline:
      return kExitBadInput;
  }
  return kExitBadInput;
}

unsigned default_jobs() {
  return std::max(1u, std::thread::hardware_concurrency());
}

struct SolveArgs {
  dlog2::u64 p = 0;
  dlog2::u64 b = 0;
  bool trace = false;
  std::string format = "text";
};

int cmd_solve(const SolveArgs& args) {
  if (!dlog2::is_prime(args.p)) {
    std::cerr << "error: " << args.p << " is not prime\n";
    return kExitPrecondition;
  }
  const dlog2::CertifiedPrime cp = dlog2::certify_artin2(args.p);
  if (args.b == 0 || args.b >= args.p) {
    std::cerr << "error: b must lie in [1, " << args.p - 1 << "]\n";
    return kExitBadInput;
  }
  const dlog2::SolveReport report = dlog2::solve_halving_negation(
      cp, dlog2::Residue(args.b, cp.p),
      {.record_trace = args.trace || args.format == "json"});
  if (args.format == "json") {
    std::cout << dlog2::report_to_json(report) << '\n';
  } else {
    std::cout << dlog2::report_to_text(report);
  }
  return kExitOk;
}

int cmd_primes(dlog2::u64 lo, dlog2::u64 hi) {
  if (lo < 3 || lo > hi) {
    std::cerr << "error: need 3 <= lo <= hi\n";
    return kExitBadInput;
  }
  for (const auto& cp : dlog2::enumerate_artin2_primes(lo, hi)) {
    std::cout << cp.value() << ' ' << cp.value() % 8 << " certified\n";
  }
  return kExitOk;
}

int cmd_verify(const dlog2::VerifyConfig& config) {
  const dlog2::VerifySummary summary = dlog2::run_verify(config);
  dlog2::write_verify_summary(std::cout, summary);
  return summary.total_failures() == 0 ? kExitOk : kExitVerification;
}

struct BenchArgs {
  std::vector<dlog2::u64> range;
  std::vector<dlog2::u64> primes;
  std::string mode = "worst";
  std::string out;
  dlog2::BenchConfig config;
};

int cmd_bench(BenchArgs& args) {
  auto& config = args.config;
  if (!args.range.empty()) {
    for (const auto& cp :
         dlog2::enumerate_artin2_primes(args.range[0], args.range[1])) {
      config.primes.push_back(cp.value());
    }
  }
  config.primes.insert(config.primes.end(), args.primes.begin(),
                       args.primes.end());
  if (config.primes.empty()) {
    std::cerr << "error: no certified primes selected\n";
    return kExitBadInput;
  }
  config.mode = args.mode == "all"      ? dlog2::BenchMode::kAll
                : args.mode == "sample" ? dlog2::BenchMode::kSample
                                        : dlog2::BenchMode::kWorst;
  const auto records = dlog2::run_bench(config);
  if (args.out.empty()) {
    dlog2::write_bench_csv(std::cout, records);
  } else {
    std::ofstream file(args.out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << args.out << '\n';
      return kExitBadInput;
    }
    dlog2::write_bench_csv(file, records);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Base-2 discrete logarithms in F_p^* by halving and negation"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "compute log_2(b) mod p");
  solve_cmd->add_option("p", solve.p, "prime with 2 as a primitive root")
      ->required();
  solve_cmd->add_option("b", solve.b, "element of F_p^*")->required();
  solve_cmd->add_flag("--trace", solve.trace, "print every loop pass");
  solve_cmd->add_option("--format", solve.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  dlog2::u64 lo = 0, hi = 0;
  auto* primes_cmd = app.add_subcommand(
      "primes", "list primes in [lo, hi] for which 2 is a primitive root");
  primes_cmd->add_option("lo", lo)->required();
  primes_cmd->add_option("hi", hi)->required();

  dlog2::VerifyConfig verify;
  verify.jobs = default_jobs();
  auto* verify_cmd = app.add_subcommand(
      "verify", "exhaustive cross-check of every certified p <= max");
  verify_cmd->add_option("--max", verify.p_max, "largest prime to check")
      ->capture_default_str();
  verify_cmd->add_option("--jobs", verify.jobs, "worker threads");

  BenchArgs bench;
  auto* bench_cmd =
      app.add_subcommand("bench", "timing and iteration-count table as CSV");
  auto* range_opt = bench_cmd->add_option("--range", bench.range, "lo hi")
                        ->expected(2);
  bench_cmd->add_option("--primes", bench.primes, "explicit prime list")
      ->delimiter(',')
      ->excludes(range_opt);
  bench_cmd->add_option("--mode", bench.mode, "b selection per prime")
      ->check(CLI::IsMember({"all", "worst", "sample"}))
      ->capture_default_str();
  bench_cmd->add_option("--n", bench.config.samples, "samples per prime")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.config.seed, "sampling seed")
      ->capture_default_str();
  bench_cmd->add_option("--out", bench.out, "CSV path (default stdout)");
  bench_cmd->add_option("--jobs", bench.config.jobs, "worker threads")
      ->capture_default_str();
  bench_cmd->add_option("--brute-max", bench.config.brute_max,
                        "skip brute force above this p")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve);
    if (*primes_cmd) return cmd_primes(lo, hi);
    if (*verify_cmd) return cmd_verify(verify);
    if (*bench_cmd) return cmd_bench(bench);
  } catch (const dlog2::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kExitBadInput;
}
