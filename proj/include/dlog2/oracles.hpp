#pragma once

// Reference discrete-log solvers for arbitrary generators, used to check the
// halving solver and to benchmark against it.

#include <cstddef>

#include "dlog2/arith.hpp"
#include "dlog2/primes.hpp"

namespace dlog2 {

/// g^n = target in F_p^* with g a primitive root. The prime is borrowed and
/// must outlive the instance.
class DlpInstance {
 public:
  /// Throws kNotPrimitive if g does not generate F_p^*, kBadInput for a zero
  /// target, kModulusMismatch if either residue belongs to another modulus.
  DlpInstance(const CertifiedPrime& cp, Residue generator, Residue target);

  const CertifiedPrime& prime() const noexcept { return *cp_; }
  const Residue& generator() const noexcept { return generator_; }
  const Residue& target() const noexcept { return target_; }

 private:
  const CertifiedPrime* cp_;
  Residue generator_;
  Residue target_;
};

struct OracleRun {
  Exponent result;
  /// Group multiplications performed.
  u64 group_ops;
};

/// Walks g^0, g^1, ... until the target appears.
OracleRun run_brute_force(const DlpInstance& inst);
Exponent brute_force_dlog(const DlpInstance& inst);

struct BsgsOptions {
  /// Largest baby-step table, in entries.
  u64 max_table_entries = u64{1} << 26;
};

/// Shanks baby-step giant-step with m = ceil(sqrt(p - 1)) baby steps.
/// Throws kBudgetExceeded when m exceeds options.max_table_entries.
OracleRun run_bsgs(const DlpInstance& inst, const BsgsOptions& options = {});
Exponent bsgs_dlog(const DlpInstance& inst, const BsgsOptions& options = {});

/// (log_g(a) - log_g(p - a)) mod (p - 1) == (p - 1) / 2, both logs by BSGS.
bool lemma_negation_check(const CertifiedPrime& cp, const Residue& g,
                          const Residue& a);

/// Every primitive root g of p has log_g(p - 1) == (p - 1) / 2, by brute
/// force. Intended for p <= 10^4.
bool generator_independence_check(const CertifiedPrime& cp);

}  // namespace dlog2
