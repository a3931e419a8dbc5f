#pragma once

// Primality, factorization of p - 1, and certification of primes for which 2
// generates F_p^*.

#include <cstddef>
#include <functional>
#include <vector>

#include "dlog2/arith.hpp"

namespace dlog2 {

struct PrimePower {
  u64 prime;
  unsigned multiplicity;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Complete factorization, ascending by prime.
struct Factorization {
  std::vector<PrimePower> factors;

  /// Product of prime^multiplicity, computed in 128 bits.
  u128 product() const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// An odd prime with p - 1 factored and the primitivity of 2 decided.
struct CertifiedPrime {
  Modulus p;
  Factorization p_minus_1;
  bool two_is_primitive;
  bool meets_necessary_condition;

  u64 value() const noexcept { return p.value(); }
};

/// Exact for every 64-bit n: trial division below 2^16, then strong-pseudoprime
/// tests on a witness set known to have no 64-bit counterexample.
bool is_prime(u64 n);

/// Full factorization of 2 <= n. Trial division by small primes, then Brent's
/// variant of Pollard rho. The result does not depend on the splitter's seeds.
/// Throws kBadInput for n < 2.
Factorization factorize(u64 n);

/// p mod 8 is 3 or 5, i.e. 2 is a quadratic nonresidue mod p.
constexpr bool necessary_condition(u64 p) {
  const u64 r = p % 8;
  return r == 3 || r == 5;
}

/// Factors p - 1 and decides whether 2 has order p - 1. Throws kBadInput if p
/// is out of the Modulus range and kNotPrime if p is composite.
CertifiedPrime certify(u64 p);

/// Like certify(), but also throws kNotPrimitive when 2 is not a generator.
CertifiedPrime certify_artin2(u64 p);

/// Order of g is exactly p - 1. Throws kBadInput for g == 0 and
/// kModulusMismatch if g is not reduced mod cp.p.
bool is_primitive_root(const Residue& g, const CertifiedPrime& cp);

/// Smallest primitive root of cp.p.
Residue smallest_primitive_root(const CertifiedPrime& cp);

struct SieveOptions {
  /// Largest hi - lo + 1 accepted by enumeration.
  u64 max_span = u64{1} << 34;
  /// Width of a sieve segment, in integers.
  std::size_t segment_size = std::size_t{1} << 18;
};

/// Calls visit(p) for every prime in [lo, hi], ascending. Segmented sieve;
/// candidates above the base-prime table fall back to is_prime().
/// Throws kBadInput for an empty or out-of-range interval, kBudgetExceeded
/// when the span exceeds options.max_span.
void for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& visit,
                    const SieveOptions& options = {});

/// All primes in [lo, hi] for which 2 is a primitive root, ascending. The
/// mod-8 filter runs before the order test. Requires 3 <= lo <= hi < 2^62.
std::vector<CertifiedPrime> enumerate_artin2_primes(
    u64 lo, u64 hi, const SieveOptions& options = {});

}  // namespace dlog2
