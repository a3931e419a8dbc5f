#include "dlog2/primes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace dlog2 {

namespace {

constexpr u64 kSmallLimit = u64{1} << 16;
constexpr u64 kTrialFactorBound = 1024;
// Largest base-prime table the segmented sieve builds; past sqrt(hi) > this,
// candidates are tested individually.
constexpr u64 kBasePrimeLimit = u64{1} << 22;

std::vector<u64> simple_sieve(u64 limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<u64> primes;
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = simple_sieve(kSmallLimit);
  return primes;
}

bool strong_probable_prime(u64 n, u64 witness) {
  witness %= n;
  if (witness == 0) return true;
  const auto [s, d] = two_adic_valuation(n - 1);
  u64 x = pow_mod_u64(witness, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = mul_mod_u64(x, x, n);
    if (x == n - 1) return true;
    if (x == 1) return false;
  }
  return false;
}

u64 isqrt(u64 n) {
  auto r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Brent's cycle-finding variant of Pollard rho on x -> x^2 + c. Returns a
// nontrivial factor of the odd composite n, or n on failure for this c.
u64 rho_brent(u64 n, u64 c) {
  constexpr u64 kBatch = 128;
  auto f = [n, c](u64 x) { return (mul_mod_u64(x, x, n) + c) % n; };
  u64 y = 2, x = 2, ys = 2, q = 1, g = 1;
  for (u64 r = 1; g == 1; r <<= 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    for (u64 k = 0; k < r && g == 1; k += kBatch) {
      ys = y;
      for (u64 i = 0; i < std::min(kBatch, r - k); ++i) {
        y = f(y);
        q = mul_mod_u64(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
    }
    if (r > (u64{1} << 40)) break;
  }
  if (g == n) {
    // The batch overshot; redo it one step at a time.
    do {
      ys = f(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

void split(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const u64 root = isqrt(n);
  if (root * root == n) {
    split(root, out);
    split(root, out);
    return;
  }
  for (u64 c = 1;; ++c) {
    const u64 d = rho_brent(n, c);
    if (d != n && d != 1) {
      split(d, out);
      split(n / d, out);
      return;
    }
  }
}

bool order_is_full(u64 g, u64 p, const Factorization& p_minus_1) {
  return std::none_of(p_minus_1.factors.begin(), p_minus_1.factors.end(),
                      [&](const PrimePower& pp) {
                        return pow_mod_u64(g, (p - 1) / pp.prime, p) == 1;
                      });
}

}  // namespace

u128 Factorization::product() const {
  u128 result = 1;
  for (const auto& [q, e] : factors) {
    for (unsigned i = 0; i < e; ++i) result *= q;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n < kSmallLimit) {
    return std::binary_search(small_primes().begin(), small_primes().end(), n);
  }
  for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return false;
  }
  // No composite below 2^64 is a strong pseudoprime to all of these bases.
  for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull,
                1795265022ull}) {
    if (!strong_probable_prime(n, a)) return false;
  }
  return true;
}

Factorization factorize(u64 n) {
  if (n < 2) {
    throw Error(ErrorCode::kBadInput,
                "factorize needs n >= 2, got " + std::to_string(n));
  }
  std::vector<u64> primes;
  for (u64 q : small_primes()) {
    if (q > kTrialFactorBound || q * q > n) break;
    while (n % q == 0) {
      primes.push_back(q);
      n /= q;
    }
  }
  split(n, primes);
  std::sort(primes.begin(), primes.end());

  Factorization result;
  for (u64 q : primes) {
    if (!result.factors.empty() && result.factors.back().prime == q) {
      ++result.factors.back().multiplicity;
    } else {
      result.factors.push_back({q, 1});
    }
  }
  return result;
}

CertifiedPrime certify(u64 p) {
  Modulus modulus(p);
  if (!is_prime(p)) {
    throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  }
  Factorization f = factorize(p - 1);
  const bool primitive = order_is_full(2, p, f);
  return CertifiedPrime{modulus, std::move(f), primitive,
                        necessary_condition(p)};
}

CertifiedPrime certify_artin2(u64 p) {
  CertifiedPrime cp = certify(p);
  if (!cp.two_is_primitive) {
    throw Error(ErrorCode::kNotPrimitive,
                "2 is not a primitive root mod " + std::to_string(p));
  }
  return cp;
}

bool is_primitive_root(const Residue& g, const CertifiedPrime& cp) {
  if (g.modulus() != cp.p) {
    throw Error(ErrorCode::kModulusMismatch,
                to_string(g) + " is not a residue mod " +
                    std::to_string(cp.value()));
  }
  if (g.is_zero()) {
    throw Error(ErrorCode::kBadInput, "0 is not a group element");
  }
  return order_is_full(g.value(), cp.value(), cp.p_minus_1);
}

Residue smallest_primitive_root(const CertifiedPrime& cp) {
  for (u64 g = 2; g < cp.value(); ++g) {
    if (order_is_full(g, cp.value(), cp.p_minus_1)) return Residue(g, cp.p);
  }
  // Unreachable for prime p.
  throw Error(ErrorCode::kVerification,
              "no primitive root found mod " + std::to_string(cp.value()));
}

void for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& visit,
                    const SieveOptions& options) {
  if (lo > hi || hi >= kMaxModulus) {
    throw Error(ErrorCode::kBadInput, "invalid range [" + std::to_string(lo) +
                                          ", " + std::to_string(hi) + "]");
  }
  if (hi - lo >= options.max_span) {
    throw Error(ErrorCode::kBudgetExceeded,
                "range of " + std::to_string(hi - lo + 1) +
                    " integers exceeds the sieve budget of " +
                    std::to_string(options.max_span));
  }
  lo = std::max<u64>(lo, 2);
  if (lo > hi) return;

  const u64 root = isqrt(hi);
  if (root > kBasePrimeLimit) {
    for (u64 n = lo; n <= hi; ++n) {
      if (is_prime(n)) visit(n);
    }
    return;
  }
  const std::vector<u64> base =
      root < kSmallLimit ? small_primes() : simple_sieve(root);

  const u64 segment = std::max<std::size_t>(options.segment_size, 64);
  std::vector<char> composite;
  for (u64 start = lo; start <= hi;) {
    const u64 end = std::min(hi, start + segment - 1);  // inclusive
    composite.assign(end - start + 1, 0);
    for (u64 q : base) {
      if (q * q > end) break;
      u64 first = std::max(q * q, (start + q - 1) / q * q);
      for (u64 m = first; m <= end; m += q) composite[m - start] = 1;
    }
    for (u64 n = start; n <= end; ++n) {
      if (!composite[n - start]) visit(n);
    }
    if (end == hi) break;
    start = end + 1;
  }
}

std::vector<CertifiedPrime> enumerate_artin2_primes(
    u64 lo, u64 hi, const SieveOptions& options) {
  if (lo < 3 || lo > hi || hi >= kMaxModulus) {
    throw Error(ErrorCode::kBadInput,
                "enumeration needs 3 <= lo <= hi < 2^62, got [" +
                    std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  std::vector<CertifiedPrime> out;
  for_each_prime(
      lo, hi,
      [&out](u64 p) {
        if (!necessary_condition(p)) return;
        Factorization f = factorize(p - 1);
        if (order_is_full(2, p, f)) {
          out.push_back(CertifiedPrime{Modulus(p), std::move(f), true, true});
        }
      },
      options);
  return out;
}

}  // namespace dlog2
