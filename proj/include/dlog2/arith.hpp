#pragma once

// Exact modular arithmetic for odd moduli below 2^62.
//
// Products go through an unsigned __int128 intermediate, with a plain 64-bit
// path when the modulus fits in 32 bits. Every value type here is immutable
// and every function is pure.

#include <bit>
#include <cstdint>
#include <string>

#include "dlog2/error.hpp"

namespace dlog2 {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

inline constexpr u64 kMaxModulus = u64{1} << 62;  // exclusive

/// (a * b) mod m for a, b < m. Valid for any m > 0 that fits in 64 bits.
constexpr u64 mul_mod_u64(u64 a, u64 b, u64 m) {
  if (m <= 0xFFFFFFFFu) return (a * b) % m;
  return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

/// base^e mod m by left-to-right square-and-multiply. Returns 0 for m == 1.
constexpr u64 pow_mod_u64(u64 base, u64 e, u64 m) {
  if (m == 1) return 0;
  base %= m;
  u64 result = 1;
  for (int bit = 63 - std::countl_zero(e | 1); bit >= 0; --bit) {
    result = mul_mod_u64(result, result, m);
    if ((e >> bit) & 1u) result = mul_mod_u64(result, base, m);
  }
  return result;
}

/// An odd modulus 3 <= p < 2^62. Primality is not checked here.
class Modulus {
 public:
  explicit Modulus(u64 p);

  u64 value() const noexcept { return p_; }
  /// Order of F_p^* when p is prime, p - 1.
  u64 group_order() const noexcept { return p_ - 1; }

  friend bool operator==(Modulus, Modulus) = default;

 private:
  u64 p_;
};

/// An integer reduced into [0, p-1]. Zero is representable, but every group
/// operation rejects it.
class Residue {
 public:
  /// Throws kBadInput unless value < p.
  Residue(u64 value, Modulus modulus);
  /// Reduces an arbitrary 64-bit value mod p.
  static Residue reduce(u64 value, Modulus modulus);

  u64 value() const noexcept { return value_; }
  Modulus modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }
  bool is_one() const noexcept { return value_ == 1; }

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  struct Unchecked {};
  Residue(Unchecked, u64 value, Modulus modulus) noexcept
      : value_(value), modulus_(modulus) {}

  friend Residue mul_mod(const Residue&, const Residue&);
  friend Residue pow_mod(const Residue&, u64);
  friend Residue negate(const Residue&);

  u64 value_;
  Modulus modulus_;
};

/// A discrete logarithm: an integer in [0, order-1], arithmetic mod order.
class Exponent {
 public:
  /// Throws kBadInput unless order >= 1 and value < order.
  Exponent(u64 value, u64 order);
  static Exponent zero(u64 order) { return Exponent(0, order); }

  u64 value() const noexcept { return value_; }
  u64 order() const noexcept { return order_; }

  /// Adds a raw integer, reducing mod order.
  Exponent plus(u64 delta) const noexcept;

  friend Exponent operator+(const Exponent& a, const Exponent& b);
  friend Exponent operator-(const Exponent& a, const Exponent& b);
  friend bool operator==(const Exponent&, const Exponent&) = default;

 private:
  u64 value_;
  u64 order_;
};

/// a * b mod p. Throws kModulusMismatch if the moduli differ.
Residue mul_mod(const Residue& a, const Residue& b);

/// base^e mod p by square-and-multiply.
Residue pow_mod(const Residue& base, u64 e);

/// The 2-adic decomposition n = 2^k * odd_part.
struct Valuation {
  unsigned k;
  u64 odd_part;

  friend bool operator==(const Valuation&, const Valuation&) = default;
};

/// Throws kBadInput for n == 0.
Valuation two_adic_valuation(u64 n);

/// p - b. Throws kBadInput for the zero residue.
Residue negate(const Residue& b);

std::string to_string(const Residue& r);

}  // namespace dlog2
