#include "dlog2/arith.hpp"

namespace dlog2 {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadInput: return "bad input";
    case ErrorCode::kModulusMismatch: return "modulus mismatch";
    case ErrorCode::kNotPrime: return "not prime";
    case ErrorCode::kNotPrimitive: return "not primitive";
    case ErrorCode::kIterationGuard: return "iteration guard exceeded";
    case ErrorCode::kDeadline: return "deadline exceeded";
    case ErrorCode::kBudgetExceeded: return "budget exceeded";
    case ErrorCode::kVerification: return "verification failure";
  }
  return "unknown";
}

Modulus::Modulus(u64 p) : p_(p) {
  if (p < 3 || p >= kMaxModulus || p % 2 == 0) {
    throw Error(ErrorCode::kBadInput,
                "modulus must be odd with 3 <= p < 2^62, got " +
                    std::to_string(p));
  }
}

Residue::Residue(u64 value, Modulus modulus)
    : value_(value), modulus_(modulus) {
  if (value >= modulus.value()) {
    throw Error(ErrorCode::kBadInput,
                std::to_string(value) + " is not reduced mod " +
                    std::to_string(modulus.value()));
  }
}

Residue Residue::reduce(u64 value, Modulus modulus) {
  return Residue(Unchecked{}, value % modulus.value(), modulus);
}

Exponent::Exponent(u64 value, u64 order) : value_(value), order_(order) {
  if (order == 0 || value >= order) {
    throw Error(ErrorCode::kBadInput,
                "exponent " + std::to_string(value) + " out of range for order " +
                    std::to_string(order));
  }
}

Exponent Exponent::plus(u64 delta) const noexcept {
  Exponent e = *this;
  e.value_ = (value_ + delta % order_) % order_;
  return e;
}

Exponent operator+(const Exponent& a, const Exponent& b) {
  if (a.order_ != b.order_) {
    throw Error(ErrorCode::kModulusMismatch, "exponents of different orders");
  }
  return a.plus(b.value_);
}

Exponent operator-(const Exponent& a, const Exponent& b) {
  if (a.order_ != b.order_) {
    throw Error(ErrorCode::kModulusMismatch, "exponents of different orders");
  }
  return a.plus(a.order_ - b.value_);
}

namespace {

void require_group_element(const Residue& r) {
  if (r.is_zero()) {
    throw Error(ErrorCode::kBadInput,
                "0 is not an element of F_" +
                    std::to_string(r.modulus().value()) + "^*");
  }
}

}  // namespace

Residue mul_mod(const Residue& a, const Residue& b) {
  if (a.modulus_ != b.modulus_) {
    throw Error(ErrorCode::kModulusMismatch,
                "operands reduced mod " + std::to_string(a.modulus_.value()) +
                    " and " + std::to_string(b.modulus_.value()));
  }
  require_group_element(a);
  require_group_element(b);
  const u64 p = a.modulus_.value();
  return Residue(Residue::Unchecked{}, mul_mod_u64(a.value_, b.value_, p),
                 a.modulus_);
}

Residue pow_mod(const Residue& base, u64 e) {
  require_group_element(base);
  const u64 p = base.modulus_.value();
  return Residue(Residue::Unchecked{}, pow_mod_u64(base.value_, e, p),
                 base.modulus_);
}

Valuation two_adic_valuation(u64 n) {
  if (n == 0) {
    throw Error(ErrorCode::kBadInput, "2-adic valuation of 0 is undefined");
  }
  const auto k = static_cast<unsigned>(std::countr_zero(n));
  return {k, n >> k};
}

Residue negate(const Residue& b) {
  require_group_element(b);
  return Residue(Residue::Unchecked{}, b.modulus_.value() - b.value_,
                 b.modulus_);
}

std::string to_string(const Residue& r) {
  return std::to_string(r.value()) + " mod " +
         std::to_string(r.modulus().value());
}

}  // namespace dlog2
