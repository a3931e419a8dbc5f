#pragma once

#include <stdexcept>
#include <string>

namespace dlog2 {

enum class ErrorCode {
  kBadInput,          // malformed argument, value out of range, zero residue
  kModulusMismatch,   // operands reduced modulo different primes
  kNotPrime,          // modulus failed the primality test
  kNotPrimitive,      // 2 (or the chosen generator) is not a primitive root
  kIterationGuard,    // halving loop exceeded its pass budget
  kDeadline,          // solve ran past its wall-clock deadline
  kBudgetExceeded,    // sieve span or BSGS table too large
  kVerification,      // a computed result failed self-verification
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dlog2
