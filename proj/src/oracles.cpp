#include "dlog2/oracles.hpp"

#include <numeric>
#include <string>
#include <unordered_map>

namespace dlog2 {

namespace {

Exponent half_order(const CertifiedPrime& cp) {
  return Exponent((cp.value() - 1) / 2, cp.value() - 1);
}

}  // namespace

DlpInstance::DlpInstance(const CertifiedPrime& cp, Residue generator,
                         Residue target)
    : cp_(&cp), generator_(generator), target_(target) {
  if (target.modulus() != cp.p) {
    throw Error(ErrorCode::kModulusMismatch,
                to_string(target) + " is not a residue mod " +
                    std::to_string(cp.value()));
  }
  if (target.is_zero()) {
    throw Error(ErrorCode::kBadInput, "target 0 has no discrete log");
  }
  if (!is_primitive_root(generator, cp)) {
    throw Error(ErrorCode::kNotPrimitive,
                to_string(generator) + " does not generate F_" +
                    std::to_string(cp.value()) + "^*");
  }
}

OracleRun run_brute_force(const DlpInstance& inst) {
  const u64 p = inst.prime().value();
  const u64 g = inst.generator().value();
  const u64 target = inst.target().value();
  u64 power = 1;
  u64 ops = 0;
  for (u64 n = 0; n < p - 1; ++n) {
    if (power == target) return {Exponent(n, p - 1), ops};
    power = mul_mod_u64(power, g, p);
    ++ops;
  }
  throw Error(ErrorCode::kVerification,
              "brute force found no log of " + to_string(inst.target()));
}

Exponent brute_force_dlog(const DlpInstance& inst) {
  return run_brute_force(inst).result;
}

OracleRun run_bsgs(const DlpInstance& inst, const BsgsOptions& options) {
  const u64 p = inst.prime().value();
  const u64 order = p - 1;
  const u64 g = inst.generator().value();

  u64 m = 1;
  while (static_cast<u128>(m) * m < order) ++m;
  if (m > options.max_table_entries) {
    throw Error(ErrorCode::kBudgetExceeded,
                "BSGS table of " + std::to_string(m) +
                    " entries exceeds the budget of " +
                    std::to_string(options.max_table_entries));
  }

  std::unordered_map<u64, u64> baby;
  baby.reserve(m);
  u64 ops = 0;
  u64 power = 1;
  for (u64 j = 0; j < m; ++j) {
    baby.emplace(power, j);
    power = mul_mod_u64(power, g, p);
    ++ops;
  }

  // g^-m = g^(order - m); m <= order for p >= 3.
  const u64 giant = pow_mod_u64(g, order - m, p);
  u64 gamma = inst.target().value();
  for (u64 i = 0; i < m; ++i) {
    if (auto it = baby.find(gamma); it != baby.end()) {
      const u64 n = (i * m + it->second) % order;
      return {Exponent(n, order), ops};
    }
    gamma = mul_mod_u64(gamma, giant, p);
    ++ops;
  }
  throw Error(ErrorCode::kVerification,
              "BSGS found no log of " + to_string(inst.target()));
}

Exponent bsgs_dlog(const DlpInstance& inst, const BsgsOptions& options) {
  return run_bsgs(inst, options).result;
}

bool lemma_negation_check(const CertifiedPrime& cp, const Residue& g,
                          const Residue& a) {
  const Exponent log_a = bsgs_dlog(DlpInstance(cp, g, a));
  const Exponent log_neg = bsgs_dlog(DlpInstance(cp, g, negate(a)));
  return (log_a - log_neg) == half_order(cp);
}

bool generator_independence_check(const CertifiedPrime& cp) {
  const u64 p = cp.value();
  const u64 order = p - 1;
  const Residue minus_one(order, cp.p);
  const Exponent expected = half_order(cp);
  // The primitive roots are exactly g0^k with gcd(k, p - 1) = 1.
  const u64 g0 = smallest_primitive_root(cp).value();
  u64 g = g0;
  for (u64 k = 1; k < order; ++k, g = mul_mod_u64(g, g0, p)) {
    if (std::gcd(k, order) != 1) continue;
    if (brute_force_dlog(DlpInstance(cp, Residue(g, cp.p), minus_one)) !=
        expected) {
      return false;
    }
  }
  return true;
}

}  // namespace dlog2
