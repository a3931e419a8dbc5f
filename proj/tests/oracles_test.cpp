#include "doctest.h"
#include "dlog2/halving.hpp"
#include "dlog2/oracles.hpp"
#include "reference.hpp"

using namespace dlog2;

namespace {

DlpInstance inst(const CertifiedPrime& cp, u64 g, u64 b) {
  return DlpInstance(cp, Residue(g, cp.p), Residue(b, cp.p));
}

}  // namespace

TEST_CASE("brute force examples") {
  const CertifiedPrime p37 = certify(37), p11 = certify(11);
  CHECK(brute_force_dlog(inst(p37, 2, 3)).value() == 26);
  CHECK(brute_force_dlog(inst(p37, 2, 2)).value() == 1);
  CHECK(brute_force_dlog(inst(p37, 5, 5)).value() == 1);
  CHECK(brute_force_dlog(inst(p11, 2, 3)).value() == 8);
  CHECK(brute_force_dlog(inst(p37, 2, 34)).value() == 8);
}

TEST_CASE("bsgs examples") {
  const CertifiedPrime p37 = certify(37);
  CHECK(bsgs_dlog(inst(p37, 2, 3)).value() == 26);
  CHECK(bsgs_dlog(inst(p37, 2, 1)).value() == 0);

  const CertifiedPrime big = certify_artin2(1000003);
  const u64 p = big.value();
  CHECK(bsgs_dlog(inst(big, 2, (p - 1) / 2)).value() == (p - 3) / 2);
  CHECK(pow_mod_u64(2, (p - 3) / 2, p) == (p - 1) / 2);
}

TEST_CASE("instance validation") {
  const CertifiedPrime p37 = certify(37);
  CHECK_THROWS_AS(inst(p37, 4, 3), Error);  // 4 is a square
  CHECK_THROWS_AS(inst(p37, 2, 0), Error);
  CHECK_THROWS_AS(DlpInstance(p37, Residue(2, p37.p), Residue(3, Modulus(11))),
                  Error);
}

TEST_CASE("bsgs table budget") {
  const CertifiedPrime cp = certify_artin2(1000003);
  BsgsOptions tiny;
  tiny.max_table_entries = 100;
  try {
    bsgs_dlog(inst(cp, 2, 3), tiny);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBudgetExceeded);
  }
}

TEST_CASE("oracles agree for every generator, p < 200") {
  for (u64 p = 3; p < 200; p += 2) {
    if (!reference::trial_is_prime(p)) continue;
    const CertifiedPrime cp = certify(p);
    for (u64 g = 2; g < p; ++g) {
      if (reference::naive_order(g, p) != p - 1) continue;
      for (u64 b = 1; b < p; ++b) {
        const OracleRun brute = run_brute_force(inst(cp, g, b));
        const OracleRun bsgs = run_bsgs(inst(cp, g, b));
        REQUIRE(brute.result == bsgs.result);
        REQUIRE(pow_mod_u64(g, brute.result.value(), p) == b);
        REQUIRE(brute.group_ops == brute.result.value());
      }
    }
  }
}

TEST_CASE("bsgs agrees with brute force for base 2, certified p < 2000") {
  for (u64 p : reference::artin2_below(2000)) {
    const CertifiedPrime cp = certify_artin2(p);
    for (u64 b = 1; b < p; ++b) {
      REQUIRE(bsgs_dlog(inst(cp, 2, b)) == brute_force_dlog(inst(cp, 2, b)));
    }
  }
}

TEST_CASE("bsgs work grows like sqrt(p)") {
  const CertifiedPrime cp = certify_artin2(1000003);
  const OracleRun r = run_bsgs(inst(cp, 2, 999));
  CHECK(r.group_ops <= 2 * 1001);
}

TEST_CASE("lemma_negation_check examples") {
  const CertifiedPrime p37 = certify(37), p11 = certify(11);
  CHECK(lemma_negation_check(p37, Residue(2, p37.p), Residue(3, p37.p)));
  CHECK(lemma_negation_check(p37, Residue(2, p37.p), Residue(1, p37.p)));
  CHECK(lemma_negation_check(p11, Residue(2, p11.p), Residue(3, p11.p)));
}

TEST_CASE("negation lemma for all generators, certified p < 100") {
  for (u64 p : reference::artin2_below(100)) {
    const CertifiedPrime cp = certify(p);
    for (u64 g = 2; g < p; ++g) {
      const Residue gen(g, cp.p);
      if (!is_primitive_root(gen, cp)) continue;
      for (u64 a = 1; a < p; ++a) {
        REQUIRE(lemma_negation_check(cp, gen, Residue(a, cp.p)));
      }
    }
  }
}

TEST_CASE("generator_independence_check examples") {
  CHECK(generator_independence_check(certify(37)));
  CHECK(generator_independence_check(certify(3)));
  CHECK(generator_independence_check(certify(11)));
  // Holds for primes where 2 is not a generator too.
  CHECK(generator_independence_check(certify(7)));
  CHECK(generator_independence_check(certify(17)));
}

TEST_CASE("primitive roots of 11") {
  const CertifiedPrime cp = certify(11);
  std::vector<u64> roots;
  for (u64 g = 1; g < 11; ++g) {
    if (is_primitive_root(Residue(g, cp.p), cp)) roots.push_back(g);
  }
  CHECK(roots == std::vector<u64>{2, 6, 7, 8});
}
