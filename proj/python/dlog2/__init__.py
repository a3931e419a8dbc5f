"""Base-2 discrete logarithms in F_p^* by halving and negation."""

from ._core import (
    CertifiedPrime,
    DlogError,
    SolveReport,
    StepKind,
    TraceStep,
    bsgs_dlog,
    brute_force_dlog,
    certify,
    enumerate_artin2_primes,
    factorize,
    generator_independence_check,
    is_prime,
    is_primitive_root,
    lemma_negation_check,
    log_minus_one,
    necessary_condition,
    pow_mod,
    report_from_json,
    run_bench,
    run_verify,
    solve,
    two_adic_valuation,
    validate_trace,
    worst_case_input,
)

__all__ = [
    "CertifiedPrime",
    "DlogError",
    "SolveReport",
    "StepKind",
    "TraceStep",
    "bsgs_dlog",
    "brute_force_dlog",
    "certify",
    "enumerate_artin2_primes",
    "factorize",
    "generator_independence_check",
    "is_prime",
    "is_primitive_root",
    "lemma_negation_check",
    "log_minus_one",
    "necessary_condition",
    "pow_mod",
    "report_from_json",
    "run_bench",
    "run_verify",
    "solve",
    "two_adic_valuation",
    "validate_trace",
    "worst_case_input",
]
