"""Exact Fibonacci/Lucas telescoping series.

Thin re-export of the compiled core: fast-doubling Fibonacci/Lucas pairs,
exact arithmetic in Q(sqrt(5)), identity sweeps, and certified summation of
the telescoping series families t1..t9 and r2.
"""

from ._core import (
    ConvergenceReport,
    FuzzFailure,
    FuzzReport,
    IdentityCheck,
    QuadRat,
    SeriesSpec,
    alpha_pow,
    b_value,
    binet_roundtrip,
    certify,
    closed_form,
    decimal_crosscheck,
    direct_term,
    fib,
    fuzz_lemma,
    fuzz_lemma6_kfree,
    fuzz_ratio,
    generic_apery_check,
    index_bound,
    lemma1_eval,
    lemma2_eval,
    lemma7_eval,
    lemma8_eval,
    lucas,
    make_series,
    partial_sum,
    set_index_bound,
)

__all__ = [
    "ConvergenceReport",
    "FuzzFailure",
    "FuzzReport",
    "IdentityCheck",
    "QuadRat",
    "SeriesSpec",
    "alpha_pow",
    "b_value",
    "binet_roundtrip",
    "certify",
    "closed_form",
    "decimal_crosscheck",
    "direct_term",
    "fib",
    "fuzz_lemma",
    "fuzz_lemma6_kfree",
    "fuzz_ratio",
    "generic_apery_check",
    "index_bound",
    "lemma1_eval",
    "lemma2_eval",
    "lemma7_eval",
    "lemma8_eval",
    "lucas",
    "make_series",
    "partial_sum",
    "set_index_bound",
]
