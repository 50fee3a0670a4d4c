"""Smoke tests for the compiled fibtel module."""

from fractions import Fraction

import pytest

import fibtel


def test_fib_lucas():
    assert fibtel.fib(20) == 6765
    assert fibtel.lucas(10) == 123
    assert fibtel.fib(200) == 280571172992510140037611932413038677189525
    f, l = fibtel.binet_roundtrip(12)
    assert (f, l) == (Fraction(144), Fraction(322))


def test_alpha_pow():
    alpha = fibtel.alpha_pow(1)
    assert (alpha.a, alpha.b, alpha.d) == (1, 1, 2)
    assert fibtel.alpha_pow(-1) * alpha == fibtel.QuadRat(1, 0, 1)
    assert fibtel.alpha_pow(10).to_decimal(6) == "122.991869"


def test_series_certify():
    spec = fibtel.make_series("t1")
    report = fibtel.certify(spec, 30)
    assert report.certified
    assert report.terms_used <= 11
    assert report.target.to_decimal(9) == "2.381966011"
    assert fibtel.decimal_crosscheck(spec, 30)


def test_partial_sum_modes_agree():
    spec = fibtel.make_series("t9", p=2)
    assert fibtel.partial_sum(spec, 2) == Fraction(88, 441)
    assert fibtel.partial_sum(spec, 7, "telescoped") == fibtel.partial_sum(spec, 7)
    assert fibtel.direct_term(spec, 2) == Fraction(8, 45)
    assert fibtel.closed_form(spec).to_decimal(3) == "0.200"


def test_parameter_validation():
    with pytest.raises(ValueError):
        fibtel.make_series("t6", p=3, m=1)
    with pytest.raises(ValueError):
        fibtel.make_series("bogus")


def test_identity_checks():
    assert fibtel.lemma1_eval(5).holds
    assert fibtel.lemma2_eval(3, 4).holds
    assert fibtel.lemma7_eval(5, 2).holds
    assert fibtel.lemma8_eval(2, 4).holds


def test_fuzz_reports():
    report = fibtel.fuzz_lemma(1)
    assert report.passed()
    assert report.cases == 500
    control = fibtel.fuzz_lemma6_kfree()
    assert not control.passed()
    assert all(not f.params.startswith("p=3,") for f in control.failures)


def test_generic_apery_check():
    check = fibtel.generic_apery_check("1", "1", [("1", "1"), ("2", "1")], 2)
    assert check.holds


def test_index_bound_guard():
    saved = fibtel.index_bound()
    try:
        fibtel.set_index_bound(100)
        with pytest.raises(RuntimeError):
            fibtel.fib(200)
    finally:
        fibtel.set_index_bound(saved)
