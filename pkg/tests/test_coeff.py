from fractions import Fraction

import pytest

from qsymflow.coeff import (
    ONE,
    ZERO,
    const,
    cq,
    eq,
    evaluate,
    format_ratfunc,
    is_nonnegative_integral,
    is_polynomial,
    parse_ratfunc,
    poly_to_ratfunc,
    q,
    substitute,
    t,
    to_rat,
)
from qsymflow.exceptions import CoefficientError, ParseError, PoleError


def test_reduced_representation():
    f = (q ** 2 - t ** 2) / (q - t)
    assert f == q + t
    assert is_polynomial(f)
    assert eq((q + t) / q, 1 + t / q)


def test_parse_and_format():
    assert parse_ratfunc("q^2*t + 3") == q ** 2 * t + 3
    assert parse_ratfunc("(q + t)/(1 - q)") == (q + t) / (1 - q)
    assert format_ratfunc(q + t) == "q + t"
    assert format_ratfunc(const(0)) == "0"
    assert format_ratfunc(-2 * q ** 2 + 1) == "-2*q^2 + 1"
    assert parse_ratfunc(format_ratfunc((q + 2 * t) / (q - 1))) == (q + 2 * t) / (q - 1)


@pytest.mark.parametrize("text", ["x + 1", "q +* t", "", "q^^2"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_ratfunc(text)


def test_parse_error_column():
    with pytest.raises(ParseError) as info:
        parse_ratfunc("q + z")
    assert info.value.column == 5


def test_evaluate_and_poles():
    assert evaluate((q + t) / q, 2, 1) == Fraction(3, 2)
    with pytest.raises(PoleError) as info:
        evaluate(1 / (q + t), 1, -1)
    assert info.value.point == ("1", "-1")


def test_substitute():
    assert substitute(q * t, q + 1, -1) == -q - 1
    Q = q / (q + t)
    assert substitute(q + t, -Q, Q - 1) == const(-1)
    with pytest.raises(PoleError):
        substitute(1 / q, 0, 1)


def test_substitute_at_zero():
    assert substitute(q + t, 1, 0) == ONE
    assert substitute(q + t, 0, 0) == ZERO
    assert substitute(3 + q * t ** 2, 0, 5) == const(3)
    assert substitute((1 - q) / (1 + t), 0, 0) == ONE
    with pytest.raises(PoleError):
        substitute(1 / (q + t), 0, 0)


def test_cq():
    assert poly_to_ratfunc(cq(3, 0)) == ONE
    assert poly_to_ratfunc(cq(2, 2)) == (1 - q ** 2) * (1 - q)
    assert poly_to_ratfunc(cq(1, 2)) == ZERO
    with pytest.raises(ValueError):
        cq(-1, 0)


def test_positivity_predicate():
    assert is_nonnegative_integral(2 * q * t + t ** 3 + 1)
    assert not is_nonnegative_integral(q - t)
    assert not is_nonnegative_integral(q / 2)
    assert not is_nonnegative_integral(1 / q)


def test_to_rat():
    assert to_rat(const(Fraction(3, 4))) == Fraction(3, 4)
    assert to_rat(ZERO) == 0
    with pytest.raises(CoefficientError):
        to_rat(q)
