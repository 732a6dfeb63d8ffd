from fractions import Fraction as F
from math import gcd

import pytest
from hypothesis import given, strategies as st

from hqgenocchi.qcore import (
    QPoint,
    as_rat,
    bernstein,
    binom,
    classical_bernstein,
    format_rat,
    parse_rat,
    q_number,
    q_number_neg,
    q_pow,
)


def test_q_pow_examples():
    assert q_pow(QPoint(F(2, 3), 3), F(1, 3)) == F(2, 3)
    assert q_pow(QPoint(F(1, 2), 1), 0) == 1
    assert q_pow(QPoint(F(2, 3), 3), F(-2, 3)) == F(9, 4)


def test_q_pow_rejects_off_scale_exponent():
    with pytest.raises(ValueError):
        q_pow(QPoint(F(1, 2), 2), F(1, 3))


def test_q_number_examples():
    half = QPoint(F(1, 2))
    assert q_number(0, half) == 0
    assert q_number(3, half) == F(7, 4)
    assert q_number(F(1, 2), QPoint(F(1, 2), 2)) == F(2, 3)


def test_q_number_neg_examples():
    half = QPoint(F(1, 2))
    assert q_number_neg(1, QPoint(F(5, 7))) == 1
    assert q_number_neg(2, half) == F(1, 2)
    assert q_number_neg(3, half) == F(3, 4)


def test_binom():
    assert binom(5, 2) == 10
    assert binom(9, 0) == 1
    assert binom(3, 5) == 0


def test_bernstein_examples():
    half = QPoint(F(1, 2))
    assert bernstein(0, 0, 3, QPoint(F(3, 5))) == 1
    assert bernstein(1, 2, 1, QPoint(F(2, 7))) == 0
    assert bernstein(1, 3, 2, half) == F(9, 8)
    with pytest.raises(ValueError):
        bernstein(3, 2, 0, half)


def test_bernstein_matches_inverse_base_definition():
    q = QPoint(F(2, 3), 2)
    for n in range(5):
        for k in range(n + 1):
            for x in (F(0), F(1, 2), F(3, 2), F(-1)):
                expected = (
                    binom(n, k) * q_number(x, q) ** k * q_number(1 - x, q.inverse()) ** (n - k)
                )
                assert bernstein(k, n, x, q) == expected


@given(st.integers(0, 25), st.fractions(F(1, 100), F(99, 100)))
def test_q_number_is_geometric_sum(x, q):
    assert q_number(x, QPoint(q)) == sum(q**i for i in range(x))


@given(st.integers(0, 25), st.fractions(F(1, 100), F(99, 100)))
def test_q_number_neg_is_alternating_sum(x, q):
    assert q_number_neg(x, QPoint(q)) == sum((-q) ** i for i in range(x))


@pytest.mark.parametrize("t", [F(1, 3), F(1, 2), F(3, 5)])
def test_bernstein_reflection(t):
    q = QPoint(t, 2)
    for n in range(7):
        for k in range(n + 1):
            for x in (F(0), F(1, 2), F(1), F(2)):
                assert bernstein(k, n, x, q) == bernstein(n - k, n, 1 - x, q.inverse())


def test_bernstein_classical_limit():
    q = QPoint(1 - F(1, 4 * 10**6), 4)  # q close to 1 - 1e-6
    for n in range(6):
        for k in range(n + 1):
            for x in (F(0), F(1, 4), F(1, 2), F(1)):
                gap = bernstein(k, n, x, q) - classical_bernstein(k, n, x)
                assert abs(gap) < F(1, 10**4)


def test_q_number_classical_limit():
    q = QPoint(1 - F(1, 10**6))
    for x in range(11):
        assert abs(q_number(x, q) - x) < F(1, 10**4)


def test_qpoint_invariants():
    for t, b in ((F(1), 1), (F(0), 1), (F(-1, 2), 1), (F(1, 2), 0)):
        with pytest.raises(ValueError):
            QPoint(t, b)
    q = QPoint(F(3, 2))
    assert q.value == F(3, 2) and q.inverse().value == F(2, 3)
    assert q.power(3) == QPoint(F(3, 2), 3)


def test_qpoint_from_q_roots():
    assert QPoint.from_q(F(1, 4), 2) == QPoint(F(1, 2), 2)
    assert QPoint.from_q(F(8, 27), 3).t == F(2, 3)
    big = F(7**40, 11**40)
    assert QPoint.from_q(big, 8).t == F(7**5, 11**5)
    with pytest.raises(ValueError):
        QPoint.from_q(F(1, 2), 2)


def test_serialization():
    assert format_rat(F(-4, 5)) == "-4/5"
    assert format_rat(F(7)) == "7/1"
    assert parse_rat("-4/5") == F(-4, 5)
    q = QPoint(F(2, 3), 3)
    assert q.to_json() == {"t": "2/3", "b": 3}
    assert QPoint.from_json(q.to_json()) == q


def test_exact_routes_reject_floats():
    with pytest.raises(TypeError):
        as_rat(0.5)
    with pytest.raises(ValueError):
        parse_rat("0.5")


@given(st.fractions(), st.fractions())
def test_rationals_stay_normalized(a, b):
    for r in (a + b, a * b, a - b):
        assert r.denominator > 0
        assert gcd(abs(r.numerator), r.denominator) == 1
