import json
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from hqgenocchi.genocchi import classical_genocchi
from hqgenocchi.padic import (
    INF,
    PadicContext,
    _integer_sum,
    _rational_sum,
    convergence_profile,
    fermionic_partial,
    fermionic_target,
    measure_check,
    padic_valuation,
)


def test_valuation_examples():
    assert padic_valuation(0, 3) == INF
    assert padic_valuation(F(9, 2), 3) == 2
    assert padic_valuation(F(5, 3), 3) == -1
    assert padic_valuation(-250, 5) == 3


def test_partial_examples():
    for N in range(5):
        assert fermionic_partial(0, 1, 1, 0, 3, N) == 1
    assert fermionic_partial(1, 1, 1, 0, 3, 2) == 4
    assert fermionic_partial(2, 1, 1, 0, 3, 2) == 36


def test_profile_examples():
    profile = convergence_profile(1, 1, 1, 0, PadicContext(3, 4))
    assert profile.target == F(-1, 2)
    assert profile.entries[1] == (2, F(4), 2)
    profile = convergence_profile(2, 1, 1, 0, PadicContext(3, 4))
    assert profile.target == 0
    assert [e[1] for e in profile.entries[:2]] == [3, 36]
    assert profile.valuations() == [1, 2, 3, 4]
    profile = convergence_profile(0, 1, 1, 0, PadicContext(5, 4))
    assert profile.valuations() == [INF] * 4


def test_classical_target_is_genocchi_number():
    for n in range(6):
        assert fermionic_target(n, 1, 1, 0) == classical_genocchi(n + 1) / (n + 1)


@pytest.mark.parametrize("p", [3, 5, 7])
@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_classical_convergence_rate(p, n):
    Nmax = 6 if p < 7 else 5
    for N, _, v in convergence_profile(n, 1, 1, 0, PadicContext(p, Nmax)).entries:
        assert v >= N - 1


@pytest.mark.parametrize("p", [3, 5])
@pytest.mark.parametrize("h", [1, 2])
def test_q_convergence_increases(p, h):
    q = 1 + p
    for n in range(4):
        vals = convergence_profile(n, h, q, 0, PadicContext(p, 5), start=2).valuations()
        finite = [v for v in vals if v != INF]
        assert finite == sorted(set(finite))
        assert all(v >= N - 1 for N, v in zip(range(2, 6), vals))


def test_cauchy_property():
    for p, q in ((3, F(4)), (3, F(7, 4)), (5, F(6)), (3, F(1))):
        for n in range(4):
            sums = [fermionic_partial(n, 2, q, 1, p, N) for N in range(1, 5)]
            for N, (a, b) in enumerate(zip(sums, sums[1:]), start=1):
                assert padic_valuation(b - a, p) >= N - 1


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 4), st.integers(1, 3), st.integers(-6, 6), st.integers(0, 3), st.integers(0, 3))
def test_integer_path_matches_rational_path(n, h, mult, x0, N):
    q = 1 + 3 * mult
    if q in (0, 1) or h < 1:
        return
    size = 3**N
    assert _integer_sum(n, h, q, x0, size) == _rational_sum(n, h, F(q), x0, size)


def test_measure_examples():
    assert measure_check(0, 1, 1, 3) == 1
    assert measure_check(1, 1, 1, 3) == -1


@pytest.mark.parametrize("p,q", [(3, F(4)), (3, F(1)), (5, F(7, 2)), (3, F(-2))])
def test_measure_additivity(p, q):
    for n in range(3):
        for x in range(p**n):
            children = sum(measure_check(x + j * p**n, n + 1, q, p) for j in range(p))
            assert children == measure_check(x, n, q, p)


def test_measure_total_mass_is_one():
    for q in (F(1), F(4), F(-5)):
        assert sum(measure_check(x, 2, q, 3) for x in range(9)) == 1


def test_profile_json():
    text = convergence_profile(1, 1, 1, 0, PadicContext(3, 2)).dumps()
    data = json.loads(text)
    assert data == [
        {"N": 1, "partial": "1/1", "valuation": 1},
        {"N": 2, "partial": "4/1", "valuation": 2},
    ]
    inf = json.loads(convergence_profile(0, 1, 1, 0, PadicContext(3, 1)).dumps())
    assert inf == [{"N": 1, "partial": "1/1", "valuation": "inf"}]


def test_rejections():
    with pytest.raises(ValueError):
        fermionic_partial(1, 1, 1, 0, 2, 2)
    with pytest.raises(ValueError):
        fermionic_partial(1, 1, 1, 0, 9, 2)
    with pytest.raises(ValueError):
        fermionic_partial(1, 1, F(1, 2), 0, 3, 2)
    with pytest.raises(ValueError):
        measure_check(9, 2, 1, 3)
    with pytest.raises(ValueError):
        PadicContext(3, 0)
    with pytest.raises(TypeError):
        fermionic_partial(1, 1, 1.0, 0, 3, 2)
