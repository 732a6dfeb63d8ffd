"""Classical, q- and (h,q)-Genocchi numbers and polynomials.

Indexing follows the sequences themselves: every function returns
``G_n`` (never ``G_{n+1}/(n+1)``).  Binomial expansions of the umbral symbol
send the ``G**0`` term to ``G_0 = 0``.

The ``*_sides`` functions return the two sides of an identity as exact
rationals; equality is checked by the caller.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import List, Sequence, Tuple

from .qcore import QPoint, as_rat, q_number, q_pow

__all__ = [
    "GenSpec",
    "GenCache",
    "classical_genocchi",
    "classical_genocchi_poly",
    "q_genocchi",
    "hq_genocchi_closed",
    "hq_genocchi_rec",
    "hq_genocchi_poly",
    "hq_genocchi_poly_series",
    "convolution_value",
    "reflection_sides",
    "recurrence_sides",
    "umbral_sides",
    "value_at_two_sides",
    "reflected_weight_moment",
    "reflected_integral_sides",
    "reflected_moment_sides",
    "bernstein_moment_direct",
    "bernstein_moment_reflected",
    "bernstein_moment_printed",
    "k0_corollary_sides",
    "product_moment_sides",
    "product_moment_direct_printed",
    "addition_sides",
    "multiplication_sides",
    "power_sum_S",
    "symmetric_relation_sides",
    "genocchi_symmetry_sides",
]

Pair = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class GenSpec:
    h: int
    q: QPoint

    def __post_init__(self):
        if not isinstance(self.h, int):
            raise TypeError("h must be an integer")

    def with_q(self, q: QPoint) -> "GenSpec":
        return GenSpec(self.h, q)

    @property
    def two_q(self) -> Fraction:
        """``[2]_q = 1 + q``."""
        return 1 + self.q.value


# --------------------------------------------------------------------------
# classical and Kim q-Genocchi numbers

_classical: List[Fraction] = [Fraction(0)]
_classical_lock = threading.Lock()


def classical_genocchi(n: int) -> Fraction:
    """Genocchi number from ``(G+1)**n + G_n = 2*[n == 1]``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    with _classical_lock:
        while len(_classical) <= n:
            m = len(_classical)
            acc = sum(comb(m, k) * _classical[k] for k in range(m))
            _classical.append((2 * (m == 1) - acc) / 2)
        return _classical[n]


def classical_genocchi_poly(n: int, x) -> Fraction:
    """``G_n(x) = sum_k C(n,k) G_k x**(n-k)``."""
    x = as_rat(x)
    return sum(
        (comb(n, k) * classical_genocchi(k) * x ** (n - k) for k in range(n + 1)),
        Fraction(0),
    )


@lru_cache(maxsize=None)
def _q_genocchi_table(q: QPoint, n: int) -> Tuple[Fraction, ...]:
    qv = q.value
    if n == 0:
        return (Fraction(0),)
    prev = _q_genocchi_table(q, n - 1)
    # q * sum_k C(n,k) q**k G_k + G_n = [2]_q [n == 1]
    acc = sum((comb(n, k) * qv**k * prev[k] for k in range(n)), Fraction(0))
    rhs = (1 + qv) * (n == 1) - qv * acc
    return prev + (rhs / (1 + qv ** (n + 1)),)


def q_genocchi(n: int, q: QPoint) -> Fraction:
    """Kim's q-Genocchi number: ``q(qG+1)**n + G_n = [2]_q*[n == 1]``, ``G_0 = 0``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _q_genocchi_table(q, n)[n]


# --------------------------------------------------------------------------
# (h,q)-Genocchi numbers and polynomials


@lru_cache(maxsize=None)
def _poly_coeffs(n: int, h: int, q: QPoint) -> Tuple[Fraction, ...]:
    # G_n(x) = sum_k c_k (q**x)**k with c_k = n [2]_q (1-q)**(1-n) C(n-1,k) (-1)**k / (1+q**(h+k))
    qv = q.value
    front = n * (1 + qv) / (1 - qv) ** (n - 1)
    return tuple(
        front * comb(n - 1, k) * (-1) ** k / (1 + qv ** (h + k)) for k in range(n)
    )


def hq_genocchi_closed(n: int, spec: GenSpec) -> Fraction:
    """(h,q)-Genocchi number from the finite closed sum; ``G_0 = 0``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return Fraction(0)
    return sum(_poly_coeffs(n, spec.h, spec.q), Fraction(0))


class GenCache:
    """Append-only table of (h,q)-Genocchi numbers filled by the umbral recurrence.

    Readers of filled entries need no lock; extension is serialized.
    """

    def __init__(self, spec: GenSpec):
        self.spec = spec
        self.values: List[Fraction] = [Fraction(0)]
        self._lock = threading.Lock()

    def __len__(self):
        return len(self.values)

    def get(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("n must be nonnegative")
        if n < len(self.values):
            return self.values[n]
        with self._lock:
            self._extend(n)
        return self.values[n]

    def _extend(self, n: int) -> None:
        h, qv = self.spec.h, self.spec.q.value
        vals = self.values
        lead = qv ** (h - 1)
        while len(vals) <= n:
            m = len(vals)
            acc = sum((comb(m, k) * qv**k * vals[k] for k in range(m)), Fraction(0))
            rhs = (1 + qv) * (m == 1) - lead * acc
            vals.append(rhs / (1 + qv ** (h + m - 1)))


_caches: dict = {}
_caches_lock = threading.Lock()


def _cache_for(spec: GenSpec) -> GenCache:
    with _caches_lock:
        cache = _caches.get(spec)
        if cache is None:
            cache = _caches[spec] = GenCache(spec)
        return cache


def hq_genocchi_rec(n: int, spec: GenSpec, cache: GenCache | None = None) -> Fraction:
    """(h,q)-Genocchi number from ``q**(h-1) (qG+1)**n + G_n = [2]_q*[n == 1]``."""
    if cache is None:
        cache = _cache_for(spec)
    elif cache.spec != spec:
        raise ValueError("cache belongs to a different (h, q)")
    return cache.get(n)


def hq_genocchi_poly(n: int, x, spec: GenSpec) -> Fraction:
    """(h,q)-Genocchi polynomial ``G_n(x)``; ``x`` must sit on the scale of ``spec.q``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return Fraction(0)
    qx = q_pow(spec.q, x)
    total = Fraction(0)
    power = Fraction(1)
    for c in _poly_coeffs(n, spec.h, spec.q):
        total += c * power
        power *= qx
    return total


def hq_genocchi_poly_series(n: int, x, spec: GenSpec, tol: float = 1e-12) -> float:
    """Float value of ``G_n(x)`` from ``n [2]_q sum_l (-1)**l q**(hl) [x+l]_q**(n-1)``.

    Needs ``0 < q < 1`` and ``h >= 1``.  The sum stops at the first ``L`` where
    the geometric tail bound drops below ``tol``.
    """
    qv = spec.q.value
    if spec.h < 1 or not 0 < qv < 1:
        raise ValueError("series route requires h >= 1 and 0 < q < 1")
    if n == 0:
        return 0.0
    qf = float(qv)
    qh = qf**spec.h
    two_q = 1.0 + qf
    scale = n * two_q * (1.0 - qf) ** (1 - n) / (1.0 - qh)
    qx = float(q_pow(spec.q, x))
    terms = []
    L = 0
    ql = 1.0  # q**l
    weight = 1.0  # q**(h*l)
    while True:
        bracket = (1.0 - qx * ql) / (1.0 - qf)
        terms.append((-1) ** L * weight * bracket ** (n - 1))
        L += 1
        ql *= qf
        weight *= qh
        if scale * weight < tol:
            break
    return n * two_q * math.fsum(terms)


def convolution_value(n: int, x, spec: GenSpec) -> Fraction:
    """``sum_k C(n,k) q**((k-1)x) G_k [x]_q**(n-k)`` from the numbers alone."""
    qx = q_pow(spec.q, x)
    bx = q_number(x, spec.q)
    return sum(
        (
            comb(n, k) * qx ** (k - 1) * hq_genocchi_closed(k, spec) * bx ** (n - k)
            for k in range(1, n + 1)
        ),
        Fraction(0),
    )


def reflection_sides(n: int, x, spec: GenSpec) -> Pair:
    """``G_{n+1,1/q}(1-x)`` against ``(-1)**n q**(h+n-1) G_{n+1,q}(x)``."""
    x = as_rat(x)
    left = hq_genocchi_poly(n + 1, 1 - x, spec.with_q(spec.q.inverse()))
    right = (-1) ** n * spec.q.value ** (spec.h + n - 1) * hq_genocchi_poly(n + 1, x, spec)
    return left, right


def recurrence_sides(n: int, spec: GenSpec) -> Pair:
    """``q**h G_n(1) + G_n`` against ``[2]_q*[n == 1]``."""
    left = spec.q.value**spec.h * hq_genocchi_poly(n, 1, spec) + hq_genocchi_closed(n, spec)
    return left, spec.two_q * (n == 1)


def umbral_sides(n: int, spec: GenSpec) -> Pair:
    """Umbral recurrence evaluated on closed-form numbers (no recurrence solve)."""
    qv = spec.q.value
    acc = sum(
        (comb(n, k) * qv**k * hq_genocchi_closed(k, spec) for k in range(n + 1)),
        Fraction(0),
    )
    left = qv ** (spec.h - 1) * acc + hq_genocchi_closed(n, spec)
    return left, spec.two_q * (n == 1)


def value_at_two_sides(n: int, spec: GenSpec) -> Pair:
    """``G_{n+1}(2)`` against ``(n+1) q**-h [2]_q + q**-2h G_{n+1}``, for ``n >= 1``."""
    if n < 1:
        raise ValueError("identity holds for n >= 1 only")
    qv, h = spec.q.value, spec.h
    left = hq_genocchi_poly(n + 1, 2, spec)
    right = (n + 1) * qv ** (-h) * spec.two_q + qv ** (-2 * h) * hq_genocchi_closed(n + 1, spec)
    return left, right


@lru_cache(maxsize=None)
def _reflected_weight_moment(m: int, h: int, q: QPoint) -> Fraction:
    qv = q.value
    total = sum(
        (comb(m, j) * (-1) ** j * qv ** (m - j) / (1 + qv ** (h + j)) for j in range(m + 1)),
        Fraction(0),
    )
    return (1 + qv) * total / (qv - 1) ** m


def reflected_weight_moment(m: int, spec: GenSpec) -> Fraction:
    """Fermionic q-integral of ``q**((h-1)x) [1-x]_{1/q}**m``, exactly."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return _reflected_weight_moment(m, spec.h, spec.q)


def reflected_moment_sides(m: int, spec: GenSpec) -> Pair:
    """Reflected moment against ``[2]_q + q**(h+1) G_{m+1,1/q}/(m+1)``, for ``m >= 1``."""
    if m < 1:
        raise ValueError("identity holds for m >= 1 only")
    inv = spec.with_q(spec.q.inverse())
    right = spec.two_q + spec.q.value ** (spec.h + 1) * hq_genocchi_closed(m + 1, inv) / (m + 1)
    return reflected_weight_moment(m, spec), right


def reflected_integral_sides(n: int, spec: GenSpec) -> Pair:
    """``(n+1) q**(h-1)`` times the reflected moment against ``G_{n+1,1/q}(2)``."""
    if n < 1:
        raise ValueError("identity holds for n >= 1 only")
    left = (n + 1) * spec.q.value ** (spec.h - 1) * reflected_weight_moment(n, spec)
    right = hq_genocchi_poly(n + 1, 2, spec.with_q(spec.q.inverse()))
    return left, right


def _moment(j: int, spec: GenSpec) -> Fraction:
    # integral of q**((h-1)x) [x]_q**j
    return hq_genocchi_closed(j + 1, spec) / (j + 1)


def bernstein_moment_direct(k: int, n: int, spec: GenSpec) -> Fraction:
    """Fermionic q-integral of ``B_{k,n}(x,q) q**((h-1)x)`` via powers of ``[x]_q``."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    return comb(n, k) * sum(
        (comb(n - k, l) * (-1) ** l * _moment(l + k, spec) for l in range(n - k + 1)),
        Fraction(0),
    )


def bernstein_moment_reflected(k: int, n: int, spec: GenSpec) -> Fraction:
    """Same integral via powers of ``[1-x]_{1/q}``; requires ``k < n``."""
    if not 0 <= k < n:
        raise ValueError(f"need 0 <= k < n, got k={k}, n={n}")
    return comb(n, k) * sum(
        (
            comb(k, l) * (-1) ** (k + l) * reflected_weight_moment(n - l, spec)
            for l in range(k + 1)
        ),
        Fraction(0),
    )


def bernstein_moment_printed(k: int, n: int, spec: GenSpec) -> Fraction:
    """Reflected route with ``G_{n+1,1/q}`` frozen inside the sum.

    Kept to demonstrate that this index does not reproduce the direct route.
    """
    if not 0 <= k < n:
        raise ValueError(f"need 0 <= k < n, got k={k}, n={n}")
    inv = spec.with_q(spec.q.inverse())
    g = hq_genocchi_closed(n + 1, inv)
    qh1 = spec.q.value ** (spec.h + 1)
    return comb(n, k) * sum(
        (
            comb(k, l) * (-1) ** (k + l) * (spec.two_q + qh1 * g / (n - l + 1))
            for l in range(k + 1)
        ),
        Fraction(0),
    )


def k0_corollary_sides(total: int, spec: GenSpec) -> Pair:
    """``sum_l C(N,l) (-1)**l G_{l+1}/(l+1)`` against ``[2]_q + q**(h+1) G_{N+1,1/q}/(N+1)``."""
    if total < 1:
        raise ValueError("identity holds for N >= 1 only")
    left = sum(
        (comb(total, l) * (-1) ** l * _moment(l, spec) for l in range(total + 1)),
        Fraction(0),
    )
    inv = spec.with_q(spec.q.inverse())
    right = spec.two_q + spec.q.value ** (spec.h + 1) * hq_genocchi_closed(total + 1, inv) / (total + 1)
    return left, right


def _product_prefix(k: int, ns: Sequence[int]) -> Tuple[int, int, int]:
    s = len(ns)
    if s < 1:
        raise ValueError("need at least one degree")
    if k < 0 or any(n < k for n in ns):
        raise ValueError("every degree must be >= k >= 0")
    total = sum(ns)
    if total <= s * k:
        raise ValueError("need sum(ns) > s*k")
    return math.prod(comb(n, k) for n in ns), s * k, total


def product_moment_sides(k: int, ns: Sequence[int], spec: GenSpec) -> Pair:
    """Integral of ``prod_i B_{k,n_i}(x,q) q**((h-1)x)`` by the direct and reflected routes."""
    front, sk, total = _product_prefix(k, ns)
    rest = total - sk
    direct = front * sum(
        (comb(rest, l) * (-1) ** l * _moment(l + sk, spec) for l in range(rest + 1)),
        Fraction(0),
    )
    reflected = front * sum(
        (
            comb(sk, l) * (-1) ** (sk + l) * reflected_weight_moment(total - l, spec)
            for l in range(sk + 1)
        ),
        Fraction(0),
    )
    return direct, reflected


def product_moment_direct_printed(k: int, ns: Sequence[int], spec: GenSpec) -> Fraction:
    """Direct route with the ``l = 0`` term dropped from the sum."""
    front, sk, total = _product_prefix(k, ns)
    rest = total - sk
    return front * sum(
        (comb(rest, l) * (-1) ** l * _moment(l + sk, spec) for l in range(1, rest + 1)),
        Fraction(0),
    )


def addition_sides(n: int, x, y, spec: GenSpec) -> Pair:
    """``G_n(x+y)`` against ``sum_j C(n,j) q**((j-1)y) G_j(x) [y]_q**(n-j)``."""
    x, y = as_rat(x), as_rat(y)
    qy = q_pow(spec.q, y)
    by = q_number(y, spec.q)
    right = sum(
        (
            comb(n, j) * qy ** (j - 1) * hq_genocchi_poly(j, x, spec) * by ** (n - j)
            for j in range(1, n + 1)
        ),
        Fraction(0),
    )
    return hq_genocchi_poly(n, x + y, spec), right


def _require_odd(*values: int) -> None:
    for v in values:
        if v < 1 or v % 2 == 0:
            raise ValueError(f"expected an odd positive integer, got {v}")


def multiplication_sides(n: int, x, a: int, spec: GenSpec) -> Pair:
    """``G_{n,q}(x)`` against its expansion over ``G_{n,q**a}((x+i)/a)``, odd ``a``."""
    _require_odd(a)
    x = as_rat(x)
    q, h = spec.q, spec.h
    qa = spec.with_q(q.power(a))
    qv = q.value
    acc = sum(
        (
            (-1) ** i * qv ** (i * h) * hq_genocchi_poly(n, (x + i) / a, qa)
            for i in range(a)
        ),
        Fraction(0),
    )
    right = (1 + qv) / (1 + qv**a) * q_number(a, q) ** (n - 1) * acc
    return hq_genocchi_poly(n, x, spec), right


def power_sum_S(m: int, i: int, a: int, q: QPoint) -> Fraction:
    """``S = sum_{j<a} (-1)**j q**(j*i) [j]_q**m`` with ``0**0 = 1``."""
    if m < 0 or a < 1:
        raise ValueError("need m >= 0 and a >= 1")
    qv = q.value
    return sum(
        ((-1) ** j * qv ** (j * i) * q_number(j, q) ** m for j in range(a)),
        Fraction(0),
    )


def _symmetric_relation_half(m: int, x, a: int, b: int, spec: GenSpec) -> Fraction:
    q, h = spec.q, spec.h
    qa = spec.with_q(q.power(a))
    qb = q.power(b)
    na, nb = q_number(a, q), q_number(b, q)
    acc = Fraction(0)
    for i in range(1, m + 1):  # i = 0 carries G_0 = 0
        acc += (
            comb(m, i)
            * na ** (i - 1)
            * nb ** (m - i)
            * hq_genocchi_poly(i, b * x, qa)
            * power_sum_S(m - i, h + i - 1, a, qb)
        )
    return (1 + qb.value) * acc


def symmetric_relation_sides(m: int, x, a: int, b: int, spec: GenSpec) -> Pair:
    """Power-sum form of the (a, b) symmetry; both sides must agree for odd ``a``, ``b``."""
    _require_odd(a, b)
    x = as_rat(x)
    return (
        _symmetric_relation_half(m, x, a, b, spec),
        _symmetric_relation_half(m, x, b, a, spec),
    )


def _genocchi_symmetry_half(m: int, x, a: int, b: int, spec: GenSpec) -> Fraction:
    q, h = spec.q, spec.h
    qa = spec.with_q(q.power(a))
    qv = q.value
    acc = sum(
        (
            (-1) ** i * qv ** (i * b * h) * hq_genocchi_poly(m, b * x + Fraction(b * i, a), qa)
            for i in range(a)
        ),
        Fraction(0),
    )
    return (1 + qv**b) * q_number(a, q) ** (m - 1) * acc


def genocchi_symmetry_sides(m: int, x, a: int, b: int, spec: GenSpec) -> Pair:
    """Shifted-argument (a, b) symmetry of ``G_m`` for odd ``a``, ``b``."""
    _require_odd(a, b)
    x = as_rat(x)
    return (
        _genocchi_symmetry_half(m, x, a, b, spec),
        _genocchi_symmetry_half(m, x, b, a, spec),
    )
