"""Fermionic Riemann sums over residues mod p**N, computed as exact rationals.

Convergence is measured by the p-adic valuation of the gap between a partial
sum and its exact limit.  No floating p-adic representation is used.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import List, Tuple, Union

from .genocchi import GenSpec, classical_genocchi_poly, hq_genocchi_poly
from .qcore import QPoint, as_rat, format_rat

__all__ = [
    "INF",
    "PadicContext",
    "PadicProfile",
    "padic_valuation",
    "fermionic_partial",
    "fermionic_target",
    "convergence_profile",
    "measure_check",
]

INF = math.inf
Valuation = Union[int, float]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


def _check_prime(p: int) -> None:
    if not isinstance(p, int) or p == 2 or not _is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p!r}")


def _int_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def padic_valuation(r, p: int) -> Valuation:
    """``v_p(r)``; ``math.inf`` for zero."""
    r = as_rat(r)
    if r == 0:
        return INF
    return _int_valuation(r.numerator, p) - _int_valuation(r.denominator, p)


def _check_admissible(q: Fraction, p: int) -> None:
    if q != 1 and padic_valuation(q - 1, p) < 1:
        raise ValueError(f"q={q} is not p-adically close to 1 for p={p}")


@dataclass(frozen=True)
class PadicContext:
    p: int
    Nmax: int

    def __post_init__(self):
        _check_prime(self.p)
        if self.Nmax < 1:
            raise ValueError("Nmax must be >= 1")


def fermionic_partial(n: int, h: int, q, x0: int, p: int, N: int) -> Fraction:
    """Riemann sum of ``q**((h-1)y) [x0+y]_q**n`` against the ``-q`` measure at level ``p**N``.

    ``q = 1`` is the classical limit: weights ``(-1)**y`` and integrand ``(x0+y)**n``.
    """
    _check_prime(p)
    q = as_rat(q)
    _check_admissible(q, p)
    if n < 0 or N < 0 or x0 < 0:
        raise ValueError("n, N and x0 must be nonnegative")
    size = p**N
    if q == 1:
        return Fraction(sum((-1) ** y * (x0 + y) ** n for y in range(size)))
    size_pow = q**size
    norm = (1 + q) / (1 + size_pow)
    if q.denominator == 1 and h >= 1:
        return norm * _integer_sum(n, h, q.numerator, x0, size)
    return norm * _rational_sum(n, h, q, x0, size)


def _rational_sum(n: int, h: int, q: Fraction, x0: int, size: int) -> Fraction:
    total = Fraction(0)
    qy = q**x0
    step = -(q**h)
    weight = Fraction(1)
    for _ in range(size):
        total += weight * ((1 - qy) / (1 - q)) ** n
        qy *= q
        weight *= step
    return total


def _integer_sum(n: int, h: int, q: int, x0: int, size: int) -> int:
    # (q-1)**n [x0+y]_q**n = sum_k C(n,k) (-1)**(n-k) q**(k(x0+y)); each k-series
    # is summed over y by Horner with a small multiplier, keeping every step linear.
    total = 0
    for k in range(n + 1):
        ratio = -(q ** (h + k))
        acc = 0
        for _ in range(size):
            acc = acc * ratio + 1
        total += comb(n, k) * (-1) ** (n - k) * q ** (k * x0) * acc
    # exact division: each [x0+y]_q is an integer when q is
    return total // (q - 1) ** n


def fermionic_target(n: int, h: int, q, x0: int) -> Fraction:
    """Exact limit of :func:`fermionic_partial`: ``G_{n+1}(x0)/(n+1)``."""
    q = as_rat(q)
    if q == 1:
        return classical_genocchi_poly(n + 1, x0) / (n + 1)
    return hq_genocchi_poly(n + 1, x0, GenSpec(h, QPoint(q, 1))) / (n + 1)


@dataclass
class PadicProfile:
    p: int
    target: Fraction
    entries: List[Tuple[int, Fraction, Valuation]] = field(default_factory=list)

    def valuations(self) -> List[Valuation]:
        return [v for _, _, v in self.entries]

    def to_json(self) -> list:
        return [
            {
                "N": N,
                "partial": format_rat(partial),
                "valuation": "inf" if v == INF else int(v),
            }
            for N, partial, v in self.entries
        ]

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def convergence_profile(n: int, h: int, q, x0: int, ctx: PadicContext,
                        start: int = 1) -> PadicProfile:
    """Partial sums for ``N = start..Nmax`` with the valuation of their error."""
    target = fermionic_target(n, h, q, x0)
    profile = PadicProfile(ctx.p, target)
    for N in range(start, ctx.Nmax + 1):
        partial = fermionic_partial(n, h, q, x0, ctx.p, N)
        profile.entries.append((N, partial, padic_valuation(partial - target, ctx.p)))
    return profile


def measure_check(x: int, n_level: int, q, p: int) -> Fraction:
    """Mass ``(1+q)(-q)**x / (1 + q**(p**n))`` of the ball ``x + p**n Z_p``."""
    _check_prime(p)
    q = as_rat(q)
    _check_admissible(q, p)
    if n_level < 0 or not 0 <= x < p**n_level:
        raise ValueError(f"x must lie in [0, p**n), got x={x}")
    return (1 + q) * (-q) ** x / (1 + q ** (p**n_level))
