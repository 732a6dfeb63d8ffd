"""Exact rational arithmetic helpers, q-numbers and q-Bernstein polynomials.

All scalars are :class:`fractions.Fraction`.  A base parameter ``q`` is held as
a :class:`QPoint` ``q = t**b`` with rational ``t`` so that every power
``q**(m/b)`` is the exact rational ``t**m``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Union

__all__ = [
    "Rat",
    "QPoint",
    "as_rat",
    "format_rat",
    "parse_rat",
    "q_pow",
    "q_number",
    "q_number_neg",
    "binom",
    "bernstein",
    "classical_bernstein",
]

Rat = Fraction
Number = Union[int, Fraction]


def as_rat(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected: exact routes never silently absorb rounding.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def parse_rat(text: str) -> Fraction:
    text = text.strip()
    if not text or any(c in text for c in ".eE"):
        raise ValueError(f"not an exact rational: {text!r}")
    return Fraction(text)


def format_rat(r: Fraction) -> str:
    """Serialize as ``"numerator/denominator"``, denominator always shown."""
    r = Fraction(r)
    return f"{r.numerator}/{r.denominator}"


@dataclass(frozen=True)
class QPoint:
    """The value ``q = t**b``.

    ``b`` is the exponent scale: an exponent ``x`` is usable with this point
    whenever ``x*b`` is an integer.
    """

    t: Fraction
    b: int = 1

    def __post_init__(self):
        t = as_rat(self.t)
        object.__setattr__(self, "t", t)
        if not isinstance(self.b, int) or self.b < 1:
            raise ValueError(f"scale b must be a positive integer, got {self.b!r}")
        if t <= 0 or t == 1:
            raise ValueError(f"t must be positive and different from 1, got {t}")

    @classmethod
    def from_q(cls, q, b: int = 1) -> "QPoint":
        """Build the point for ``q`` on scale ``b``; ``t`` must be an exact b-th root."""
        q = as_rat(q)
        if b == 1:
            return cls(q, 1)
        num, den = _exact_root(q.numerator, b), _exact_root(q.denominator, b)
        if num is None or den is None:
            raise ValueError(f"{q} has no rational {b}-th root")
        return cls(Fraction(num, den), b)

    @property
    def value(self) -> Fraction:
        return self.t**self.b

    def inverse(self) -> "QPoint":
        return QPoint(1 / self.t, self.b)

    def power(self, a: int) -> "QPoint":
        """The point ``q**a`` on scale ``a*b`` (same ``t``), for positive ``a``."""
        if a < 1:
            raise ValueError("power must be a positive integer")
        return QPoint(self.t, self.b * a)

    def scaled(self, e) -> int:
        """Integer count of ``1/b`` units in the exponent ``e``."""
        e = as_rat(e)
        m = e * self.b
        if m.denominator != 1:
            raise ValueError(f"exponent {e} is not representable on scale b={self.b}")
        return m.numerator

    def to_json(self) -> dict:
        return {"t": format_rat(self.t), "b": self.b}

    @classmethod
    def from_json(cls, obj: dict) -> "QPoint":
        return cls(parse_rat(obj["t"]), int(obj["b"]))


def _exact_root(n: int, k: int):
    if n < 0:
        return None
    r = round(n ** (1.0 / k)) if n else 0
    for c in (r - 1, r, r + 1):
        if c >= 0 and c**k == n:
            return c
    # float guess can miss for very large n; fall back to bisection
    lo, hi = 0, 1 << (n.bit_length() // k + 1)
    while lo <= hi:
        mid = (lo + hi) // 2
        p = mid**k
        if p == n:
            return mid
        if p < n:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def q_pow(q: QPoint, e) -> Fraction:
    """``q**e`` exactly; ``e`` must sit on the scale of ``q``."""
    return q.t ** q.scaled(e)


def q_number(x, q: QPoint) -> Fraction:
    """The q-integer ``[x]_q = (1 - q**x) / (1 - q)``."""
    return (1 - q_pow(q, x)) / (1 - q.value)


def q_number_neg(x: int, q: QPoint) -> Fraction:
    """``[x]_{-q} = (1 - (-q)**x) / (1 + q)`` for integer ``x >= 0``."""
    if x < 0:
        raise ValueError("x must be a nonnegative integer")
    qv = q.value
    return (1 - (-qv) ** x) / (1 + qv)


def binom(n: int, k: int) -> int:
    if k < 0 or n < 0:
        return 0
    return comb(n, k)


def bernstein(k: int, n: int, x, q: QPoint) -> Fraction:
    """Kim's q-Bernstein polynomial ``C(n,k) [x]_q**k [1-x]_{1/q}**(n-k)``.

    ``[1-x]_{1/q}`` is evaluated as ``(q - q**x)/(q - 1)`` which needs no
    extra scale for ``1/q``.
    """
    if k < 0 or n < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    qv = q.value
    qx = q_pow(q, x)
    left = (1 - qx) / (1 - qv)
    right = (qv - qx) / (qv - 1)
    return comb(n, k) * left**k * right ** (n - k)


def classical_bernstein(k: int, n: int, x) -> Fraction:
    x = as_rat(x)
    return comb(n, k) * x**k * (1 - x) ** (n - k)
