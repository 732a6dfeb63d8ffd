"""Floating-point evaluation of the (h,q)-zeta function.

``zeta(s, x) = [2]_q * sum_m (-1)**m q**(m h) / [m + x]_q**s``

For ``h >= 1`` and ``0 < q < 1`` the factor ``q**(m h)`` decays geometrically
while ``[m + x]_q`` stays inside ``[[x]_q, 1/(1-q))``, so the series converges
absolutely for every complex ``s``.  ``h = 0`` is rejected.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .genocchi import GenSpec, hq_genocchi_poly
from .qcore import QPoint

__all__ = [
    "ZetaParams",
    "DEFAULT_TOL",
    "zeta_eval",
    "zeta_partial",
    "zeta_terms_needed",
    "interpolation_sides",
    "zeta_symmetry_sides",
    "distribution_sides",
    "complex_to_json",
]

DEFAULT_TOL = 1e-12


@dataclass(frozen=True)
class ZetaParams:
    q: float
    h: int
    x: float

    def __post_init__(self):
        if not isinstance(self.h, int) or self.h < 1:
            raise ValueError(f"h must be an integer >= 1, got {self.h!r}")
        if not 0.0 < float(self.q) < 1.0:
            raise ValueError(f"q must lie in (0, 1), got {self.q!r}")
        if float(self.x) < 0.0:
            raise ValueError(f"x must be nonnegative, got {self.x!r}")


def _nonpositive_integer(s: complex) -> int | None:
    if s.imag == 0 and s.real <= 0 and float(s.real).is_integer():
        return int(-s.real)
    return None


class _Series:
    """Terms and tail bound of the zeta series at one ``(s, params)``."""

    def __init__(self, s, params: ZetaParams):
        s = complex(s)
        if not (math.isfinite(s.real) and math.isfinite(s.imag)):
            raise ValueError("s must be finite")
        self.s = s
        self.q, self.h, x = float(params.q), params.h, float(params.x)
        self.neg = _nonpositive_integer(s)
        if x <= 0.0 and self.neg is None:
            raise ValueError("x must be positive unless s is a nonpositive integer")
        self.qh = self.q**self.h
        self.inv_gap = 1.0 / (1.0 - self.q)
        self.qx = self.q**x

    def bracket(self, m: int) -> float:
        return (1.0 - self.qx * self.q**m) * self.inv_gap

    def term(self, m: int) -> complex:
        y = self.bracket(m)
        sign = -1.0 if m % 2 else 1.0
        if self.neg is not None:
            return complex(sign * self.qh**m * y**self.neg)
        return sign * self.qh**m * cmath.exp(-self.s * math.log(y))

    def tail_bound(self, M: int) -> float:
        # |[y]**-s| = [y]**-Re(s) and [m+x]_q increases with m toward 1/(1-q)
        re_s = self.s.real
        if re_s <= 0:
            peak = self.inv_gap ** (-re_s)
        else:
            peak = self.bracket(M) ** (-re_s)
        return (1.0 + self.q) * self.qh**M * peak / (1.0 - self.qh)

    def terms_needed(self, tol: float) -> int:
        M = 1
        while self.tail_bound(M) >= tol:
            M += 1
        return M

    def partial(self, M: int) -> complex:
        terms = [self.term(m) for m in range(M)]
        total = complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))
        return (1.0 + self.q) * total


def zeta_terms_needed(s, params: ZetaParams, tol: float = DEFAULT_TOL) -> int:
    """Number of terms after which the tail bound falls below ``tol``."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    return _Series(s, params).terms_needed(tol)


def zeta_partial(s, params: ZetaParams, terms: int) -> complex:
    """The first ``terms`` terms of the series (times ``[2]_q``)."""
    return _Series(s, params).partial(terms)


def zeta_eval(s, params: ZetaParams, tol: float = DEFAULT_TOL) -> complex:
    """Evaluate the alternating series to within ``tol`` of its limit.

    ``x = 0`` is only accepted for ``s = 0, -1, -2, ...``, where the ``m = 0``
    term is ``[0]_q**n`` with ``0**0 = 1``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    series = _Series(s, params)
    return series.partial(series.terms_needed(tol))


def _exact_point(q: float, x: float, scale: int) -> Tuple[QPoint, Fraction]:
    qr = Fraction(q)
    point = QPoint.from_q(qr, scale) if scale > 1 else QPoint(qr, 1)
    xr = Fraction(x)
    point.scaled(xr)
    return point, xr


def interpolation_sides(n: int, params: ZetaParams, scale: int = 1,
                        tol: float = DEFAULT_TOL) -> Tuple[complex, Fraction]:
    """``zeta(-n, x)`` and the exact ``G_{n+1}(x)/(n+1)`` at the same ``q``.

    The exact side uses the binary value of ``params.q``; a fractional ``x``
    needs ``scale`` such that ``q`` has an exact rational ``scale``-th root.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    point, xr = _exact_point(float(params.q), float(params.x), scale)
    exact = hq_genocchi_poly(n + 1, xr, GenSpec(params.h, point)) / (n + 1)
    return zeta_eval(-n, params, tol), exact


def _q_int(y: float, q: float) -> float:
    return (1.0 - q**y) / (1.0 - q)


def _check_odd(*values: int) -> None:
    for v in values:
        if v < 1 or v % 2 == 0:
            raise ValueError(f"expected an odd positive integer, got {v}")


def _symmetry_half(s: complex, x: float, a: int, b: int, h: int, q: float, tol: float) -> complex:
    qa = q**a
    acc = 0j
    for i in range(a):
        arg = b * x + b * i / a
        acc += (-1) ** i * q ** (i * b * h) * zeta_eval(s, ZetaParams(qa, h, arg), tol)
    return (1.0 + q**b) * acc * cmath.exp(-s * math.log(_q_int(a, q)))


def zeta_symmetry_sides(s, x: float, a: int, b: int, h: int, q: float,
                        tol: float = DEFAULT_TOL) -> Tuple[complex, complex]:
    """Both sides of the (a, b) symmetry of the (h,q)-zeta function."""
    _check_odd(a, b)
    s = complex(s)
    if x <= 0 and _nonpositive_integer(s) is None:
        raise ValueError("shifted arguments must be positive")
    return (
        _symmetry_half(s, x, a, b, h, q, tol),
        _symmetry_half(s, x, b, a, h, q, tol),
    )


def distribution_sides(s, x: float, a: int, h: int, q: float,
                       tol: float = DEFAULT_TOL) -> Tuple[complex, complex]:
    """``zeta_q(s, a x)`` against its expansion over ``zeta_{q**a}(s, x + i/a)``."""
    _check_odd(a)
    s = complex(s)
    if a * x <= 0 and _nonpositive_integer(s) is None:
        raise ValueError("a*x must be positive")
    left = zeta_eval(s, ZetaParams(q, h, a * x), tol)
    qa = q**a
    acc = 0j
    for i in range(a):
        acc += (-1) ** i * q ** (i * h) * zeta_eval(s, ZetaParams(qa, h, x + i / a), tol)
    right = (1.0 + q) / (1.0 + qa) * cmath.exp(-s * math.log(_q_int(a, q))) * acc
    return left, right


def complex_to_json(z: complex) -> dict:
    return {"re": float(z.real), "im": float(z.imag)}
