"""Registry of identities as named checks, run over a parameter grid.

Each identity enumerates its grid points in lexicographic order and evaluates
both sides at every point.  Exact identities compare :class:`Fraction` values
for equality; approximate ones compare within a tolerance.  Identities marked
``expected-fail`` reproduce known misprints: they are confirmed when at least
one grid point disagrees.
"""
from __future__ import annotations

import csv
import io
import itertools
import json
import time
from dataclasses import asdict, dataclass, field, fields
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from . import genocchi as gq
from .padic import (
    INF,
    PadicContext,
    convergence_profile,
    fermionic_partial,
    fermionic_target,
    measure_check,
    padic_valuation,
)
from .qcore import QPoint, bernstein, classical_bernstein, format_rat, parse_rat, q_number
from .zeta import ZetaParams, distribution_sides, interpolation_sides, zeta_symmetry_sides

__all__ = [
    "GridConfig",
    "Identity",
    "SuiteReport",
    "list_identities",
    "get_identity",
    "run_identity",
    "run_all",
    "parse_complex",
]


def parse_complex(text: str) -> complex:
    return complex(text.strip().replace(" ", "").replace("i", "j"))


def _format_complex(z: complex) -> str:
    sign = "-" if z.imag < 0 else "+"
    return f"{z.real!r}{sign}{abs(z.imag)!r}i"


@dataclass(frozen=True)
class GridConfig:
    """Parameter grid.

    ``q`` holds base values ``t``; integer arguments use ``q = t`` and a
    fractional argument with denominator ``d`` uses the point ``q = t**d``.
    The zeta checks use the same values as floats.
    """

    q: Tuple[str, ...] = ("1/3", "1/2", "2/3", "3/5")
    h: Tuple[int, ...] = (1, 2, 3)
    n_max: int = 10
    m_max: int = 10
    k_max: int = 4
    odd: Tuple[int, ...] = (1, 3, 5)
    x: Tuple[str, ...] = ("0", "1/2", "1", "2")
    s: Tuple[str, ...] = ("-3", "-1", "0", "2", "1.5+2i")
    p: Tuple[int, ...] = (3, 5, 7)
    padic_levels: int = 6

    def __post_init__(self):
        for name in ("q", "h", "odd", "x", "s", "p"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        for t in self.q:
            QPoint(parse_rat(t), 1)
        for x in self.x:
            if parse_rat(x) < 0:
                raise ValueError("grid arguments x must be nonnegative")
        for s in self.s:
            parse_complex(s)
        for a in self.odd:
            if not isinstance(a, int) or a < 1 or a % 2 == 0:
                raise ValueError(f"odd grid values must be odd positive integers, got {a!r}")
        for v in (self.n_max, self.m_max, self.k_max, self.padic_levels):
            if not isinstance(v, int) or v < 0:
                raise ValueError("grid sizes must be nonnegative integers")

    @classmethod
    def from_dict(cls, data: dict) -> "GridConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown grid fields: {sorted(unknown)}")
        data = {k: [str(v) for v in vals] if k in ("q", "x", "s") else vals for k, vals in data.items()}
        return cls(**data)

    @classmethod
    def load(cls, path) -> "GridConfig":
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    @classmethod
    def empty(cls) -> "GridConfig":
        return cls(q=(), h=(), odd=(), x=(), s=(), p=())

    def to_dict(self) -> dict:
        return {k: list(v) if isinstance(v, tuple) else v for k, v in asdict(self).items()}

    # helpers used by the identity enumerators
    def ts(self) -> List[Fraction]:
        return [parse_rat(t) for t in self.q]

    def xs(self) -> List[Fraction]:
        return [parse_rat(x) for x in self.x]

    def ss(self) -> List[complex]:
        return [parse_complex(s) for s in self.s]


def _point(t: Fraction, *args: Fraction) -> QPoint:
    scale = 1
    for a in args:
        d = Fraction(a).denominator
        scale = scale * d // _gcd(scale, d)
    return QPoint(t, scale)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


# --------------------------------------------------------------------------
# registry


Params = Dict[str, object]
Outcome = Tuple[object, object, bool, object]


@dataclass(frozen=True)
class Identity:
    id: str
    kind: str  # "exact" or "approximate"
    points: Callable[[GridConfig], Iterable[Params]]
    evaluate: Callable[[Params], Outcome]
    tol: Optional[float] = None
    expected: str = "pass"
    reason: str = ""

    @property
    def expected_fail(self) -> bool:
        return self.expected == "expected-fail"


_REGISTRY: Dict[str, Identity] = {}


def _register(id, kind="exact", tol=None, expected="pass", reason=""):
    def wrap(pair):
        points, evaluate = pair
        _REGISTRY[id] = Identity(id, kind, points, evaluate, tol, expected, reason)
        return pair
    return wrap


def _exact(left: Fraction, right: Fraction) -> Outcome:
    return left, right, left == right, left - right


def _approx(left, right, tol: float) -> Outcome:
    delta = abs(complex(left) - complex(right))
    return left, right, delta < tol, delta


def _spec(p: Params) -> gq.GenSpec:
    return gq.GenSpec(p["h"], p["q"])


def _thq(g: GridConfig, *extra):
    return itertools.product(g.ts(), g.h, *extra)


# genocchi numbers and polynomials


def _pts_numbers(g: GridConfig):
    for t, h, n in _thq(g, range(g.n_max + 1)):
        yield {"q": QPoint(t), "h": h, "n": n}


_register("eq54-vs-rec")((
    _pts_numbers,
    lambda p: _exact(gq.hq_genocchi_closed(p["n"], _spec(p)), gq.hq_genocchi_rec(p["n"], _spec(p))),
))


def _pts_poly(g: GridConfig):
    for t, h, n, x in _thq(g, range(g.n_max + 1), g.xs()):
        yield {"q": _point(t, x), "h": h, "n": n, "x": x}


_register("thm1-convolution")((
    _pts_poly,
    lambda p: _exact(gq.hq_genocchi_poly(p["n"], p["x"], _spec(p)), gq.convolution_value(p["n"], p["x"], _spec(p))),
))

_register("thm2-reflection")((
    _pts_poly,
    lambda p: _exact(*gq.reflection_sides(p["n"], p["x"], _spec(p))),
))

_register("eq6-recurrence")((
    _pts_numbers,
    lambda p: _exact(*gq.recurrence_sides(p["n"], _spec(p))),
))

_register("thm3-umbral")((
    _pts_numbers,
    lambda p: _exact(*gq.umbral_sides(p["n"], _spec(p))),
))


def _pts_positive(g: GridConfig):
    for t, h, n in _thq(g, range(1, g.n_max + 1)):
        yield {"q": QPoint(t), "h": h, "n": n}


_register("thm4-value-at-2")((
    _pts_positive,
    lambda p: _exact(*gq.value_at_two_sides(p["n"], _spec(p))),
))

_register("thm5-reflected-integral")((
    _pts_positive,
    lambda p: _exact(*gq.reflected_integral_sides(p["n"], _spec(p))),
))

_register("cor-reflected-moment")((
    _pts_positive,
    lambda p: _exact(*gq.reflected_moment_sides(p["n"], _spec(p))),
))

_register("k0-corollaries")((
    _pts_positive,
    lambda p: _exact(*gq.k0_corollary_sides(p["n"], _spec(p))),
))


# Bernstein moments


def _pts_bernstein_moment(g: GridConfig):
    for t, h, n in _thq(g, range(1, g.n_max + 1)):
        for k in range(min(g.k_max, n - 1) + 1):
            yield {"q": QPoint(t), "h": h, "n": n, "k": k}


_register("bernstein-moment")((
    _pts_bernstein_moment,
    lambda p: _exact(
        gq.bernstein_moment_direct(p["k"], p["n"], _spec(p)),
        gq.bernstein_moment_reflected(p["k"], p["n"], _spec(p)),
    ),
))

_register(
    "bernstein-moment-printed",
    expected="expected-fail",
    reason="G_{n+1,1/q} printed inside the l-sum; the derivation gives G_{n-l+1,1/q}",
)((
    _pts_bernstein_moment,
    lambda p: _exact(
        gq.bernstein_moment_direct(p["k"], p["n"], _spec(p)),
        gq.bernstein_moment_printed(p["k"], p["n"], _spec(p)),
    ),
))


def _degree_tuples(k: int, s: int, width: int):
    for ns in itertools.combinations_with_replacement(range(k, k + width + 1), s):
        if sum(ns) > s * k:
            yield ns


def _pts_product(s: int, width: int):
    def points(g: GridConfig):
        for t, h, k in _thq(g, range(g.k_max + 1)):
            for ns in _degree_tuples(k, s, width):
                yield {"q": QPoint(t), "h": h, "k": k, "ns": ns}
    return points


_register("product-moment-2")((
    _pts_product(2, 3),
    lambda p: _exact(*gq.product_moment_sides(p["k"], p["ns"], _spec(p))),
))

_register("product-moment-s")((
    _pts_product(3, 2),
    lambda p: _exact(*gq.product_moment_sides(p["k"], p["ns"], _spec(p))),
))

_register(
    "product-moment-printed-lower-limit",
    expected="expected-fail",
    reason="direct s-fold sum printed from l=1; the l=0 term is needed",
)((
    _pts_product(2, 3),
    lambda p: _exact(
        gq.product_moment_sides(p["k"], p["ns"], _spec(p))[0],
        gq.product_moment_direct_printed(p["k"], p["ns"], _spec(p)),
    ),
))


# addition, multiplication and symmetry


def _pts_addition(g: GridConfig):
    for t, h, n, x, y in _thq(g, range(g.n_max + 1), g.xs(), g.xs()):
        yield {"q": _point(t, x, y), "h": h, "n": n, "x": x, "y": y}


_register("eq53-addition")((
    _pts_addition,
    lambda p: _exact(*gq.addition_sides(p["n"], p["x"], p["y"], _spec(p))),
))


def _pts_multiplication(g: GridConfig):
    for t, h, n, x, a in _thq(g, range(g.n_max + 1), g.xs(), g.odd):
        yield {"q": _point(t, x), "h": h, "n": n, "x": x, "a": a}


_register("multiplication-formula")((
    _pts_multiplication,
    lambda p: _exact(*gq.multiplication_sides(p["n"], p["x"], p["a"], _spec(p))),
))


def _pts_symmetry(g: GridConfig):
    for t, h, m, x, a, b in _thq(g, range(g.m_max + 1), g.xs(), g.odd, g.odd):
        if a <= b:
            yield {"q": _point(t, x), "h": h, "m": m, "x": x, "a": a, "b": b}


_register("genocchi-symmetry")((
    _pts_symmetry,
    lambda p: _exact(*gq.genocchi_symmetry_sides(p["m"], p["x"], p["a"], p["b"], _spec(p))),
))

_register("power-sum-relation")((
    _pts_symmetry,
    lambda p: _exact(*gq.symmetric_relation_sides(p["m"], p["x"], p["a"], p["b"], _spec(p))),
))


# q-Bernstein polynomials and limits


def _pts_bernstein_reflection(g: GridConfig):
    for t, n, x in itertools.product(g.ts(), range(min(g.n_max, 6) + 1), g.xs()):
        for k in range(n + 1):
            yield {"q": _point(t, x), "n": n, "k": k, "x": x}


_register("bernstein-reflection")((
    _pts_bernstein_reflection,
    lambda p: _exact(
        bernstein(p["k"], p["n"], p["x"], p["q"]),
        bernstein(p["n"] - p["k"], p["n"], 1 - p["x"], p["q"].inverse()),
    ),
))

NEAR_ONE = Fraction(1) - Fraction(1, 10**6)
LIMIT_X = (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(1))


def _pts_limits(g: GridConfig):
    if not g.h:
        return
    for n in range(6):
        for k, x in itertools.product(range(n + 1), LIMIT_X):
            yield {"route": "bernstein", "n": n, "k": k, "x": x}
    for x in range(11):
        yield {"route": "q-number", "x": Fraction(x)}
    for h, n in itertools.product(g.h, range(9)):
        yield {"route": "hq-genocchi", "h": h, "n": n}
    for n in range(9):
        yield {"route": "q-genocchi", "n": n}


def _eval_limit(p: Params) -> Outcome:
    route = p["route"]
    if route == "bernstein":
        # t**4 = q keeps x = 1/4 exact; t is picked so that q is about 1 - 1e-6
        q = QPoint(Fraction(1) - Fraction(1, 4 * 10**6), 4)
        left = bernstein(p["k"], p["n"], p["x"], q)
        return _approx(left, classical_bernstein(p["k"], p["n"], p["x"]), 1e-4)
    if route == "q-number":
        return _approx(q_number(p["x"], QPoint(NEAR_ONE)), p["x"], 1e-4)
    if route == "hq-genocchi":
        spec = gq.GenSpec(p["h"], QPoint(NEAR_ONE))
        return _approx(gq.hq_genocchi_closed(p["n"], spec), gq.classical_genocchi(p["n"]), 1e-3)
    left = gq.q_genocchi(p["n"], QPoint(NEAR_ONE))
    return _approx(left, gq.classical_genocchi(p["n"]), 1e-3)


_register("classical-limits", kind="approximate", tol=1e-3)((_pts_limits, _eval_limit))


# zeta function


def _qfloats(g: GridConfig) -> List[float]:
    return [float(t) for t in g.ts()]


def _pts_interp(g: GridConfig):
    xs = [x for x in g.xs() if x.denominator == 1]
    for q, h, n, x in itertools.product(_qfloats(g), g.h, range(min(g.n_max, 6) + 1), xs):
        yield {"qf": q, "h": h, "n": n, "x": x}


def _eval_interp(p: Params) -> Outcome:
    z, exact = interpolation_sides(p["n"], ZetaParams(p["qf"], p["h"], float(p["x"])))
    return _approx(z, float(exact), 1e-10)


_register("zeta-interpolation", kind="approximate", tol=1e-10)((_pts_interp, _eval_interp))


def _zeta_xs(g: GridConfig) -> List[Fraction]:
    return [x for x in g.xs() if x > 0]


def _pts_zeta_symmetry(g: GridConfig):
    for q, h, s, x, a, b in itertools.product(_qfloats(g), g.h, g.ss(), _zeta_xs(g), g.odd, g.odd):
        if a <= b:
            yield {"qf": q, "h": h, "s": s, "x": x, "a": a, "b": b}


_register("zeta-symmetry", kind="approximate", tol=1e-9)((
    _pts_zeta_symmetry,
    lambda p: _approx(
        *zeta_symmetry_sides(p["s"], float(p["x"]), p["a"], p["b"], p["h"], p["qf"]), 1e-9
    ),
))


def _pts_zeta_distribution(g: GridConfig):
    for q, h, s, x, a in itertools.product(_qfloats(g), g.h, g.ss(), _zeta_xs(g), g.odd):
        yield {"qf": q, "h": h, "s": s, "x": x, "a": a}


_register("zeta-distribution", kind="approximate", tol=1e-9)((
    _pts_zeta_distribution,
    lambda p: _approx(*distribution_sides(p["s"], float(p["x"]), p["a"], p["h"], p["qf"]), 1e-9),
))


# p-adic


def _pts_padic(g: GridConfig):
    for p in g.p:
        for n in range(5):
            for N in range(1, g.padic_levels + 1):
                yield {"route": "classical", "p": p, "n": n, "N": N}
    if not g.h:
        return
    for p in g.p:
        for h in (1, 2):
            for n in range(4):
                yield {"route": "q", "p": p, "h": h, "n": n}


def _eval_padic(p: Params) -> Outcome:
    if p["route"] == "classical":
        partial = fermionic_partial(p["n"], 1, 1, 0, p["p"], p["N"])
        v = padic_valuation(partial - fermionic_target(p["n"], 1, 1, 0), p["p"])
        bound = p["N"] - 1
        return v, bound, v >= bound, None
    q = 1 + p["p"]
    vals = convergence_profile(p["n"], p["h"], q, 0, PadicContext(p["p"], 5), start=2).valuations()
    # an error that is exactly zero at every level counts as increasing
    ok = all(b > a or a == b == INF for a, b in zip(vals, vals[1:]))
    return vals, "strictly increasing for N = 2..5", ok, None


_register("padic-convergence")((_pts_padic, _eval_padic))


def _pts_measure(g: GridConfig):
    for p in g.p:
        for q in (Fraction(1), Fraction(1 + p), Fraction(2 + p, 2)):
            for n in range(3):
                for x in range(p**n):
                    yield {"p": p, "q": q, "level": n, "x": x}


def _eval_measure(p: Params) -> Outcome:
    prime, q, n, x = p["p"], p["q"], p["level"], p["x"]
    whole = measure_check(x, n, q, prime)
    parts = sum(
        (measure_check(x + j * prime**n, n + 1, q, prime) for j in range(prime)),
        Fraction(0),
    )
    return _exact(whole, parts)


_register("measure-additivity")((_pts_measure, _eval_measure))


# --------------------------------------------------------------------------
# running


def list_identities() -> List[str]:
    return sorted(_REGISTRY)


def get_identity(id: str) -> Identity:
    try:
        return _REGISTRY[id]
    except KeyError:
        raise KeyError(f"unknown identity {id!r}") from None


def _encode(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, Fraction):
        return format_rat(value)
    if isinstance(value, QPoint):
        return value.to_json()
    if isinstance(value, complex):
        return _format_complex(value)
    if isinstance(value, float):
        return "inf" if value == INF else repr(value)
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    return value


def _cell(value) -> str:
    if isinstance(value, str):
        return value
    return json.dumps(value, sort_keys=True)


@dataclass
class SuiteReport:
    suite: str
    cases_run: int = 0
    failures: List[dict] = field(default_factory=list)
    expected_failures_confirmed: List[str] = field(default_factory=list)
    grid: dict = field(default_factory=dict)
    wall_time: float = 0.0
    rows: List[dict] = field(default_factory=list, repr=False)

    def to_json(self, include_wall_time: bool = True) -> dict:
        out = {
            "suite": self.suite,
            "cases_run": self.cases_run,
            "failures": self.failures,
            "expected_failures_confirmed": self.expected_failures_confirmed,
            "grid": self.grid,
        }
        if include_wall_time:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def dumps(self, include_wall_time: bool = True) -> str:
        return json.dumps(self.to_json(include_wall_time), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        cols = ["id", "kind", "expected", "params", "left", "right", "delta", "passed"]
        writer = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        writer.writeheader()
        for row in self.rows:
            writer.writerow({k: _cell(row[k]) for k in cols})
        return buf.getvalue()

    def merge(self, other: "SuiteReport") -> None:
        self.cases_run += other.cases_run
        self.failures.extend(other.failures)
        self.expected_failures_confirmed.extend(other.expected_failures_confirmed)
        self.rows.extend(other.rows)


def run_identity(id: str, grid: GridConfig | None = None) -> SuiteReport:
    """Evaluate one identity over every point of ``grid``."""
    ident = get_identity(id)
    grid = grid or GridConfig()
    report = SuiteReport(suite=id, grid=grid.to_dict())
    start = time.perf_counter()
    mismatches = []
    for params in ident.points(grid):
        left, right, ok, delta = ident.evaluate(params)
        row = {
            "id": id,
            "kind": ident.kind,
            "expected": ident.expected,
            "params": {k: _encode(v) for k, v in params.items()},
            "left": _encode(left),
            "right": _encode(right),
            "delta": _encode(delta),
            "passed": bool(ok),
        }
        report.rows.append(row)
        report.cases_run += 1
        if not ok:
            mismatches.append({k: row[k] for k in ("id", "params", "left", "right", "delta")})
    if ident.expected_fail:
        if mismatches:
            report.expected_failures_confirmed.append(id)
        elif report.cases_run:
            report.failures.append({
                "id": id, "params": {}, "left": None, "right": None,
                "delta": f"expected failure not observed ({ident.reason})",
            })
    else:
        report.failures.extend(mismatches)
    report.wall_time = time.perf_counter() - start
    return report


def run_all(config: GridConfig | None = None, ids: Sequence[str] | None = None) -> SuiteReport:
    """Run every registered identity (or ``ids``) and aggregate in id order."""
    config = config or GridConfig()
    chosen = sorted(ids) if ids is not None else list_identities()
    for id in chosen:
        get_identity(id)
    report = SuiteReport(suite="all" if ids is None else ",".join(chosen), grid=config.to_dict())
    start = time.perf_counter()
    for id in chosen:
        report.merge(run_identity(id, config))
    report.wall_time = time.perf_counter() - start
    return report
