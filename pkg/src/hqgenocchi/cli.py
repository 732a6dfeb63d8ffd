"""Command-line front end: ``qgk <verb> [options]``.

Exit codes: 0 on success, 1 on usage errors, 2 when a verify run reports
unexpected failures.
"""
from __future__ import annotations

import argparse
import contextlib
import io
import os
import sys
from fractions import Fraction
from typing import List, Sequence, Tuple

from . import genocchi as gq
from .padic import PadicContext, convergence_profile, fermionic_partial
from .qcore import QPoint, bernstein, format_rat, parse_rat
from .verify import GridConfig, get_identity, list_identities, parse_complex, run_all
from .zeta import DEFAULT_TOL, ZetaParams, zeta_eval

GRID_ENV = "QGK_GRID"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _exact(text: str) -> Fraction:
    try:
        return parse_rat(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"expected an exact rational like 1/2, got {text!r}") from None


def _decimal(text: str) -> float:
    if "/" in text:
        raise UsageError(f"zeta takes decimal values, got {text!r}")
    try:
        return float(text)
    except ValueError:
        raise UsageError(f"expected a decimal number, got {text!r}") from None


def _point(q: str, scale: int, *args) -> QPoint:
    try:
        point = QPoint.from_q(_exact(q), scale)
        for a in args:
            point.scaled(a)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return point


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qgk", description="(h,q)-Genocchi toolkit")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    g = sub.add_parser("genocchi", help="(h,q)-Genocchi numbers and polynomials")
    g.add_argument("--h", type=int, required=True)
    g.add_argument("--q", required=True, help="exact rational, e.g. 1/2")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--x", default=None, help="polynomial argument m/b")
    g.add_argument("--scale", type=int, default=1, help="exponent scale b (q = t**b)")
    g.add_argument("--route", choices=("closed", "rec"), default="closed")
    g.add_argument("--table", action="store_true", help="emit rows n,value for 0..n")

    b = sub.add_parser("bernstein", help="q-Bernstein polynomial B_{k,n}(x, q)")
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--x", required=True)
    b.add_argument("--q", required=True)
    b.add_argument("--scale", type=int, default=1)

    z = sub.add_parser("zeta", help="(h,q)-zeta function")
    z.add_argument("--s", required=True, help="complex, e.g. 1.5+2i")
    z.add_argument("--q", required=True, help="decimal in (0, 1)")
    z.add_argument("--h", type=int, required=True)
    z.add_argument("--x", required=True)
    z.add_argument("--tol", type=float, default=DEFAULT_TOL)

    p = sub.add_parser("padic", help="fermionic Riemann sums and their convergence")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", type=int, default=1)
    p.add_argument("--q", default="1")
    p.add_argument("--x0", type=int, default=0)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--Nmax", type=int, required=True)
    p.add_argument("--partial", action="store_true", help="print only the level-Nmax sum")

    v = sub.add_parser("verify", help="run identity checks over a grid")
    v.add_argument("--suite", default="all", help="'all' or a comma-separated list of ids")
    v.add_argument("--out", default=None, help="write the JSON report here")
    v.add_argument("--csv", default=None, help="write one CSV row per case here")
    v.add_argument("--config", default=None, help="JSON grid configuration")

    sub.add_parser("list", help="list registered identities")
    return parser


def _cmd_genocchi(args) -> str:
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    extra = [_exact(args.x)] if args.x is not None else []
    spec = gq.GenSpec(args.h, _point(args.q, args.scale, *extra))

    def value(n: int) -> Fraction:
        if extra:
            return gq.hq_genocchi_poly(n, extra[0], spec)
        if args.route == "rec":
            return gq.hq_genocchi_rec(n, spec)
        return gq.hq_genocchi_closed(n, spec)

    if args.table:
        return "\n".join(f"{n},{format_rat(value(n))}" for n in range(args.n + 1))
    return format_rat(value(args.n))


def _cmd_bernstein(args) -> str:
    x = _exact(args.x)
    q = _point(args.q, args.scale, x)
    try:
        return format_rat(bernstein(args.k, args.n, x, q))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def format_complex(z: complex) -> str:
    sign = "-" if z.imag < 0 else "+"
    return f"{z.real:.12f} {sign} {abs(z.imag):.12f}i"


def _cmd_zeta(args) -> str:
    try:
        s = parse_complex(args.s)
    except ValueError:
        raise UsageError(f"cannot parse --s {args.s!r}") from None
    q, x = _decimal(args.q), _decimal(args.x)
    try:
        result = zeta_eval(s, ZetaParams(q, args.h, x), args.tol)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return format_complex(result)


def _cmd_padic(args) -> str:
    q = _exact(args.q)
    try:
        if args.partial:
            return format_rat(fermionic_partial(args.n, args.h, q, args.x0, args.p, args.Nmax))
        profile = convergence_profile(args.n, args.h, q, args.x0, PadicContext(args.p, args.Nmax))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return profile.dumps()


def _load_grid(path: str | None) -> GridConfig:
    path = path or os.environ.get(GRID_ENV)
    if not path:
        return GridConfig()
    try:
        return GridConfig.load(path)
    except (OSError, ValueError, TypeError) as exc:
        raise UsageError(f"bad grid config {path!r}: {exc}") from None


def _cmd_verify(args) -> Tuple[int, str]:
    grid = _load_grid(args.config)
    ids = None
    if args.suite != "all":
        ids = [s.strip() for s in args.suite.split(",") if s.strip()]
        for id in ids:
            try:
                get_identity(id)
            except KeyError as exc:
                raise UsageError(str(exc.args[0])) from None
    report = run_all(grid, ids)
    text = report.dumps()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            fh.write(report.to_csv())
    summary = (
        f"cases_run={report.cases_run} failures={len(report.failures)} "
        f"expected_failures_confirmed={len(report.expected_failures_confirmed)} "
        f"wall_time={report.wall_time:.2f}s"
    )
    out = summary if args.out else text
    return (2 if report.failures else 0), out


def _cmd_list(args) -> str:
    lines = []
    for id in list_identities():
        ident = get_identity(id)
        lines.append(f"{id}\t{ident.kind}\t{ident.expected}")
    return "\n".join(lines)


_COMMANDS = {
    "genocchi": _cmd_genocchi,
    "bernstein": _cmd_bernstein,
    "zeta": _cmd_zeta,
    "padic": _cmd_padic,
    "verify": _cmd_verify,
    "list": _cmd_list,
}


def dispatch(argv: Sequence[str]) -> Tuple[int, str]:
    """Run one command; returns ``(exit_code, stdout_text)``.

    Diagnostics for usage errors go to stderr.
    """
    parser = _build_parser()
    try:
        with contextlib.redirect_stdout(io.StringIO()) as buf:
            try:
                args = parser.parse_args(list(argv))
            except SystemExit as exc:  # --help
                return int(exc.code or 0), buf.getvalue()
        result = _COMMANDS[args.verb](args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 1, ""
    if isinstance(result, tuple):
        return result
    return 0, result


def main(argv: List[str] | None = None) -> int:
    code, out = dispatch(sys.argv[1:] if argv is None else argv)
    if out:
        print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
