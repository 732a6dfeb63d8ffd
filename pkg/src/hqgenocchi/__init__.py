"""Exact (h,q)-Genocchi numbers and polynomials, q-Bernstein moments,
fermionic p-adic Riemann sums and the (h,q)-zeta function, with a harness that
checks the identities relating them over parameter grids.
"""
from .genocchi import (
    GenCache,
    GenSpec,
    classical_genocchi,
    hq_genocchi_closed,
    hq_genocchi_poly,
    hq_genocchi_rec,
    q_genocchi,
)
from .padic import PadicContext, convergence_profile, fermionic_partial, padic_valuation
from .qcore import QPoint, bernstein, binom, format_rat, q_number, q_number_neg, q_pow
from .verify import GridConfig, list_identities, run_all, run_identity
from .zeta import ZetaParams, zeta_eval

__version__ = "0.1.0"

__all__ = [
    "GenCache",
    "GenSpec",
    "GridConfig",
    "PadicContext",
    "QPoint",
    "ZetaParams",
    "bernstein",
    "binom",
    "classical_genocchi",
    "convergence_profile",
    "fermionic_partial",
    "format_rat",
    "hq_genocchi_closed",
    "hq_genocchi_poly",
    "hq_genocchi_rec",
    "list_identities",
    "padic_valuation",
    "q_genocchi",
    "q_number",
    "q_number_neg",
    "q_pow",
    "run_all",
    "run_identity",
    "zeta_eval",
]
