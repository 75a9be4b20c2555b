"""The moment form attached to a periodic function.

For chi of period N, the moments are read off the power-series identity

    t * sum_{n=1..N} chi(n) e^{nt} / (1 - e^{Nt})  =  - sum_m mu_m t^m / m!

where mu_m is the value of the form on X^m.  All downstream signs derive
from this convention; nothing re-chooses a sign locally.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .errors import DegreeOverflow
from .periodic import PeriodicFunction
from .polynomials import Polynomial
from .series import TruncatedSeries, series_divide


@dataclass(frozen=True)
class PsiTable:
    """Moments mu_m for m = 0 ... max_degree, computed once and shared."""

    chi: PeriodicFunction
    max_degree: int
    moments: Tuple[Fraction, ...]


def psi_table(chi: PeriodicFunction, max_degree: int) -> PsiTable:
    """Expand the generating identity up to t^max_degree.

    Both numerator and denominator have valuation >= 1, so the division is
    always a genuine power-series division.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    order = max_degree + 1
    n_series = TruncatedSeries.zero(order)
    for n in range(1, chi.period + 1):
        v = chi(n)
        if v != 0:
            n_series = n_series + TruncatedSeries.exp(n, order).scale(v)
    numerator = TruncatedSeries.t(order) * n_series
    denominator = TruncatedSeries.one(order) - TruncatedSeries.exp(chi.period, order)
    quotient = series_divide(numerator, denominator)

    moments = []
    factorial = Fraction(1)
    for m in range(max_degree + 1):
        if m > 1:
            factorial *= m
        moments.append(-factorial * quotient[m])
    return PsiTable(chi=chi, max_degree=max_degree, moments=tuple(moments))


def psi_apply(table: PsiTable, q: Polynomial) -> Fraction:
    """Apply the linear form to a rational polynomial via its moments."""
    if q.degree > table.max_degree:
        raise DegreeOverflow(
            f"degree {q.degree} exceeds table degree {table.max_degree}"
        )
    total = Fraction(0)
    for k, c in enumerate(q.coeffs):
        if c != 0:
            total += Fraction(c) * table.moments[k]
    return total


def check_shift_identity(table: PsiTable, e: Polynomial) -> bool:
    """Exact check of the period-shift identity for the polynomial e.

    Applying the form to e(N+X) minus applying it to e must equal
    sum_{n=1..N} chi(n) e'(n).
    """
    chi = table.chi
    if e.degree > table.max_degree:
        raise DegreeOverflow(
            f"degree {e.degree} exceeds table degree {table.max_degree}"
        )
    lhs = psi_apply(table, e.shift(chi.period)) - psi_apply(table, e)
    de = e.derivative()
    rhs = sum((chi(n) * de(Fraction(n)) for n in range(1, chi.period + 1)), Fraction(0))
    return lhs == rhs
