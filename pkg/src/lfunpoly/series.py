"""Truncated power series over exact rationals.

A :class:`TruncatedSeries` of order M stores the coefficients of
t^0 ... t^M exactly (as ``fractions.Fraction``).  Arithmetic keeps track of
the order: the result of a binary operation is only claimed up to the
smallest order of the operands, and division by a series of valuation v
additionally loses v coefficients.  Exponentials e^{kt} are generated by
the factorial recurrence, never through floats.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

from .errors import DivisionByZeroSeries, ValuationError

Scalar = Union[int, Fraction]


class TruncatedSeries:
    """Power series in t truncated after t^order, exact coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[Scalar], order: int | None = None):
        coeffs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        if len(coeffs) < order + 1:
            coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs[: order + 1])

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([0], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def t(cls, order: int) -> "TruncatedSeries":
        return cls([0, 1], order)

    @classmethod
    def exp(cls, k: Scalar, order: int) -> "TruncatedSeries":
        """Truncation of e^{kt}: coefficients k^j / j! by recurrence."""
        k = Fraction(k)
        coeffs = [Fraction(1)]
        for j in range(1, order + 1):
            coeffs.append(coeffs[-1] * k / j)
        return cls(coeffs, order)

    # -- inspection ---------------------------------------------------

    def valuation(self) -> int | None:
        """Index of the lowest nonzero coefficient; None for the zero series."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return None

    def __getitem__(self, m: int) -> Fraction:
        return self.coeffs[m]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)!r}, order={self.order})"

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[i] - other.coeffs[i] for i in range(n + 1)], n
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def scale(self, c: Scalar) -> "TruncatedSeries":
        c = Fraction(c)
        return TruncatedSeries([c * x for x in self.coeffs], self.order)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai == 0:
                continue
            for j in range(n + 1 - i):
                bj = b[j]
                if bj != 0:
                    out[i + j] += ai * bj
        return TruncatedSeries(out, n)

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_divide(self, other)


def series_divide(num: TruncatedSeries, den: TruncatedSeries) -> TruncatedSeries:
    """Quotient num/den as a power series.

    Requires valuation(num) >= valuation(den).  The quotient is reliable up
    to order ``min(num.order, den.order) - valuation(den)``.
    """
    vd = den.valuation()
    if vd is None:
        raise DivisionByZeroSeries("division by the zero series")
    vn = num.valuation()
    if vn is not None and vn < vd:
        raise ValuationError(
            f"valuation of numerator ({vn}) below valuation of denominator ({vd})"
        )
    n = min(num.order, den.order) - vd
    if n < 0:
        raise ValuationError("truncation order too small for this division")
    a = num.coeffs[vd : vd + n + 1]
    b = den.coeffs[vd : vd + n + 1]
    a = list(a) + [Fraction(0)] * (n + 1 - len(a))
    b = list(b) + [Fraction(0)] * (n + 1 - len(b))
    inv0 = 1 / b[0]
    q = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        acc = a[k]
        for j in range(1, k + 1):
            bj = b[j]
            if bj != 0 and q[k - j] != 0:
                acc -= bj * q[k - j]
        q[k] = acc * inv0
    return TruncatedSeries(q, n)
