"""Exact values at non-positive integers and the parametric u-family.

The value at 1-m of the series attached to (chi, P) with offset A is

    -(1/m) * Psi(P^m) - sum_{n=1..A-1} chi(n) P'(n) P(n)^{m-1}

computed entirely over the rationals.  The u-family generalizes this to
P = X(X+u), giving for each m a polynomial in u whose mod-p reductions
feed the congruence experiment.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

from .errors import DegreeOverflow, InvalidPolynomial
from .periodic import PeriodicFunction
from .polynomials import Polynomial, poly_power
from .psi import PsiTable, psi_apply


@dataclass(frozen=True)
class LValueRequest:
    chi: PeriodicFunction
    poly: Polynomial
    m: int
    offset_A: int = 1


@dataclass(frozen=True)
class FamilyPolynomial:
    """The degree-m member of the u-family: a polynomial in u."""

    m: int
    value: Polynomial


def _root_scan_bound(poly: Polynomial, offset_A: int) -> int:
    """Largest integer that could be a positive root (Cauchy bound)."""
    lead = Fraction(poly.leading())
    bound = 1 + max(abs(Fraction(c)) / lead for c in poly.coeffs)
    return max(offset_A, int(bound) + 1)


def validate_poly(poly: Polynomial, offset_A: int = 1) -> None:
    """Reject polynomials outside the contract.

    The leading coefficient must be positive and the polynomial must not
    vanish at any positive integer; the scan range covers every possible
    integer root (all real roots lie below the Cauchy bound).
    """
    if poly.is_zero() or poly.degree < 1:
        raise InvalidPolynomial("polynomial must be non-constant")
    if Fraction(poly.leading()) <= 0:
        raise InvalidPolynomial("leading coefficient must be positive")
    for n in range(1, _root_scan_bound(poly, offset_A) + 1):
        if poly(Fraction(n)) == 0:
            raise InvalidPolynomial(f"polynomial vanishes at n={n}")


def _prefix_sum(chi: PeriodicFunction, poly: Polynomial, m: int, upto: int) -> Fraction:
    """sum_{n=1..upto} chi(n) P'(n) P(n)^{m-1}, exact."""
    dp = poly.derivative()
    total = Fraction(0)
    for n in range(1, upto + 1):
        c = chi(n)
        if c != 0:
            pn = poly(Fraction(n))
            total += c * dp(Fraction(n)) * pn ** (m - 1)
    return total


def l_negative(req: LValueRequest, table: PsiTable) -> Fraction:
    """Exact value at s = 1-m for the request's (chi, P, A)."""
    if req.m < 1:
        raise InvalidPolynomial("m must be a positive integer")
    validate_poly(req.poly, req.offset_A)
    needed = req.m * req.poly.degree
    if needed > table.max_degree:
        raise DegreeOverflow(
            f"need table degree {needed}, have {table.max_degree}"
        )
    pm = poly_power(req.poly, req.m)
    value = -psi_apply(table, pm) / req.m
    if req.offset_A > 1:
        value -= _prefix_sum(req.chi, req.poly, req.m, req.offset_A - 1)
    return value


def a_offset_consistency(
    chi: PeriodicFunction,
    poly: Polynomial,
    table: PsiTable,
    m: int,
    a1: int,
    a2: int,
) -> bool:
    """Exact check that changing the offset only shifts by a finite sum."""
    if a1 > a2:
        raise InvalidPolynomial("need a1 <= a2")
    v1 = l_negative(LValueRequest(chi, poly, m, offset_A=a1), table)
    v2 = l_negative(LValueRequest(chi, poly, m, offset_A=a2), table)
    dp = poly.derivative()
    middle = Fraction(0)
    for n in range(a1, a2):
        c = chi(n)
        if c != 0:
            middle += c * dp(Fraction(n)) * poly(Fraction(n)) ** (m - 1)
    return v1 == v2 + middle


def scaling_identity_check(
    chi: PeriodicFunction,
    poly: Polynomial,
    c: Fraction,
    m: int,
    table: PsiTable,
) -> bool:
    """Check value(c*P, 1-m) = c^m * value(P, 1-m), exactly."""
    c = Fraction(c)
    if c <= 0:
        raise InvalidPolynomial("scale factor must be positive")
    scaled = poly * c
    lhs = l_negative(LValueRequest(chi, scaled, m), table)
    rhs = c**m * l_negative(LValueRequest(chi, poly, m), table)
    return lhs == rhs


# -- parametric family ------------------------------------------------


def u_monomial(e: int, c=1) -> Polynomial:
    """The monomial c * u^e as a rational polynomial in u."""
    coeffs = [Fraction(0)] * e + [Fraction(c)]
    return Polynomial(coeffs)


def default_family_shape() -> Polynomial:
    """X(X+u) = X^2 + u X, as a polynomial in X over Q[u]."""
    return Polynomial([Polynomial(), u_monomial(1), u_monomial(0)])


def _psi_apply_u(table: PsiTable, q: Polynomial) -> Polynomial:
    """Apply the moment form in X, coefficient-wise over Q[u]."""
    if q.degree > table.max_degree:
        raise DegreeOverflow(
            f"degree {q.degree} exceeds table degree {table.max_degree}"
        )
    total = Polynomial()
    for k, c in enumerate(q.coeffs):
        mu = table.moments[k]
        if mu != 0 and not (isinstance(c, Polynomial) and c.is_zero()):
            total = total + c * mu
    return total


def family_pm(
    chi: PeriodicFunction,
    m: int,
    table: PsiTable,
    shape: Optional[Polynomial] = None,
) -> FamilyPolynomial:
    """Member m of the family: apply the moment form to shape^m, divide by m.

    The shape is any polynomial in X with coefficients in Q[u]; the default
    is X(X+u).
    """
    if m < 1:
        raise InvalidPolynomial("m must be a positive integer")
    if shape is None:
        shape = default_family_shape()
    q = poly_power(shape, m)
    value = _psi_apply_u(table, q) * Fraction(1, m)
    return FamilyPolynomial(m=m, value=value)


def family_sequence(
    chi: PeriodicFunction,
    m_max: int,
    table: PsiTable,
    shape: Optional[Polynomial] = None,
) -> List[FamilyPolynomial]:
    """Members 1 ... m_max, sharing the incremental powers of the shape."""
    if shape is None:
        shape = default_family_shape()
    out: List[FamilyPolynomial] = []
    q = Polynomial([u_monomial(0)])
    for m in range(1, m_max + 1):
        q = q * shape
        out.append(FamilyPolynomial(m=m, value=_psi_apply_u(table, q) * Fraction(1, m)))
    return out
