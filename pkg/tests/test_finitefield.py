import random
from fractions import Fraction

import pytest

from lfunpoly import BadPrimeError, FpuElement, fpu_reduce
from lfunpoly.errors import DomainError
from lfunpoly.polynomials import Polynomial


def test_reduce_third_times_u_mod_5():
    q = Polynomial([Fraction(0), Fraction(1, 3)])
    assert fpu_reduce(q, 5) == FpuElement.monomial(5, 1, 2)  # 3^-1 = 2 mod 5


def test_reduce_zero():
    assert fpu_reduce(Polynomial(), 7).is_zero()


def test_u_to_the_p_folds_to_u():
    q = Polynomial([Fraction(0)] * 5 + [Fraction(1)])  # u^5
    assert fpu_reduce(q, 5) == FpuElement.monomial(5, 1, 1)


def test_bad_prime():
    q = Polynomial([Fraction(1, 5)])
    with pytest.raises(BadPrimeError):
        fpu_reduce(q, 5)


def test_nonprime_rejected():
    with pytest.raises(DomainError):
        fpu_reduce(Polynomial([Fraction(1)]), 6)


def test_quotient_relation():
    # u * u^{p-1} = u^p = u
    p = 7
    u = FpuElement.monomial(p, 1)
    upm1 = FpuElement.monomial(p, p - 1)
    assert u * upm1 == u


def test_display():
    e = FpuElement(7, [2, 2, 0, 2, 0, 4])
    assert str(e) == "4u^5 + 2u^3 + 2u + 2"
    assert str(FpuElement(5)) == "0"


def _random_upoly(rng, p):
    return Polynomial(
        [
            Fraction(rng.randrange(-20, 20), rng.choice([1, 2, 3, 7, 9]))
            for _ in range(rng.randrange(0, 8))
        ]
    )


def test_reduce_is_ring_homomorphism():
    rng = random.Random(7)
    p = 5
    for _ in range(50):
        a = _random_upoly(rng, p)
        b = _random_upoly(rng, p)
        assert fpu_reduce(a + b, p) == fpu_reduce(a, p) + fpu_reduce(b, p)
        assert fpu_reduce(a * b, p) == fpu_reduce(a, p) * fpu_reduce(b, p)


def test_ring_axioms_random():
    rng = random.Random(11)
    p = 7
    elems = [
        FpuElement(p, [rng.randrange(p) for _ in range(rng.randrange(1, 2 * p))])
        for _ in range(12)
    ]
    for a in elems[:6]:
        for b in elems[6:]:
            assert a + b == b + a
            assert a * b == b * a
            assert a * (b + elems[0]) == a * b + a * elems[0]
            assert a + 0 == a
            assert a * 1 == a
