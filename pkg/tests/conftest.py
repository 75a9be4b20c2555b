from fractions import Fraction

import pytest

from lfunpoly import chi3, chi4, const_one, psi_table


@pytest.fixture(scope="session")
def chi3_table():
    return psi_table(chi3(), 40)


@pytest.fixture(scope="session")
def chi4_table():
    return psi_table(chi4(), 40)


@pytest.fixture(scope="session")
def one_table():
    return psi_table(const_one(), 24)


def frac(a, b=1):
    return Fraction(a, b)
