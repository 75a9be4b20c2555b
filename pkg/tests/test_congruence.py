import pytest

from lfunpoly import (
    CongruenceReport,
    DegreeOverflow,
    DomainError,
    chi3,
    congruence_scan,
    period_detect,
    psi_table,
)

# reference reductions of the u-family for chi3, lowest m first
MOD5_TERMS = ["3u", "4u", "3u^3", "u", "2u^3", "4u"]
MOD7_TERMS = [
    "2u",
    "3u",
    "u^3 + 6u",
    "6u^3",
    "4u^5 + 2u",
    "2u^3 + 2u",
    "6u^5 + 3u^3",
    "3u",
]
MOD11_TERMS = [
    "7u",
    "8u",
    "10u^3 + 4u",
    "4u^3 + 7u",
    "3u^5 + 3u^3 + 7u",
    "7u^5 + 5u^3",
    "u^7 + 10u^5 + 9u",
    "7u^7 + 8u^3 + u",
    "2u^9 + 5u^5 + 2u^3 + 6u",
    "9u^7 + u^5 + 6u^3 + 5u",
    "u^9 + 8u^7 + 10u^5 + 9u^3",
    "8u",
]


def _scan(p, periods=1):
    m_max = 1 + (periods + 1) * (p - 1)
    table = psi_table(chi3(), 2 * m_max)
    return congruence_scan(chi3(), p, periods, table)


@pytest.mark.parametrize(
    "p,expected",
    [(5, MOD5_TERMS), (7, MOD7_TERMS), (11, MOD11_TERMS)],
)
def test_reference_tables(p, expected):
    report = _scan(p)
    assert report.term_strings()[: len(expected)] == expected


@pytest.mark.parametrize("p", [5, 7, 11])
def test_period_is_p_minus_one(p):
    report = _scan(p)
    assert report.period_detected == p - 1
    assert report.pm1_confirmed
    assert report.preperiod == 1


def test_first_term_breaks_pure_periodicity():
    # the window including m=1 has no period: that is why preperiod is 1
    report = _scan(5)
    assert period_detect(report.terms, preperiod=0) is None


def test_report_shape():
    report = _scan(5)
    assert isinstance(report, CongruenceReport)
    assert report.prime == 5
    assert report.periods_checked == 1
    assert len(report.terms) == 1 + 2 * 4


# -- period detection in isolation ------------------------------------


def test_period_detect_simple():
    assert period_detect([1, 2, 1, 2, 1, 2]) == 2
    assert period_detect([1, 1, 1, 1]) == 1
    assert period_detect([1, 2, 3, 4, 5, 6]) is None


def test_period_detect_with_preperiod():
    assert period_detect(["a", "b", "c", "b", "c", "b", "c"], preperiod=1) == 2
    assert period_detect(["a", "b", "c", "b", "c", "b", "c"], preperiod=0) is None


def test_period_detect_minimality():
    # period 2 also repeats with period 4; the smaller one wins
    assert period_detect([5, 7, 5, 7, 5, 7, 5, 7]) == 2


def test_period_detect_empty():
    with pytest.raises(DomainError):
        period_detect([])


# -- input validation -------------------------------------------------


def test_rejects_small_or_composite_p():
    table = psi_table(chi3(), 20)
    for bad in (3, 4, 9):
        with pytest.raises(DomainError):
            congruence_scan(chi3(), bad, 1, table)


def test_rejects_short_table():
    table = psi_table(chi3(), 10)
    with pytest.raises(DegreeOverflow):
        congruence_scan(chi3(), 5, 1, table)
