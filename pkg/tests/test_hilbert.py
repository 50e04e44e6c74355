"""hilbert-series: length sampling, numerators, coefficients, postulation."""

import pytest

from rrclosure import (
    BoundTooLargeError,
    ElementNotInIdealError,
    Ideal,
    NotMPrimaryError,
    hilbert_coefficients,
    hilbert_samuel,
    hilbert_samuel_quotient,
    poincare_series,
    poincare_series_quotient,
    postulation_with_reduction,
    regularity_bound,
)
from util_algebra import brute_colength, ideal_of, qq_ring

R = qq_ring("x", "y")
EX110 = ("x^10", "y^5", "x*y^4", "x^8*y")


def ex110():
    return ideal_of(R, *EX110)


def test_hilbert_samuel_values():
    m = ideal_of(R, "x", "y")
    assert hilbert_samuel(m, 2) == 6
    I = ex110()
    assert hilbert_samuel(I, 0) == 35
    assert hilbert_samuel(I, 1) == 109


def test_hilbert_samuel_rejects_non_primary():
    with pytest.raises(NotMPrimaryError):
        hilbert_samuel(ideal_of(R, "x^2", "x*y"), 1)


def test_quotient_lengths():
    m = ideal_of(R, "x", "y")
    assert hilbert_samuel_quotient(m, R.parse("y"), 3) == 4
    I = ex110()
    assert hilbert_samuel_quotient(I, R.parse("x*y^4"), 0) == 35
    # h-values are double partial sums of the quotient numerator
    # 35+6X+2X^2+2X^3: 35, 76, 119, 164, then arithmetic with step 45
    assert hilbert_samuel_quotient(I, R.parse("x*y^4"), 1) == 76
    assert hilbert_samuel_quotient(I, R.parse("x*y^4"), 2) == 119
    with pytest.raises(ElementNotInIdealError):
        hilbert_samuel_quotient(I, R.parse("x"), 0)


def test_poincare_regular_maximal_ideal():
    data = poincare_series(ideal_of(R, "x", "y"))
    assert data.numerator == (1,)
    assert data.multiplicity == 1
    assert data.postulation == -2


def test_poincare_golden_example():
    data = poincare_series(ex110())
    assert data.numerator == (35, 4, 4, 4, -2)
    assert data.multiplicity == 45
    assert data.postulation == 2
    assert hilbert_coefficients(data) == (45, 16, 4)


def test_poincare_square_of_maximal_ideal():
    # oracle: h(n) = colength(m^{2n+2}) counted by brute force, then second
    # differences; closed form h(n) = (n+1)(2n+3)
    m2 = ideal_of(R, "x^2", "x*y", "y^2")
    for n in range(4):
        exps = m2.power(n + 1).monomial_generators()
        assert brute_colength(exps, 2) == (n + 1) * (2 * n + 3)
    data = poincare_series(m2)
    assert data.numerator == (3, 1)
    assert data.multiplicity == 4
    assert data.postulation == -1
    assert hilbert_coefficients(data) == (4, 1, 0)


def test_quotient_poincare_golden():
    I = ex110()
    q2 = poincare_series_quotient(I, R.parse("x*y^4"))
    assert q2.numerator == (35, 6, 2, 2)
    assert q2.postulation == 2
    q1 = poincare_series_quotient(I, R.parse("y^5+x^10+x^8*y"))
    assert q1.numerator == (35, 6, 4)
    assert q1.postulation == 1


def test_hilbert_coefficients_by_exact_fit():
    # fit p(n) = e0*C(n+2,2) - e1*C(n+1,1) + e2 through exact h-values
    I = ex110()
    samples = {n: hilbert_samuel(I, n) for n in (3, 4, 5)}
    from math import comb

    def p(n, e):
        return e[0] * comb(n + 2, 2) - e[1] * comb(n + 1, 1) + e[2]

    data = poincare_series(I)
    coeffs = hilbert_coefficients(data)
    for n, h in samples.items():
        assert p(n, coeffs) == h
    # and the fit is unique: perturbing any coefficient breaks a sample
    for j in range(3):
        bumped = list(coeffs)
        bumped[j] += 1
        assert any(p(n, bumped) != h for n, h in samples.items())


def test_series_internal_checks():
    data = poincare_series(ex110())
    assert data.consistency_failures() == []
    for n, h in enumerate(data.samples):
        assert data.reconstructed_sample(n) == h
    pn = data.postulation
    assert data.samples[pn] == data.polynomial_value(pn)
    assert data.samples[pn - 1] != data.polynomial_value(pn - 1)


def test_postulation_with_reduction_golden():
    I = ex110()
    xs = (R.parse("y^5+x^10+x^8*y"), R.parse("x*y^4"))
    assert postulation_with_reduction(I, xs) == 2


def test_postulation_with_reduction_regular():
    m = ideal_of(R, "x", "y")
    assert postulation_with_reduction(m, (R.parse("x"), R.parse("y"))) == -1


@pytest.mark.parametrize("a", [1, 2, 3, 4])
@pytest.mark.parametrize("b", [1, 2, 3, 4])
def test_postulation_of_monomial_complete_intersections(a, b):
    I = ideal_of(R, f"x^{a}", f"y^{b}")
    xs = (R.var("x") ** a, R.var("y") ** b)
    assert postulation_with_reduction(I, xs) <= a + b - 2


def test_certified_mode_small():
    m2 = ideal_of(R, "x^2", "x*y", "y^2")
    heuristic = poincare_series(m2)
    certified = poincare_series(m2, mode="certified")
    assert certified.numerator == heuristic.numerator
    # e0 = 4, bound = 4*3 = 12, so sampling runs to 12 + 1 + 2 + 1 = 16
    assert len(certified.samples) >= 16
    with pytest.raises(BoundTooLargeError):
        poincare_series(ex110(), mode="certified", max_samples=100)


def test_regularity_bound_values():
    assert regularity_bound(5, 1) == 4
    assert regularity_bound(45, 2) == 1980
    assert regularity_bound(2, 3) == 8
    assert regularity_bound(1, 2) == 0


def test_quotient_coefficients_preserved_for_generic_sequence():
    from rrclosure import find_superficial_sequence

    I = ex110()
    e = hilbert_coefficients(poincare_series(I))
    cert = find_superficial_sequence(I, e[0], seed=2)
    for x in cert.elements:
        q = poincare_series_quotient(I, x)
        assert hilbert_coefficients(q) == e[:2]
