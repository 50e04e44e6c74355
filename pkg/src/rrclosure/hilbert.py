"""Hilbert-Samuel functions, Poincare-series numerators, multiplicities,
Hilbert coefficients and postulation numbers.

The numerator of PS_I(X) = f(X)/(1-X)^d is recovered from length samples
h(n) = colength(I^{n+1}): since the generating series of h is
f(X)/(1-X)^{d+1}, the coefficients a_i are the (d+1)-fold backward
differences of the h-sequence.  The quotient variant I/(x) works the same
way one dimension down, sampling colength(I^{n+1} + (x)).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

from .errors import (
    BoundTooLargeError,
    ElementNotInIdealError,
    NotMPrimaryError,
    ZeroPolynomialError,
)
from .ideals import Ideal
from .polynomials import Polynomial

DEFAULT_MAX_SAMPLES = 4096

HEURISTIC = "heuristic"
CERTIFIED = "certified"


def regularity_bound(e: int, d: int) -> int:
    """Upper bound for the regularity of the associated graded ring, as a
    function of multiplicity e and dimension d: e-1 in dimension one,
    e^(2(d-1)!-1) * (e-1)^((d-1)!) otherwise."""
    if e < 1 or d < 1:
        raise ValueError("multiplicity and dimension must be positive")
    if d == 1:
        return e - 1
    f = factorial(d - 1)
    return e ** (2 * f - 1) * (e - 1) ** f


@dataclass(frozen=True)
class SeriesData:
    """Poincare-series numerator plus the invariants read off from it."""

    numerator: tuple[int, ...]
    denominator_power: int
    mode: str
    window_used: int
    samples: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return sum(self.numerator)

    @property
    def postulation(self) -> int:
        return len(self.numerator) - 1 - self.denominator_power

    def coefficient_list(self) -> tuple[int, ...]:
        """Hilbert coefficients e_0..e_D read off the numerator."""
        return hilbert_coefficients(self)

    def polynomial_value(self, n: int) -> int:
        """Hilbert-Samuel polynomial evaluated at n."""
        D = self.denominator_power
        coeffs = hilbert_coefficients(self)
        return sum((-1) ** j * coeffs[j] * _binom(n + D - j, D - j) for j in range(D + 1))

    def reconstructed_sample(self, n: int) -> int:
        """h(n) rebuilt from the numerator alone."""
        D = self.denominator_power
        return sum(a * _binom(n - i + D, D) for i, a in enumerate(self.numerator) if i <= n)

    def consistency_failures(self) -> list[str]:
        """Names of failed internal checks (empty is healthy)."""
        bad = []
        if not all(self.reconstructed_sample(n) == h for n, h in enumerate(self.samples)):
            bad.append("numerator-reconstruction")
        pn = self.postulation
        for n in range(max(pn, 0), len(self.samples)):
            if self.samples[n] != self.polynomial_value(n):
                bad.append("hilbert-polynomial-match")
                break
        if pn > 0 and pn - 1 < len(self.samples):
            if self.samples[pn - 1] == self.polynomial_value(pn - 1):
                bad.append("postulation-minimality")
        if self.multiplicity <= 0:
            bad.append("positive-multiplicity")
        return bad


def _binom(n: int, k: int) -> int:
    """Binomial coefficient as a polynomial in n (n may be negative)."""
    if k < 0:
        return 0
    if n >= 0:
        return comb(n, k)
    num = 1
    for i in range(k):
        num *= n - i
    return num // factorial(k)


def hilbert_coefficients(data: SeriesData) -> tuple[int, ...]:
    """e_j = sum_i C(i, j) a_i for j = 0..denominator_power."""
    a = data.numerator
    return tuple(sum(comb(i, j) * a[i] for i in range(len(a))) for j in range(data.denominator_power + 1))


def _require_m_primary(I: Ideal):
    witness = I.m_primary_witness()
    if witness is not None:
        raise NotMPrimaryError(f"input ideal is not m-primary: {witness}", witness=witness)


def hilbert_samuel(I: Ideal, n: int) -> int:
    """h_I(n) = colength(I^{n+1}); powers are cached on the ideal."""
    _require_m_primary(I)
    if n < 0:
        raise ValueError("the Hilbert-Samuel function is indexed by n >= 0")
    return I.power(n + 1).colength()


def hilbert_samuel_quotient(I: Ideal, x: Polynomial, n: int) -> int:
    """Hilbert-Samuel function of the image of I in R/(x): colength(I^{n+1} + (x))."""
    _require_m_primary(I)
    if x.is_zero():
        raise ZeroPolynomialError("the quotient element must be nonzero")
    if not I.contains(x):
        raise ElementNotInIdealError(f"{x} does not lie in the ideal")
    if n < 0:
        raise ValueError("the Hilbert-Samuel function is indexed by n >= 0")
    return (I.power(n + 1) + x).colength()


def _series_from_lengths(length_fn, d_ring, d_eff, mode, window, max_samples) -> SeriesData:
    if mode not in (HEURISTIC, CERTIFIED):
        raise ValueError(f"unknown mode {mode!r}")
    window = window if window is not None else d_ring + 3
    if window < 1:
        raise ValueError("window must be positive")
    depth = d_eff + 1
    signed = [(-1) ** j * comb(depth, j) for j in range(depth + 1)]

    samples: list[int] = []
    diffs: list[int] = []

    def extend_to(count: int):
        if count > max_samples:
            raise BoundTooLargeError(
                f"needed {count} length samples but the cap is {max_samples}"
            )
        while len(samples) < count:
            n = len(samples)
            samples.append(length_fn(n))
            diffs.append(sum(signed[j] * samples[n - j] for j in range(depth + 1) if n - j >= 0))

    # heuristic phase: stop after `window` consecutive zero differences
    n = 0
    zero_run = 0
    while zero_run < window:
        extend_to(n + 1)
        zero_run = zero_run + 1 if diffs[n] == 0 else 0
        n += 1

    if mode == CERTIFIED:
        # pn(I; -) <= regularity_bound(e0, d) + 1, so the numerator degree is
        # at most bound + 1 + d_eff; extend sampling that far (iterating in
        # case the estimate of e0 grows).
        while True:
            cut = len(diffs)
            while cut and diffs[cut - 1] == 0:
                cut -= 1
            e0_est = sum(diffs[:cut])
            target = regularity_bound(max(e0_est, 1), d_ring) + 1 + d_eff + 1
            if target <= len(samples):
                break
            extend_to(target)

    cut = len(diffs)
    while cut and diffs[cut - 1] == 0:
        cut -= 1
    numerator = tuple(diffs[:cut]) if cut else (0,)
    return SeriesData(
        numerator=numerator,
        denominator_power=d_eff,
        mode=mode,
        window_used=window,
        samples=tuple(samples),
    )


def poincare_series(
    I: Ideal,
    mode: str = HEURISTIC,
    window: int | None = None,
    max_samples: int = DEFAULT_MAX_SAMPLES,
) -> SeriesData:
    """Numerator of PS_I(X) = f(X)/(1-X)^d, with e0 and pn read off it."""
    _require_m_primary(I)
    d = I.ring.dim
    return _series_from_lengths(
        lambda n: I.power(n + 1).colength(), d, d, mode, window, max_samples
    )


def poincare_series_quotient(
    I: Ideal,
    x: Polynomial,
    mode: str = HEURISTIC,
    window: int | None = None,
    max_samples: int = DEFAULT_MAX_SAMPLES,
) -> SeriesData:
    """Poincare data of the image of I in R/(x) (denominator power d-1)."""
    _require_m_primary(I)
    if x.is_zero():
        raise ZeroPolynomialError("the quotient element must be nonzero")
    if not I.contains(x):
        raise ElementNotInIdealError(f"{x} does not lie in the ideal")
    d = I.ring.dim
    return _series_from_lengths(
        lambda n: (I.power(n + 1) + x).colength(), d, d - 1, mode, window, max_samples
    )


def quotient_series_set(I: Ideal, elements, **opts) -> list[SeriesData]:
    return [poincare_series_quotient(I, x, **opts) for x in elements]


def postulation_with_reduction(I: Ideal, elements, **opts) -> int:
    """max of pn(I) and pn(I/(x_i)) over a certified superficial sequence."""
    main = poincare_series(I, **opts)
    quotients = quotient_series_set(I, elements, **opts)
    return max(main.postulation, *(q.postulation for q in quotients))
