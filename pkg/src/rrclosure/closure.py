"""Ratliff-Rush closure of an m-primary ideal.

The pipeline: (1) Poincare series of I gives e0 and pn(I); (2) a certified
superficial sequence x_1..x_d; (3) quotient Poincare series give
pn(I; x_1..x_d); (4) the closure is the colon (I^{k+1} : (x_1^k..x_d^k)) at
k = max(pn(I;xs)+1, 1).  In heuristic mode the run additionally verifies
that the colon chain has stabilized at k and retries with a doubled sampling
window otherwise.  The alternative colon-powers route (I^{k+1} : I^k) is
exposed for cross-validation at its certified threshold.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .errors import (
    BoundTooLargeError,
    ChainUnstableError,
    GenericityFailureError,
    NotMPrimaryError,
    NotSuperficialError,
)
from .hilbert import (
    DEFAULT_MAX_SAMPLES,
    HEURISTIC,
    SeriesData,
    poincare_series,
    poincare_series_quotient,
    regularity_bound,
)
from .ideals import Ideal
from .reductions import (
    DEFAULT_COEFF_BOUND,
    DEFAULT_MAX_ATTEMPTS,
    ReductionCertificate,
    certify_sequence,
    find_superficial_sequence,
)

DEFAULT_COLON_POWERS_CAP = 512
_STABILITY_RETRIES = 3


@dataclass(frozen=True)
class BoundParams:
    """Certified thresholds derived from multiplicity and dimension."""

    multiplicity: int
    dim: int
    regularity_bound: int
    colon_powers_k: int

    @classmethod
    def for_ideal(cls, e0: int, d: int) -> "BoundParams":
        f_value = regularity_bound(e0, d)
        return cls(e0, d, f_value, (d + 1) * (f_value + 2))


def colon_powers_threshold(e0: int, d: int) -> int:
    """Certified k for the closure formula (I^{k+1} : I^k)."""
    return BoundParams.for_ideal(e0, d).colon_powers_k


def chain_term(I: Ideal, elements, k: int) -> Ideal:
    """The k-th term (I^{k+1} : (x_1^k, ..., x_d^k)) of the colon chain."""
    if k < 1:
        raise ValueError("chain terms are indexed by k >= 1")
    return I.power(k + 1).colon([x**k for x in elements])


@dataclass(frozen=True)
class ClosureReport:
    """Everything a closure run certifies, for reporting and cross-checks."""

    input_ideal: Ideal
    series: SeriesData
    certificate: ReductionCertificate
    quotient_series: tuple[SeriesData, ...]
    postulation_joint: int | None
    k_used: int
    closure_ideal: Ideal
    closure_generators: tuple
    is_closed: bool
    mode: str
    checks_passed: tuple[str, ...]
    timings: dict = field(default_factory=dict)

    @property
    def multiplicity(self) -> int:
        return self.series.multiplicity

    @property
    def postulation(self) -> int:
        return self.series.postulation

    @property
    def quotient_postulations(self) -> tuple[int, ...]:
        return tuple(q.postulation for q in self.quotient_series)


def _series_checks(series: SeriesData, label: str, failures: list[str], passed: list[str]):
    bad = series.consistency_failures()
    if bad:
        failures.extend(f"{label}:{name}" for name in bad)
    else:
        passed.append(f"{label}-consistent")


def closure(
    I: Ideal,
    reduction=None,
    mode: str = HEURISTIC,
    seed: int = 0,
    window: int | None = None,
    max_samples: int = DEFAULT_MAX_SAMPLES,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
    coeff_bound: int = DEFAULT_COEFF_BOUND,
    k_override: int | None = None,
) -> ClosureReport:
    """Compute the Ratliff-Rush closure with a full certificate report.

    ``reduction`` may be a sequence of polynomials to use (certified before
    use); otherwise a generic one is searched, deterministically in ``seed``.
    ``k_override`` skips the postulation bookkeeping and uses the given chain
    index directly (the stabilization check still runs in heuristic mode).
    """
    witness = I.m_primary_witness()
    if witness is not None:
        raise NotMPrimaryError(f"input ideal is not m-primary: {witness}", witness=witness)

    timings: dict = {}
    win = window
    last_failures: list[str] = []
    last_error = None
    for round_no in range(_STABILITY_RETRIES):
        passed: list[str] = []
        failures: list[str] = []

        t0 = time.perf_counter()
        series = poincare_series(I, mode=mode, window=win, max_samples=max_samples)
        timings["poincare"] = time.perf_counter() - t0
        e0 = series.multiplicity
        _series_checks(series, "series", failures, passed)

        # a wrong heuristic numerator usually dies right here: no candidate
        # can certify against a wrong e0, which is the cross-check doing its
        # job, so it feeds the same window-doubling retry
        t0 = time.perf_counter()
        try:
            if reduction is not None:
                cert = certify_sequence(I, reduction, e0, seed=seed)
            else:
                cert = find_superficial_sequence(
                    I, e0, seed=seed, max_attempts=max_attempts, coeff_bound=coeff_bound
                )
        except (GenericityFailureError, NotSuperficialError) as exc:
            last_error = exc
            last_failures = failures + ["reduction-certification"]
            base = win if win is not None else I.ring.dim + 3
            win = base * 2
            continue
        finally:
            timings["reduction"] = time.perf_counter() - t0
        passed.append("reduction-colength-equals-e0")

        if k_override is None:
            t0 = time.perf_counter()
            quotients = tuple(
                poincare_series_quotient(I, x, mode=mode, window=win, max_samples=max_samples)
                for x in cert.elements
            )
            timings["quotient-poincare"] = time.perf_counter() - t0
            for i, q in enumerate(quotients):
                _series_checks(q, f"quotient-{i}", failures, passed)
            pn_joint = max(series.postulation, *(q.postulation for q in quotients))
            k = max(pn_joint + 1, 1)
        else:
            quotients = ()
            pn_joint = None
            k = max(k_override, 1)

        t0 = time.perf_counter()
        result = chain_term(I, cert.elements, k)
        timings["chain-colon"] = time.perf_counter() - t0

        if mode == HEURISTIC:
            t0 = time.perf_counter()
            stable = result.equals(chain_term(I, cert.elements, k + 1))
            timings["stabilization-check"] = time.perf_counter() - t0
            if stable:
                passed.append("chain-stabilization")
            else:
                failures.append("chain-stabilization")

        if not failures:
            break
        last_failures = failures
        last_error = None
        base = win if win is not None else I.ring.dim + 3
        win = base * 2
    else:
        if last_error is not None:
            raise last_error
        raise ChainUnstableError(
            "the colon chain did not stabilize at the predicted index; "
            f"failed checks after retries: {', '.join(sorted(set(last_failures)))}"
        )

    closure_ideal = result
    gens = closure_ideal.minimal_generators()
    is_closed = closure_ideal.equals(I)
    return ClosureReport(
        input_ideal=I,
        series=series,
        certificate=cert,
        quotient_series=quotients,
        postulation_joint=pn_joint,
        k_used=k,
        closure_ideal=closure_ideal,
        closure_generators=gens,
        is_closed=is_closed,
        mode=mode,
        checks_passed=tuple(passed),
        timings=timings,
    )


def closure_power(I: Ideal, n: int, **opts) -> ClosureReport:
    """Closure of I^n."""
    if n < 1:
        raise ValueError("closure_power is indexed by n >= 1")
    return closure(I.power(n), **opts)


def is_ratliff_rush_closed(I: Ideal, **opts) -> bool:
    return closure(I, **opts).is_closed


def closure_via_colon_powers(
    I: Ideal,
    k: int | None = None,
    max_threshold: int = DEFAULT_COLON_POWERS_CAP,
    e0: int | None = None,
):
    """The closure as (I^{k+1} : I^k) at the certified threshold.

    Returns (ideal, BoundParams, certified).  A ``k`` below the threshold is
    accepted but flagged uncertified; without an override the certified k
    must stay under ``max_threshold`` (BOUND_TOO_LARGE otherwise).
    """
    witness = I.m_primary_witness()
    if witness is not None:
        raise NotMPrimaryError(f"input ideal is not m-primary: {witness}", witness=witness)
    if e0 is None:
        e0 = poincare_series(I).multiplicity
    bounds = BoundParams.for_ideal(e0, I.ring.dim)
    certified_k = bounds.colon_powers_k
    if k is None:
        if certified_k > max_threshold:
            raise BoundTooLargeError(
                f"certified colon-powers index {certified_k} exceeds the cap {max_threshold}; "
                "pass an explicit k to run uncertified"
            )
        k = certified_k
    certified = k >= certified_k
    power = I.power(k)
    result = I.power(k + 1).colon(power._best_generators())
    return result, bounds, certified
