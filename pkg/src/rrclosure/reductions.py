"""Superficial sequences and minimal reductions.

A candidate sequence x_1..x_d of elements of I is certified superficial by
the length test colength(R/(x_1..x_d)) = e_0(I); the certified sequence then
generates a minimal reduction of I.  Candidates are random linear
combinations of the minimal generators (their cosets span I/mI, where
genericity lives).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import (
    ElementNotInIdealError,
    GenericityFailureError,
    NotMPrimaryError,
    NotSuperficialError,
    RMaxExceededError,
)
from .hilbert import regularity_bound
from .ideals import INFINITE, Ideal
from .polynomials import Polynomial

DEFAULT_MAX_ATTEMPTS = 25
DEFAULT_COEFF_BOUND = 10


class CertifiedBoundViolation(AssertionError):
    """A certified bound failed; indicates a bug, not a user error."""


@dataclass(frozen=True)
class ReductionCertificate:
    """Witness that (elements) is a superficial sequence / minimal reduction:
    the colength of the generated ideal equals the multiplicity."""

    elements: tuple[Polynomial, ...]
    colength: int
    multiplicity: int
    seed: int | None
    attempts: int

    def ideal(self) -> Ideal:
        return Ideal(self.elements[0].ring, self.elements)


def _require_m_primary(I: Ideal):
    witness = I.m_primary_witness()
    if witness is not None:
        raise NotMPrimaryError(f"input ideal is not m-primary: {witness}", witness=witness)


def certify_sequence(I: Ideal, elements, e0: int, seed=None, attempts=0) -> ReductionCertificate:
    """Certify a user-supplied sequence via the length test.

    The length that matters is the one at the origin (the ambient ring is the
    localization there).  When the candidate ideal is supported only at the
    origin its plain colength already equals the local length; random
    candidates usually pick up extra zeros elsewhere, so the general path
    reads the local length off stabilized truncations J + m^N.
    """
    _require_m_primary(I)
    elements = tuple(elements)
    if len(elements) != I.ring.dim:
        raise NotSuperficialError(
            f"need {I.ring.dim} elements (the ring dimension), got {len(elements)}"
        )
    for x in elements:
        if x.is_zero() or not I.contains(x):
            raise ElementNotInIdealError(f"{x} does not lie in the ideal")
    J = Ideal(I.ring, elements)
    if J.colength() == e0:
        # squeeze: local length <= total colength = e0, and a d-generated
        # parameter ideal inside I has local length >= e(J) >= e(I) = e0
        length = e0
    else:
        length = J.colength_at_origin(expect=e0)
    if length is INFINITE or length != e0:
        raise NotSuperficialError(
            f"length of the candidate reduction at the origin is {length}, expected e0 = {e0}"
        )
    return ReductionCertificate(elements, length, e0, seed, attempts)


def find_superficial_sequence(
    I: Ideal,
    e0: int,
    seed: int = 0,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
    coeff_bound: int = DEFAULT_COEFF_BOUND,
) -> ReductionCertificate:
    """Random search for a superficial sequence, deterministic in the seed.

    Coefficients are drawn from {-B..B}\\{0} over the rationals (B doubles on
    every retry) or uniformly from F_p* over a prime field.
    """
    _require_m_primary(I)
    gens = I.minimal_generators()
    d = I.ring.dim
    rng = random.Random(seed)
    p = I.ring.field.characteristic
    bound = coeff_bound
    for attempt in range(1, max_attempts + 1):
        candidates = []
        for _ in range(d):
            combo = I.ring.zero
            for g in gens:
                if p:
                    c = rng.randrange(1, p)
                else:
                    c = rng.choice((-1, 1)) * rng.randint(1, bound)
                combo = combo + g.scale(c)
            candidates.append(combo)
        try:
            return certify_sequence(I, candidates, e0, seed=seed, attempts=attempt)
        except NotSuperficialError:
            if not p:
                bound *= 2
            continue
    raise GenericityFailureError(
        f"no superficial sequence found in {max_attempts} attempts; "
        "a larger coefficient pool or prime field usually helps"
    )


def reduction_number(I: Ideal, J: Ideal, r_max: int = 64) -> int:
    """Least r with I^{r+1} = J * I^r, for a certified minimal reduction J.

    The equality is the one in the localization: J * I^r sits inside the
    m-primary ideal I^{r+1}, so the two agree at the origin exactly when
    their local lengths do.
    """
    _require_m_primary(I)
    if J.ring != I.ring:
        raise NotSuperficialError("reduction lives in a different ring")
    e0 = J.colength_at_origin()
    for r in range(r_max + 1):
        target = I.power(r + 1).colength()
        product = J.multiply(I.power(r))
        if product.colength_at_origin(expect=target) == target:
            if e0 is not INFINITE and r > regularity_bound(e0, I.ring.dim):
                raise CertifiedBoundViolation(
                    f"reduction number {r} exceeds the certified bound"
                )
            return r
    raise RMaxExceededError(f"no reduction number up to r_max = {r_max}")
