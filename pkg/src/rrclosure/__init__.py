"""Exact computation of Ratliff-Rush closures of m-primary ideals.

The public surface: polynomial rings over QQ or F_p (`PolyRing`, `QQ`,
`GF`), the ideal calculus (`Ideal`, `groebner_basis`, `normal_form`),
Hilbert/Poincare invariants (`poincare_series`, `hilbert_samuel`,
`hilbert_coefficients`), certified reductions
(`find_superficial_sequence`, `certify_sequence`, `reduction_number`) and
the closure pipeline (`closure`, `closure_power`, `is_ratliff_rush_closed`,
`closure_via_colon_powers`, `chain_term`).
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from ._version import __version__
from .closure import (
    BoundParams,
    ClosureReport,
    chain_term,
    closure,
    closure_power,
    closure_via_colon_powers,
    colon_powers_threshold,
    is_ratliff_rush_closed,
)
from .errors import (
    BoundTooLargeError,
    ChainUnstableError,
    ElementNotInIdealError,
    ExponentOverflowError,
    GenericityFailureError,
    NotMPrimaryError,
    NotSuperficialError,
    ParseError,
    RingMismatchError,
    RMaxExceededError,
    RRClosureError,
    ZeroPolynomialError,
)
from .hilbert import (
    SeriesData,
    hilbert_coefficients,
    hilbert_samuel,
    hilbert_samuel_quotient,
    poincare_series,
    poincare_series_quotient,
    postulation_with_reduction,
    quotient_series_set,
    regularity_bound,
)
from .ideals import INFINITE, Ideal, ReducedBasis, exact_divide, groebner_basis, normal_form
from .orders import TermOrder, degrevlex
from .parsing import ProblemFile, parse_polynomial, parse_problem, print_polynomial
from .polynomials import Polynomial, PolyRing
from .reductions import (
    ReductionCertificate,
    certify_sequence,
    find_superficial_sequence,
    reduction_number,
)
from .scalars import GF, QQ, PrimeField, RationalField

__all__ = [
    "BACKEND",
    "BoundParams",
    "BoundTooLargeError",
    "ChainUnstableError",
    "ClosureReport",
    "ElementNotInIdealError",
    "ExponentOverflowError",
    "GF",
    "GenericityFailureError",
    "INFINITE",
    "Ideal",
    "KERNEL_BACKEND",
    "NotMPrimaryError",
    "NotSuperficialError",
    "ParseError",
    "PolyRing",
    "Polynomial",
    "PrimeField",
    "ProblemFile",
    "QQ",
    "RMaxExceededError",
    "RRClosureError",
    "RationalField",
    "ReducedBasis",
    "ReductionCertificate",
    "RingMismatchError",
    "SeriesData",
    "TermOrder",
    "ZeroPolynomialError",
    "certify_sequence",
    "chain_term",
    "closure",
    "closure_power",
    "closure_via_colon_powers",
    "colon_powers_threshold",
    "degrevlex",
    "exact_divide",
    "find_superficial_sequence",
    "groebner_basis",
    "hilbert_coefficients",
    "hilbert_samuel",
    "hilbert_samuel_quotient",
    "is_ratliff_rush_closed",
    "normal_form",
    "parse_polynomial",
    "parse_problem",
    "poincare_series",
    "poincare_series_quotient",
    "postulation_with_reduction",
    "print_polynomial",
    "quotient_series_set",
    "reduction_number",
    "regularity_bound",
    "__version__",
]
