"""Descent statistics on signed permutations.

Signed words carry two statistic pairs extending (des, maj): the
negative pair (ndes, nmaj) and the flag pair (fdes, fmaj).  This package
computes them, realizes an explicit weight-preserving bijection between
the fibers that carry them, builds their exact joint-distribution
polynomials, and re-verifies the identities relating them by exhaustive
enumeration (``bstat verify`` on the command line).
"""

from .bijection import (
    build_u_J,
    decompose_delta,
    delta,
    delta_set,
    flag_to_neg,
    neg_to_flag,
    w_min,
)
from .core import (
    AmbientMismatchError,
    EmptyWordError,
    IndexOutOfRangeError,
    IndexSet,
    NonPermutationError,
    PlainWord,
    SignedWord,
    WordError,
    ZeroLetterError,
    compare_letters,
    descent_number,
    descent_set,
    format_word,
    magnitudes,
    major_index,
    parse_word,
    standardize,
)
from .distributions import (
    SizeLimitError,
    dist_flag,
    dist_flag_over,
    dist_neg,
    dist_neg_over,
    enumerate_B,
    enumerate_B_of_u,
    enumerate_Bprime_of_u,
    enumerate_S,
    refined_eulerian,
    signed_distributions,
)
from .polynomial import (
    MalformedFactorError,
    TQPolynomial,
    geometric_truncated,
    one_minus,
    product_one_plus_tq,
    q_integer,
)
from .statistics import TQMonomial, fdes, fmaj, ndes, negative_set, nmaj, weight
from .verify import CheckResult, run_all

__version__ = "0.1.0"

__all__ = [
    "AmbientMismatchError",
    "CheckResult",
    "EmptyWordError",
    "IndexOutOfRangeError",
    "IndexSet",
    "MalformedFactorError",
    "NonPermutationError",
    "PlainWord",
    "SignedWord",
    "SizeLimitError",
    "TQMonomial",
    "TQPolynomial",
    "WordError",
    "ZeroLetterError",
    "build_u_J",
    "compare_letters",
    "decompose_delta",
    "delta",
    "delta_set",
    "descent_number",
    "descent_set",
    "dist_flag",
    "dist_flag_over",
    "dist_neg",
    "dist_neg_over",
    "enumerate_B",
    "enumerate_B_of_u",
    "enumerate_Bprime_of_u",
    "enumerate_S",
    "fdes",
    "flag_to_neg",
    "fmaj",
    "format_word",
    "geometric_truncated",
    "magnitudes",
    "major_index",
    "ndes",
    "neg_to_flag",
    "negative_set",
    "nmaj",
    "one_minus",
    "parse_word",
    "product_one_plus_tq",
    "q_integer",
    "refined_eulerian",
    "run_all",
    "signed_distributions",
    "standardize",
    "w_min",
    "weight",
]
