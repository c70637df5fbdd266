"""Enumeration of plain and signed words and their joint distributions.

The enumerators are lazy streams with a contractual order:

* plain words in lexicographic order;
* signed words grouped by underlying plain word, sign patterns in
  bitmask order (bit i-1 set means position i is negated);
* fiber members in subset/bitmask order likewise.

Whole-group sums (``refined_eulerian`` and the two signed
distributions) dispatch to a counting kernel -- the compiled extension
when built, else the pure-Python fallback in :mod:`bstat._kernels`.
Group sizes grow as n! and 2^n * n!, so sums are capped: plain sums at
n <= 10, signed sums at n <= 9 (the signed group at n = 10 has about
3.7e9 elements and is rejected).
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterator, Sequence

from . import _kernels, statistics
from .bijection import build_u_J
from .core import PlainWord, SignedWord
from .polynomial import TQPolynomial

__all__ = [
    "SizeLimitError",
    "MAX_STREAM_N",
    "MAX_SIGNED_SUM_N",
    "enumerate_S",
    "enumerate_B",
    "enumerate_B_of_u",
    "enumerate_Bprime_of_u",
    "refined_eulerian",
    "signed_distributions",
    "dist_neg",
    "dist_flag",
    "dist_neg_over",
    "dist_flag_over",
]

MAX_STREAM_N = 10
MAX_SIGNED_SUM_N = 9


class SizeLimitError(ValueError):
    """Raised when an enumeration or sum would exceed the supported size."""


def _check_size(n: int, cap: int, what: str) -> None:
    if n < 1:
        raise SizeLimitError(f"{what} needs n >= 1, got {n}")
    if n > cap:
        raise SizeLimitError(f"{what} is capped at n <= {cap}, got {n}")


def enumerate_S(n: int) -> Iterator[PlainWord]:
    """All n! plain words of length n, lexicographically."""
    _check_size(n, MAX_STREAM_N, "plain-word enumeration")
    return (PlainWord._from_trusted(p) for p in permutations(range(1, n + 1)))


def _signed_from_mask(u: Sequence[int], mask: int) -> SignedWord:
    return SignedWord._from_trusted(
        -x if mask >> i & 1 else x for i, x in enumerate(u)
    )


def enumerate_B(n: int) -> Iterator[SignedWord]:
    """All 2^n * n! signed words of length n.

    Grouped by magnitudes in lexicographic order, sign masks ascending
    within each group.
    """
    _check_size(n, MAX_STREAM_N, "signed-word enumeration")
    return (
        _signed_from_mask(u, mask)
        for u in permutations(range(1, n + 1))
        for mask in range(1 << n)
    )


def enumerate_B_of_u(u: Sequence[int]) -> Iterator[SignedWord]:
    """The standardization fiber B(u): the 2^n words w with st(w) == u.

    Yields build_u_J(u, J) over subsets J in bitmask order (bit i-1
    represents magnitude i).
    """
    word = PlainWord(u)
    n = len(word)
    return (
        build_u_J(word, [i + 1 for i in range(n) if mask >> i & 1])
        for mask in range(1 << n)
    )


def enumerate_Bprime_of_u(u: Sequence[int]) -> Iterator[SignedWord]:
    """The magnitude fiber B'(u): all 2^n sign assignments to u.

    Yields words in sign-mask order (bit i-1 negates position i).
    """
    word = PlainWord(u)
    n = len(word)
    return (_signed_from_mask(word, mask) for mask in range(1 << n))


def refined_eulerian(n: int) -> TQPolynomial:
    """The joint (des, maj) distribution over all plain words of length n.

    >>> print(refined_eulerian(3))
    1 + 2*t*q + 2*t*q^2 + t^2*q^3
    """
    _check_size(n, MAX_STREAM_N, "refined Eulerian sum")
    return TQPolynomial(_kernels.active().eulerian_counts(n))


def signed_distributions(n: int) -> tuple[TQPolynomial, TQPolynomial]:
    """Both whole-group signed distributions at once (one enumeration pass).

    Returns (negative-family distribution, flag-family distribution),
    i.e. the sums of t^ndes * q^nmaj and of t^fdes * q^fmaj over all
    signed words of length n.
    """
    _check_size(n, MAX_SIGNED_SUM_N, "signed distribution sum")
    neg, flag = _kernels.active().signed_counts(n)
    return TQPolynomial(neg), TQPolynomial(flag)


def dist_neg(n: int) -> TQPolynomial:
    """Sum of t^ndes * q^nmaj over all signed words of length n."""
    return signed_distributions(n)[0]


def dist_flag(n: int) -> TQPolynomial:
    """Sum of t^fdes * q^fmaj over all signed words of length n."""
    return signed_distributions(n)[1]


def dist_neg_over(u: Sequence[int]) -> TQPolynomial:
    """Sum of t^ndes * q^nmaj over the standardization fiber B(u)."""
    return TQPolynomial.from_weights(
        statistics.weight(w, "neg") for w in enumerate_B_of_u(u)
    )


def dist_flag_over(u: Sequence[int]) -> TQPolynomial:
    """Sum of t^fdes * q^fmaj over the magnitude fiber B'(u)."""
    return TQPolynomial.from_weights(
        statistics.weight(w, "flag") for w in enumerate_Bprime_of_u(u)
    )
