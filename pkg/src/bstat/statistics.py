"""Descent statistics on signed words and their monomial weights.

Two statistic pairs extend (des, maj) from plain words to signed words,
and both reduce to it on all-positive words:

* the negative pair ``(ndes, nmaj)``: descents plus the number of
  negative letters, and major index plus their magnitude sum;
* the flag pair ``(fdes, fmaj)``: doubled descents plus 1 when the first
  letter is negative, and doubled major index plus the number of
  negative letters.

``weight(w, family)`` packages a pair as the exponents of a monomial
t^a * q^b, the form in which distributions are accumulated.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .core import IndexSet, descent_number, major_index

__all__ = [
    "FAMILIES",
    "TQMonomial",
    "negative_set",
    "ndes",
    "nmaj",
    "fdes",
    "fmaj",
    "weight",
]

FAMILIES = ("neg", "flag")


class TQMonomial(NamedTuple):
    """Exponent pair (a, b) standing for the monomial t^a * q^b."""

    t_exp: int
    q_exp: int


def negative_set(w: Sequence[int]) -> IndexSet:
    """Magnitudes of the negative letters of ``w``.

    >>> negative_set((-2, 1, -3, -4))
    IndexSet(4, [2, 3, 4])
    """
    return IndexSet(len(w), (-x for x in w if x < 0))


def ndes(w: Sequence[int]) -> int:
    """Descent number plus the number of negative letters."""
    return descent_number(w) + sum(1 for x in w if x < 0)


def nmaj(w: Sequence[int]) -> int:
    """Major index plus the magnitude sum of the negative letters."""
    return major_index(w) + sum(-x for x in w if x < 0)


def fdes(w: Sequence[int]) -> int:
    """Doubled descent number, plus 1 when the first letter is negative."""
    return 2 * descent_number(w) + (1 if w[0] < 0 else 0)


def fmaj(w: Sequence[int]) -> int:
    """Doubled major index plus the number of negative letters."""
    return 2 * major_index(w) + sum(1 for x in w if x < 0)


def weight(w: Sequence[int], family: str) -> TQMonomial:
    """The t/q exponents of ``w`` in the given family (``"neg"`` or ``"flag"``).

    >>> weight((-5, 7, 6, 1, 2, -4, -3), "neg")
    TQMonomial(t_exp=7, q_exp=28)
    >>> weight((-5, 7, 6, 1, 2, -4, -3), "flag")
    TQMonomial(t_exp=9, q_exp=35)
    """
    if family == "neg":
        return TQMonomial(ndes(w), nmaj(w))
    if family == "flag":
        return TQMonomial(fdes(w), fmaj(w))
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
