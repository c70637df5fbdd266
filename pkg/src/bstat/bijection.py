"""Sign patterns on fibers and the statistic-matching correspondence.

Fix a plain word u of length n.  Two fibers over u each carry a copy of
the boolean lattice of subsets of {1, ..., n}:

* the standardization fiber B(u), all signed words with standardization
  u; its member with negative-letter magnitudes J is ``build_u_J(u, J)``;
* the magnitude fiber B'(u), all 2^n sign assignments to u itself;
  writing ``delta(w, i)`` for negating the first i letters, every member
  is ``delta_set(u, K)`` for exactly one subset K (recovered by
  :func:`decompose_delta`).

``neg_to_flag`` sends the J-element of B(u) to the (J xor Des(u))-element
of B'(u), and ``flag_to_neg`` inverts it.  The point of this particular
matching is that it converts the negative statistic pair into the flag
pair: ndes(w) = fdes(neg_to_flag(w)) and nmaj(w) = fmaj(neg_to_flag(w)).
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .core import (
    AmbientMismatchError,
    IndexOutOfRangeError,
    IndexSet,
    SignedWord,
    descent_set,
    magnitudes,
    sort_letters,
    standardize,
)
from .statistics import negative_set

__all__ = [
    "build_u_J",
    "delta",
    "delta_set",
    "decompose_delta",
    "w_min",
    "neg_to_flag",
    "flag_to_neg",
]


def _as_members(w: Sequence[int], subset: "IndexSet | Iterable[int]") -> frozenset[int]:
    if isinstance(subset, IndexSet):
        if subset.n != len(w):
            raise AmbientMismatchError(
                f"subset has ambient n={subset.n} but the word has length {len(w)}"
            )
        return subset.members()
    ms = frozenset(subset)
    for i in ms:
        if not 1 <= i <= len(w):
            raise AmbientMismatchError(f"index {i} outside ambient 1..{len(w)}")
    return ms


def build_u_J(u: Sequence[int], J: "IndexSet | Iterable[int]") -> SignedWord:
    """The unique member of B(u) whose negative letters have magnitude set J.

    Sort the target letter multiset {i : i not in J} union {-j : j in J}
    into letter order; the k-th smallest letter goes wherever u has the
    value k.

    >>> build_u_J((3, 1, 4, 2), {1, 3})
    SignedWord('2 -1 4 -3')
    """
    ms = _as_members(u, J)
    pool = sort_letters(-i if i in ms else i for i in range(1, len(u) + 1))
    return SignedWord._from_trusted(pool[k - 1] for k in u)


def delta(w: Sequence[int], i: int) -> SignedWord:
    """Negate the first i letters of ``w`` (i = 0 is the identity).

    >>> delta((4, 3, 1, 2), 4)
    SignedWord('-4 -3 -1 -2')
    """
    if not 0 <= i <= len(w):
        raise IndexOutOfRangeError(f"prefix length {i} outside 0..{len(w)}")
    return SignedWord._from_trusted(
        [-x for x in w[:i]] + [x for x in w[i:]]
    )


def delta_set(w: Sequence[int], K: "IndexSet | Iterable[int]") -> SignedWord:
    """Apply delta(. , k) for every k in K; the deltas all commute.

    Position p ends up negated exactly when an odd number of members of
    K are >= p.

    >>> delta_set((3, 1, 4, 2), {1, 3})
    SignedWord('3 -1 -4 2')
    """
    ms = _as_members(w, K)
    out = []
    parity = 0
    for p in range(len(w), 0, -1):
        if p in ms:
            parity ^= 1
        out.append(-w[p - 1] if parity else w[p - 1])
    out.reverse()
    return SignedWord._from_trusted(out)


def decompose_delta(v: Sequence[int]) -> IndexSet:
    """The unique K with delta_set(|v|, K) == v: positions where the sign
    changes between consecutive letters, reading a trailing + after v_n.

    >>> decompose_delta((4, 3, -1, -2))
    IndexSet(4, [2, 4])
    """
    n = len(v)
    members = []
    for j in range(1, n + 1):
        here = v[j - 1] < 0
        after = v[j] < 0 if j < n else False
        if here != after:
            members.append(j)
    return IndexSet(n, members)


def w_min(u: Sequence[int]) -> SignedWord:
    """The weight-minimal member delta_set(u, Des(u)) of the magnitude fiber.

    Negating the descent prefixes turns every descent of u into an
    ascent, which is what makes this the fdes/fmaj-minimum of B'(u).

    >>> w_min((3, 1, 4, 2))
    SignedWord('3 -1 -4 2')
    """
    return delta_set(u, descent_set(u))


def neg_to_flag(w: Sequence[int]) -> SignedWord:
    """Carry w from the standardization fiber of u = st(w) to the magnitude
    fiber of u, matching (ndes, nmaj) of the input with (fdes, fmaj) of the
    output.

    >>> neg_to_flag((-2, 1, -3, -4))
    SignedWord('1 4 2 -3')
    """
    u = standardize(w)
    J = negative_set(w)
    return delta_set(u, J ^ descent_set(u))


def flag_to_neg(v: Sequence[int]) -> SignedWord:
    """Inverse of :func:`neg_to_flag`.

    >>> flag_to_neg((4, 3, -1, -2))
    SignedWord('3 2 -1 -4')
    >>> flag_to_neg(neg_to_flag((-2, 1, -3, -4)))
    SignedWord('-2 1 -3 -4')
    """
    u = magnitudes(v)
    K = decompose_delta(v)
    return build_u_J(u, K ^ descent_set(u))
