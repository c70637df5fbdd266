"""Words over a signed alphabet and the descent machinery built on them.

A *plain word* is a permutation of {1, ..., n} written in one-line
notation.  A *signed word* may negate any subset of its letters; the
magnitudes must still form a permutation of {1, ..., n}.  Letters are
compared in the order

    -1 < -2 < ... < -n < 1 < 2 < ... < n,

so every negative letter is smaller than every positive one and negative
letters sort by magnitude.  Descents, and every statistic derived from
them elsewhere in this package, are taken with respect to this order.

Words are plain tuples of ints (the classes subclass ``tuple``), and the
functions here accept any integer sequence, so interactive use with
literals like ``(3, -1, 4, 2)`` works throughout.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

__all__ = [
    "WordError",
    "EmptyWordError",
    "ZeroLetterError",
    "NonPermutationError",
    "AmbientMismatchError",
    "IndexOutOfRangeError",
    "SignedWord",
    "PlainWord",
    "IndexSet",
    "compare_letters",
    "letter_sort_key",
    "sort_letters",
    "descent_set",
    "descent_number",
    "major_index",
    "magnitudes",
    "standardize",
    "parse_word",
    "format_word",
]


class WordError(ValueError):
    """Raised when text or letters do not form a valid word."""


class EmptyWordError(WordError):
    """Words must contain at least one letter."""


class ZeroLetterError(WordError):
    """0 is not a letter; letters are drawn from {1, ..., n} and negatives."""


class NonPermutationError(WordError):
    """Letter magnitudes must form a permutation of {1, ..., n}."""


class AmbientMismatchError(ValueError):
    """Raised when index sets or words of different ambient size are mixed."""


class IndexOutOfRangeError(IndexError):
    """Raised when a 1-based position lies outside the word."""


def compare_letters(a: int, b: int) -> int:
    """Three-way comparison of two nonzero letters; returns -1, 0, or 1.

    >>> compare_letters(-5, 7)
    -1
    >>> compare_letters(-4, -3)
    1
    >>> compare_letters(3, 3)
    0
    """
    if a == b:
        return 0
    if (a < 0) != (b < 0):
        return -1 if a < 0 else 1
    if a < 0:
        return -1 if -a < -b else 1
    return -1 if a < b else 1


def letter_sort_key(a: int) -> tuple[int, int]:
    """A sort key realizing the same letter order as :func:`compare_letters`."""
    return (0, -a) if a < 0 else (1, a)


def sort_letters(letters: Iterable[int]) -> list[int]:
    """Sort letters into ascending letter order.

    This single ranking is what standardization and the subset-indexed
    fiber elements are built on.

    >>> sort_letters([3, -1, 4, -2])
    [-1, -2, 3, 4]
    """
    return sorted(letters, key=letter_sort_key)


class SignedWord(tuple):
    """A word over {±1, ..., ±n} whose magnitudes form a permutation.

    >>> SignedWord([-5, 7, 6, 1, 2, -4, -3])
    SignedWord('-5 7 6 1 2 -4 -3')
    >>> SignedWord([1, 1, 2])
    Traceback (most recent call last):
        ...
    bstat.core.NonPermutationError: magnitudes of (1, 1, 2) are not a permutation of 1..3
    """

    __slots__ = ()

    def __new__(cls, letters: Iterable[int]):
        w = tuple.__new__(cls, letters)
        cls._check(w)
        return w

    @classmethod
    def _check(cls, w: tuple[int, ...]) -> None:
        if not w:
            raise EmptyWordError("a word must contain at least one letter")
        if any(x == 0 for x in w):
            raise ZeroLetterError(f"0 is not a letter: {tuple(w)}")
        if sorted(abs(x) for x in w) != list(range(1, len(w) + 1)):
            raise NonPermutationError(
                f"magnitudes of {tuple(w)} are not a permutation of 1..{len(w)}"
            )

    @classmethod
    def _from_trusted(cls, letters: Iterable[int]) -> "SignedWord":
        # Fast path for enumeration loops that build valid words by construction.
        return tuple.__new__(cls, letters)

    @property
    def n(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({format_word(self)!r})"


class PlainWord(SignedWord):
    """An all-positive word: a permutation of {1, ..., n} in one-line notation.

    >>> PlainWord([3, 1, 4, 2])
    PlainWord('3 1 4 2')
    """

    __slots__ = ()

    @classmethod
    def _check(cls, w: tuple[int, ...]) -> None:
        SignedWord._check(w)
        if any(x < 0 for x in w):
            raise NonPermutationError(
                f"{tuple(w)} contains a negative letter; plain words are all-positive"
            )


class IndexSet:
    """A subset of {1, ..., n} together with its ambient n.

    Carrying the ambient size makes the complement well-defined and lets
    the set algebra reject mixing subsets of different ambients.

    >>> IndexSet(4, [3, 1]) ^ IndexSet(4, [1, 2])
    IndexSet(4, [2, 3])
    >>> IndexSet(4, [1]).complement()
    IndexSet(4, [2, 3, 4])
    """

    __slots__ = ("n", "_members")

    def __init__(self, n: int, members: Iterable[int] = ()):
        if n < 0:
            raise ValueError(f"ambient size must be nonnegative, got {n}")
        ms = frozenset(members)
        for i in ms:
            if not 1 <= i <= n:
                raise AmbientMismatchError(f"index {i} outside ambient 1..{n}")
        self.n = n
        self._members = ms

    def members(self) -> frozenset[int]:
        return self._members

    def complement(self) -> "IndexSet":
        return IndexSet(self.n, set(range(1, self.n + 1)) - self._members)

    def _require_same_ambient(self, other: "IndexSet") -> None:
        if not isinstance(other, IndexSet):
            raise TypeError(f"expected an IndexSet, got {type(other).__name__}")
        if self.n != other.n:
            raise AmbientMismatchError(f"ambient mismatch: n={self.n} vs n={other.n}")

    def __or__(self, other: "IndexSet") -> "IndexSet":
        self._require_same_ambient(other)
        return IndexSet(self.n, self._members | other._members)

    def __and__(self, other: "IndexSet") -> "IndexSet":
        self._require_same_ambient(other)
        return IndexSet(self.n, self._members & other._members)

    def __xor__(self, other: "IndexSet") -> "IndexSet":
        self._require_same_ambient(other)
        return IndexSet(self.n, self._members ^ other._members)

    def __contains__(self, i: int) -> bool:
        return i in self._members

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self._members))

    def __len__(self) -> int:
        return len(self._members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IndexSet):
            return NotImplemented
        return self.n == other.n and self._members == other._members

    def __hash__(self) -> int:
        return hash((self.n, self._members))

    def __repr__(self) -> str:
        return f"IndexSet({self.n}, {sorted(self._members)})"


def _descent_positions(w: Sequence[int]) -> list[int]:
    return [i for i in range(1, len(w)) if compare_letters(w[i - 1], w[i]) > 0]


def descent_set(w: Sequence[int]) -> IndexSet:
    """Positions i with w_i > w_{i+1} in letter order, as a subset of {1, ..., n-1}.

    The ambient is n so descent sets combine with other subsets of
    positions (e.g. sign patterns) of the same word.

    >>> descent_set((-5, 7, 6, 1, 2, -4, -3))
    IndexSet(7, [2, 3, 5, 6])
    >>> descent_set((3, 1, 4, 2))
    IndexSet(4, [1, 3])
    """
    return IndexSet(len(w), _descent_positions(w))


def descent_number(w: Sequence[int]) -> int:
    """Number of descents of ``w``."""
    return len(_descent_positions(w))


def major_index(w: Sequence[int]) -> int:
    """Sum of the descent positions of ``w``.

    >>> major_index((-5, 7, 6, 1, 2, -4, -3))
    16
    """
    return sum(_descent_positions(w))


def magnitudes(w: Sequence[int]) -> PlainWord:
    """Forget all signs: the plain word of absolute values."""
    return PlainWord._from_trusted(abs(x) for x in w)


def standardize(w: Sequence[int]) -> PlainWord:
    """Replace each letter by its rank in letter order (smallest -> 1).

    The result is the unique plain word whose letters compare the same
    way, pairwise, as those of ``w``; in particular the descent set is
    preserved.

    >>> standardize((-5, 7, 6, 1, 2, -4, -3))
    PlainWord('3 7 6 4 5 2 1')
    """
    rank = {x: r for r, x in enumerate(sort_letters(w), start=1)}
    return PlainWord._from_trusted(rank[x] for x in w)


def parse_word(text: str) -> SignedWord:
    """Parse a word from whitespace- or comma-separated signed integers.

    >>> parse_word("-5 7 6 1 2 -4 -3")
    SignedWord('-5 7 6 1 2 -4 -3')
    >>> parse_word("3,1,4,2")
    SignedWord('3 1 4 2')
    """
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise EmptyWordError("empty word")
    letters = []
    for token in tokens:
        try:
            letters.append(int(token))
        except ValueError:
            raise WordError(f"invalid letter {token!r}") from None
    return SignedWord(letters)


def format_word(w: Sequence[int]) -> str:
    """Render a word as space-separated letters, the inverse of :func:`parse_word`."""
    return " ".join(str(x) for x in w)
