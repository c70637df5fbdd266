"""Hypothesis strategies shared across the test modules."""

from hypothesis import strategies as st

from bstat.core import PlainWord, SignedWord


def plain_words(max_n: int = 7):
    return (
        st.integers(1, max_n)
        .flatmap(lambda n: st.permutations(list(range(1, n + 1))))
        .map(PlainWord)
    )


@st.composite
def signed_words(draw, max_n: int = 7):
    n = draw(st.integers(1, max_n))
    perm = draw(st.permutations(list(range(1, n + 1))))
    mask = draw(st.integers(0, (1 << n) - 1))
    return SignedWord(-x if mask >> i & 1 else x for i, x in enumerate(perm))
