"""Exact sparse polynomials in the two variables t and q.

Terms are stored sparsely by exponent pair with arbitrary-precision
integer coefficients (negative coefficients are allowed, so differences
and series factors like 1 - t^2*q^2 live in the same class).  Zero
coefficients are never stored, and iteration and printing follow
ascending (t, q) exponent order, so structural equality is mathematical
equality and output is deterministic.

There is no division.  Identities with a denominator are checked by
multiplying with a truncated geometric series for each factor
(:func:`geometric_truncated`) and comparing up to a t-degree bound.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .statistics import TQMonomial

__all__ = [
    "MalformedFactorError",
    "TQPolynomial",
    "q_integer",
    "product_one_plus_tq",
    "one_minus",
    "geometric_truncated",
]


class MalformedFactorError(ValueError):
    """Raised when a series factor is not of the invertible form 1 - t^a*q^b."""


def _term_text(a: int, b: int, c: int) -> str:
    factors = []
    if c != 1 or (a == 0 and b == 0):
        factors.append(str(c))
    if a:
        factors.append("t" if a == 1 else f"t^{a}")
    if b:
        factors.append("q" if b == 1 else f"q^{b}")
    return "*".join(factors)


class TQPolynomial:
    """A polynomial in t and q with exact integer coefficients.

    >>> p = TQPolynomial({(0, 0): 1, (1, 1): 1})
    >>> print(p * p)
    1 + 2*t*q + t^2*q^2
    >>> (p * p).coefficient(1, 1)
    2
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean: dict[tuple[int, int], int] = {}
        for (a, b), c in (terms or {}).items():
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent in term t^{a}*q^{b}")
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be int, got {type(c).__name__}")
            if c:
                clean[(a, b)] = c
        self._terms = clean

    @classmethod
    def _raw(cls, terms: dict[tuple[int, int], int]) -> "TQPolynomial":
        p = object.__new__(cls)
        p._terms = terms
        return p

    @classmethod
    def zero(cls) -> "TQPolynomial":
        return cls._raw({})

    @classmethod
    def one(cls) -> "TQPolynomial":
        return cls._raw({(0, 0): 1})

    @classmethod
    def monomial(cls, t_exp: int, q_exp: int, coeff: int = 1) -> "TQPolynomial":
        return cls({(t_exp, q_exp): coeff})

    @classmethod
    def from_weights(cls, weights: Iterable[tuple[int, int]]) -> "TQPolynomial":
        """Sum of t^a * q^b over a stream of exponent pairs.

        >>> print(TQPolynomial.from_weights([(0, 0), (1, 1), (1, 1)]))
        1 + 2*t*q
        """
        terms: dict[tuple[int, int], int] = {}
        for a, b in weights:
            key = (a, b)
            terms[key] = terms.get(key, 0) + 1
        return cls._raw(terms)

    def terms(self) -> list[tuple[tuple[int, int], int]]:
        """Terms as ((t_exp, q_exp), coeff) pairs in ascending (t, q) order."""
        return sorted(self._terms.items())

    def coefficient(self, t_exp: int, q_exp: int) -> int:
        return self._terms.get((t_exp, q_exp), 0)

    def t_degree(self) -> int:
        """Largest t exponent, or -1 for the zero polynomial."""
        return max((a for a, _ in self._terms), default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @staticmethod
    def _coerce(other: object) -> "TQPolynomial | None":
        if isinstance(other, TQPolynomial):
            return other
        if isinstance(other, int):
            return TQPolynomial({(0, 0): other})
        return None

    def __eq__(self, other: object) -> bool:
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        return self._terms == p._terms

    def __add__(self, other: object) -> "TQPolynomial":
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        out = dict(self._terms)
        for key, c in p._terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return TQPolynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "TQPolynomial":
        return TQPolynomial._raw({key: -c for key, c in self._terms.items()})

    def __sub__(self, other: object) -> "TQPolynomial":
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        return self + (-p)

    def __rsub__(self, other: object) -> "TQPolynomial":
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        return p + (-self)

    def __mul__(self, other: object) -> "TQPolynomial":
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in p._terms.items():
                key = (a1 + a2, b1 + b2)
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return TQPolynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TQPolynomial":
        if exponent < 0:
            raise ValueError("negative powers are not defined")
        result = TQPolynomial.one()
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_monomial(self, m: TQMonomial | tuple[int, int], coeff: int = 1) -> "TQPolynomial":
        """Multiply by coeff * t^a * q^b without building a second polynomial."""
        a, b = m
        if a < 0 or b < 0:
            raise ValueError(f"negative exponent in monomial t^{a}*q^{b}")
        if coeff == 0:
            return TQPolynomial.zero()
        return TQPolynomial._raw(
            {(a1 + a, b1 + b): c * coeff for (a1, b1), c in self._terms.items()}
        )

    def truncate_t(self, max_t_degree: int) -> "TQPolynomial":
        """Drop every term with t exponent above ``max_t_degree``."""
        return TQPolynomial._raw(
            {key: c for key, c in self._terms.items() if key[0] <= max_t_degree}
        )

    def eval_at_ones(self) -> int:
        """Value at t = q = 1, i.e. the coefficient sum."""
        return sum(self._terms.values())

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for (a, b), c in self.terms():
            text = _term_text(a, b, abs(c))
            if not pieces:
                pieces.append(f"-{text}" if c < 0 else text)
            else:
                pieces.append(f"- {text}" if c < 0 else f"+ {text}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"TQPolynomial({dict(self.terms())!r})"


def q_integer(r: int) -> TQPolynomial:
    """The geometric sum 1 + q + ... + q^r, i.e. the q-integer [r+1]_q.

    >>> print(q_integer(2))
    1 + q + q^2
    """
    if r < 0:
        raise ValueError(f"q_integer needs r >= 0, got {r}")
    return TQPolynomial._raw({(0, k): 1 for k in range(r + 1)})


def product_one_plus_tq(n: int) -> TQPolynomial:
    """The expanded product (1 + t*q)(1 + t*q^2) ... (1 + t*q^n).

    >>> print(product_one_plus_tq(2))
    1 + t*q + t*q^2 + t^2*q^3
    """
    if n < 1:
        raise ValueError(f"product_one_plus_tq needs n >= 1, got {n}")
    p = TQPolynomial.one()
    for i in range(1, n + 1):
        p = p * TQPolynomial._raw({(0, 0): 1, (1, i): 1})
    return p


def one_minus(m: TQMonomial | tuple[int, int]) -> TQPolynomial:
    """The binomial 1 - t^a*q^b for an exponent pair (a, b).

    >>> print(one_minus((2, 2)))
    1 - t^2*q^2
    """
    a, b = m
    return TQPolynomial({(0, 0): 1}) - TQPolynomial.monomial(a, b)


def geometric_truncated(factor: TQPolynomial, max_t_degree: int) -> TQPolynomial:
    """Invert a factor 1 - t^a*q^b as a power series, up to t-degree.

    The factor must be exactly 1 - t^a*q^b with a >= 1 (so the series
    1 + t^a*q^b + t^(2a)*q^(2b) + ... terminates under the t-degree
    bound); anything else raises :class:`MalformedFactorError`.

    >>> print(geometric_truncated(one_minus((2, 2)), 5))
    1 + t^2*q^2 + t^4*q^4
    """
    if max_t_degree < 0:
        raise ValueError(f"truncation degree must be >= 0, got {max_t_degree}")
    terms = factor.terms()
    if (
        len(terms) != 2
        or terms[0] != ((0, 0), 1)
        or terms[1][1] != -1
        or terms[1][0][0] < 1
    ):
        raise MalformedFactorError(
            f"expected a factor of the form 1 - t^a*q^b with a >= 1, got {factor}"
        )
    (a, b), _ = terms[1]
    return TQPolynomial._raw(
        {(k * a, k * b): 1 for k in range(max_t_degree // a + 1)}
    )
