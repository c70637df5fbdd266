"""Exhaustive checks of the distribution identities and the bijection.

Every check here recomputes both sides of an identity by independent
routes (closed-form products on one side, brute enumeration on the
other) and reports a structured :class:`CheckResult` per identity and
size, with the first counterexample as a witness when a check fails.

Identity groups and the sizes they support:

* ``fibers``   (n <= 7): both fiber distributions over every u equal
  t^des(u) q^maj(u) * (1+tq)(1+tq^2)...(1+tq^n);
* ``global``   (n <= 8): both whole-group signed distributions equal the
  refined Eulerian polynomial times that same product (hence each other);
* ``bijection`` (n <= 7): neg_to_flag is an involution-paired bijection
  (flag_to_neg inverts it), matches (ndes, nmaj) with (fdes, fmaj), and
  maps each standardization fiber onto the magnitude fiber;
* ``carlitz``  (n <= 8): the summed series sum_r [r+1]_q^n t^r equals the
  distribution divided by its product denominator, compared exactly up
  to a t-degree bound via truncated geometric series (no division);
* ``lemmas``   (n <= 7): the one-step weight effect of prefix negation
  on same-sign prefixes, and the closed form for the flag weight of
  delta_set(u, J) via the symmetric difference J xor Des(u).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterable, Sequence

from . import statistics
from .bijection import delta, delta_set, flag_to_neg, neg_to_flag
from .core import IndexSet, PlainWord, descent_number, descent_set, format_word, major_index
from .distributions import (
    SizeLimitError,
    dist_flag_over,
    dist_neg_over,
    enumerate_B,
    enumerate_B_of_u,
    enumerate_Bprime_of_u,
    enumerate_S,
    refined_eulerian,
    signed_distributions,
)
from .polynomial import (
    TQPolynomial,
    geometric_truncated,
    one_minus,
    product_one_plus_tq,
    q_integer,
)

__all__ = [
    "GROUPS",
    "GROUP_CAPS",
    "CheckResult",
    "check_fiber_identities",
    "check_global_identities",
    "check_bijection",
    "check_carlitz",
    "check_lemmas",
    "run_all",
]

GROUPS = ("fibers", "global", "bijection", "carlitz", "lemmas")

GROUP_CAPS = {
    "fibers": 7,
    "global": 8,
    "bijection": 7,
    "carlitz": 8,
    "lemmas": 7,
}


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one identity check at one size."""

    identity: str
    n: int
    status: str  # "pass" or "fail"
    checked: int  # number of elementary comparisons performed
    witness: str | None = None  # first counterexample, if any

    @property
    def ok(self) -> bool:
        return self.status == "pass"


def _result(identity: str, n: int, checked: int, witness: str | None) -> CheckResult:
    return CheckResult(identity, n, "fail" if witness else "pass", checked, witness)


def _first_difference(left: TQPolynomial, right: TQPolynomial) -> str | None:
    if left == right:
        return None
    keys = sorted(set(dict(left.terms())) | set(dict(right.terms())))
    for a, b in keys:
        cl, cr = left.coefficient(a, b), right.coefficient(a, b)
        if cl != cr:
            return f"coefficient of t^{a}*q^{b}: {cl} != {cr}"
    return None


def check_fiber_identities(n: int) -> list[CheckResult]:
    """Both fiber distributions over every u in S_n against the closed form."""
    base = product_one_plus_tq(n)
    witnesses: dict[str, str | None] = {"neg": None, "flag": None}
    checked = 0
    for u in enumerate_S(n):
        expected = base.mul_monomial((descent_number(u), major_index(u)))
        checked += 1
        for family, dist in (("neg", dist_neg_over(u)), ("flag", dist_flag_over(u))):
            if witnesses[family] is None and dist != expected:
                witnesses[family] = (
                    f"u={format_word(u)}: got {dist}, expected {expected}"
                )
    return [
        _result(f"fibers.{family}", n, checked, witnesses[family])
        for family in ("neg", "flag")
    ]


def check_global_identities(n: int) -> list[CheckResult]:
    """Whole-group signed distributions against the product formula and each other."""
    neg, flag = signed_distributions(n)
    rhs = refined_eulerian(n) * product_one_plus_tq(n)
    size = (1 << n) * factorial(n)
    return [
        _result("global.neg", n, size, _first_difference(neg, rhs)),
        _result("global.flag", n, size, _first_difference(flag, rhs)),
        _result("global.equidistribution", n, size, _first_difference(neg, flag)),
    ]


def check_bijection(n: int) -> list[CheckResult]:
    """Roundtrip, statistic matching, and fiber-onto-fiber for every signed word."""
    roundtrip = weights = None
    checked = 0
    for w in enumerate_B(n):
        v = neg_to_flag(w)
        checked += 1
        if roundtrip is None:
            back = flag_to_neg(v)
            if back != w:
                roundtrip = (
                    f"w={format_word(w)} -> v={format_word(v)} -> {format_word(back)}"
                )
        if weights is None:
            pair_w = (statistics.ndes(w), statistics.nmaj(w))
            pair_v = (statistics.fdes(v), statistics.fmaj(v))
            if pair_w != pair_v:
                weights = (
                    f"w={format_word(w)}: (ndes, nmaj)={pair_w} but "
                    f"v={format_word(v)}: (fdes, fmaj)={pair_v}"
                )
    fibers = None
    fibers_checked = 0
    for u in enumerate_S(n):
        fibers_checked += 1
        if fibers is None:
            image = {neg_to_flag(w) for w in enumerate_B_of_u(u)}
            target = set(enumerate_Bprime_of_u(u))
            if image != target:
                fibers = f"u={format_word(u)}: image of B(u) is not B'(u)"
    return [
        _result("bijection.roundtrip", n, checked, roundtrip),
        _result("bijection.weights", n, checked, weights),
        _result("bijection.fibers", n, fibers_checked, fibers),
    ]


def _series_lhs(n: int, max_t_degree: int) -> TQPolynomial:
    lhs = TQPolynomial.zero()
    for r in range(max_t_degree + 1):
        lhs = lhs + (q_integer(r) ** n).mul_monomial((r, 0))
    return lhs


def _inverted_denominator(
    monomials: Iterable[tuple[int, int]], max_t_degree: int
) -> TQPolynomial:
    inv = TQPolynomial.one()
    for m in monomials:
        inv = (inv * geometric_truncated(one_minus(m), max_t_degree)).truncate_t(
            max_t_degree
        )
    return inv


def check_carlitz(n: int, trunc: int | None = None) -> list[CheckResult]:
    """The summed series sum_r [r+1]_q^n t^r against its three product forms.

    Checked exactly through t-degree ``trunc`` (default 2n + 4): the
    classical form with denominator (1-t)(1-tq)...(1-tq^n) over plain
    words, and the signed forms with denominator
    (1-t)(1-t^2 q^2)(1-t^2 q^4)...(1-t^2 q^(2n)) over both families.
    """
    R = 2 * n + 4 if trunc is None else trunc
    if R < 0:
        raise ValueError(f"truncation degree must be >= 0, got {R}")
    lhs = _series_lhs(n, R)
    classical = (
        refined_eulerian(n) * _inverted_denominator([(1, i) for i in range(n + 1)], R)
    ).truncate_t(R)
    neg, flag = signed_distributions(n)
    signed_inv = _inverted_denominator(
        [(1, 0)] + [(2, 2 * i) for i in range(1, n + 1)], R
    )
    rhs_neg = (neg * signed_inv).truncate_t(R)
    rhs_flag = (flag * signed_inv).truncate_t(R)
    checked = R + 1
    return [
        _result("carlitz.classical", n, checked, _first_difference(lhs, classical)),
        _result("carlitz.neg", n, checked, _first_difference(lhs, rhs_neg)),
        _result("carlitz.flag", n, checked, _first_difference(lhs, rhs_flag)),
    ]


def _subsets(n: int) -> Iterable[IndexSet]:
    for mask in range(1 << n):
        yield IndexSet(n, (i + 1 for i in range(n) if mask >> i & 1))


def check_lemmas(n: int) -> list[CheckResult]:
    """The two stepping rules behind the fiber lattice structure.

    Prefix flip: for w in B'(u) whose first j+1 letters (all of w when
    j = n) carry one sign, negating the first j letters multiplies the
    flag weight by (t q^j)^(+-1): for j < n the sign is - exactly when
    j is a descent of u; for j = n it is + exactly when w is all-positive.

    Symmetric difference: the flag weight of delta_set(u, J) has
    exponents (des(u) + |D|, maj(u) + sum(D)) where D = J xor Des(u).
    """
    flip = None
    flip_checked = 0
    for u in enumerate_S(n):
        des_u = set(descent_set(u))
        for w in enumerate_Bprime_of_u(u):
            for j in range(1, n + 1):
                prefix = w[: j + 1]  # for j = n this is all of w
                if not (all(x > 0 for x in prefix) or all(x < 0 for x in prefix)):
                    continue
                flipped = delta(w, j)
                step = (
                    statistics.fdes(flipped) - statistics.fdes(w),
                    statistics.fmaj(flipped) - statistics.fmaj(w),
                )
                if j < n:
                    expected = (-1, -j) if j in des_u else (1, j)
                else:
                    expected = (1, n) if w[0] > 0 else (-1, -n)
                flip_checked += 1
                if flip is None and step != expected:
                    flip = (
                        f"w={format_word(w)}, j={j}: weight step {step}, "
                        f"expected {expected}"
                    )
    symdiff = None
    symdiff_checked = 0
    for u in enumerate_S(n):
        des_u = descent_set(u)
        d, m = descent_number(u), major_index(u)
        for J in _subsets(n):
            diff = J ^ des_u
            expected_pair = (d + len(diff), m + sum(diff))
            got = statistics.weight(delta_set(u, J), "flag")
            symdiff_checked += 1
            if symdiff is None and tuple(got) != expected_pair:
                symdiff = (
                    f"u={format_word(u)}, J={sorted(J.members())}: weight {tuple(got)}, "
                    f"expected {expected_pair}"
                )
    return [
        _result("lemmas.flip", n, flip_checked, flip),
        _result("lemmas.symdiff", n, symdiff_checked, symdiff),
    ]


def run_all(
    n_max: int = 6,
    trunc: int | None = None,
    only: Sequence[str] | None = None,
) -> list[CheckResult]:
    """Run the selected identity groups for n = 1 .. n_max.

    Groups whose cap is below ``n_max`` stop at their cap.  ``only``
    selects a subset of :data:`GROUPS`; ``trunc`` overrides the series
    t-degree bound (default 2n + 4 per size).
    """
    cap = max(GROUP_CAPS.values())
    if not 1 <= n_max <= cap:
        raise SizeLimitError(f"verification supports 1 <= n <= {cap}, got {n_max}")
    groups = tuple(only) if only else GROUPS
    for g in groups:
        if g not in GROUP_CAPS:
            raise ValueError(f"unknown identity group {g!r}; choose from {GROUPS}")
    dispatch = {
        "fibers": check_fiber_identities,
        "global": check_global_identities,
        "bijection": check_bijection,
        "lemmas": check_lemmas,
    }
    results: list[CheckResult] = []
    for g in groups:
        for n in range(1, min(n_max, GROUP_CAPS[g]) + 1):
            if g == "carlitz":
                results.extend(check_carlitz(n, trunc))
            else:
                results.extend(dispatch[g](n))
    return results
