import pytest
from hypothesis import given
from hypothesis import strategies as st

from bstat.polynomial import (
    MalformedFactorError,
    TQPolynomial,
    geometric_truncated,
    one_minus,
    product_one_plus_tq,
    q_integer,
)


def tq_polynomials(max_exp: int = 4, max_coeff: int = 9, max_terms: int = 6):
    return st.dictionaries(
        keys=st.tuples(st.integers(0, max_exp), st.integers(0, max_exp)),
        values=st.integers(-max_coeff, max_coeff),
        max_size=max_terms,
    ).map(TQPolynomial)


# ---------------------------------------------------------------- construction


def test_construction_drops_zero_coefficients():
    p = TQPolynomial({(0, 0): 1, (1, 1): 0, (2, 3): 5})
    assert p.terms() == [((0, 0), 1), ((2, 3), 5)]
    assert p.coefficient(1, 1) == 0
    assert p.coefficient(2, 3) == 5


def test_construction_rejects_bad_terms():
    with pytest.raises(ValueError):
        TQPolynomial({(-1, 0): 1})
    with pytest.raises(TypeError):
        TQPolynomial({(0, 0): 1.5})


def test_zero_and_one():
    assert TQPolynomial.zero().is_zero()
    assert not TQPolynomial.zero()
    assert str(TQPolynomial.zero()) == "0"
    assert TQPolynomial.one() == 1
    assert TQPolynomial.one().eval_at_ones() == 1


def test_from_weights_counts_multiplicity():
    p = TQPolynomial.from_weights([(0, 0), (1, 1), (1, 1), (1, 2)])
    assert p == TQPolynomial({(0, 0): 1, (1, 1): 2, (1, 2): 1})


# ------------------------------------------------------------------ arithmetic


def test_small_product():
    p = TQPolynomial({(0, 0): 1, (1, 1): 1})
    r = TQPolynomial({(0, 0): 1, (1, 2): 1})
    assert p * r == TQPolynomial({(0, 0): 1, (1, 1): 1, (1, 2): 1, (2, 3): 1})


def test_cancellation_removes_terms():
    p = TQPolynomial({(1, 1): 1})
    assert (p - p).is_zero()
    assert (one_minus((1, 1)) * TQPolynomial({(0, 0): 1, (1, 1): 1})) == one_minus(
        (2, 2)
    )


@given(tq_polynomials(), tq_polynomials(), tq_polynomials())
def test_ring_axioms(p, r, s):
    assert p + r == r + p
    assert p * r == r * p
    assert (p + r) + s == p + (r + s)
    assert (p * r) * s == p * (r * s)
    assert p * (r + s) == p * r + p * s
    assert p + TQPolynomial.zero() == p
    assert p * TQPolynomial.one() == p
    assert p - p == TQPolynomial.zero()


@given(tq_polynomials(), st.integers(0, 5))
def test_power_matches_repeated_product(p, k):
    expected = TQPolynomial.one()
    for _ in range(k):
        expected = expected * p
    assert p**k == expected


@given(tq_polynomials(), st.tuples(st.integers(0, 3), st.integers(0, 3)))
def test_mul_monomial_matches_general_product(p, m):
    assert p.mul_monomial(m) == p * TQPolynomial.monomial(*m)
    assert p.mul_monomial(m, coeff=3) == p * TQPolynomial.monomial(*m, coeff=3)


def test_truncate_t():
    p = TQPolynomial({(0, 0): 1, (1, 5): 2, (2, 1): 3, (3, 0): 4})
    assert p.truncate_t(1) == TQPolynomial({(0, 0): 1, (1, 5): 2})
    assert p.truncate_t(0) == TQPolynomial.one()
    assert p.truncate_t(9) == p


@given(tq_polynomials())
def test_eval_at_ones_is_coefficient_sum(p):
    assert p.eval_at_ones() == sum(c for _, c in p.terms())


# ------------------------------------------------------------- named products


def test_q_integer():
    assert q_integer(0) == TQPolynomial.one()
    assert str(q_integer(2)) == "1 + q + q^2"
    assert q_integer(3).eval_at_ones() == 4
    with pytest.raises(ValueError):
        q_integer(-1)


def test_product_one_plus_tq_small_cases():
    assert str(product_one_plus_tq(1)) == "1 + t*q"
    assert product_one_plus_tq(2) == TQPolynomial(
        {(0, 0): 1, (1, 1): 1, (1, 2): 1, (2, 3): 1}
    )
    p3 = product_one_plus_tq(3)
    assert len(p3.terms()) == 8
    assert p3.eval_at_ones() == 8


def test_product_one_plus_tq_coefficient_sum_is_power_of_two():
    for n in range(1, 9):
        assert product_one_plus_tq(n).eval_at_ones() == 2**n


def test_product_one_plus_tq_rejects_n_zero():
    with pytest.raises(ValueError):
        product_one_plus_tq(0)


# ------------------------------------------------------------ geometric series


def test_geometric_truncated_examples():
    assert str(geometric_truncated(one_minus((1, 0)), 3)) == "1 + t + t^2 + t^3"
    assert str(geometric_truncated(one_minus((2, 2)), 5)) == "1 + t^2*q^2 + t^4*q^4"
    assert geometric_truncated(one_minus((2, 4)), 1) == TQPolynomial.one()


def test_geometric_truncated_inverts_its_factor():
    for m in [(1, 0), (1, 1), (2, 2), (2, 6), (3, 1)]:
        for R in (0, 1, 4, 9):
            product = one_minus(m) * geometric_truncated(one_minus(m), R)
            assert product.truncate_t(R) == TQPolynomial.one()


def test_geometric_truncated_rejects_malformed_factors():
    for bad in [
        TQPolynomial({(0, 0): 1, (1, 1): 1}),  # 1 + t*q
        TQPolynomial({(0, 0): 2, (1, 1): -1}),  # wrong constant
        TQPolynomial({(0, 0): 1, (0, 1): -1}),  # 1 - q: no t to truncate by
        TQPolynomial({(0, 0): 1, (1, 0): -1, (1, 1): -1}),  # three terms
        TQPolynomial({(0, 0): 1, (1, 1): -2}),  # wrong coefficient
        TQPolynomial.one(),
    ]:
        with pytest.raises(MalformedFactorError):
            geometric_truncated(bad, 4)
    with pytest.raises(ValueError):
        geometric_truncated(one_minus((1, 0)), -1)


# ------------------------------------------------------------------- rendering


def test_str_canonical_format():
    p = TQPolynomial({(2, 3): 1, (1, 1): 2, (0, 0): 1})
    assert str(p) == "1 + 2*t*q + t^2*q^3"
    assert str(TQPolynomial({(0, 3): 2})) == "2*q^3"
    assert str(TQPolynomial({(1, 0): 1})) == "t"
    assert str(TQPolynomial({(0, 0): -1, (2, 2): -3})) == "-1 - 3*t^2*q^2"
    assert str(one_minus((2, 2))) == "1 - t^2*q^2"


def test_terms_are_sorted_by_t_then_q():
    p = TQPolynomial({(1, 2): 1, (0, 5): 1, (1, 1): 1, (2, 0): 1})
    assert [key for key, _ in p.terms()] == [(0, 5), (1, 1), (1, 2), (2, 0)]


def test_repr_is_deterministic():
    p = TQPolynomial({(1, 2): 1, (0, 5): 1})
    assert repr(p) == "TQPolynomial({(0, 5): 1, (1, 2): 1})"
