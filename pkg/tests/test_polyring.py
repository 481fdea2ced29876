from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from k4chrom.polyring import (
    ONE,
    X,
    ZERO,
    IntPolynomial,
    NotDivisibleError,
    poly_add,
    poly_compose,
    poly_divexact,
    poly_eval,
    poly_from_terms,
    poly_mul,
    poly_sub,
)

polys = st.dictionaries(st.integers(0, 12), st.integers(-20, 20), max_size=6).map(IntPolynomial)
nonzero = polys.filter(lambda p: not p.is_zero())


def test_from_terms_examples():
    assert poly_from_terms([(3, 4), (2, -3), (1, -6)]) == 4 * X**3 - 3 * X**2 - 6 * X
    assert poly_from_terms([(2, 1), (2, -1)]) == ZERO
    assert poly_from_terms([(0, 2), (1, 3), (2, 1)]) == (X + 1) * (X + 2)


def test_from_terms_rejects_negative_exponent():
    with pytest.raises(ValueError):
        poly_from_terms([(-1, 1)])


def test_arithmetic_examples():
    assert poly_mul(X + 1, X + 2) == X**2 + 3 * X + 2
    assert poly_mul(X**2 + X + 1, X - 1) == X**3 - 1
    assert poly_sub(X**2 - 1, X**2 - 1).is_zero()
    assert poly_add(X, -X) == ZERO


def test_divexact_examples():
    assert poly_divexact(X**3 - 1, X - 1) == X**2 + X + 1
    assert poly_divexact(X**6 + X**4 - X - 1, X**3 + X + 1) == X**3 - 1
    with pytest.raises(NotDivisibleError):
        poly_divexact(X**2 + X + 1, X - 1)
    with pytest.raises(ZeroDivisionError):
        poly_divexact(X, ZERO)


def test_eval_examples():
    assert poly_eval(4 * X**3 - 3 * X**2 - 6 * X, 2) == 8
    assert poly_eval(X**5 - 4 * X**3 + 2 * X**2 + 3 * X - 2, 2) == 12
    assert poly_eval(7 * X**4 + 5, 0) == 5


def test_format_and_parse():
    p = 4 * X**3 - 3 * X**2 - 6 * X
    assert p.format("x") == "4x^3 - 3x^2 - 6x"
    assert IntPolynomial.parse("4x^3 - 3x^2 - 6x") == p
    assert IntPolynomial.parse("-x^3 + 1") == 1 - X**3
    assert ZERO.format() == "0"


def test_degree_and_leading():
    p = 3 * X**5 - X
    assert (p.degree, p.low_degree, p.leading_coefficient) == (5, 1, 3)
    assert p.coeff(5) == 3 and p.coeff(2) == 0


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@given(polys, nonzero)
def test_divexact_inverts_multiplication(a, b):
    assert poly_divexact(a * b, b) == a


@given(polys, polys, st.integers(-5, 5))
def test_eval_is_a_homomorphism(a, b, v):
    assert poly_eval(a * b, v) == poly_eval(a, v) * poly_eval(b, v)
    assert (a + b)(v) == a(v) + b(v)


@given(polys, polys, st.integers(-4, 4))
def test_compose_matches_evaluation(p, q, v):
    assert poly_compose(p, q)(v) == p(q(v))


@given(polys)
def test_text_and_json_round_trip(p):
    assert IntPolynomial.parse(p.format("k"), "k") == p
    assert IntPolynomial.from_json(p.to_json()) == p
    assert hash(IntPolynomial(dict(p.terms))) == hash(p)
