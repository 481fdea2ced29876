from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from k4chrom.cubicfield import (
    IDENTITIES,
    MODULUS,
    ONE,
    POWER_EQUATIONS,
    REDUCTIONS,
    T,
    ZERO,
    CubicElement,
    check_reduction,
    cubic_add,
    cubic_mul,
    identity_transcript,
    power,
    reduce,
    solve_power,
    verify_identity,
)
from k4chrom.polyring import IntPolynomial, X

elems = st.tuples(*[st.integers(-30, 30)] * 3).map(lambda c: CubicElement(*c))
polys = st.dictionaries(st.integers(0, 15), st.integers(-9, 9), max_size=6).map(IntPolynomial)


def test_reduce_examples():
    assert reduce(X**4 + X**2 + 1) == CubicElement(1, -1)
    assert reduce(1 + 2 * X) == reduce(X - X**3) == CubicElement(1, 2)
    assert reduce(2 + X) == reduce(1 - X**3) == CubicElement(2, 1)
    assert reduce(MODULUS) == ZERO


def test_ring_examples():
    assert cubic_mul(T, T * T) == CubicElement(-1, -1)
    assert cubic_mul(ONE - T, ONE) == ONE - T
    assert reduce(X**2 + X + 1) == reduce(X**2 - X**3)
    assert cubic_add(T, -T).is_zero()


def test_verify_identity_examples():
    assert verify_identity(X**2 + X + 1, X**2 - X**3)
    assert not verify_identity(X**2 + X + 1, 1 - X)
    assert verify_identity(X**4 + X**2 + 1, 1 - X)
    assert not verify_identity(X, X**2)
    assert all(verify_identity(lhs, rhs) for lhs, rhs in IDENTITIES)


def test_solve_power_examples():
    # t^e (1 - t) = -t^4 (1 + 2t)
    assert solve_power(reduce(-X**4 * (1 + 2 * X)), factor=reduce(1 - X)) == 8
    assert solve_power(reduce(-X**5)) is None
    assert solve_power(ONE) == 0
    assert solve_power(power(57)) == 57
    with pytest.raises(ValueError):
        solve_power(ONE, -1)


def test_power_equations_reproduce_expected_exponents():
    for eq in POWER_EQUATIONS:
        assert eq.solve() == eq.expected


def test_powers_distinct():
    assert len({power(n) for n in range(201)}) == 201


def test_text_and_json():
    assert str(CubicElement(1, 1, 1)) == "1*t^2 + 1*t + 1"
    assert str(CubicElement(1, -1)) == "-1*t + 1"
    assert str(ZERO) == "0"
    e = CubicElement(3, -2, 5)
    assert CubicElement.from_json(e.to_json()) == e


@given(polys, polys)
def test_reduce_is_a_ring_homomorphism(p, q):
    assert reduce(p + q) == reduce(p) + reduce(q)
    assert reduce(p * q) == reduce(p) * reduce(q)
    assert reduce(p * MODULUS).is_zero()


@given(elems, elems, elems)
def test_quotient_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert reduce(a.to_polynomial()) == a


def test_reductions_replay():
    for _, fn, arity in REDUCTIONS:
        assert check_reduction(fn, *([3] * arity))


def test_transcript_all_pass():
    rows = identity_transcript(reduction_range=5)
    assert rows and all(r["ok"] for r in rows)
    assert {r["kind"] for r in rows} == {"identity", "power", "powers", "reduction"}
