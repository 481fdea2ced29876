from __future__ import annotations

from collections import defaultdict
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from k4chrom.chromatic import (
    K,
    OracleBudgetExceeded,
    chrom_equivalent,
    chromatic_bracket,
    chromatic_polynomial,
    chromatic_polynomial_dc,
    count_colorings,
    essential_polynomial,
    formula_value,
)
from k4chrom.k4homeo import K4Homeomorph, SimpleGraph, canonicalize, expand, girth, girth_cycle_count
from k4chrom.polyring import X

params = st.tuples(*[st.integers(1, 7)] * 6).map(K4Homeomorph)
K4 = K4Homeomorph((1,) * 6)


def test_essential_polynomial_examples():
    assert essential_polynomial(K4) == 4 * X**3 - 3 * X**2 - 6 * X
    assert essential_polynomial(K4Homeomorph((4, 2, 1, 2, 5, 3))) == essential_polynomial(K4Homeomorph((3, 2, 2, 3, 6, 1)))
    assert essential_polynomial(K4Homeomorph((4, 2, 1, 4, 4, 2))) == essential_polynomial(K4Homeomorph((4, 2, 1, 3, 2, 5)))


def test_k4_chromatic_polynomial():
    assert chromatic_polynomial(K4) == K**4 - 6 * K**3 + 11 * K**2 - 6 * K


def test_printed_sign_gives_56_on_k4():
    assert formula_value(K4, -1, q_sign=+1) == 56
    assert formula_value(K4, -1) == 24
    with pytest.raises(ZeroDivisionError):
        formula_value(K4, 0)
    with pytest.raises(ValueError):
        chromatic_bracket(K4, q_sign=2)


def test_frozen_colouring_counts():
    # hand count: P3, P4 distinct; P1 = P2 forced at k = 3; subdivision vertex free
    G = K4Homeomorph((2, 1, 1, 1, 1, 1))
    P = chromatic_polynomial(G)
    assert [P(k) for k in (2, 3, 4, 5)] == [0, 12, 120, 600]
    assert P == chromatic_polynomial_dc(expand(G))
    H = K4Homeomorph((1, 3, 3, 2, 4, 7))
    assert [chromatic_polynomial(H)(k) for k in (3, 4, 5)] == [114516, 217604184, 43969234920]


def test_oracle_examples_and_budget():
    k4 = expand(K4)
    assert chromatic_polynomial_dc(k4) == K**4 - 6 * K**3 + 11 * K**2 - 6 * K
    assert chromatic_polynomial_dc(SimpleGraph.from_edges(2, [(0, 1)])) == K**2 - K
    assert chromatic_polynomial_dc(SimpleGraph.from_edges(3, [])) == K**3
    G = K4Homeomorph((1, 1, 1, 1, 1, 2))
    assert chromatic_polynomial_dc(expand(G)) == chromatic_polynomial(G)
    with pytest.raises(OracleBudgetExceeded, match="oracle budget exceeded"):
        chromatic_polynomial_dc(expand(K4Homeomorph((3, 3, 3, 3, 3, 3))))


def test_equivalence_examples():
    a, b = K4Homeomorph((4, 2, 1, 2, 5, 3)), K4Homeomorph((3, 2, 2, 3, 6, 1))
    assert chrom_equivalent(a, b) and chrom_equivalent(a, a)
    assert not chrom_equivalent(a, K4Homeomorph((4, 2, 1, 2, 5, 4)))


@settings(max_examples=60)
@given(params)
def test_formula_matches_colouring_counts(G):
    P = chromatic_polynomial(G)
    assert P.degree == G.size - 2
    assert P(0) == 0 and P(1) == 0
    for k in range(2, 7):
        assert P(k) == count_colorings(G, k)
        assert formula_value(G, k) == Fraction(P(k))


@settings(max_examples=40)
@given(params)
def test_bracket_vanishes_to_second_order_at_k0(G):
    # x = 1 - k, so k = 0 is x = 1
    b = chromatic_bracket(G)
    assert b(1) == 0


def test_equivalence_matches_oracle_both_directions(small_universe):
    by_q, by_p = defaultdict(set), defaultdict(set)
    for G in small_universe:
        if G.size > 11:
            continue
        C = canonicalize(G)
        by_q[(G.size, essential_polynomial(G))].add(C)
        by_p[chromatic_polynomial_dc(expand(G))].add(C)
    assert sorted(map(sorted, by_q.values())) == sorted(map(sorted, by_p.values()))


def test_class_invariants_on_small_universe(small_universe):
    groups = defaultdict(set)
    for G in small_universe:
        groups[(G.size, essential_polynomial(G))].add(canonicalize(G))
    for members in groups.values():
        sigs = {(girth(G), girth_cycle_count(G), min(G.params), G.params.count(min(G.params))) for G in members}
        assert len(sigs) == 1
