"""Chromatic and essential polynomials of K4-homeomorphs.

With x = 1 - k and m the number of edges,

    P(G, k) = (-1)^m * x * [x^(m-1) - Q(G, x) - (x+1)(x+2)] / k^2

where Q is the essential polynomial.  The sign in front of Q matters: with
``+Q`` the formula evaluates to 56 on K4 at k = -1 instead of
(-1)(-2)(-3)(-4) = 24.  Only the minus sign agrees with
deletion-contraction, so Q keeps its usual form and the minus is applied
inside the bracket.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .k4homeo import ENDPOINTS, OPPOSITE_PAIRS, STARS, K4Homeomorph, SimpleGraph, order_and_size
from .polyring import ONE, X, IntPolynomial, NotDivisibleError, poly_compose, poly_divexact

__all__ = [
    "OracleBudgetExceeded",
    "DEFAULT_ORACLE_BUDGET",
    "essential_polynomial",
    "chromatic_bracket",
    "chromatic_polynomial",
    "formula_value",
    "chromatic_polynomial_dc",
    "count_colorings",
    "chrom_equivalent",
    "K",
]

K = X  # the same indeterminate, named k when a polynomial is read in the colour count

DEFAULT_ORACLE_BUDGET = 14


class OracleBudgetExceeded(ValueError):
    """The deletion-contraction oracle refused a graph that is too large."""


def essential_polynomial(G: K4Homeomorph) -> IntPolynomial:
    """Q(G, x): the seven star/pair monomials minus (x+1) * sum of x^p."""
    p = G.params
    terms: dict[int, int] = {}
    for group in STARS + OPPOSITE_PAIRS:
        e = sum(p[i] for i in group)
        terms[e] = terms.get(e, 0) + 1
    for v in p:
        terms[v] = terms.get(v, 0) - 1
        terms[v + 1] = terms.get(v + 1, 0) - 1
    return IntPolynomial(terms)


def chromatic_bracket(G: K4Homeomorph, q_sign: int = -1) -> IntPolynomial:
    """x^(m-1) + q_sign*Q(G, x) - (x+1)(x+2).  Only ``q_sign=-1`` yields P."""
    if q_sign not in (1, -1):
        raise ValueError("q_sign must be +1 or -1")
    _, m = order_and_size(G)
    q = essential_polynomial(G)
    return X ** (m - 1) + (q if q_sign == 1 else -q) - (X + 1) * (X + 2)


def formula_value(G: K4Homeomorph, k: int, q_sign: int = -1) -> Fraction:
    """Evaluate the closed formula at an integer k != 0 as a rational number.

    With ``q_sign=+1`` the bracket need not vanish to second order at k = 0, so
    the result is not a polynomial; this is the form used to exhibit the sign
    discrepancy.
    """
    if k == 0:
        raise ZeroDivisionError("the closed formula divides by k^2")
    _, m = order_and_size(G)
    x = 1 - k
    b = chromatic_bracket(G, q_sign)(x)
    return Fraction((-1) ** m * x * b, k * k)


def chromatic_polynomial(G: K4Homeomorph) -> IntPolynomial:
    """P(G, k) as an exact polynomial in k."""
    _, m = order_and_size(G)
    in_x = (-1) ** m * X * chromatic_bracket(G, -1)
    in_k = poly_compose(in_x, ONE - K)
    try:
        return poly_divexact(in_k, K * K)
    except NotDivisibleError as exc:
        raise RuntimeError(f"internal consistency error: P({G}) not divisible by k^2") from exc


# -- deletion-contraction oracle -------------------------------------------

def _padd(a: tuple[int, ...], b: tuple[int, ...], sign: int = 1) -> tuple[int, ...]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] += sign * c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _normalize(n: int, edges) -> tuple[int, int, tuple[tuple[int, int], ...]]:
    """Drop isolated vertices and relabel the rest 0.. in sorted order.

    Returns (isolated count, remaining vertex count, sorted edge tuple).
    """
    used = sorted({v for e in edges for v in e})
    relabel = {v: i for i, v in enumerate(used)}
    es = tuple(sorted((relabel[u], relabel[v]) for u, v in edges))
    return n - len(used), len(used), es


@lru_cache(maxsize=None)
def _dc(n: int, edges: tuple[tuple[int, int], ...]) -> tuple[int, ...]:
    # edges sorted, u < v, no isolated vertices; result is a dense coefficient tuple
    if not edges:
        return (0,) * n + (1,)
    u, v = edges[0]
    rest = edges[1:]
    iso, n1, e1 = _normalize(n, rest)
    deleted = (0,) * iso + _dc(n1, e1)

    merged = set()
    for a, b in rest:
        a = u if a == v else a
        b = u if b == v else b
        if a == b:
            # a loop admits no proper colouring: P(G / e) = 0
            return deleted
        merged.add((min(a, b), max(a, b)))
    iso, n2, e2 = _normalize(n - 1, merged)
    contracted = (0,) * iso + _dc(n2, e2)
    return _padd(deleted, contracted, -1)


def chromatic_polynomial_dc(g: SimpleGraph, max_edges: int = DEFAULT_ORACLE_BUDGET) -> IntPolynomial:
    """P(g, k) by deletion-contraction, P(G) = P(G - e) - P(G / e).

    The split edge is always the lexicographically smallest one; parallel
    edges created by a contraction are merged.  Results are memoised on the
    relabelled edge set.

    Raises:
        OracleBudgetExceeded: if ``g`` has more than ``max_edges`` edges.
    """
    if g.m > max_edges:
        raise OracleBudgetExceeded(f"oracle budget exceeded: {g.m} edges > {max_edges}")
    iso, n, es = _normalize(g.n, g.edges)
    coeffs = (0,) * iso + _dc(n, es)
    return IntPolynomial(dict(enumerate(coeffs)))


# -- colouring count by path transfer --------------------------------------

def _set_partitions(n: int):
    """Restricted growth strings of length n."""
    def rec(prefix, top):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for b in range(top + 2):
            yield from rec(prefix + [b], max(top, b))
    yield from rec([0], 0)


_PARTITIONS = tuple(_set_partitions(4))


def count_colorings(G: K4Homeomorph, k: int) -> int:
    """Number of proper k-colourings, summing over the colour-equality pattern of P1..P4.

    A path of length L whose ends get colours c1, c2 has
    ((k-1)^L + (k-1)(-1)^L)/k proper interior colourings if c1 == c2 and
    ((k-1)^L - (-1)^L)/k otherwise.  Independent of any closed formula.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return 0
    total = 0
    for rgs in _PARTITIONS:
        blocks = max(rgs) + 1
        ways = 1
        for i in range(blocks):
            ways *= k - i
        if not ways:
            continue
        for (u, v), L in zip(ENDPOINTS, G.params):
            if rgs[u] == rgs[v]:
                ways *= ((k - 1) ** L + (k - 1) * (-1) ** L) // k
            else:
                ways *= ((k - 1) ** L - (-1) ** L) // k
            if not ways:
                break
        total += ways
    return total


def chrom_equivalent(G: K4Homeomorph, J: K4Homeomorph) -> bool:
    """Same order and size and the same essential polynomial."""
    return order_and_size(G) == order_and_size(J) and essential_polynomial(G) == essential_polynomial(J)
