"""Arithmetic in Z[x]/(x^3 + x + 1).

An element c0 + c1*t + c2*t^2 stands for a polynomial evaluated at a root t
of x^3 + x + 1.  The rule t^3 = -t - 1 keeps every element at degree <= 2.
Since t is neither zero nor a root of unity its powers are pairwise
distinct, which is what makes t^a = t^b imply a = b.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .chromatic import essential_polynomial
from .k4homeo import K4Homeomorph
from .polyring import IntPolynomial, X, poly_divexact, poly_from_terms

__all__ = [
    "CubicElement",
    "ZERO",
    "ONE",
    "T",
    "reduce",
    "cubic_add",
    "cubic_mul",
    "power",
    "solve_power",
    "verify_identity",
    "MODULUS",
    "IDENTITIES",
    "POWER_EQUATIONS",
    "REDUCTIONS",
    "check_reduction",
    "identity_transcript",
]

MODULUS = X ** 3 + X + 1


@dataclass(frozen=True)
class CubicElement:
    c0: int = 0
    c1: int = 0
    c2: int = 0

    def __add__(self, other: CubicElement) -> CubicElement:
        return CubicElement(self.c0 + other.c0, self.c1 + other.c1, self.c2 + other.c2)

    def __neg__(self) -> CubicElement:
        return CubicElement(-self.c0, -self.c1, -self.c2)

    def __sub__(self, other: CubicElement) -> CubicElement:
        return self + (-other)

    def __mul__(self, other: CubicElement) -> CubicElement:
        a, b = self.coefficients, other.coefficients
        d = [0] * 5
        for i in range(3):
            for j in range(3):
                d[i + j] += a[i] * b[j]
        # t^4 = -t^2 - t, t^3 = -t - 1
        d[2] -= d[4]
        d[1] -= d[4]
        d[1] -= d[3]
        d[0] -= d[3]
        return CubicElement(d[0], d[1], d[2])

    @property
    def coefficients(self) -> tuple[int, int, int]:
        return (self.c0, self.c1, self.c2)

    def is_zero(self) -> bool:
        return self.coefficients == (0, 0, 0)

    def to_polynomial(self) -> IntPolynomial:
        return poly_from_terms(enumerate(self.coefficients))

    def __str__(self):
        parts = [(self.c2, "*t^2"), (self.c1, "*t"), (self.c0, "")]
        out = ""
        for c, mono in parts:
            if not c and (mono or out):
                continue
            if not out:
                out = f"{c}{mono}"
            else:
                out += f" {'-' if c < 0 else '+'} {abs(c)}{mono}"
        return out

    def to_json(self) -> list[int]:
        return list(self.coefficients)

    @classmethod
    def from_json(cls, data) -> CubicElement:
        c0, c1, c2 = (int(v) for v in data)
        return cls(c0, c1, c2)


ZERO = CubicElement()
ONE = CubicElement(1)
T = CubicElement(0, 1)


def cubic_add(a: CubicElement, b: CubicElement) -> CubicElement:
    return a + b


def cubic_mul(a: CubicElement, b: CubicElement) -> CubicElement:
    return a * b


_POWERS: list[CubicElement] = [ONE]


def power(n: int) -> CubicElement:
    """t^n, cached."""
    if n < 0:
        raise ValueError("negative power of t")
    while len(_POWERS) <= n:
        _POWERS.append(_POWERS[-1] * T)
    return _POWERS[n]


def reduce(p: IntPolynomial) -> CubicElement:
    """p(t) written as c0 + c1*t + c2*t^2."""
    acc = ZERO
    for e, c in p.items():
        acc = acc + CubicElement(c) * power(e)
    return acc


def solve_power(
    target: CubicElement,
    max_exponent: int = 200,
    factor: CubicElement = ONE,
) -> int | None:
    """The n in [0, max_exponent] with t^n * factor == target, or None.

    ``None`` only means no solution within the bound.  The powers are
    checked to be pairwise distinct on the way, so a solution is unique.
    """
    if max_exponent < 0:
        raise ValueError("max_exponent must be >= 0")
    seen: set[CubicElement] = set()
    found = None
    for n in range(max_exponent + 1):
        tn = power(n)
        if tn in seen:
            raise AssertionError(f"t^{n} repeats an earlier power")
        seen.add(tn)
        if found is None and tn * factor == target:
            found = n
    return found


def verify_identity(lhs: IntPolynomial, rhs: IntPolynomial) -> bool:
    """True iff lhs(t) == rhs(t)."""
    return reduce(lhs) == reduce(rhs)


def _p(text: str) -> IntPolynomial:
    return IntPolynomial.parse(text)


# (lhs, rhs) pairs, each an identity at t
IDENTITIES: tuple[tuple[IntPolynomial, IntPolynomial], ...] = (
    (_p("x^4 + x^2 + 1"), _p("1 - x")),
    (_p("x^2 + x + 1"), _p("x^2 - x^3")),
    (_p("1 + 2x"), _p("x - x^3")),
    (_p("2 + x"), _p("1 - x^3")),
    (_p("1 + x"), _p("-x^3")),
)


@dataclass(frozen=True)
class PowerEquation:
    """t^n * factor(t) = target(t), solved for n."""

    unknown: str
    factor: IntPolynomial
    target: IntPolynomial
    expected: int | None

    def solve(self, max_exponent: int = 200) -> int | None:
        return solve_power(reduce(self.target), max_exponent, reduce(self.factor))


POWER_EQUATIONS: tuple[PowerEquation, ...] = (
    PowerEquation("epsilon", _p("x^4 + x^2 + 1"), _p("x^3 - x^4"), 3),
    PowerEquation("epsilon", _p("x^4 + x^2 + 1"), _p("-x^4 - 2x^5"), 8),
    PowerEquation("delta", _p("x^2 + x + 1"), _p("-x^7 - 2x^5"), 2),
    PowerEquation("delta", _p("x^2 + x + 1"), _p("x^5 - x^6"), 3),
    PowerEquation("epsilon", _p("1 - x^3"), _p("-2x^5 - x^6"), None),
    PowerEquation("epsilon - b", _p("x^4 + x^2 + 1"), _p("x^2 - x^3"), 2),
)


def _reduction_1(d, e, h, a):
    b = d + e + h - 1 - a
    G, J = (4, 2, 1, d, e, h), (2, 2, 3, a, 1, b)
    P = lambda n: X ** n  # noqa: E731
    red = P(d) * (X**2 + X + 1) + (P(h) - P(a) - P(b)) * MODULUS + P(e) * (X**4 + X**2 + 1) - 2 * X**3 - X**2
    return G, J, red


def _reduction_2(d, e, h, a):
    b = d + e + h - 1 - a
    G, J = (4, 2, 1, d, e, h), (3, 2, 2, b, a, 1)
    P = lambda n: X ** n  # noqa: E731
    red = (
        (P(d) - P(b)) * (X**2 + X + 1)
        + (P(h) - P(a)) * MODULUS
        + P(e) * (X**4 + X**2 + 1)
        - X**2 * (X**2 + X + 1)
    )
    return G, J, red


def _reduction_3(d, e, h, a, b):
    c = d + e + h - a - b
    G, J = (4, 2, 1, d, e, h), (4, 2, 1, c, b, a)
    P = lambda n: X ** n  # noqa: E731
    side = lambda u, v, w: P(u) * (X**2 + X + 1) + P(w) * MODULUS + P(v) * (X**4 + X**2 + 1)  # noqa: E731
    return G, J, side(d, e, h) - side(c, b, a)


REDUCTIONS = (
    ("K4(4,2,1,d,e,h) vs K4(2,2,3,a,1,b)", _reduction_1, 4),
    ("K4(4,2,1,d,e,h) vs K4(3,2,2,b,a,1)", _reduction_2, 4),
    ("K4(4,2,1,d,e,h) vs K4(4,2,1,c,b,a)", _reduction_3, 5),
)


def check_reduction(fn, *args) -> bool:
    """Replay one reduction: Q(G) - Q(J) divided exactly by x^2 - 1."""
    G, J, red = fn(*args)
    if min(G) < 1 or min(J) < 1:
        raise ValueError("parameters give a non-positive path length")
    diff = essential_polynomial(K4Homeomorph(G)) - essential_polynomial(K4Homeomorph(J))
    return poly_divexact(diff, X**2 - 1) == red


def identity_transcript(max_exponent: int = 200, reduction_range: int = 7) -> list[dict]:
    """Every identity, power equation and reduction replay, one record each."""
    rows: list[dict] = []
    for lhs, rhs in IDENTITIES:
        rows.append({
            "kind": "identity",
            "statement": f"{lhs.format('t')} = {rhs.format('t')}",
            "lhs": str(reduce(lhs)),
            "rhs": str(reduce(rhs)),
            "ok": verify_identity(lhs, rhs),
        })
    for eq in POWER_EQUATIONS:
        got = eq.solve(max_exponent)
        rows.append({
            "kind": "power",
            "statement": f"t^({eq.unknown}) * ({eq.factor.format('t')}) = {eq.target.format('t')}",
            "lhs": eq.unknown,
            "rhs": "none" if got is None else str(got),
            "ok": got == eq.expected,
        })
    distinct = len({power(n) for n in range(max_exponent + 1)}) == max_exponent + 1
    rows.append({
        "kind": "powers",
        "statement": f"t^0 .. t^{max_exponent} pairwise distinct",
        "lhs": str(max_exponent + 1),
        "rhs": str(len({power(n) for n in range(max_exponent + 1)})),
        "ok": distinct,
    })
    for label, fn, arity in REDUCTIONS:
        checked = failed = 0
        for args in itertools.product(range(2, reduction_range + 1), repeat=arity):
            try:
                ok = check_reduction(fn, *args)
            except ValueError:
                continue
            checked += 1
            failed += not ok
        rows.append({
            "kind": "reduction",
            "statement": f"(Q(G) - Q(J)) / (x^2 - 1) for {label}",
            "lhs": f"{checked} instances",
            "rhs": f"{failed} failures",
            "ok": checked > 0 and failed == 0,
        })
    return rows
