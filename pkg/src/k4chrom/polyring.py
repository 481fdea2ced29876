"""Exact sparse univariate polynomials with integer coefficients.

A polynomial is stored as a map ``exponent -> coefficient`` with no zero
coefficients, so the zero polynomial is the empty map and equality is
structural.  Coefficients are Python ints and never overflow.
"""

from __future__ import annotations

import json
import re
from typing import Iterable, Mapping

__all__ = [
    "IntPolynomial",
    "NotDivisibleError",
    "poly_from_terms",
    "poly_add",
    "poly_sub",
    "poly_mul",
    "poly_divexact",
    "poly_eval",
    "poly_compose",
    "X",
    "ONE",
    "ZERO",
]


class NotDivisibleError(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


class IntPolynomial:
    """Immutable sparse polynomial over the integers."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean: dict[int, int] = {}
        if terms:
            for e, c in terms.items():
                if e < 0:
                    raise ValueError(f"negative exponent {e}")
                if c:
                    clean[int(e)] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> IntPolynomial:
        # caller guarantees canonical input
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> IntPolynomial:
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls({0: c})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        """A copy of the exponent -> coefficient map."""
        return dict(self._terms)

    def items(self) -> list[tuple[int, int]]:
        """Terms sorted by descending exponent."""
        return sorted(self._terms.items(), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        """Largest exponent; -1 for the zero polynomial."""
        return max(self._terms, default=-1)

    @property
    def low_degree(self) -> int:
        """Smallest exponent; -1 for the zero polynomial."""
        return min(self._terms, default=-1)

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    @property
    def leading_coefficient(self) -> int:
        return self._terms[self.degree] if self._terms else 0

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return IntPolynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return IntPolynomial._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, n: int) -> IntPolynomial:
        """Multiply by x**n (n may be negative if every exponent stays >= 0)."""
        return IntPolynomial({e + n: c for e, c in self._terms.items()})

    def __call__(self, v: int) -> int:
        return poly_eval(self, v)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- formats ----------------------------------------------------------

    def format(self, var: str = "x") -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self.items()):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                mono = var if e == 1 else f"{var}^{e}"
                body = mono if a == 1 else f"{a}{mono}"
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"IntPolynomial({self.format()!r})"

    @classmethod
    def parse(cls, text: str, var: str = "x") -> IntPolynomial:
        """Inverse of :meth:`format`; also tolerates ``*`` and ``**``."""
        s = text.replace(" ", "").replace("**", "^").replace("*", "")
        if not s:
            raise ValueError("empty polynomial")
        v = re.escape(var)
        term = re.compile(rf"([+-]?)(\d*)({v}(?:\^(\d+))?)?")
        pos, out = 0, {}
        while pos < len(s):
            m = term.match(s, pos)
            if not m or m.end() == pos or (not m.group(2) and not m.group(3)):
                raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
            if pos > 0 and not m.group(1):
                raise ValueError(f"missing sign in {text!r} at offset {pos}")
            coef = int(m.group(2)) if m.group(2) else 1
            if m.group(1) == "-":
                coef = -coef
            exp = 0 if not m.group(3) else int(m.group(4) or 1)
            out[exp] = out.get(exp, 0) + coef
            pos = m.end()
        return cls(out)

    def to_json(self) -> list[list]:
        """``[[exponent, "coefficient"], ...]`` by descending exponent."""
        return [[e, str(c)] for e, c in self.items()]

    @classmethod
    def from_json(cls, data: str | list) -> IntPolynomial:
        if isinstance(data, str):
            data = json.loads(data)
        return poly_from_terms((int(e), int(c)) for e, c in data)


def _coerce(v):
    if isinstance(v, IntPolynomial):
        return v
    if isinstance(v, int):
        return IntPolynomial.constant(v)
    return NotImplemented


ZERO = IntPolynomial()
ONE = IntPolynomial({0: 1})
X = IntPolynomial({1: 1})


def poly_from_terms(pairs: Iterable[tuple[int, int]]) -> IntPolynomial:
    """Build a polynomial from (exponent, coefficient) pairs; duplicates are summed."""
    acc: dict[int, int] = {}
    for e, c in pairs:
        if e < 0:
            raise ValueError(f"negative exponent {e}")
        acc[e] = acc.get(e, 0) + c
    return IntPolynomial(acc)


def poly_add(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return a + b


def poly_sub(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return a - b


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return a * b


def poly_divexact(num: IntPolynomial, den: IntPolynomial) -> IntPolynomial:
    """Return q with ``num == den * q``.

    Raises:
        ZeroDivisionError: if ``den`` is zero.
        NotDivisibleError: if the division leaves a remainder.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = dict(num._terms)
    dd, lc = den.degree, den.leading_coefficient
    dterms = den.items()
    quot: dict[int, int] = {}
    while rem:
        e = max(rem)
        if e < dd:
            break
        c = rem[e]
        if c % lc:
            break
        qc, qe = c // lc, e - dd
        quot[qe] = qc
        for de, dc in dterms:
            k = de + qe
            s = rem.get(k, 0) - qc * dc
            if s:
                rem[k] = s
            else:
                rem.pop(k, None)
    if rem:
        raise NotDivisibleError(f"{num} is not divisible by {den}")
    return IntPolynomial._raw(quot)


def poly_eval(p: IntPolynomial, v: int) -> int:
    """Exact value of p at the integer v (Horner over the sparse terms)."""
    acc, prev = 0, None
    for e, c in p.items():
        if prev is not None:
            acc *= v ** (prev - e)
        acc += c
        prev = e
    if prev:
        acc *= v ** prev
    return acc


def poly_compose(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """The polynomial p(q(x))."""
    acc, prev = ZERO, None
    for e, c in p.items():
        if prev is not None:
            acc = acc * q ** (prev - e)
        acc = acc + c
        prev = e
    if prev:
        acc = acc * q ** prev
    return acc
