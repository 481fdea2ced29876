"""Enumerate K4-homeomorphs of a given size, one per isomorphism class.

A homeomorph of size m is a composition of m into six positive parts.  The
batch path below canonicalises all C(m-1, 5) compositions at once with
numpy: each tuple is packed into one integer (base 64, most significant
position first) so that lexicographic order is integer order, and a tuple is
canonical iff its code is the minimum over its 24 images.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterator, Sequence

import numpy as np

from ..k4homeo import (
    OPPOSITE_PAIRS,
    POSITION_PERMUTATIONS,
    STARS,
    K4Homeomorph,
    girth,
    matches_pattern,
    unit_path_count,
)
from ..polyring import IntPolynomial

__all__ = [
    "raw_count",
    "compositions",
    "canonical_tuples",
    "essential_keys",
    "key_to_polynomial",
    "polynomial_key",
    "enumerate_homeomorphs",
    "parse_pattern",
]

_BASE = 64
_WEIGHTS = np.array([_BASE ** (5 - i) for i in range(6)], dtype=np.int64)
_PERMS = np.array(POSITION_PERMUTATIONS, dtype=np.intp)


def raw_count(m: int) -> int:
    """Number of 6-part compositions of m, C(m-1, 5)."""
    return math.comb(m - 1, 5) if m >= 6 else 0


def _parts(m: int, k: int) -> np.ndarray:
    n = math.comb(m - 1, k - 1) if m >= k else 0
    if not n:
        return np.zeros((0, k), dtype=np.int64)
    cuts = itertools.combinations(range(1, m), k - 1)
    c = np.fromiter(itertools.chain.from_iterable(cuts), dtype=np.int64, count=(k - 1) * n)
    bounds = np.hstack([np.zeros((n, 1), np.int64), c.reshape(n, k - 1), np.full((n, 1), m, np.int64)])
    return np.diff(bounds, axis=1)


def compositions(m: int, first: int | None = None) -> np.ndarray:
    """All compositions of m into 6 positive parts, lexicographically ordered.

    With ``first`` given, only those whose first part equals it.
    """
    if m >= _BASE:
        raise ValueError(f"size {m} too large for the packed encoding")
    if first is None:
        return _parts(m, 6)
    if not 1 <= first <= m - 5:
        return np.zeros((0, 6), dtype=np.int64)
    rest = _parts(m - first, 5)
    return np.hstack([np.full((len(rest), 1), first, np.int64), rest])


def canonical_tuples(comps: np.ndarray) -> np.ndarray:
    """Rows of ``comps`` that are the lexicographic minimum of their orbit."""
    if not len(comps):
        return comps
    own = comps @ _WEIGHTS
    best = own.copy()
    for perm in _PERMS[1:]:
        np.minimum(best, comps[:, perm] @ _WEIGHTS, out=best)
    return comps[own == best]


def essential_keys(tuples: np.ndarray, width: int | None = None) -> np.ndarray:
    """Dense coefficient rows of the essential polynomial, one per tuple.

    Row i, column e holds the coefficient of x^e in Q.  Two rows are equal
    iff the polynomials are equal, so a row is an exact grouping key.
    """
    n = len(tuples)
    if width is None:
        width = int(tuples.sum(axis=1).max()) + 2 if n else 1
    out = np.zeros((n, width), dtype=np.int16)
    rows = np.arange(n)
    for group in STARS + OPPOSITE_PAIRS:
        out[rows, tuples[:, list(group)].sum(axis=1)] += 1
    for j in range(6):
        out[rows, tuples[:, j]] -= 1
        out[rows, tuples[:, j] + 1] -= 1
    return out


def key_to_polynomial(row: Sequence[int]) -> IntPolynomial:
    return IntPolynomial({e: int(c) for e, c in enumerate(row) if c})


def polynomial_key(p: IntPolynomial, width: int) -> bytes:
    """The byte key :func:`essential_keys` produces for p at the given width."""
    row = np.zeros(width, dtype=np.int16)
    for e, c in p.terms.items():
        row[e] = c
    return row.tobytes()


def parse_pattern(text: str) -> tuple[int | None, ...]:
    """``"4,2,1,*,*,*"`` -> (4, 2, 1, None, None, None)."""
    fields = [f.strip() for f in text.strip().removeprefix("K4").strip("() ").split(",")]
    if len(fields) != 6:
        raise ValueError(f"pattern {text!r} needs six fields")
    out = []
    for f in fields:
        if f in ("*", "_", "?"):
            out.append(None)
        elif f.isdigit() and int(f) >= 1:
            out.append(int(f))
        else:
            raise ValueError(f"bad pattern field {f!r} in {text!r}")
    return tuple(out)


def enumerate_homeomorphs(
    m: int,
    girth_value: int | None = None,
    max_unit_paths: int | None = None,
    pattern: Sequence[int | None] | str | None = None,
) -> Iterator[K4Homeomorph]:
    """Canonical homeomorphs of size m in lexicographic order, optionally filtered."""
    if m < 6:
        raise ValueError("a K4-homeomorph has at least 6 edges")
    if isinstance(pattern, str):
        pattern = parse_pattern(pattern)
    for row in canonical_tuples(compositions(m)):
        G = K4Homeomorph(tuple(int(v) for v in row))
        if girth_value is not None and girth(G) != girth_value:
            continue
        if max_unit_paths is not None and unit_path_count(G) > max_unit_paths:
            continue
        if pattern is not None and not matches_pattern(G, pattern):
            continue
        yield G

