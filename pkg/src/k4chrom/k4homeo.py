"""K4-homeomorphs: K4 with each of its six edges replaced by a path.

Parameters are ordered (alpha, beta, gamma, delta, epsilon, eta) with the
fixed incidence

    alpha = P1P2   beta = P2P4    gamma = P1P4
    delta = P3P4   epsilon = P2P3 eta = P1P3

so the vertex stars are P1={alpha,eta,gamma}, P2={alpha,epsilon,beta},
P3={eta,delta,epsilon}, P4={delta,gamma,beta} and the opposite pairs are
{alpha,delta}, {eta,beta}, {gamma,epsilon}.  These are exactly the
exponent groups of the essential polynomial.
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "PARAM_NAMES",
    "ENDPOINTS",
    "STARS",
    "OPPOSITE_PAIRS",
    "POSITION_PERMUTATIONS",
    "K4Homeomorph",
    "SimpleGraph",
    "make_homeomorph",
    "parse_homeomorph",
    "order_and_size",
    "cycle_lengths",
    "girth",
    "girth_cycle_count",
    "expand",
    "orbit",
    "canonicalize",
    "is_isomorphic",
    "unit_path_count",
    "matches_pattern",
    "parameter_multiset",
]

PARAM_NAMES = ("alpha", "beta", "gamma", "delta", "epsilon", "eta")

# branch vertices P1..P4 are 0..3
ENDPOINTS: tuple[tuple[int, int], ...] = ((0, 1), (1, 3), (0, 3), (2, 3), (1, 2), (0, 2))

STARS: tuple[tuple[int, ...], ...] = tuple(
    tuple(i for i, e in enumerate(ENDPOINTS) if v in e) for v in range(4)
)

OPPOSITE_PAIRS: tuple[tuple[int, int], ...] = tuple(
    (i, j)
    for i, j in itertools.combinations(range(6), 2)
    if not set(ENDPOINTS[i]) & set(ENDPOINTS[j])
)


def _induced_permutations() -> tuple[tuple[int, ...], ...]:
    index = {frozenset(e): i for i, e in enumerate(ENDPOINTS)}
    perms = []
    for sigma in itertools.permutations(range(4)):
        # image[i] = position that edge i is carried to by sigma
        image = [index[frozenset((sigma[u], sigma[v]))] for u, v in ENDPOINTS]
        # store the gather form: new[j] = old[src[j]]
        src = [0] * 6
        for i, j in enumerate(image):
            src[j] = i
        perms.append(tuple(src))
    return tuple(perms)


# The 24 position permutations induced by S4 acting on P1..P4, in gather
# form: the image of tuple t is tuple(t[s] for s in perm).  perm[0] is the
# identity.
POSITION_PERMUTATIONS = _induced_permutations()


@dataclass(frozen=True, order=True)
class K4Homeomorph:
    params: tuple[int, int, int, int, int, int]

    def __post_init__(self):
        p = tuple(self.params)
        if len(p) != 6:
            raise ValueError(f"a K4-homeomorph needs 6 path lengths, got {len(p)}")
        for name, v in zip(PARAM_NAMES, p):
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"{name} must be an int, got {v!r}")
            if v < 1:
                raise ValueError(f"{name} = {v}: path lengths must be >= 1")
        object.__setattr__(self, "params", p)

    def __iter__(self):
        return iter(self.params)

    def __getitem__(self, i):
        return self.params[i]

    def __len__(self):
        return 6

    @property
    def size(self) -> int:
        return sum(self.params)

    def __str__(self):
        return "K4(" + ",".join(map(str, self.params)) + ")"

    def __repr__(self):
        return f"K4Homeomorph{self.params}"

    def to_json(self) -> list[int]:
        return list(self.params)


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on vertices 0..n-1."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{self.n - 1}")
            norm.add((min(u, v), max(u, v)))
        if len(norm) != len(self.edges):
            raise ValueError("duplicate edges")
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
        return cls(n, frozenset(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


def make_homeomorph(*params: int) -> K4Homeomorph:
    """``make_homeomorph(1, 3, 3, 2, 4, 7)`` or ``make_homeomorph((1, 3, 3, 2, 4, 7))``."""
    if len(params) == 1 and not isinstance(params[0], int):
        params = tuple(params[0])
    return K4Homeomorph(tuple(params))


_TUPLE_RE = re.compile(r"^\s*(?:K4)?\s*\(?\s*([^()]*?)\s*\)?\s*$", re.IGNORECASE)


def parse_homeomorph(text: str) -> K4Homeomorph:
    """Parse ``"K4(a,b,c,d,e,f)"``; the ``K4`` prefix and parentheses are optional."""
    m = _TUPLE_RE.match(text)
    if not m:
        raise ValueError(f"malformed tuple {text!r}")
    fields = [f.strip() for f in m.group(1).split(",")]
    if len(fields) != 6 or not all(re.fullmatch(r"[+-]?\d+", f) for f in fields):
        raise ValueError(f"malformed tuple {text!r}: expected six integers")
    return K4Homeomorph(tuple(int(f) for f in fields))


def _params(G) -> tuple[int, ...]:
    return G.params if isinstance(G, K4Homeomorph) else tuple(G)


def order_and_size(G: K4Homeomorph) -> tuple[int, int]:
    m = sum(_params(G))
    return m - 2, m


def cycle_lengths(G: K4Homeomorph) -> tuple[int, ...]:
    """Lengths of the seven cycles: four triangles (one per vertex star) then three quadrilaterals."""
    p = _params(G)
    s = sum(p)
    tri = [s - sum(p[i] for i in star) for star in STARS]
    quad = [s - p[i] - p[j] for i, j in OPPOSITE_PAIRS]
    return tuple(tri + quad)


def girth(G: K4Homeomorph) -> int:
    return min(cycle_lengths(G))


def girth_cycle_count(G: K4Homeomorph) -> int:
    cl = cycle_lengths(G)
    return cl.count(min(cl))


def unit_path_count(G: K4Homeomorph) -> int:
    return _params(G).count(1)


def expand(G: K4Homeomorph) -> SimpleGraph:
    """Subdivide: internal path vertices are numbered from 4 upward, path by path."""
    edges = []
    nxt = 4
    for (u, v), length in zip(ENDPOINTS, _params(G)):
        prev = u
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, v))
    return SimpleGraph.from_edges(nxt, edges)


def orbit(G: K4Homeomorph) -> set[tuple[int, ...]]:
    """All parameter tuples isomorphic to G via the K4 symmetry group."""
    p = _params(G)
    return {tuple(p[s] for s in perm) for perm in POSITION_PERMUTATIONS}


def canonicalize(G: K4Homeomorph) -> K4Homeomorph:
    """Lexicographically least tuple in the orbit of G."""
    return K4Homeomorph(min(orbit(G)))


def is_isomorphic(G: K4Homeomorph, J: K4Homeomorph) -> bool:
    return canonicalize(G) == canonicalize(J)


def matches_pattern(G: K4Homeomorph, pattern: Sequence[int | None]) -> bool:
    """True if some isomorphic relabelling of G agrees with ``pattern`` (None = wildcard)."""
    return any(
        all(want is None or want == got for want, got in zip(pattern, t))
        for t in orbit(G)
    )


def parameter_multiset(G: K4Homeomorph) -> Counter:
    return Counter(_params(G))
