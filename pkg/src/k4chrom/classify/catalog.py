"""Known families of chromatically equivalent K4-homeomorphs.

Each family is a set of parameter templates such as ``"4,2,1,b,b+2,b+4"``
over free integer parameters with lower bounds.  Pair families carry one or
more *readings*, orderings under which the family has been written down:
``derived`` from the case analysis, ``listed`` in the summary list, or
``printed`` when there is only one.  The first reading is the primary one.
Readings are never trusted blindly; :func:`check_instance` decides each instance by
comparing essential polynomials and canonical forms.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from ..chromatic import essential_polynomial
from ..k4homeo import K4Homeomorph, canonicalize, girth, girth_cycle_count, order_and_size

__all__ = [
    "Template",
    "Reading",
    "Family",
    "Instance",
    "CATALOG",
    "FAMILIES",
    "THEOREM_FAMILIES",
    "CatalogError",
    "get_family",
    "catalog_pair",
    "instances",
    "check_instance",
    "attribution_index",
]


class CatalogError(ValueError):
    """Unknown family, missing parameter or violated constraint."""


_TERM = re.compile(r"([+-]?)(\d*)\*?([a-z]?)")


@dataclass(frozen=True)
class Template:
    """Six affine expressions in the free parameters."""

    text: str
    fields: tuple[tuple[int, tuple[tuple[str, int], ...]], ...]

    @classmethod
    def parse(cls, text: str) -> Template:
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 6:
            raise ValueError(f"template {text!r} needs six fields")
        fields = []
        for part in parts:
            const, coefs, pos = 0, {}, 0
            s = part.replace(" ", "")
            while pos < len(s):
                m = _TERM.match(s, pos)
                if not m or m.end() == pos or not (m.group(2) or m.group(3)):
                    raise ValueError(f"bad template field {part!r}")
                sign = -1 if m.group(1) == "-" else 1
                num = int(m.group(2)) if m.group(2) else 1
                if m.group(3):
                    coefs[m.group(3)] = coefs.get(m.group(3), 0) + sign * num
                else:
                    const += sign * num
                pos = m.end()
            fields.append((const, tuple(sorted(coefs.items()))))
        return cls(text, tuple(fields))

    @property
    def variables(self) -> frozenset[str]:
        return frozenset(v for _, coefs in self.fields for v, _ in coefs)

    def instantiate(self, values: Mapping[str, int]) -> tuple[int, ...]:
        return tuple(c + sum(k * values[v] for v, k in coefs) for c, coefs in self.fields)

    def __str__(self):
        return f"K4({self.text.replace(' ', '')})"


@dataclass(frozen=True)
class Reading:
    label: str
    templates: tuple[Template, ...]


@dataclass(frozen=True)
class Family:
    id: str
    source: str
    kind: str  # "pair" or "list"
    readings: tuple[Reading, ...]
    lower_bounds: Mapping[str, int] = field(default_factory=dict)
    in_theorem: bool = False
    relabel: tuple[int, ...] | None = None
    note: str = ""

    @property
    def primary(self) -> Reading:
        return self.readings[0]

    @property
    def variables(self) -> tuple[str, ...]:
        vs = set()
        for r in self.readings:
            for t in r.templates:
                vs |= t.variables
        return tuple(sorted(vs))

    @property
    def constraint_text(self) -> str:
        return ", ".join(f"{v} >= {lo}" for v, lo in sorted(self.lower_bounds.items())) or "none"

    def check_params(self, values: Mapping[str, int]) -> dict[str, int]:
        want = set(self.variables)
        got = set(values)
        if want - got:
            raise CatalogError(f"{self.id}: missing parameter(s) {', '.join(sorted(want - got))}")
        if got - want:
            raise CatalogError(f"{self.id}: unknown parameter(s) {', '.join(sorted(got - want))}")
        for v in self.variables:
            lo = self.lower_bounds.get(v, 1)
            if values[v] < lo:
                raise CatalogError(f"{self.id}: {v} = {values[v]} violates constraint {v} >= {lo}")
        return {v: int(values[v]) for v in self.variables}

    def members(self, reading: Reading, values: Mapping[str, int]) -> tuple[K4Homeomorph, ...]:
        out = []
        for t in reading.templates:
            if not t.variables <= set(values):
                continue
            p = t.instantiate(values)
            if self.relabel is not None:
                p = tuple(p[i] for i in self.relabel)
            out.append(K4Homeomorph(p))
        return tuple(out)


def _pair(fid, source, *readings, bounds=None, theorem=False, note=""):
    rs = tuple(Reading(label, (Template.parse(g), Template.parse(j))) for label, g, j in readings)
    return Family(fid, source, "pair", rs, dict(bounds or {}), theorem, None, note)


def _list(fid, source, templates, bounds, relabel=None, note=""):
    r = Reading("printed", tuple(Template.parse(t) for t in templates))
    return Family(fid, source, "list", (r,), dict(bounds), False, relabel, note)


# Ren's tuples are written in a different edge labelling; relabel maps a
# printed (a,b,c,d,e,f) to (f,e,d,b,c,a) in ours.
_REN_RELABEL = (5, 4, 3, 1, 2, 0)

CATALOG: tuple[Family, ...] = (
    _list("lemma7-s", "Ren", ("s,s,s-2,2,s,1", "s,s,s,1,s-2,2s-2"), {"s": 3}, _REN_RELABEL,
          note="exactly three equal parameters; membership only"),
    _list("lemma7-t", "Ren",
          ("t,t,1,t+2,t,2t", "t,t,1,t-1,t,2t", "t,t,t,1,t+1,2t+1", "1,1,1,3,t,t+1", "1,1,t,t+2,1,2"),
          {"t": 2}, _REN_RELABEL, note="exactly three equal parameters; membership only"),
    _pair("lemma8-1", "Peng and Liu", ("printed", "a,1,1,a+b+1,b,b+1", "a,1,1,b,b+2,a+b"), bounds={"a": 2, "b": 2}),
    _pair("lemma8-2", "Peng and Liu", ("printed", "a+1,1,1,a+3,2,a", "a+2,1,1,a,2,a+2"), bounds={"a": 2}),
    _pair("lemma8-3", "Peng and Liu", ("printed", "1,b+2,b,1,2,2", "3,1,1,2,b,b+1"), bounds={"b": 2}),
    _pair("lemma8-4", "Peng and Liu", ("printed", "1,a+1,a+3,1,2,a", "a+1,1,1,a,3,a+2"), bounds={"a": 2}),
    _pair("lemma8-5", "Peng and Liu", ("printed", "1,a+2,b,1,2,a", "a+1,1,1,b,3,a"), bounds={"a": 2, "b": 2}),
    _pair("lemma9-1", "Xu", ("printed", "1,b+2,b,1,2,2", "3,1,1,2,b,b+1"), bounds={"b": 1}),
    _pair("lemma9-2", "Xu", ("printed", "1,a+1,a+3,1,2,a", "a+1,1,1,a,3,a+2"), bounds={"a": 2}),
    _pair("lemma9-3", "Xu", ("printed", "1,a+2,b,1,2,a", "a+1,1,1,b,3,a"), bounds={"a": 2, "b": 1}),
    _pair("lemma10-a", "Peng", ("printed", "1,3,3,a-1,a,a+3", "1,3,3,a+1,a-1,a+2"), bounds={"a": 3}, theorem=True),
    _pair("lemma10-b", "Peng", ("printed", "1,3,3,2,b,b+2", "1,2,4,b,b+1,3"), bounds={"b": 2}, theorem=True),
    _pair("lemma10-c", "Peng", ("printed", "1,3,3,2,4,7", "1,2,4,4,3,6"), theorem=True),
    _pair("lemma10-d", "Peng", ("printed", "1,3,3,2,5,8", "1,2,4,6,3,6"), theorem=True),
    _pair("lemma10-e", "Peng", ("printed", "1,3,3,5,2,5", "1,2,4,3,3,6"), theorem=True),
    _pair("lemma10-f", "Peng", ("printed", "1,3,3,5,2,6", "1,2,4,3,7,3"), theorem=True),
    _pair("case-2.1", "main classification",
          ("listed", "4,2,1,2,c+2,c", "3,2,2,c,1,c+3"),
          ("derived", "4,2,1,2,c+2,c", "3,2,2,c,c+3,1"),
          bounds={"c": 3}, theorem=True),
    _pair("case-2.3.3", "main classification",
          ("derived", "4,2,1,b,4,2", "3,2,2,b,5,1"),
          ("listed", "4,2,1,b,4,2", "2,2,3,b,5,1"),
          bounds={"b": 3}, theorem=True),
    _pair("case-3.3.1.2", "main classification",
          ("derived", "4,2,1,b,b+2,b+4", "4,2,1,b+1,b,b+5"),
          ("listed", "4,2,1,b,b+4,b+2", "4,2,1,b+1,b,b+5"),
          bounds={"b": 2}, theorem=True),
    _pair("case-3.5.1.2", "main classification",
          ("derived", "4,2,1,b+2,b+2,b", "4,2,1,b+1,b,b+3"),
          ("listed", "4,2,1,b+2,b,b+2", "4,2,1,b+1,b,b+3"),
          bounds={"b": 2}, theorem=True),
)

FAMILIES: dict[str, Family] = {f.id: f for f in CATALOG}
THEOREM_FAMILIES: tuple[Family, ...] = tuple(f for f in CATALOG if f.in_theorem)


def get_family(fid: str) -> Family:
    try:
        return FAMILIES[fid]
    except KeyError:
        raise CatalogError(f"unknown family {fid!r}; known: {', '.join(FAMILIES)}") from None


def catalog_pair(fid: str, params: Mapping[str, int] | None = None, **kw: int) -> tuple[K4Homeomorph, K4Homeomorph]:
    """The primary-reading pair of a family, e.g. ``catalog_pair("case-2.1", c=4)``."""
    fam = get_family(fid)
    if fam.kind != "pair":
        raise CatalogError(f"{fid} is a membership list, not a pair family")
    values = fam.check_params({**(params or {}), **kw})
    G, J = fam.members(fam.primary, values)
    return G, J


@dataclass(frozen=True)
class Instance:
    family: Family
    reading: Reading
    values: tuple[tuple[str, int], ...]
    members: tuple[K4Homeomorph, ...]

    @property
    def size(self) -> int:
        return self.members[0].size

    def describe(self) -> str:
        vals = ", ".join(f"{k}={v}" for k, v in self.values)
        return f"{self.family.id}[{self.reading.label}]" + (f"({vals})" if vals else "")


def instances(
    fam: Family,
    max_size: int,
    max_param: int | None = None,
    reading: Reading | None = None,
) -> Iterator[Instance]:
    """Every in-constraint instance whose members all have size <= max_size.

    Member sizes grow with every parameter, so each parameter is scanned
    upward from its bound until the size limit is passed.
    """
    readings = (reading,) if reading is not None else fam.readings
    vs = fam.variables
    cap = max_size if max_param is None else min(max_size, max_param)
    ranges = [range(fam.lower_bounds.get(v, 1), cap + 1) for v in vs]
    for combo in itertools.product(*ranges):
        values = dict(zip(vs, combo))
        for r in readings:
            # a membership list yields one instance per template
            groups = [Reading(r.label, (t,)) for t in r.templates] if fam.kind == "list" else [r]
            for g in groups:
                members = fam.members(g, values)
                if max(m.size for m in members) <= max_size:
                    yield Instance(fam, g, tuple(values.items()), members)


@dataclass(frozen=True)
class InstanceCheck:
    instance: Instance
    same_size: bool
    same_essential: bool
    non_isomorphic: bool
    min_signature_match: bool
    girth_signature_match: bool

    @property
    def sound(self) -> bool:
        """A genuine witness of non-uniqueness: equivalent but not isomorphic."""
        return self.same_size and self.same_essential and self.non_isomorphic

    @property
    def ok(self) -> bool:
        return self.sound and self.min_signature_match and self.girth_signature_match

    def failures(self) -> list[str]:
        out = []
        if not self.same_size:
            out.append("sizes differ")
        if not self.same_essential:
            out.append("essential polynomials differ")
        if not self.non_isomorphic:
            out.append("members are isomorphic")
        if self.same_essential and self.same_size:
            if not self.min_signature_match:
                out.append("minimum parameter or its multiplicity differs")
            if not self.girth_signature_match:
                out.append("girth or girth-cycle count differs")
        return out


def _min_signature(G: K4Homeomorph) -> tuple[int, int]:
    lo = min(G.params)
    return lo, G.params.count(lo)


def check_instance(inst: Instance) -> InstanceCheck:
    G, J = inst.members
    same_size = order_and_size(G) == order_and_size(J)
    same_q = essential_polynomial(G) == essential_polynomial(J)
    return InstanceCheck(
        inst,
        same_size=same_size,
        same_essential=same_q,
        non_isomorphic=canonicalize(G) != canonicalize(J),
        min_signature_match=_min_signature(G) == _min_signature(J),
        girth_signature_match=(girth(G), girth_cycle_count(G)) == (girth(J), girth_cycle_count(J)),
    )


def attribution_index(max_size: int, sound_only: bool = True) -> dict[tuple[int, ...], list[str]]:
    """Canonical tuple -> sorted family labels for catalog members up to max_size.

    With ``sound_only`` a pair instance counts only if it is a genuine
    equivalence of non-isomorphic graphs.
    """
    index: dict[tuple[int, ...], set[str]] = {}
    for fam in CATALOG:
        for inst in instances(fam, max_size):
            if sound_only and fam.kind == "pair" and not check_instance(inst).sound:
                continue
            label = fam.id if len(fam.readings) == 1 else f"{fam.id}[{inst.reading.label}]"
            for G in inst.members:
                index.setdefault(canonicalize(G).params, set()).add(label)
    return {k: sorted(v) for k, v in index.items()}
