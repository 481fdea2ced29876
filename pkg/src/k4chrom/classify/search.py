"""Equivalence classes by size, uniqueness checks and bounded verification.

For each size m every canonical homeomorph is keyed by the dense
coefficient row of its essential polynomial; equal rows are equal
polynomials, so grouping is exact.  Work is split by first coordinate and
merged in sorted order, so any worker count gives identical results.
"""

from __future__ import annotations

import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ..chromatic import count_colorings, essential_polynomial
from ..k4homeo import (
    K4Homeomorph,
    canonicalize,
    girth,
    girth_cycle_count,
    is_isomorphic,
    order_and_size,
    unit_path_count,
)
from ..polyring import IntPolynomial
from .catalog import (
    CATALOG,
    THEOREM_FAMILIES,
    Family,
    InstanceCheck,
    attribution_index,
    check_instance,
    get_family,
    instances,
)
from .enumeration import _PERMS, _WEIGHTS, canonical_tuples, compositions, essential_keys, key_to_polynomial, raw_count

__all__ = [
    "SearchBudgetExceeded",
    "DEFAULT_SEARCH_BUDGET",
    "THEOREM_GIRTH",
    "default_workers",
    "SizeIndex",
    "size_index",
    "MemberInfo",
    "EquivalenceClass",
    "EquivalenceReport",
    "equivalence_classes",
    "verify_uniqueness",
    "Discrepancy",
    "TheoremReport",
    "verify_theorem",
    "FamilyResult",
    "FamilyReport",
    "verify_families",
]

DEFAULT_SEARCH_BUDGET = 48
_HARD_LIMIT = 63  # the packed encoding holds parts below 64
THEOREM_GIRTH = 7


class SearchBudgetExceeded(ValueError):
    """A size beyond the exhaustive-search budget was requested."""


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("K4CHROM_WORKERS", "1")))
    except ValueError:
        return 1


# -- per-size index ---------------------------------------------------------

@dataclass(frozen=True)
class SizeIndex:
    """All isomorphism classes of size m grouped by essential polynomial."""

    m: int
    raw_count: int
    canonical_count: int
    orbit_total: int
    groups: dict[bytes, tuple[tuple[int, ...], ...]]

    def non_unique(self) -> list[tuple[bytes, tuple[tuple[int, ...], ...]]]:
        out = [(k, v) for k, v in self.groups.items() if len(v) > 1]
        out.sort(key=lambda kv: kv[1][0])
        return out

    def partners(self, G: K4Homeomorph) -> tuple[tuple[int, ...], ...]:
        """Canonical tuples sharing G's essential polynomial, G's own class included."""
        key = _key_of(G, self.m)
        return self.groups.get(key, ())


def _key_of(G: K4Homeomorph, m: int) -> bytes:
    return essential_keys(np.array([G.params], dtype=np.int64), m + 2)[0].tobytes()


def _partition(m: int, first: int) -> tuple[list[tuple[bytes, tuple[int, ...]]], int, int]:
    comps = compositions(m, first)
    canon = canonical_tuples(comps)
    if len(canon):
        codes = np.sort(np.stack([canon[:, p] @ _WEIGHTS for p in _PERMS], axis=1), axis=1)
        orbit_total = int((np.diff(codes, axis=1) != 0).sum() + len(canon))
    else:
        orbit_total = 0
    keys = essential_keys(canon, m + 2)
    rows = [(keys[i].tobytes(), tuple(int(v) for v in canon[i])) for i in range(len(canon))]
    return rows, len(comps), orbit_total


def _merge(m: int, parts) -> SizeIndex:
    groups: dict[bytes, list[tuple[int, ...]]] = defaultdict(list)
    raw = canonical = orbits = 0
    for rows, n_raw, n_orb in parts:
        raw += n_raw
        orbits += n_orb
        canonical += len(rows)
        for key, t in rows:
            groups[key].append(t)
    frozen = {k: tuple(sorted(v)) for k, v in sorted(groups.items())}
    return SizeIndex(m, raw, canonical, orbits, frozen)


_INDEX: dict[int, SizeIndex] = {}


def _check_size(m: int, budget: int) -> None:
    if m < 6:
        raise ValueError("a K4-homeomorph has at least 6 edges")
    limit = min(budget, _HARD_LIMIT)
    if m > limit:
        raise SearchBudgetExceeded(f"search budget exceeded: size {m} > {limit}")


def size_indices(sizes, workers: int | None = None, budget: int = _HARD_LIMIT) -> dict[int, SizeIndex]:
    """Indices for every requested size, computed once and cached."""
    sizes = sorted(set(sizes))
    for m in sizes:
        _check_size(m, budget)
    todo = [m for m in sizes if m not in _INDEX]
    workers = default_workers() if workers is None else max(1, workers)
    tasks = [(m, f) for m in todo for f in range(1, m - 4)]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_partition, *zip(*tasks), chunksize=4))
    else:
        results = [_partition(m, f) for m, f in tasks]
    by_size: dict[int, list] = defaultdict(list)
    for (m, _), res in zip(tasks, results):
        by_size[m].append(res)
    for m in todo:
        _INDEX[m] = _merge(m, by_size[m])
    return {m: _INDEX[m] for m in sizes}


def size_index(m: int, workers: int | None = None, budget: int = _HARD_LIMIT) -> SizeIndex:
    return size_indices([m], workers, budget)[m]


# -- equivalence classes ----------------------------------------------------

def _min_signature(G: K4Homeomorph) -> tuple[int, int]:
    lo = min(G.params)
    return lo, G.params.count(lo)


@dataclass(frozen=True)
class MemberInfo:
    homeomorph: K4Homeomorph
    girth: int
    girth_count: int
    unit_paths: int
    min_param: int
    min_multiplicity: int
    families: tuple[str, ...]

    @classmethod
    def of(cls, G: K4Homeomorph, families=()) -> MemberInfo:
        lo, mult = _min_signature(G)
        return cls(G, girth(G), girth_cycle_count(G), unit_path_count(G), lo, mult, tuple(families) or ("uncataloged",))

    def to_dict(self) -> dict:
        return {
            "tuple": self.homeomorph.to_json(),
            "girth": self.girth,
            "girth_count": self.girth_count,
            "unit_paths": self.unit_paths,
            "min_param": self.min_param,
            "min_multiplicity": self.min_multiplicity,
            "families": list(self.families),
        }


@dataclass(frozen=True)
class EquivalenceClass:
    polynomial: IntPolynomial
    members: tuple[MemberInfo, ...]

    def to_dict(self) -> dict:
        return {
            "essential_polynomial": self.polynomial.format("x"),
            "members": [mi.to_dict() for mi in self.members],
        }


def _class_violations(m: int, poly: IntPolynomial, members: tuple[MemberInfo, ...]) -> list[str]:
    out = []
    label = ", ".join(str(mi.homeomorph) for mi in members)
    ref = members[0]
    for mi in members:
        G = mi.homeomorph
        if order_and_size(G) != (m - 2, m):
            out.append(f"size {m}: {G} has the wrong order or size")
        if essential_polynomial(G) != poly:
            out.append(f"size {m}: {G} does not have the class polynomial")
        if (mi.girth, mi.girth_count) != (ref.girth, ref.girth_count):
            out.append(f"size {m}: girth or girth-cycle count differs in class [{label}]")
        if (mi.min_param, mi.min_multiplicity) != (ref.min_param, ref.min_multiplicity):
            out.append(f"size {m}: minimum parameter or multiplicity differs in class [{label}]")
    return out


@dataclass
class EquivalenceReport:
    m: int
    raw_count: int
    canonical_count: int
    orbit_total: int
    classes: list[EquivalenceClass]
    violations: list[str] = field(default_factory=list)

    @property
    def non_unique_count(self) -> int:
        return sum(len(c.members) for c in self.classes)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "size": self.m,
            "raw_count": self.raw_count,
            "canonical_count": self.canonical_count,
            "orbit_total": self.orbit_total,
            "class_count": len(self.classes),
            "non_unique_count": self.non_unique_count,
            "violations": list(self.violations),
            "classes": [c.to_dict() for c in self.classes],
        }


def _build_classes(idx: SizeIndex, attribution: dict) -> tuple[list[EquivalenceClass], list[str]]:
    classes, violations = [], []
    for key, tuples in idx.non_unique():
        poly = key_to_polynomial(np.frombuffer(key, dtype=np.int16))
        members = tuple(MemberInfo.of(K4Homeomorph(t), attribution.get(t, ())) for t in tuples)
        violations += _class_violations(idx.m, poly, members)
        classes.append(EquivalenceClass(poly, members))
    return classes, violations


def equivalence_classes(m: int, workers: int | None = None) -> EquivalenceReport:
    """Classes of size >= 2 among homeomorphs with m edges, with invariant checks."""
    idx = size_index(m, workers)
    classes, violations = _build_classes(idx, attribution_index(m))
    if idx.orbit_total != raw_count(m) or idx.raw_count != raw_count(m):
        violations.append(f"size {m}: orbit sizes sum to {idx.orbit_total}, expected {raw_count(m)}")
    if len({c.polynomial for c in classes}) != len(classes):
        violations.append(f"size {m}: two classes share an essential polynomial")
    return EquivalenceReport(m, idx.raw_count, idx.canonical_count, idx.orbit_total, classes, violations)


def verify_uniqueness(G: K4Homeomorph, budget: int = DEFAULT_SEARCH_BUDGET, workers: int | None = None) -> bool:
    """True iff no non-isomorphic homeomorph of the same size shares Q(G)."""
    idx = size_index(G.size, workers, budget)
    return idx.partners(canonicalize(G)) == (canonicalize(G).params,)


# -- bounded theorem check --------------------------------------------------

def _in_hypothesis(G: K4Homeomorph) -> bool:
    return girth(G) == THEOREM_GIRTH and unit_path_count(G) <= 1


def _colorings_agree(G: K4Homeomorph, J: K4Homeomorph) -> bool:
    # n + 1 points determine a degree-n polynomial
    return all(count_colorings(G, k) == count_colorings(J, k) for k in range(G.size))


@dataclass(frozen=True)
class Discrepancy:
    """A member of exactly one of X(m) and Y(m)."""

    m: int
    homeomorph: K4Homeomorph
    kind: str  # "uncataloged" (in X only) or "not-equivalent" (in Y only)
    essential: IntPolynomial
    partners: tuple[MemberInfo, ...]
    sources: tuple[str, ...]
    listed_partners: tuple[dict, ...]
    colorings_agree: bool | None

    def to_dict(self) -> dict:
        return {
            "size": self.m,
            "tuple": self.homeomorph.to_json(),
            "kind": self.kind,
            "essential_polynomial": self.essential.format("x"),
            "partners": [p.to_dict() | {"essential_polynomial": essential_polynomial(p.homeomorph).format("x")}
                         for p in self.partners],
            "sources": list(self.sources),
            "listed_partners": list(self.listed_partners),
            "colorings_agree": self.colorings_agree,
        }


@dataclass(frozen=True)
class SizeSummary:
    m: int
    raw_count: int
    canonical_count: int
    non_unique_classes: int
    x_count: int
    y_count: int

    def to_dict(self) -> dict:
        return {
            "size": self.m,
            "raw_count": self.raw_count,
            "canonical_count": self.canonical_count,
            "non_unique_classes": self.non_unique_classes,
            "x_count": self.x_count,
            "y_count": self.y_count,
        }


@dataclass
class TheoremReport:
    m_max: int
    sizes: list[SizeSummary]
    discrepancies: list[Discrepancy]
    alias_summary: dict[str, dict[str, dict[str, int]]]
    exclusions: list[str]
    invariant_violations: list[str]
    classes_checked: int

    @property
    def confirmed(self) -> bool:
        return not self.discrepancies

    @property
    def invariants_hold(self) -> bool:
        return not self.invariant_violations

    def to_dict(self) -> dict:
        return {
            "max_size": self.m_max,
            "confirmed": self.confirmed,
            "invariants_hold": self.invariants_hold,
            "classes_checked": self.classes_checked,
            "sizes": [s.to_dict() for s in self.sizes],
            "discrepancies": [d.to_dict() for d in self.discrepancies],
            "alias_resolution": self.alias_summary,
            "excluded_members": list(self.exclusions),
            "invariant_violations": list(self.invariant_violations),
        }


def _catalog_closure(m_max: int):
    """Y(m) with provenance, plus alias statistics and excluded members.

    Each parameter assignment uses the readings whose pair is a genuine
    equivalence; when none is, the primary reading is kept so the failure
    surfaces as a discrepancy rather than silently vanishing.
    """
    closure: dict[int, dict[tuple[int, ...], set[str]]] = defaultdict(lambda: defaultdict(set))
    listed: dict[tuple[int, ...], dict[str, dict]] = defaultdict(dict)
    aliases: dict[str, dict[str, dict[str, int]]] = {}
    exclusions: list[str] = []
    for fam in THEOREM_FAMILIES:
        stats = {r.label: {"sound": 0, "unsound": 0} for r in fam.readings}
        by_values: dict[tuple, list[InstanceCheck]] = defaultdict(list)
        for inst in instances(fam, m_max):
            chk = check_instance(inst)
            stats[inst.reading.label]["sound" if chk.sound else "unsound"] += 1
            by_values[inst.values].append(chk)
        for checks in by_values.values():
            used = [c for c in checks if c.sound] or [c for c in checks if c.instance.reading == fam.primary]
            for chk in used:
                inst = chk.instance
                for i, G in enumerate(inst.members):
                    J = inst.members[1 - i]
                    if not _in_hypothesis(G):
                        exclusions.append(f"{inst.describe()}: {G} has girth {girth(G)} and unit-path count {unit_path_count(G)}")
                        continue
                    key = canonicalize(G).params
                    closure[inst.size][key].add(inst.describe())
                    listed[key][f"{inst.describe()} {J}"] = {
                        "source": inst.describe(),
                        "partner": J.to_json(),
                        "partner_essential_polynomial": essential_polynomial(J).format("x"),
                        "isomorphic": is_isomorphic(G, J),
                    }
        aliases[fam.id] = stats
    return closure, listed, aliases, sorted(set(exclusions))


def verify_theorem(m_max: int = 40, workers: int | None = None) -> TheoremReport:
    """Compare X(m), the non-unique girth-7 graphs with at most one unit path,
    against Y(m), the catalog closure, for every size up to m_max."""
    if m_max < 6:
        raise ValueError("max size must be at least 6")
    sizes = range(6, m_max + 1)
    indices = size_indices(sizes, workers)
    attribution = attribution_index(m_max)
    mentions = attribution_index(m_max, sound_only=False)
    closure, listed, aliases, exclusions = _catalog_closure(m_max)

    summaries, discrepancies, violations = [], [], []
    checked = 0
    for m in sizes:
        idx = indices[m]
        classes, bad = _build_classes(idx, attribution)
        violations += bad
        checked += len(classes)
        members_by_tuple = {}
        X = set()
        for cls in classes:
            for mi in cls.members:
                members_by_tuple[mi.homeomorph.params] = (cls, mi)
                if mi.girth == THEOREM_GIRTH and mi.unit_paths <= 1:
                    X.add(mi.homeomorph.params)
        Y = set(closure.get(m, {}))
        for t in sorted(X - Y):
            cls, _ = members_by_tuple[t]
            G = K4Homeomorph(t)
            partners = tuple(mi for mi in cls.members if mi.homeomorph != G)
            discrepancies.append(Discrepancy(
                m, G, "uncataloged", cls.polynomial, partners, tuple(mentions.get(t, ())), (),
                all(_colorings_agree(G, p.homeomorph) for p in partners),
            ))
        for t in sorted(Y - X):
            G = K4Homeomorph(t)
            discrepancies.append(Discrepancy(
                m, G, "not-equivalent", essential_polynomial(G), (),
                tuple(sorted(closure[m][t])), tuple(v for _, v in sorted(listed[t].items())), None,
            ))
        summaries.append(SizeSummary(m, idx.raw_count, idx.canonical_count, len(classes), len(X), len(Y)))
    return TheoremReport(m_max, summaries, discrepancies, aliases, exclusions, violations, checked)


# -- family verification ----------------------------------------------------

@dataclass
class FamilyResult:
    family: Family
    checks: dict[str, list[InstanceCheck]]
    membership: list[tuple[str, K4Homeomorph, bool]] = field(default_factory=list)

    @property
    def confirmed_readings(self) -> list[str]:
        return [label for label, cs in self.checks.items() if cs and all(c.ok for c in cs)]

    @property
    def ok(self) -> bool:
        if self.family.kind == "list":
            return bool(self.membership) and all(nonunique for _, _, nonunique in self.membership)
        return bool(self.confirmed_readings)

    def failures(self, label: str | None = None) -> list[str]:
        """Failed checks, for one reading or for the whole family."""
        out = []
        for lab, cs in self.checks.items():
            if label is not None and lab != label:
                continue
            for c in cs:
                if not c.ok:
                    G, J = c.instance.members
                    out.append(f"{c.instance.describe()}: {G} vs {J}: {'; '.join(c.failures())}")
        if label is None:
            for source, G, nonunique in self.membership:
                if not nonunique:
                    out.append(f"{source}: {G} is chromatically unique")
        return out

    def to_dict(self) -> dict:
        fam = self.family
        templates = {r.label: [str(t) for t in r.templates] for r in fam.readings}
        return {
            "family": fam.id,
            "source": fam.source,
            "kind": fam.kind,
            "constraints": fam.constraint_text,
            "ok": self.ok,
            "confirmed_readings": self.confirmed_readings,
            "readings": [
                {
                    "label": label,
                    "templates": templates[label],
                    "instances": len(cs),
                    "passed": sum(c.ok for c in cs),
                    "failures": self.failures(label),
                }
                for label, cs in self.checks.items()
            ],
            "membership": [{"source": s, "tuple": G.to_json(), "not_unique": nu} for s, G, nu in self.membership],
        }


@dataclass
class FamilyReport:
    max_size: int
    max_param: int | None
    results: list[FamilyResult]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def to_dict(self) -> dict:
        return {
            "max_size": self.max_size,
            "max_param": self.max_param,
            "ok": self.ok,
            "families": [r.to_dict() for r in self.results],
        }


def verify_families(
    family: str | None = None,
    max_param: int | None = None,
    max_size: int = 40,
    workers: int | None = None,
) -> FamilyReport:
    """Check every in-constraint instance with all members of size <= max_size.

    A pair family passes when some reading holds on every instance: equal
    size, equal essential polynomial, non-isomorphic members and matching
    minimum-parameter and girth invariants.  A membership list passes when
    every member has a non-isomorphic equivalent of its own size.
    """
    if max_param is not None and max_param < 1:
        raise ValueError("max param must be positive")
    fams = [get_family(family)] if family else list(CATALOG)
    results = []
    for fam in fams:
        checks: dict[str, list[InstanceCheck]] = {r.label: [] for r in fam.readings}
        membership = []
        for inst in instances(fam, max_size, max_param):
            if fam.kind == "pair":
                checks[inst.reading.label].append(check_instance(inst))
            else:
                G = inst.members[0]
                membership.append((inst.describe(), G, not verify_uniqueness(G, max(max_size, 6), workers)))
        results.append(FamilyResult(fam, checks if fam.kind == "pair" else {}, membership))
    return FamilyReport(max_size, max_param, results)
