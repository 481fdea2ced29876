from __future__ import annotations

import json
import math

import pytest

from k4chrom.classify import catalog, search
from k4chrom.classify.catalog import CatalogError, Template, catalog_pair, check_instance, get_family, instances
from k4chrom.classify.enumeration import (
    canonical_tuples,
    compositions,
    enumerate_homeomorphs,
    essential_keys,
    key_to_polynomial,
    parse_pattern,
    raw_count,
)
from k4chrom.classify.search import (
    SearchBudgetExceeded,
    equivalence_classes,
    size_index,
    verify_families,
    verify_theorem,
    verify_uniqueness,
)
from k4chrom.chromatic import count_colorings, essential_polynomial
from k4chrom.k4homeo import K4Homeomorph, canonicalize, girth


def K(*t):
    return K4Homeomorph(t)


def test_enumeration_examples():
    assert list(enumerate_homeomorphs(6)) == [K(1, 1, 1, 1, 1, 1)]
    assert list(enumerate_homeomorphs(7)) == [K(1, 1, 1, 1, 1, 2)]
    assert len(compositions(7)) == 6 and raw_count(10) == 126 == len(compositions(10))
    with pytest.raises(ValueError):
        list(enumerate_homeomorphs(5))


def test_enumeration_matches_scalar_canonicalization():
    for m in range(6, 14):
        want = sorted({canonicalize(K(*map(int, r))).params for r in compositions(m)})
        got = [tuple(map(int, r)) for r in canonical_tuples(compositions(m))]
        assert got == want


def test_enumeration_filters():
    g7 = list(enumerate_homeomorphs(17, girth_value=7, max_unit_paths=1))
    assert g7 and all(girth(G) == 7 for G in g7)
    assert K(1, 3, 3, 2, 3, 5) in g7
    hits = list(enumerate_homeomorphs(17, pattern="4,2,1,*,*,*"))
    assert canonicalize(K(4, 2, 1, 2, 5, 3)) in hits
    assert parse_pattern("K4(4,2,1,*,?,_)") == (4, 2, 1, None, None, None)
    with pytest.raises(ValueError):
        parse_pattern("4,2,1")


def test_keys_are_exact_polynomials():
    rows = compositions(14)[:300]
    keys = essential_keys(rows, 16)
    for r, k in zip(rows, keys):
        assert key_to_polynomial(k) == essential_polynomial(K(*map(int, r)))


@pytest.mark.parametrize("m", [6, 7, 12, 20, 31])
def test_orbit_sizes_sum_to_raw_count(m):
    idx = size_index(m)
    assert idx.orbit_total == idx.raw_count == math.comb(m - 1, 5)


def test_template_parsing():
    t = Template.parse("2*s-2, a+b+1, 4, b, 3a, -1+c")
    assert t.instantiate({"s": 3, "a": 2, "b": 5, "c": 4}) == (4, 8, 4, 5, 6, 3)
    assert t.variables == {"s", "a", "b", "c"}
    with pytest.raises(ValueError):
        Template.parse("1,2,3")
    with pytest.raises(ValueError):
        Template.parse("1,2,3,4,5,a*")


def test_catalog_pair_examples():
    assert catalog_pair("case-2.1", c=4) == (K(4, 2, 1, 2, 6, 4), K(3, 2, 2, 4, 1, 7))
    assert catalog_pair("lemma10-a", a=3) == (K(1, 3, 3, 2, 3, 6), K(1, 3, 3, 4, 2, 5))
    G, _ = catalog_pair("case-2.1", {"c": 3})
    assert girth(G) == 6
    assert catalog_pair("lemma10-c") == (K(1, 3, 3, 2, 4, 7), K(1, 2, 4, 4, 3, 6))


def test_catalog_pair_errors():
    with pytest.raises(CatalogError, match="c >= 3"):
        catalog_pair("case-2.1", c=2)
    with pytest.raises(CatalogError, match="missing"):
        catalog_pair("lemma8-1", a=3)
    with pytest.raises(CatalogError, match="unknown parameter"):
        catalog_pair("lemma10-a", a=3, z=1)
    with pytest.raises(CatalogError, match="unknown family"):
        get_family("lemma99")
    with pytest.raises(CatalogError, match="membership"):
        catalog_pair("lemma7-s", s=3)


def test_instances_respect_bounds():
    fam = get_family("lemma8-1")
    insts = list(instances(fam, 30, max_param=5))
    assert insts
    for inst in insts:
        vals = dict(inst.values)
        assert 2 <= vals["a"] <= 5 and 2 <= vals["b"] <= 5
        assert all(G.size <= 30 for G in inst.members)


def test_ren_members_are_relabelled():
    members = [i.members[0] for i in instances(get_family("lemma7-s"), 13)]
    # printed (s,s,s-2,2,s,1) at s = 3 is read as (f,e,d,b,c,a) = (1,3,2,3,1,3)
    assert members == [K(1, 3, 2, 3, 1, 3)]
    assert not verify_uniqueness(members[0])


def test_equivalence_classes_examples():
    rep = equivalence_classes(17)
    sets = [{mi.homeomorph for mi in c.members} for c in rep.classes]
    for a, b in [((4, 2, 1, 2, 5, 3), (3, 2, 2, 3, 6, 1)), ((4, 2, 1, 4, 4, 2), (4, 2, 1, 3, 2, 5))]:
        assert any({canonicalize(K(*a)), canonicalize(K(*b))} <= s for s in sets)
    assert rep.ok
    assert equivalence_classes(6).classes == []


def test_classes_partition_the_non_unique_members():
    rep = equivalence_classes(19)
    seen = [mi.homeomorph for c in rep.classes for mi in c.members]
    assert len(seen) == len(set(seen))
    idx = size_index(19)
    non_unique = {t for ts in idx.groups.values() if len(ts) > 1 for t in ts}
    assert {G.params for G in seen} == non_unique
    assert len({c.polynomial for c in rep.classes}) == len(rep.classes)


def test_verify_uniqueness_examples():
    assert verify_uniqueness(K(1, 1, 1, 1, 1, 1))
    assert not verify_uniqueness(K(4, 2, 1, 2, 5, 3))
    assert verify_uniqueness(K(2, 2, 3, 5, 4, 6))
    with pytest.raises(SearchBudgetExceeded, match="budget"):
        verify_uniqueness(K(10, 10, 10, 10, 10, 10), budget=48)


def test_worker_count_does_not_change_results():
    one = json.dumps(equivalence_classes(18, workers=1).to_dict())
    saved = search._INDEX.pop(18)
    try:
        two = json.dumps(equivalence_classes(18, workers=2).to_dict())
    finally:
        search._INDEX[18] = saved
    assert one == two


def test_family_checks_flag_boundary_instances():
    rep = verify_families(max_size=30)
    res = {r.family.id: r for r in rep.results}
    assert not res["lemma9-1"].ok and not res["lemma10-b"].ok
    assert "isomorphic" in res["lemma10-b"].failures()[0]
    assert res["case-2.3.3"].confirmed_readings == ["derived"]
    assert res["case-3.3.1.2"].confirmed_readings == ["listed"]
    assert res["case-3.5.1.2"].confirmed_readings == ["derived"]
    assert res["lemma7-t"].ok and res["lemma7-s"].ok


def test_instance_check_detects_non_equivalence():
    fam = get_family("case-3.5.1.2")
    theorem = fam.readings[1]
    chk = check_instance(next(instances(fam, 20, reading=theorem)))
    assert not chk.same_essential and not chk.sound


def test_theorem_check_small_bound():
    rep = verify_theorem(20)
    found = {(d.m, d.homeomorph.params, d.kind) for d in rep.discrepancies}
    assert (15, (1, 2, 4, 2, 3, 3), "not-equivalent") in found
    assert (19, (1, 2, 4, 2, 7, 3), "uncataloged") in found
    assert (19, (1, 2, 4, 4, 2, 6), "uncataloged") in found
    assert len(found) == 3
    assert rep.invariants_hold
    d = next(d for d in rep.discrepancies if d.kind == "uncataloged")
    assert d.colorings_agree is True


def test_theorem_check_below_girth_seven_is_trivial():
    rep = verify_theorem(12)
    assert rep.confirmed and all(s.x_count == s.y_count == 0 for s in rep.sizes)
    with pytest.raises(ValueError):
        verify_theorem(5)


def test_catalog_ids_are_unique():
    ids = [f.id for f in catalog.CATALOG]
    assert len(ids) == len(set(ids))


@pytest.mark.parametrize("b", [2, 3, 4, 5])
def test_uncataloged_pair_is_a_genuine_equivalence(b):
    # derived-case partner written as (4,2,1,c,b,a) with the case's own solution
    G, J = K(4, 2, 1, b, b + 2, b + 4), K(4, 2, 1, b + 5, b, b + 1)
    assert G.size == J.size and canonicalize(G) != canonicalize(J)
    assert all(count_colorings(G, k) == count_colorings(J, k) for k in range(G.size))
    assert girth(G) == girth(J) == 7


def test_boundary_instances_are_isomorphic():
    assert canonicalize(K(1, 3, 3, 2, 2, 4)) == canonicalize(K(1, 2, 4, 2, 3, 3))
    assert canonicalize(K(1, 3, 1, 1, 2, 2)) == canonicalize(K(3, 1, 1, 2, 1, 2))
    assert verify_uniqueness(K(1, 2, 4, 2, 3, 3))
