"""Command-line front end: ``k4chrom <command> ...``.

Exit codes: 0 success, 1 a verification found a discrepancy, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from .chromatic import (
    DEFAULT_ORACLE_BUDGET,
    OracleBudgetExceeded,
    chrom_equivalent,
    chromatic_polynomial,
    chromatic_polynomial_dc,
    essential_polynomial,
)
from .classify.catalog import CatalogError
from .classify.enumeration import parse_pattern
from .classify.search import (
    SearchBudgetExceeded,
    equivalence_classes,
    verify_families,
    verify_theorem,
)
from .cubicfield import identity_transcript
from .k4homeo import (
    PARAM_NAMES,
    canonicalize,
    cycle_lengths,
    expand,
    girth,
    girth_cycle_count,
    is_isomorphic,
    matches_pattern,
    orbit,
    order_and_size,
    parse_homeomorph,
)
from .report import Rendered, render, table

CYCLE_NAMES = ("triangle~P1", "triangle~P2", "triangle~P3", "triangle~P4", "quad alpha|delta", "quad beta|eta", "quad gamma|epsilon")


class UsageError(Exception):
    pass


def _tuple(text: str):
    try:
        return parse_homeomorph(text)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


# -- commands ---------------------------------------------------------------

def cmd_qpoly(args) -> Rendered:
    G = _tuple(args.G)
    q = essential_polynomial(G)
    data = {"tuple": G.to_json(), "essential_polynomial": q.format("x"), "terms": q.to_json()}
    return Rendered(data, ["tuple", "essential_polynomial"], [[str(G), q.format("x")]], f"Q({G}; x) = {q.format('x')}")


def cmd_chrompoly(args) -> Rendered:
    G = _tuple(args.G)
    p = chromatic_polynomial(G)
    data = {"tuple": G.to_json(), "chromatic_polynomial": p.format("k"), "terms": p.to_json()}
    lines = [f"P({G}; k) = {p.format('k')}"]
    code = 0
    if args.oracle:
        ref = chromatic_polynomial_dc(expand(G), args.oracle_budget)
        agree = ref == p
        data["oracle"] = {"chromatic_polynomial": ref.format("k"), "agrees": agree}
        lines.append(f"deletion-contraction: {'agrees' if agree else 'DISAGREES: ' + ref.format('k')}")
        code = 0 if agree else 1
    return Rendered(data, ["tuple", "chromatic_polynomial"], [[str(G), p.format("k")]], "\n".join(lines), code)


def cmd_equiv(args) -> Rendered:
    G, J = _tuple(args.G), _tuple(args.J)
    eq = chrom_equivalent(G, J)
    iso = is_isomorphic(G, J)
    rows = []
    for H in (G, J):
        n, m = order_and_size(H)
        rows.append([str(H), n, m, essential_polynomial(H).format("x")])
    verdict = "equivalent" if eq else "not equivalent"
    if eq and iso:
        verdict += " (isomorphic)"
    data = {
        "equivalent": eq,
        "isomorphic": iso,
        "graphs": [
            {"tuple": H.to_json(), "order": r[1], "size": r[2], "essential_polynomial": r[3]}
            for H, r in zip((G, J), rows)
        ],
    }
    text = table(["graph", "order", "size", "Q(x)"], rows) + f"\n\nverdict: {verdict}"
    return Rendered(data, ["graph", "order", "size", "essential_polynomial"], rows, text, 0 if eq else 1)


def cmd_girth(args) -> Rendered:
    G = _tuple(args.G)
    cl = cycle_lengths(G)
    g, c = girth(G), girth_cycle_count(G)
    data = {"tuple": G.to_json(), "girth": g, "girth_count": c, "cycle_lengths": dict(zip(CYCLE_NAMES, cl))}
    rows = [[name, length] for name, length in zip(CYCLE_NAMES, cl)]
    text = f"{G}: girth {g}, count {c}\n\n" + table(["cycle", "length"], rows)
    return Rendered(data, ["cycle", "length"], rows, text)


def cmd_canon(args) -> Rendered:
    G = _tuple(args.G)
    C = canonicalize(G)
    size = len(orbit(G))
    data = {"tuple": G.to_json(), "canonical": C.to_json(), "orbit_size": size}
    return Rendered(data, ["tuple", "canonical", "orbit_size"], [[str(G), str(C), size]], f"{C} (orbit size {size})")


def cmd_classes(args) -> Rendered:
    rep = equivalence_classes(args.size, args.workers)
    pattern = parse_pattern(args.pattern) if args.pattern else None

    def keep(mi) -> bool:
        if args.girth is not None and mi.girth != args.girth:
            return False
        if args.max_unit_paths is not None and mi.unit_paths > args.max_unit_paths:
            return False
        return pattern is None or matches_pattern(mi.homeomorph, pattern)

    classes = [c for c in rep.classes if any(keep(mi) for mi in c.members)]
    data = rep.to_dict()
    data["classes"] = [c.to_dict() for c in classes]
    data["filters"] = {"girth": args.girth, "max_unit_paths": args.max_unit_paths, "pattern": args.pattern}
    rows = []
    for i, c in enumerate(classes, 1):
        for mi in c.members:
            rows.append([i, str(mi.homeomorph), mi.girth, mi.girth_count, mi.unit_paths, ",".join(mi.families), c.polynomial.format("x")])
    headers = ["class", "tuple", "girth", "count", "unit_paths", "families", "essential_polynomial"]
    text = [
        f"size {rep.m}: {rep.raw_count} tuples, {rep.canonical_count} isomorphism classes, "
        f"{len(rep.classes)} equivalence classes with two or more members",
    ]
    if len(classes) != len(rep.classes):
        text.append(f"{len(classes)} classes pass the filters")
    if rows:
        text += ["", table(headers[:-1], [r[:-1] for r in rows])]
        text += ["", "essential polynomials:"] + [f"  {i}: {c.polynomial.format('x')}" for i, c in enumerate(classes, 1)]
    text += [f"invariant violation: {v}" for v in rep.violations]
    return Rendered(data, headers, rows, "\n".join(text), 0 if rep.ok else 1)


def _theorem_text(rep) -> str:
    out = [table(
        ["size", "tuples", "classes", "non-unique", "|X|", "|Y|"],
        [[s.m, s.raw_count, s.canonical_count, s.non_unique_classes, s.x_count, s.y_count] for s in rep.sizes if s.x_count or s.y_count],
    )]
    out += ["", "alias resolution (instances where the reading is a genuine equivalence):"]
    for fid, readings in rep.alias_summary.items():
        parts = [f"{label} {v['sound']}/{v['sound'] + v['unsound']}" for label, v in readings.items()]
        out.append(f"  {fid}: " + ", ".join(parts))
    if rep.exclusions:
        out += ["", "catalog members outside the hypothesis (not in Y):"] + [f"  {e}" for e in rep.exclusions]
    for d in rep.discrepancies:
        out += ["", f"DISCREPANCY size {d.m}: {d.homeomorph} [{d.kind}]", f"  Q = {d.essential.format('x')}"]
        for p in d.partners:
            out.append(f"  equivalent to {p.homeomorph} (families: {', '.join(p.families)})")
        if d.colorings_agree is not None:
            out.append(f"  colouring counts agree at k = 0..{d.m - 1}: {'yes' if d.colorings_agree else 'no'}")
        if d.sources:
            out.append(f"  catalog mentions: {', '.join(d.sources)}")
        for lp in d.listed_partners:
            iso = ", isomorphic" if lp["isomorphic"] else ""
            out.append(f"  listed partner K4({','.join(map(str, lp['partner']))}){iso}: Q = {lp['partner_essential_polynomial']}")
        if d.kind == "not-equivalent":
            out.append("  no non-isomorphic homeomorph of this size shares its essential polynomial")
    out += [f"invariant violation: {v}" for v in rep.invariant_violations]
    out += ["", f"{rep.classes_checked} equivalence classes checked for the girth and minimum-parameter invariants"]
    verdict = "confirmed: X(m) = Y(m)" if rep.confirmed else f"NOT confirmed: {len(rep.discrepancies)} discrepancies"
    out.append(f"sizes 6..{rep.m_max}: {verdict}")
    return "\n".join(out)


def cmd_verify_theorem(args) -> Rendered:
    rep = verify_theorem(args.max_size, args.workers)
    rows = [[d.m, str(d.homeomorph), d.kind, " ".join(str(p.homeomorph) for p in d.partners), d.essential.format("x")]
            for d in rep.discrepancies]
    code = 0 if rep.confirmed and rep.invariants_hold else 1
    return Rendered(rep.to_dict(), ["size", "tuple", "kind", "partners", "essential_polynomial"], rows, _theorem_text(rep), code)


def cmd_verify_families(args) -> Rendered:
    rep = verify_families(args.family, args.max_param, args.max_size, args.workers)
    rows, text = [], []
    for r in rep.results:
        fam = r.family
        status = "ok" if r.ok else "FAIL"
        if fam.kind == "list":
            bad = sum(not nu for _, _, nu in r.membership)
            rows.append([fam.id, fam.source, "members", len(r.membership), len(r.membership) - bad, status])
        for label, cs in r.checks.items():
            mark = "confirmed" if label in r.confirmed_readings else "rejected"
            rows.append([fam.id, fam.source, f"{label} ({mark})", len(cs), sum(c.ok for c in cs), status])
    text.append(table(["family", "source", "reading", "instances", "passed", "status"], rows))
    for r in rep.results:
        fails = r.failures() if not r.ok else []
        for f in fails:
            text.append(f"FAIL {f}")
    bound = f"size <= {rep.max_size}" + (f", parameters <= {rep.max_param}" if rep.max_param else "")
    text.append(f"\n{bound}: {'all families verified' if rep.ok else 'some families failed'}")
    headers = ["family", "source", "reading", "instances", "passed", "status"]
    return Rendered(rep.to_dict(), headers, rows, "\n".join(text), 0 if rep.ok else 1)


def cmd_identities(args) -> Rendered:
    rows = identity_transcript(args.max_exponent)
    ok = all(r["ok"] for r in rows)
    trows = [[r["kind"], r["statement"], r["lhs"], r["rhs"], "ok" if r["ok"] else "FAIL"] for r in rows]
    text = table(["kind", "statement", "lhs", "rhs", "result"], trows)
    text += f"\n\n{sum(r['ok'] for r in rows)}/{len(rows)} checks pass"
    return Rendered({"ok": ok, "checks": rows}, ["kind", "statement", "lhs", "rhs", "result"], trows, text, 0 if ok else 1)


# -- parser -----------------------------------------------------------------

def _global_options(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--format", choices=("text", "json", "csv"), default=d("text"), help="output format (default text)")
    p.add_argument("--out", metavar="PATH", default=d(None), help="write the report to PATH instead of stdout")
    p.add_argument("--workers", type=_positive, default=d(None),
                   help="worker processes for enumeration (default $K4CHROM_WORKERS or 1)")
    p.add_argument("--oracle-budget", type=_positive, default=d(DEFAULT_ORACLE_BUDGET),
                   help=f"maximum edge count for deletion-contraction (default {DEFAULT_ORACLE_BUDGET})")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="k4chrom", description="Chromatic uniqueness of K4-homeomorphs.")
    _global_options(ap, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)
    sub = ap.add_subparsers(dest="command", required=True, metavar="command")
    tup = f"tuple K4({','.join(PARAM_NAMES)}) in positional order"

    def add(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_, description=help_)
        p.set_defaults(func=fn)
        return p

    add("qpoly", cmd_qpoly, "essential polynomial Q(x)").add_argument("G", help=tup)
    p = add("chrompoly", cmd_chrompoly, "chromatic polynomial P(k)")
    p.add_argument("G", help=tup)
    p.add_argument("--oracle", action="store_true", help="cross-check by deletion-contraction")
    p = add("equiv", cmd_equiv, "chromatic equivalence of two homeomorphs (exit 1 if not equivalent)")
    p.add_argument("G", help=tup)
    p.add_argument("J", help=tup)
    add("girth", cmd_girth, "girth, girth-cycle count and all seven cycle lengths").add_argument("G", help=tup)
    add("canon", cmd_canon, "canonical tuple and orbit size").add_argument("G", help=tup)
    p = add("classes", cmd_classes, "equivalence classes among homeomorphs of one size")
    p.add_argument("--size", type=_positive, required=True, help="number of edges m (>= 6)")
    p.add_argument("--girth", type=_positive, default=None, help="keep classes with a member of this girth")
    p.add_argument("--max-unit-paths", type=int, default=None, help="keep classes with a member having at most this many unit paths")
    p.add_argument("--pattern", default=None, help='keep classes with a member matching e.g. "4,2,1,*,*,*"')
    p = add("verify-theorem", cmd_verify_theorem, "compare non-unique girth-7 graphs with the catalog up to a size")
    p.add_argument("--max-size", type=_positive, default=40, help="largest size m (default 40)")
    p = add("verify-families", cmd_verify_families, "check every cataloged family instance")
    p.add_argument("--family", default=None, help="a single family id")
    p.add_argument("--max-param", type=_positive, default=None, help="upper bound on every free parameter")
    p.add_argument("--max-size", type=_positive, default=40, help="largest member size (default 40)")
    p = add("identities", cmd_identities, "identities in Z[t]/(t^3 + t + 1) used by the classification")
    p.add_argument("--max-exponent", type=_positive, default=200, help="search bound for t^n (default 200)")
    return ap


def run(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:  # argparse usage errors exit 2, --help exits 0
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except (UsageError, CatalogError, SearchBudgetExceeded, OracleBudgetExceeded, ValueError) as exc:
        print(f"k4chrom {args.command}: error: {exc}", file=sys.stderr)
        return 2
    out = render(result, args.format)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(out)
        except OSError as exc:
            print(f"k4chrom: cannot write {args.out}: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(out)
    return result.exit_code


def main(argv: list[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
