"""Built-in Betti tuples of small simple 3-polytopes and the harness that checks them.

A row is either a list of explicit constructions or a vertex-cut family
(``base`` cut ``depth`` times, all classes up to isomorphism).  Family members
are named by the DSL expression that builds them, so every reported polytope
can be rebuilt from the command line.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .betti import bigraded_betti, table_tuple
from .constructors import truncate
from .complex import faces
from .dsl import build
from .isomorphism import automorphism_orbits, canonical_form, face_orbits
from .polytope import DualPolytope, format_profile, parse_profile, two_face_profile


@dataclass(frozen=True)
class TableRow:
    label: str
    expected_tuple: tuple[int, ...]
    constructions: tuple[str, ...] = ()
    family: Optional[tuple[str, int]] = None  # (base expression, cut depth)
    expected_count: Optional[int] = None
    expected_profiles: tuple[str, ...] = ()
    verdict: str = ""
    status: str = "constructed"  # or "search-only"
    search_bases: tuple[str, ...] = field(default=())

    @property
    def m(self) -> int:
        return len(self.expected_tuple) + 4


PRISM5 = "product(polygon(5),simplex(1))"
PRISM6 = "product(polygon(6),simplex(1))"
PRISM7 = "product(polygon(7),simplex(1))"
Q_EXPR = f"truncate({PRISM5},[0,5])"

TABLE_1 = (
    TableRow("3^4", (), ("simplex(3)",), expected_profiles=("3^4",), verdict="rigid"),
    TableRow("vc(3^4)", (1,), ("vc(simplex(3))",), expected_profiles=("3^2 4^3",), verdict="rigid"),
    TableRow("vc^2(3^4)", (3, 2), family=("simplex(3)", 2), expected_count=1,
             expected_profiles=("3^2 4^2 5^2",), verdict="rigid"),
    TableRow("4^6", (3, 0), ("cube(3)",), expected_profiles=("4^6",), verdict="rigid"),
    TableRow("vc^3(3^4)", (6, 8, 3), family=("simplex(3)", 3), expected_count=3,
             expected_profiles=("3^2 4^3 6^2", "3^3 5^3 6^1", "3^2 4^2 5^2 6^1"), verdict="nonrigid"),
    TableRow("vc(4^6)", (6, 6, 1), family=("cube(3)", 1), expected_count=1,
             expected_profiles=("3^1 4^3 5^3",), verdict="rigid"),
    TableRow("4^5 5^2", (6, 5, 0), (PRISM5,), expected_profiles=("4^5 5^2",), verdict="rigid"),
    TableRow("vc^4(3^4)", (10, 20, 15, 4), family=("simplex(3)", 4), expected_count=7,
             expected_profiles=("3^2 4^4 7^2", "3^3 4^1 5^2 6^1 7^1", "3^2 4^3 5^1 6^1 7^1",
                                "3^2 4^2 5^3 7^1", "3^4 6^4", "3^3 4^1 5^1 6^3", "3^2 4^2 5^2 6^2"),
             verdict="nonrigid"),
    TableRow("vc^2(4^6)", (10, 18, 11, 2), family=("cube(3)", 2), expected_count=4,
             expected_profiles=("3^2 4^2 5^2 6^2", "3^1 4^4 5^1 6^2", "3^2 4^1 5^4 6^1", "3^2 5^6"),
             verdict="nonrigid"),
    TableRow("vc(4^5 5^2)", (10, 17, 9, 1), family=(PRISM5, 1), expected_count=1,
             expected_profiles=("3^1 4^3 5^3 6^1",), verdict="rigid"),
    TableRow("4^6 6^2", (10, 16, 9, 0), (PRISM6,), expected_profiles=("4^6 6^2",), verdict="rigid"),
    TableRow("4^4 5^4", (10, 16, 5, 0), (Q_EXPR,), expected_profiles=("4^4 5^4",), verdict="rigid"),
)

_SEARCH_BASES = (PRISM5, PRISM6, Q_EXPR, "cube(3)")

TABLE_2 = (
    TableRow("vc^5(3^4)", (15, 40, 45, 24, 5), family=("simplex(3)", 5), expected_count=24,
             expected_profiles=(
                 "3^2 4^5 8^2", "3^3 4^2 5^2 7^1 8^1", "3^3 4^2 5^2 7^1 8^1", "3^2 4^4 5^1 7^1 8^1",
                 "3^4 5^2 6^2 8^1", "3^3 4^2 5^1 6^2 8^1", "3^3 4^2 5^1 6^2 8^1", "3^2 4^4 6^2 8^1",
                 "3^3 4^1 5^3 6^1 8^1", "3^2 4^3 5^2 6^1 8^1", "3^2 4^3 5^2 6^1 8^1", "3^2 4^2 5^4 8^1",
                 "3^4 4^1 6^2 7^2", "3^4 5^2 6^1 7^2", "3^3 4^2 5^1 6^1 7^2", "3^3 4^2 5^1 6^1 7^2",
                 "3^3 4^1 5^3 7^2", "3^2 4^3 5^2 7^2", "3^3 4^2 6^3 7^1", "3^3 4^2 6^3 7^1",
                 "3^3 4^1 5^2 6^2 7^1", "3^2 4^3 5^1 6^2 7^1", "3^2 4^2 5^3 6^1 7^1", "3^2 4^2 5^2 6^3"),
             verdict="nonrigid"),
    TableRow("vc^3(4^6)", (15, 38, 39, 18, 3), family=("cube(3)", 3), expected_count=11,
             expected_profiles=(
                 "3^2 4^3 5^2 7^2", "3^1 4^5 5^1 7^2", "3^3 4^1 5^2 6^2 7^1", "3^2 4^3 5^1 6^2 7^1",
                 "3^2 4^3 5^1 6^2 7^1", "3^2 4^2 5^3 6^1 7^1", "3^1 4^4 5^2 6^1 7^1", "3^3 5^3 6^3",
                 "3^3 5^3 6^3", "3^2 4^2 5^2 6^3", "3^2 4^1 5^4 6^2"),
             verdict="nonrigid"),
    TableRow("vc^2(4^5 5^2)", (15, 37, 36, 15, 2), family=(PRISM5, 2), expected_count=7,
             expected_profiles=(
                 "3^2 4^2 5^3 6^1 7^1", "3^1 4^4 5^2 6^1 7^1", "3^2 4^1 5^5 7^1", "3^2 4^3 6^4",
                 "3^2 4^2 5^2 6^3", "3^1 4^4 5^1 6^3", "3^2 4^1 5^4 6^2"),
             verdict="nonrigid"),
    TableRow("vc(4^6 6^2)", (15, 36, 35, 14, 1), family=(PRISM6, 1), expected_count=1,
             expected_profiles=("3^1 4^4 5^2 6^1 7^1",), verdict="rigid"),
    TableRow("vc(4^4 5^4)", (15, 36, 31, 10, 1), family=(Q_EXPR, 1), expected_count=2,
             expected_profiles=("3^1 4^3 5^3 6^2", "3^1 4^2 5^5 6^1"), verdict="nonrigid"),
    TableRow("4^7 7^2", (15, 35, 35, 14, 0), (PRISM7,), expected_profiles=("4^7 7^2",), verdict="rigid"),
    TableRow("4^6 # 4^6", (15, 36, 33, 12, 1), ("consum(cube(3),0,cube(3),0)",),
             expected_profiles=("4^6 6^3",), verdict="rigid"),
    TableRow("4^5 5^2 6^2", (15, 35, 29, 8, 0), expected_profiles=("4^5 5^2 6^2",), verdict="rigid",
             status="search-only", search_bases=_SEARCH_BASES),
    TableRow("4^4 5^4 6^1", (15, 35, 27, 6, 0), expected_profiles=("4^4 5^4 6^1",), verdict="rigid",
             status="search-only", search_bases=_SEARCH_BASES),
    TableRow("4^3 5^6", (15, 35, 24, 3, 0), expected_profiles=("4^3 5^6",), verdict="rigid",
             status="search-only", search_bases=_SEARCH_BASES),
)

TABLES = {1: TABLE_1, 2: TABLE_2}


def vertex_cut_family_exprs(base: str, depth: int) -> list[tuple[str, DualPolytope]]:
    """All ``depth``-fold vertex cuts of ``base`` up to isomorphism, with DSL names.

    Each class is named by the first expression reaching it, cutting one
    representative facet per automorphism orbit at every step.  The list is
    ordered by canonical form.
    """
    P = build(base)
    level = {canonical_form(P.complex).facets: (base, P)}
    for _ in range(depth):
        nxt: dict = {}
        for expr, Q in level.values():
            _, orbits = automorphism_orbits(Q.complex)
            for orbit in orbits:
                idx = Q.complex.facets.index(orbit[0])
                R = truncate(Q, orbit[0])
                nxt.setdefault(canonical_form(R.complex).facets, (f"vc({expr},{idx})", R))
        level = nxt
    return [level[k] for k in sorted(level)]


def _profile_key(text: str) -> str:
    return format_profile(parse_profile(text))


def check_row(row: TableRow, cap: Optional[int] = None) -> dict:
    """Build every polytope of the row and compare tuples, profiles and class counts."""
    result: dict = {"label": row.label, "status": row.status, "expected_tuple": list(row.expected_tuple)}
    if row.status == "search-only":
        result["passed"] = None
        return result
    if row.family is not None:
        members = vertex_cut_family_exprs(*row.family)
    else:
        members = [(e, build(e)) for e in row.constructions]
    problems = []
    polys = []
    for expr, P in members:
        tup = table_tuple(bigraded_betti(P, cap))
        prof = format_profile(two_face_profile(P))
        polys.append({"construction": expr, "tuple": list(tup), "profile": prof})
        if tup != row.expected_tuple:
            problems.append(f"{expr}: tuple {tup} != {row.expected_tuple}")
    if row.expected_count is not None and len(members) != row.expected_count:
        problems.append(f"{len(members)} isomorphism classes, expected {row.expected_count}")
    if row.expected_profiles:
        got = Counter(p["profile"] for p in polys)
        want = Counter(_profile_key(p) for p in row.expected_profiles)
        if got != want:
            problems.append(f"profiles {sorted(got.elements())} != {sorted(want.elements())}")
    result.update({"polytopes": polys, "classes": len(members), "passed": not problems, "problems": problems})
    return result


def search_profile(
    target: dict[int, int],
    bases: Iterable[str],
    depth: int = 1,
    codims: Sequence[int] = (0, 1),
) -> list[tuple[str, DualPolytope]]:
    """Truncations of the bases (vertices and edges, up to ``depth`` steps) with the target profile.

    Results are deduplicated by canonical form and named by DSL expression.
    """
    if depth < 0 or depth > 2:
        raise ValueError("search depth must be 0, 1 or 2")
    want = dict(sorted(target.items()))
    frontier: dict = {}
    for b in bases:
        P = build(b)
        frontier.setdefault(canonical_form(P.complex).facets, (b, P))
    seen = dict(frontier)
    found: dict = {}

    def check(key, item):
        if two_face_profile(item[1]) == want:
            found.setdefault(key, item)

    for key, item in frontier.items():
        check(key, item)
    for _ in range(depth):
        nxt: dict = {}
        for expr, P in frontier.values():
            for c in codims:
                size = P.n - c
                if size < 2:
                    continue
                for orbit in face_orbits(P.complex, faces(P.complex, size - 1)):
                    face = orbit[0]
                    R = truncate(P, face)
                    key = canonical_form(R.complex).facets
                    if key in seen:
                        continue
                    item = (f"truncate({expr},[{','.join(map(str, face))}])", R)
                    seen[key] = nxt[key] = item
                    check(key, item)
        frontier = nxt
    return [found[k] for k in sorted(found)]


def search_row(row: TableRow, depth: int = 1, cap: Optional[int] = None) -> dict:
    """Best-effort identification of a search-only row."""
    target = parse_profile(row.expected_profiles[0])
    hits = search_profile(target, row.search_bases, depth)
    cands = []
    for expr, P in hits:
        tup = table_tuple(bigraded_betti(P, cap))
        cands.append({"construction": expr, "tuple": list(tup), "tuple_matches": tup == row.expected_tuple})
    return {"label": row.label, "candidates": cands}


def _check_indexed(args):
    return check_row(*args)


def run_tables(which: Sequence[int] = (1, 2), jobs: int = 1, cap: Optional[int] = None, search: bool = False) -> dict:
    """Check every built-in row; output order is the row order regardless of ``jobs``."""
    rows = [(t, r) for t in which for r in TABLES[t]]
    args = [(r, cap) for _, r in rows]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check_indexed, args))
    else:
        results = [check_row(*a) for a in args]
    for (t, r), res in zip(rows, results):
        res["table"] = t
        if search and r.status == "search-only":
            res["search"] = search_row(r, cap=cap)["candidates"]
    checked = [r for r in results if r["passed"] is not None]
    return {
        "rows": results,
        "matched": sum(1 for r in checked if r["passed"]),
        "checked": len(checked),
        "search_only": len(results) - len(checked),
        "all_passed": all(r["passed"] for r in checked),
    }


def render_tables(report: dict) -> str:
    lines = []
    for r in report["rows"]:
        tup = "(" + ",".join(map(str, r["expected_tuple"])) + ")"
        if r["passed"] is None:
            lines.append(f"[table {r['table']}] {r['label']:<16} {tup:<22} search-only")
            for c in r.get("search", []):
                mark = "tuple ok" if c["tuple_matches"] else "tuple differs"
                lines.append(f"    candidate {c['construction']}  {mark}")
            continue
        mark = "PASS" if r["passed"] else "FAIL"
        lines.append(f"[table {r['table']}] {r['label']:<16} {tup:<22} {mark}  ({r['classes']} classes)")
        for p in r.get("problems", []):
            lines.append(f"    {p}")
    lines.append(f"{report['matched']}/{report['checked']} rows matched, {report['search_only']} search-only")
    return "\n".join(lines)
