"""Acceptance criteria, each checked at exact integer equality.

Every test records a one-line PASS/FAIL verdict; the lines are printed as
they happen (visible with ``-s``) and again in the terminal summary.
"""

from itertools import combinations

from rigidity_lab.betti import (
    bigraded_betti,
    check_duality,
    first_row_via_missing_faces,
    kunneth_convolve,
    sigma,
    table_tuple,
)
from rigidity_lab.classify import is_product_of_simplices, is_vertex_cut_of_product, undo_vertex_cut
from rigidity_lab.complex import deletion, is_face, is_simplex_boundary
from rigidity_lab.constructors import product, simplex_dual, truncate, vertex_cut
from rigidity_lab.dsl import build
from rigidity_lab.homology import boundary_matrix
from rigidity_lab.isomorphism import are_isomorphic, automorphism_orbits
from rigidity_lab.polytope import h_vector, two_face_profile
from rigidity_lab.tables import vertex_cut_family_exprs

VERDICTS: dict[int, str] = {}

P5I = "product(polygon(5),simplex(1))"
P6I = "product(polygon(6),simplex(1))"
P7I = "product(polygon(7),simplex(1))"
Q = f"truncate({P5I},[0,5])"  # cut the edge where pentagon side 0 meets the top


def record(number: int, title: str, failures: list[str]) -> None:
    status = "PASS" if not failures else "FAIL"
    line = f"{status} criterion {number}: {title}"
    if failures:
        line += " | " + "; ".join(failures[:5])
    VERDICTS[number] = line
    print(line)
    assert not failures, line


def tuple_of(P):
    return table_tuple(bigraded_betti(P))


def check_tuples(rows, failures):
    for label, source, want in rows:
        members = vertex_cut_family_exprs(*source) if isinstance(source, tuple) else [(source, build(source))]
        for expr, P in members:
            got = tuple_of(P)
            if got != want:
                failures.append(f"{label} {expr}: {got} != {want}")


def test_criterion_1_table_one_tuples():
    rows = [
        ("3^4", "simplex(3)", ()),
        ("vc(3^4)", "vc(simplex(3))", (1,)),
        ("vc^2(3^4)", ("simplex(3)", 2), (3, 2)),
        ("4^6", "cube(3)", (3, 0)),
        ("vc^3(3^4)", ("simplex(3)", 3), (6, 8, 3)),
        ("vc(4^6)", "vc(cube(3))", (6, 6, 1)),
        ("P5 x I", P5I, (6, 5, 0)),
        ("vc^4(3^4)", ("simplex(3)", 4), (10, 20, 15, 4)),
        ("vc^2(4^6)", ("cube(3)", 2), (10, 18, 11, 2)),
        ("vc(P5 x I)", f"vc({P5I})", (10, 17, 9, 1)),
        ("P6 x I", P6I, (10, 16, 9, 0)),
        ("Q", Q, (10, 16, 5, 0)),
    ]
    failures: list[str] = []
    check_tuples(rows, failures)
    record(1, "Table 1 tuples for all 12 rows", failures)


def test_criterion_2_table_two_constructible_rows():
    rows = [
        ("P7 x I", P7I, (15, 35, 35, 14, 0)),
        ("vc(P6 x I)", f"vc({P6I})", (15, 36, 35, 14, 1)),
        ("vc(Q)", (Q, 1), (15, 36, 31, 10, 1)),
        ("vc^2(P5 x I)", (P5I, 2), (15, 37, 36, 15, 2)),
        ("vc^3(4^6)", ("cube(3)", 3), (15, 38, 39, 18, 3)),
        ("vc^5(3^4)", ("simplex(3)", 5), (15, 40, 45, 24, 5)),
        ("4^6 # 4^6", "consum(cube(3),0,cube(3),0)", (15, 36, 33, 12, 1)),
    ]
    failures: list[str] = []
    check_tuples(rows, failures)
    record(2, "Table 2 tuples for the 7 constructible rows", failures)


def test_criterion_3_isomorphism_class_counts():
    expected = [
        (("simplex(3)", 3), 3),
        (("simplex(3)", 4), 7),
        (("cube(3)", 2), 4),
        (("cube(3)", 3), 11),
        ((P5I, 2), 7),
        (("simplex(3)", 5), 24),
    ]
    failures = []
    for (base, depth), want in expected:
        members = vertex_cut_family_exprs(base, depth)
        if len(members) != want:
            failures.append(f"vc^{depth}({base}): {len(members)} classes, expected {want}")
        # the classes really are pairwise non-isomorphic
        for (e1, A), (e2, B) in combinations(members, 2):
            if are_isomorphic(A.complex, B.complex) is not None:
                failures.append(f"{e1} ~ {e2}")
    record(3, "vertex-cut family class counts 3, 7, 4, 11, 7, 24", failures)


def test_criterion_4_equal_betti_non_isomorphic():
    members = vertex_cut_family_exprs("simplex(3)", 3)
    failures = []
    if len(members) != 3:
        failures.append(f"{len(members)} classes")
    tables = [bigraded_betti(P) for _, P in members]
    for (i, (e1, A)), (j, (e2, B)) in combinations(enumerate(members), 2):
        if tables[i] != tables[j]:
            failures.append(f"Betti tables of {e1} and {e2} differ")
        if are_isomorphic(A.complex, B.complex) is not None:
            failures.append(f"{e1} and {e2} are isomorphic")
    record(4, "three triple cuts of the tetrahedron: equal Betti tables, pairwise non-isomorphic", failures)


def _cube_power(k: int) -> str:
    return f"cube({k})"


def test_criterion_5_closed_forms():
    failures = []

    def expect(label, expr, key, want):
        got = bigraded_betti(build(expr))[key]
        if got != want:
            failures.append(f"{label} {key}: {got} != {want}")

    for n in (3, 4, 5):
        expr = f"product(polygon(6),{_cube_power(n - 2)})"
        expect(f"P6 x I^{n - 2}", expr, (1, 4), n + 7)
        expect(f"P6 x I^{n - 2}", expr, (2, 8), (n * n + 13 * n - 30) // 2)
        expr = Q if n == 3 else f"product({Q},{_cube_power(n - 3)})"
        expect(f"Q x I^{n - 3}", expr, (1, 4), n + 7)
        expect(f"Q x I^{n - 3}", expr, (2, 8), (n * n + 13 * n - 38) // 2)
        expect(f"I^{n - 2}", _cube_power(n - 2), (2, 8), (n - 2) * (n - 3) // 2)
    for n in (4, 5):
        base = "product(polygon(5),polygon(5))"
        expr = base if n == 4 else f"product({base},{_cube_power(n - 4)})"
        expect(f"P5 x P5 x I^{n - 4}", expr, (1, 4), n + 6)
        expect(f"P5 x P5 x I^{n - 4}", expr, (2, 8), (n * n + 11 * n - 10) // 2)
    record(5, "closed forms for beta^{-1,4} and beta^{-2,8} at n = 3, 4, 5", failures)


def test_criterion_6_spot_values():
    failures = []
    spots = [
        ("polygon(5)", (2, 8), 0),
        ("polygon(6)", (2, 8), 0),
        (Q, (2, 8), 5),
        ("product(polygon(5),polygon(5))", (2, 8), 25),
    ]
    spots += [(_cube_power(n), (1, 4), n) for n in range(1, 6)]
    for expr, key, want in spots:
        got = bigraded_betti(build(expr))[key]
        if got != want:
            failures.append(f"{expr} {key}: {got} != {want}")
    first_rows = [("polygon(5)", {2: 5}), ("polygon(6)", {2: 9}), (Q, {2: 10})]
    first_rows += [(_cube_power(k), {2: k}) for k in range(1, 6)]
    for expr, want in first_rows:
        got = bigraded_betti(build(expr)).row(1)
        if got != want:
            failures.append(f"first row of {expr}: {got} != {want}")
    record(6, "spot values and first-row tables of P5, P6, Q, I^k", failures)


def test_criterion_7_dodecahedron():
    D = build("dodecahedron")
    B = bigraded_betti(D)
    failures = []
    if B[2, 8] != 0:
        failures.append(f"beta^(-2,8) = {B[2, 8]}")
    if two_face_profile(D) != {5: 12}:
        failures.append(f"profile {two_face_profile(D)}")
    if D.m != 12:
        failures.append(f"m = {D.m}")
    if not check_duality(B):
        failures.append("duality fails")
    record(7, "dodecahedron: beta^(-2,8) = 0, profile 5^12, m = 12, duality", failures)


def test_criterion_8_property_suites(corpus, corpus_betti):
    failures: list[str] = []
    counts: dict[str, int] = {}

    def tally(name, ok, what):
        counts[name] = counts.get(name, 0) + 1
        if not ok:
            failures.append(f"{name}: {what}")

    for expr, P in corpus:
        B = corpus_betti[expr]
        tally("duality", check_duality(B), expr)
        tally("first row", B.row(1) == first_row_via_missing_faces(P), expr)
        tally("sigma = m iff product", (is_product_of_simplices(P) is not None) == (sigma(B) == P.m), expr)
        h = h_vector(P)
        tally("h palindromic", h == h[::-1], expr)
        K = P.complex
        tally("boundary squared", all(
            (boundary_matrix(K, k - 1) @ boundary_matrix(K, k)).is_zero() for k in range(1, K.dim + 1)), expr)

    # products of two small corpus members, m <= 12
    small = [(e, P) for e, P in corpus if P.m <= 7]
    for (e1, P1), (e2, P2) in combinations(small, 2):
        if P1.m + P2.m > 12 or counts.get("kunneth", 0) >= 110:
            continue
        R = product(P1, P2)
        want = kunneth_convolve(corpus_betti[e1], corpus_betti[e2])
        tally("kunneth", bigraded_betti(R) == want, f"{e1} x {e2}")
        tally("sigma = m iff product", (is_product_of_simplices(R) is not None) == (sigma(R) == R.m), f"{e1} x {e2}")

    # vertex cuts: one per facet orbit, and facet truncations undone again
    for expr, P in corpus:
        if P.n < 2 or P.m + 1 > 12:
            continue
        m, n = P.m, P.n
        orbit_facets = [orb[0] for orb in automorphism_orbits(P.complex)[1]][:2]
        for facet in orbit_facets:
            Qp = truncate(P, facet)
            w = Qp.m - 1
            rest, _ = deletion(Qp.complex, w)
            if not is_face(rest, facet):
                undone = undo_vertex_cut(Qp, w)
                tally("undo truncate", are_isomorphic(undone.complex, P.complex) is not None, expr)
            if is_simplex_boundary(P.complex):
                continue
            before = corpus_betti[expr].row(1)
            after = bigraded_betti(Qp).row(1)
            ok = all(after.get(j, 0) - before.get(j, 0) == (m - n) * (j == 2) + (j == n) for j in range(2, m + 2))
            ok = ok and sigma(Qp) - sigma(P) == 2 * m - n
            tally("vertex-cut deltas", ok, f"{expr} at {facet}")

    short = {k: v for k, v in counts.items() if v < 100}
    for name, v in short.items():
        failures.append(f"{name}: only {v} instances")
    summary = ", ".join(f"{k} {v}" for k, v in sorted(counts.items()))
    record(8, f"property suites ({summary})", failures)


def _products_of_simplices(max_m: int):
    """Dimension tuples (d_1 <= d_2 <= ...) of at least two factors with sum(d_i + 1) <= max_m."""
    out = []

    def grow(prefix, low, used):
        if len(prefix) >= 2:
            out.append(tuple(prefix))
        for d in range(low, max_m - used):
            if used + d + 1 > max_m:
                break
            grow(prefix + [d], d, used + d + 1)

    grow([], 1, 0)
    return out


def test_criterion_9_vertex_cut_of_product():
    failures = []
    positives = 0
    for dims in _products_of_simplices(11):
        P = simplex_dual(dims[0])
        for d in dims[1:]:
            P = product(P, simplex_dual(d))
        Qp = vertex_cut(P, 0)
        m, n = P.m, P.n
        B = bigraded_betti(Qp)
        numeric = sigma(B) == 3 * m - n and B[1, 2 * n] != 0
        verdict = is_vertex_cut_of_product(Qp)
        witness_ok = verdict.witness is not None and sorted(verdict.witness["product_dims"]) == sorted(dims)
        if not (numeric and verdict.value and witness_ok):
            failures.append(f"vc of {dims}: numeric {numeric}, verdict {verdict.value}, witness {verdict.witness}")
        positives += 1

    negatives = [
        "cube(3)", "simplex(3)", "product(simplex(2),simplex(2))", "vc(simplex(3))", "vc(simplex(4))",
        "vc(vc(cube(3)))", "vc(vc(vc(simplex(3))))", "polygon(6)", "polygon(7)", P5I, P6I, Q,
        "dodecahedron", "consum(cube(3),0,cube(3),0)", f"vc({P5I})", "truncate(cube(3),[0,2])",
        "product(polygon(5),polygon(5))", "vc(vc(product(simplex(2),simplex(2))))",
        "product(vc(cube(3)),simplex(1))", "vc(product(polygon(5),simplex(1)),3)",
    ]
    for expr in negatives:
        if is_vertex_cut_of_product(build(expr)).value:
            failures.append(f"{expr} reported as a vertex cut of a product")
    if positives < 10:
        failures.append(f"only {positives} positive instances")
    record(9, f"vertex cuts of products: {positives} positives, {len(negatives)} non-examples", failures)
