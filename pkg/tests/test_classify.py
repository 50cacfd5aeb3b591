import pytest

from rigidity_lab.betti import sigma
from rigidity_lab.classify import (
    classification,
    frequency,
    is_product_of_simplices,
    is_vertex_cut_of_product,
    join_decompose,
    peel_simplex_factor,
    simplex_facets,
    undo_vertex_cut,
)
from rigidity_lab.complex import deletion, is_face, join, normalize
from rigidity_lab.constructors import product, simplex_dual, truncate
from rigidity_lab.dsl import build
from rigidity_lab.errors import ConePoint, NotReversible
from rigidity_lab.isomorphism import are_isomorphic

TRIANGLE = normalize([(0, 1), (1, 2), (0, 2)], 3)
S0 = normalize([(0,), (1,)], 2)
OCTAHEDRON = normalize([(a, b, c) for a in (0, 3) for b in (1, 4) for c in (2, 5)], 6)
PENTAGON = normalize([(i, (i + 1) % 5) for i in range(5)], 5)


def iso(A, B):
    return are_isomorphic(A, B) is not None


def test_frequency_examples():
    assert frequency(build("cube(3)")) == [1] * 6
    assert frequency(build("simplex(3)")) == [1] * 4
    vc = build("vc(cube(3),0)")
    freq = frequency(vc)
    cut = vc.complex.facets[0]
    assert all(freq[v] >= 2 for v in cut)


def test_join_decompose_examples():
    dec = join_decompose(OCTAHEDRON)
    assert len(dec.factors) == 3 and all(F == S0 for F in dec.factors)
    dec = join_decompose(join(TRIANGLE, S0))
    assert sorted(F.m for F in dec.factors) == [2, 3]
    assert all(dec.simplex_boundary)
    dec = join_decompose(PENTAGON)
    assert len(dec.factors) == 1 and dec.simplex_boundary == (False,)


def test_join_decompose_rejects_cone_points():
    cone = normalize([(0, 1, 3), (1, 2, 3), (0, 2, 3)], 4)
    with pytest.raises(ConePoint):
        join_decompose(cone)


def test_product_of_simplices_examples():
    assert is_product_of_simplices(build("cube(3)")) == (1, 1, 1)
    prism = product(simplex_dual(2), simplex_dual(1))
    assert is_product_of_simplices(prism) == (1, 2)
    assert sigma(prism) == 5 == prism.m
    pent = build("polygon(5)")
    assert is_product_of_simplices(pent) is None and sigma(pent) == 10


def test_peel_examples():
    k, rest = peel_simplex_factor(build("cube(3)"))
    assert k == 1 and iso(rest.complex, build("cube(2)").complex)
    prism = build("product(simplex(2),simplex(1))")
    k, rest = peel_simplex_factor(prism)
    assert k == 2 and rest.complex == S0
    assert peel_simplex_factor(build("vc(cube(3))")) is None
    assert peel_simplex_factor(build("simplex(3)")) == (3, None)


def test_peel_can_split_off_the_triangle():
    prism = build("product(simplex(1),simplex(2))")  # S0 on 0,1 and the triangle on 2,3,4
    k, rest = peel_simplex_factor(prism)
    assert k == 1 and iso(rest.complex, TRIANGLE)


def test_simplex_facets_examples():
    vc = build("vc(cube(3))")
    assert simplex_facets(vc) == [6]
    assert simplex_facets(build("cube(3)")) == []
    assert simplex_facets(build("simplex(3)")) == [0, 1, 2, 3]


def test_undo_vertex_cut_examples():
    vc = build("vc(cube(3))")
    assert iso(undo_vertex_cut(vc, 6).complex, build("cube(3)").complex)
    tv = build("vc(simplex(3))")
    undone = []
    for w in simplex_facets(tv):
        try:
            undone.append(undo_vertex_cut(tv, w))
        except NotReversible:
            pass
    assert any(iso(P.complex, build("simplex(3)").complex) for P in undone)
    for w in range(6):
        with pytest.raises(NotReversible):
            undo_vertex_cut(build("cube(3)"), w)


def test_vertex_cut_of_product_examples():
    verdict = is_vertex_cut_of_product(build("vc(cube(3))"))
    assert verdict.value and verdict.numeric
    assert verdict.details == {"sigma": 15, "target_sigma": 15, "beta_1_2n": 1}
    assert verdict.witness["product_dims"] == [1, 1, 1]
    twice = is_vertex_cut_of_product(build("vc(vc(cube(3)))"))
    assert not twice.value and twice.details["sigma"] == 26 and twice.details["target_sigma"] == 18


def test_pentagon_is_a_cut_square():
    # sigma = 10 = 3*4 - 2 and beta^{-1,4} = 5; collapsing any side leaves I x I
    verdict = is_vertex_cut_of_product(build("polygon(5)"))
    assert verdict.value
    assert verdict.witness["product_dims"] == [1, 1]


def test_cut_simplex_is_flagged_not_matched():
    verdict = is_vertex_cut_of_product(build("vc(simplex(3))"))
    assert not verdict.value and verdict.simplex_cut


def test_classification_fields():
    doc = classification(build("vc(cube(3))"))
    assert set(doc) >= {"product_of_simplices", "vertex_cut_of_product", "witness", "sigma", "frequencies"}
    assert doc["vertex_cut_of_product"] is True and doc["product_of_simplices"] is None
    assert classification(build("dodecahedron"))["vertex_cut_of_product"] is False


# properties on the construction corpus

def test_join_decompose_reconstructs(corpus):
    for expr, P in corpus:
        dec = join_decompose(P.complex)
        assert sorted(v for b in dec.blocks for v in b) == list(range(P.m))
        assert iso(dec.rejoin(), P.complex), expr


def test_sigma_equals_m_iff_product_of_simplices(corpus):
    hits = 0
    for expr, P in corpus:
        dims = is_product_of_simplices(P)
        assert (dims is not None) == (sigma(P) == P.m), expr
        hits += dims is not None
    assert hits >= 10


def test_undo_after_truncating_a_facet(corpus):
    checked = 0
    for expr, P in corpus:
        if P.n < 2:
            continue
        for facet in P.complex.facets[:3]:
            Q = truncate(P, facet)
            w = Q.m - 1
            rest, _ = deletion(Q.complex, w)
            if is_face(rest, facet):
                with pytest.raises(NotReversible):
                    undo_vertex_cut(Q, w)
                continue
            assert iso(undo_vertex_cut(Q, w).complex, P.complex), expr
            checked += 1
    assert checked >= 100


def test_numeric_and_constructive_branches_agree(corpus):
    for expr, P in corpus:
        if P.m <= 12:
            is_vertex_cut_of_product(P)  # raises if the two branches disagree
        if P.n >= 2 and P.m + 1 <= 12:
            Q = truncate(P, P.complex.facets[0])
            verdict = is_vertex_cut_of_product(Q)
            if is_product_of_simplices(P) is not None and len(is_product_of_simplices(P)) >= 2:
                assert verdict.value, expr
