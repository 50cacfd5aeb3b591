"""Recognisers for products of simplices and their vertex cuts.

All decisions are made twice where possible: once from Betti-number
arithmetic (sigma, first-row entries) and once constructively from the
complex itself.  A disagreement between the two raises ``AssertionError``
because it means one of the two computations is wrong.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .betti import first_row_via_missing_faces, sigma
from .complex import (
    SimplicialComplex,
    deletion,
    full_subcomplex,
    is_face,
    is_simplex_boundary,
    join,
    link,
    missing_faces,
    normalize,
)
from .errors import ConePoint, NotReversible, ValidationError
from .polytope import DualPolytope, from_complex


@dataclass(frozen=True)
class FactorDecomposition:
    factors: tuple[SimplicialComplex, ...]
    blocks: tuple[tuple[int, ...], ...]
    simplex_boundary: tuple[bool, ...]

    def rejoin(self) -> SimplicialComplex:
        """Join of the factors, with vertices renumbered block after block."""
        out = SimplicialComplex(0, ())
        for F in self.factors:
            out = join(out, F)
        return out


def frequency(P: DualPolytope) -> list[int]:
    """Number of missing faces containing each vertex."""
    freq = [0] * P.m
    for mf in missing_faces(P.complex):
        for v in mf:
            freq[v] += 1
    return freq


def join_decompose(K: SimplicialComplex) -> FactorDecomposition:
    """Split K into join factors.

    Blocks are the connected components of the hypergraph of missing faces;
    a set is a face of K exactly when its trace on every block is a face.
    """
    mfs = missing_faces(K)
    parent = list(range(K.m))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    touched = set()
    for mf in mfs:
        touched.update(mf)
        root = find(mf[0])
        for v in mf[1:]:
            r = find(v)
            if r != root:
                parent[max(r, root)] = min(r, root)
                root = min(r, root)
    for v in range(K.m):
        if v not in touched:
            raise ConePoint(v)
    groups: dict[int, list[int]] = {}
    for v in range(K.m):
        groups.setdefault(find(v), []).append(v)
    blocks = tuple(sorted(tuple(g) for g in groups.values()))
    factors = tuple(full_subcomplex(K, b)[0] for b in blocks)
    return FactorDecomposition(factors, blocks, tuple(is_simplex_boundary(F) for F in factors))


def is_product_of_simplices(P: DualPolytope) -> Optional[tuple[int, ...]]:
    """Sorted factor dimensions if P is a product of simplices, else None.

    The constructive answer (every join factor is a simplex boundary) is
    checked against ``sigma(P) == m``.
    """
    dec = join_decompose(P.complex)
    dims = tuple(sorted(len(b) - 1 for b in dec.blocks)) if all(dec.simplex_boundary) else None
    if (dims is not None) != (sigma(P) == P.m):
        raise AssertionError(f"sigma test and join decomposition disagree for {P.complex}")
    return dims


def peel_simplex_factor(P: DualPolytope) -> Optional[tuple[int, Optional[DualPolytope]]]:
    """Split off a simplex factor through a frequency-one vertex.

    Returns ``(k, rest)`` with ``P = Δ^k × rest``; ``rest`` is None when P is
    itself the simplex.  The missing face through the vertex must be a whole
    join block; this is checked rather than assumed.
    """
    freq = frequency(P)
    mfs = missing_faces(P.complex)
    for v in range(P.m):
        if freq[v] != 1:
            continue
        h = next(mf for mf in mfs if v in mf)
        if any(freq[u] != 1 for u in h):
            continue
        rest_vertices = [u for u in range(P.m) if u not in h]
        k = len(h) - 1
        if not rest_vertices:
            return k, None
        rest, _ = full_subcomplex(P.complex, rest_vertices)
        try:
            return k, from_complex(rest)
        except ValidationError:
            continue
    return None


def simplex_facets(P: DualPolytope) -> list[int]:
    """Vertices of K whose link is the boundary of an (n-1)-simplex.

    These are the facets of P that are (n-1)-simplices.
    """
    out = []
    for w in range(P.m):
        lk, _ = link(P.complex, (w,))
        if lk.m == P.n and is_simplex_boundary(lk):
            out.append(w)
    return out


def undo_vertex_cut(P: DualPolytope, w: int) -> DualPolytope:
    """Inverse of a vertex cut: collapse the simplex facet w back to a vertex."""
    K = P.complex
    if not 0 <= w < K.m:
        raise NotReversible(f"vertex {w} out of range")
    lk, labels = link(K, (w,))
    if P.n < 2 or lk.m != P.n or not is_simplex_boundary(lk):
        raise NotReversible(f"facet {w} is not an (n-1)-simplex")
    sigma_face = labels
    rest, kept = deletion(K, w)
    new_index = {old: new for new, old in enumerate(kept)}
    sigma_new = tuple(new_index[v] for v in sigma_face)
    if is_face(rest, sigma_new):
        raise NotReversible(f"{list(sigma_face)} already spans a face away from {w}")
    facets = [f for f in K.facets if w not in f]
    facets = [tuple(new_index[v] for v in f) for f in facets] + [sigma_new]
    try:
        return from_complex(normalize(facets, K.m - 1))
    except ValidationError as exc:
        raise NotReversible(str(exc)) from exc


@dataclass(frozen=True)
class VertexCutVerdict:
    value: bool
    numeric: bool
    witness: Optional[dict] = None
    simplex_cut: bool = False
    details: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.value


def is_vertex_cut_of_product(Q: DualPolytope) -> VertexCutVerdict:
    """Is Q a vertex cut of a product of at least two simplices?

    Numeric test: with ``m + 1`` facets, ``sigma(Q) == 3m - n`` and
    ``beta^{-1,2n}(Q) != 0``.  Constructive test: some simplex facet can be
    collapsed to give a product of simplices.  Cutting a single simplex gives
    ``Δ^{n-1} × Δ^1``, which the numeric test does not see; that case is
    reported through ``simplex_cut`` and does not count as a match.
    """
    m = Q.m - 1
    n = Q.n
    row = first_row_via_missing_faces(Q)
    s = sigma(Q)
    numeric = s == 3 * m - n and row.get(n, 0) != 0
    witness = None
    simplex_cut = False
    for w in simplex_facets(Q):
        try:
            P = undo_vertex_cut(Q, w)
        except NotReversible:
            continue
        dims = is_product_of_simplices(P)
        if dims is None:
            continue
        if len(dims) == 1:
            simplex_cut = True
            continue
        witness = {
            "cut_vertex": w,
            "cut_facet_neighbours": list(_link_vertices(Q, w)),
            "product_dims": list(dims),
            "undone_facets": [list(f) for f in P.complex.facets],
        }
        break
    constructive = witness is not None
    if constructive != numeric:
        raise AssertionError(f"numeric ({numeric}) and constructive ({constructive}) tests disagree")
    return VertexCutVerdict(
        numeric,
        numeric,
        witness,
        simplex_cut,
        {"sigma": s, "target_sigma": 3 * m - n, "beta_1_2n": row.get(n, 0)},
    )


def _link_vertices(Q: DualPolytope, w: int) -> tuple[int, ...]:
    _, labels = link(Q.complex, (w,))
    return labels


def classification(P: DualPolytope) -> dict:
    """Everything the CLI reports for ``classify``."""
    dims = is_product_of_simplices(P)
    verdict = is_vertex_cut_of_product(P)
    peeled = peel_simplex_factor(P)
    return {
        "product_of_simplices": list(dims) if dims is not None else None,
        "vertex_cut_of_product": verdict.value,
        "witness": verdict.witness,
        "simplex_cut": verdict.simplex_cut,
        "sigma": verdict.details["sigma"],
        "frequencies": frequency(P),
        "simplex_factor": None if peeled is None else peeled[0],
    }


__all__ = [
    "FactorDecomposition",
    "VertexCutVerdict",
    "classification",
    "frequency",
    "is_product_of_simplices",
    "is_vertex_cut_of_product",
    "join_decompose",
    "peel_simplex_factor",
    "simplex_facets",
    "undo_vertex_cut",
]
