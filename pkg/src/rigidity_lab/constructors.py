"""Builders for simple polytopes, all working on the dual simplicial complex.

Products become joins, cutting off a face becomes stellar subdivision of the
dual simplex, and a connected sum at vertices removes one facet from each
complex and glues along the boundaries.  New vertices always take the next free
index, so every construction is reproducible bit for bit.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Optional, Sequence

from .complex import (
    SimplicialComplex,
    euler_characteristic,
    faces,
    faces_by_dimension,
    is_face,
    is_pseudomanifold,
    join,
    normalize,
    to_mask,
)
from .errors import InvalidInput, UnknownName
from .isomorphism import automorphism_orbits, canonical_form, face_orbits
from .polytope import DualPolytope, from_complex


def simplex_dual(n: int) -> DualPolytope:
    """The n-simplex: its dual is the boundary of an n-simplex on n+1 vertices."""
    if n < 1:
        raise InvalidInput(f"simplex dimension must be >= 1, got {n}")
    return from_complex(normalize(combinations(range(n + 1), n), n + 1))


def polygon_dual(k: int) -> DualPolytope:
    if k < 3:
        raise InvalidInput(f"a polygon needs at least 3 sides, got {k}")
    return from_complex(normalize([(i, (i + 1) % k) for i in range(k)], k))


def product(P1: DualPolytope, P2: DualPolytope) -> DualPolytope:
    return from_complex(join(P1.complex, P2.complex))


def cube_dual(n: int) -> DualPolytope:
    """I^n as the n-fold product of intervals (the n-dimensional cross-polytope)."""
    if n < 1:
        raise InvalidInput(f"cube dimension must be >= 1, got {n}")
    P = simplex_dual(1)
    for _ in range(n - 1):
        P = product(P, simplex_dual(1))
    return P


def truncate(P: DualPolytope, face: Sequence[int]) -> DualPolytope:
    """Cut off the face of P dual to ``face`` (stellar subdivision of that simplex).

    A facet of the complex is a vertex of P (a vertex cut); an (n-2)-simplex is
    an edge of P.  The new vertex gets index ``m``.
    """
    K = P.complex
    sigma = tuple(sorted(set(face)))
    if len(sigma) < 2:
        raise InvalidInput("can only truncate along a face with at least two vertices")
    if not is_face(K, sigma):
        raise InvalidInput(f"{list(sigma)} is not a face of the dual complex")
    new = K.m
    smask = to_mask(sigma)
    out = []
    for f, fm in zip(K.facets, K.facet_masks):
        if fm & smask != smask:
            out.append(f)
            continue
        for v in sigma:
            out.append(tuple(u for u in f if u != v) + (new,))
    return from_complex(normalize(out, K.m + 1))


def vertex_cut(P: DualPolytope, facet_index: Optional[int] = None):
    """Cut vertex ``facet_index`` of P (an index into the sorted facet list of K).

    Without an index, one cut per automorphism orbit of vertices of P is
    returned as a list, in orbit order.
    """
    K = P.complex
    if P.n < 2:
        raise InvalidInput("vertex cuts need polytopes of dimension at least 2")
    if facet_index is None:
        _, orbits = automorphism_orbits(K)
        return [truncate(P, orbit[0]) for orbit in orbits]
    if not 0 <= facet_index < len(K.facets):
        raise InvalidInput(f"facet index {facet_index} out of range 0..{len(K.facets) - 1}")
    return truncate(P, K.facets[facet_index])


def vertex_cut_family(P: DualPolytope, depth: int) -> list[DualPolytope]:
    """All k-fold vertex cuts of P up to isomorphism, ordered by canonical form."""
    level = {canonical_form(P.complex).facets: P}
    for _ in range(depth):
        nxt: dict = {}
        for Q in level.values():
            for R in vertex_cut(Q):
                nxt.setdefault(canonical_form(R.complex).facets, R)
        level = nxt
    return [level[k] for k in sorted(level)]


def truncation_family(P: DualPolytope, codims: Sequence[int] = (0, 1)) -> list[DualPolytope]:
    """One truncation per orbit of faces of P of the given codimensions.

    Codimension 0 means vertices of P, 1 means edges; the dual faces have
    ``n - codim`` vertices.
    """
    out = []
    for c in codims:
        size = P.n - c
        if size < 2:
            continue
        for orbit in face_orbits(P.complex, faces(P.complex, size - 1)):
            out.append(truncate(P, orbit[0]))
    return out


def connected_sum(
    P1: DualPolytope,
    f1: int,
    P2: DualPolytope,
    f2: int,
    gluing: Optional[Sequence[int]] = None,
) -> DualPolytope:
    """Connected sum of P1 and P2 at the vertices dual to facets ``f1``, ``f2``.

    ``gluing[i]`` is the position in facet f2 (sorted) glued to position i of
    facet f1; the default is the identity.  P1 keeps its labels, the remaining
    vertices of P2 follow in order.
    """
    if P1.n != P2.n:
        raise InvalidInput(f"dimension mismatch: {P1.n} vs {P2.n}")
    if P1.n < 2:
        raise InvalidInput("connected sum needs polytopes of dimension at least 2")
    K1, K2 = P1.complex, P2.complex
    for K, idx in ((K1, f1), (K2, f2)):
        if not 0 <= idx < len(K.facets):
            raise InvalidInput(f"facet index {idx} out of range")
    a, b = K1.facets[f1], K2.facets[f2]
    n = P1.n
    order = tuple(range(n)) if gluing is None else tuple(gluing)
    if sorted(order) != list(range(n)):
        raise InvalidInput(f"gluing must be a permutation of 0..{n - 1}")
    relabel = {b[order[i]]: a[i] for i in range(n)}
    nxt = K1.m
    for v in range(K2.m):
        if v not in relabel:
            relabel[v] = nxt
            nxt += 1
    facets = [f for f in K1.facets if f != a]
    facets += [tuple(relabel[v] for v in f) for f in K2.facets if f != b]
    return from_complex(normalize(facets, nxt))


def connected_sum_gluings(P1: DualPolytope, f1: int, P2: DualPolytope, f2: int) -> list[DualPolytope]:
    """Connected sums over every gluing bijection, deduplicated up to isomorphism."""
    seen = {}
    for perm in permutations(range(P1.n)):
        Q = connected_sum(P1, f1, P2, f2, perm)
        seen.setdefault(canonical_form(Q.complex).facets, Q)
    return [seen[k] for k in sorted(seen)]


# Boundary of the icosahedron: 0 is the top, 1-5 the upper ring, 6-10 the
# lower ring, 11 the bottom.
_ICOSAHEDRON = (
    (0, 1, 2), (0, 1, 5), (0, 2, 3), (0, 3, 4), (0, 4, 5),
    (1, 2, 6), (1, 5, 10), (1, 6, 10), (2, 3, 7), (2, 6, 7),
    (3, 4, 8), (3, 7, 8), (4, 5, 9), (4, 8, 9), (5, 9, 10),
    (6, 7, 11), (6, 10, 11), (7, 8, 11), (8, 9, 11), (9, 10, 11),
)


def _validated_icosahedron() -> SimplicialComplex:
    K = normalize(_ICOSAHEDRON, 12)
    degrees = [sum(v in e for e in faces(K, 1)) for v in range(K.m)]
    if (faces_by_dimension(K) != (12, 30, 20) or euler_characteristic(K) != 2
            or not is_pseudomanifold(K) or set(degrees) != {5}):
        raise AssertionError("built-in icosahedron table is corrupt")
    return K


NAMED = {"dodecahedron": _validated_icosahedron}


def named(name: str) -> DualPolytope:
    try:
        builder = NAMED[name]
    except KeyError:
        raise UnknownName(name) from None
    return from_complex(builder())
