"""Combinatorial equivalence of simplicial complexes.

Everything runs on one engine: colour refinement of the vertices (by facet
and missing-face incidence) followed by individualise-and-refine
backtracking.  Isomorphism search stops at the first consistent leaf.  The
canonical form is the lexicographically least relabelled facet list over the
search tree, where sibling branches related by an automorphism are explored
only once.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .complex import SimplicialComplex, VertexSet, missing_faces, normalize
from .errors import CapExceeded

DEFAULT_CAP = 16

Colouring = tuple[int, ...]


class _Incidence:
    """Per-vertex facet and missing-face lists used by refinement."""

    def __init__(self, K: SimplicialComplex):
        self.K = K
        self.m = K.m
        self.facet_set = frozenset(K.facets)
        self.by_vertex_facets: list[list[VertexSet]] = [[] for _ in range(K.m)]
        for f in K.facets:
            for v in f:
                self.by_vertex_facets[v].append(f)
        self.by_vertex_missing: list[list[VertexSet]] = [[] for _ in range(K.m)]
        for mf in missing_faces(K):
            for v in mf:
                self.by_vertex_missing[v].append(mf)


def _signature(inc: _Incidence, colours: Colouring, v: int):
    fac = sorted(tuple(sorted(colours[u] for u in f if u != v)) for f in inc.by_vertex_facets[v])
    mis = sorted(tuple(sorted(colours[u] for u in f if u != v)) for f in inc.by_vertex_missing[v])
    return (colours[v], tuple(fac), tuple(mis))


def _refine(inc: _Incidence, colours: Colouring) -> tuple[Colouring, tuple]:
    """Refine to a stable colouring; colours are ranks of sorted signatures.

    Returns the colouring and a trace that isomorphic inputs reproduce exactly.
    """
    trace = []
    ncolours = len(set(colours))
    while True:
        sigs = [_signature(inc, colours, v) for v in range(inc.m)]
        ordered = sorted(set(sigs))
        rank = {s: i for i, s in enumerate(ordered)}
        colours = tuple(rank[s] for s in sigs)
        trace.append(tuple(sorted(Counter(sigs).items())))
        if len(ordered) == ncolours:
            return colours, tuple(trace)
        ncolours = len(ordered)


def _individualise(colours: Colouring, v: int) -> Colouring:
    keyed = [(c, 0 if u == v else 1) for u, c in enumerate(colours)]
    ordered = sorted(set(keyed))
    rank = {k: i for i, k in enumerate(ordered)}
    return tuple(rank[k] for k in keyed)


def _target_cell(colours: Colouring) -> Optional[list[int]]:
    sizes = Counter(colours)
    for c in sorted(sizes):
        if sizes[c] > 1:
            return [v for v, cv in enumerate(colours) if cv == c]
    return None


def _search_iso(a: _Incidence, ca: Colouring, b: _Incidence, cb: Colouring) -> Optional[tuple[int, ...]]:
    ca, ta = _refine(a, ca)
    cb, tb = _refine(b, cb)
    if ta != tb:
        return None
    cell = _target_cell(ca)
    if cell is None:
        where = {c: w for w, c in enumerate(cb)}
        mapping = tuple(where[c] for c in ca)
        image = {tuple(sorted(mapping[v] for v in f)) for f in a.K.facets}
        return mapping if image == b.facet_set else None
    v = cell[0]
    colour = ca[v]
    for w in (u for u, c in enumerate(cb) if c == colour):
        found = _search_iso(a, _individualise(ca, v), b, _individualise(cb, w))
        if found is not None:
            return found
    return None


def _initial(K: SimplicialComplex, colours: Optional[Sequence[int]]) -> Colouring:
    return tuple(colours) if colours is not None else (0,) * K.m


def are_isomorphic(
    K1: SimplicialComplex,
    K2: SimplicialComplex,
    colours1: Optional[Sequence[int]] = None,
    colours2: Optional[Sequence[int]] = None,
) -> Optional[tuple[int, ...]]:
    """Return a vertex bijection ``v -> mapping[v]`` carrying K1 onto K2, or None.

    Optional vertex colourings must be preserved by the bijection.
    """
    if K1.m != K2.m or len(K1.facets) != len(K2.facets):
        return None
    if sorted(map(len, K1.facets)) != sorted(map(len, K2.facets)):
        return None
    if K1.m == 0:
        return ()
    return _search_iso(_Incidence(K1), _initial(K1, colours1), _Incidence(K2), _initial(K2, colours2))


@dataclass(frozen=True)
class CanonicalForm:
    facets: tuple[VertexSet, ...]
    perm: tuple[int, ...]  # perm[v] is the canonical label of vertex v

    def complex(self) -> SimplicialComplex:
        return SimplicialComplex(len(self.perm), self.facets)


def _check_cap(K: SimplicialComplex, cap: Optional[int]) -> None:
    limit = DEFAULT_CAP if cap is None else cap
    if K.m > limit:
        raise CapExceeded(K.m, limit)


def _leaf_form(K: SimplicialComplex, labels: Colouring) -> tuple[VertexSet, ...]:
    return tuple(sorted(tuple(sorted(labels[v] for v in f)) for f in K.facets))


def canonical_form(K: SimplicialComplex, cap: Optional[int] = None) -> CanonicalForm:
    """Relabelling-invariant facet list; equal forms iff isomorphic complexes."""
    _check_cap(K, cap)
    inc = _Incidence(K)
    best: list = [None, None]

    def explore(colours: Colouring) -> None:
        colours, _ = _refine(inc, colours)
        cell = _target_cell(colours)
        if cell is None:
            form = _leaf_form(K, colours)
            if best[0] is None or form < best[0]:
                best[0], best[1] = form, colours
            return
        explored: list[Colouring] = []
        for v in cell:
            child = _individualise(colours, v)
            # skip children equivalent to an explored sibling under the stabiliser
            if any(_search_iso(inc, child, inc, prev) is not None for prev in explored):
                continue
            explored.append(child)
            explore(child)

    explore((0,) * K.m)
    return CanonicalForm(best[0], best[1])


def automorphism_orbits(
    K: SimplicialComplex, cap: Optional[int] = None
) -> tuple[list[list[int]], list[list[VertexSet]]]:
    """Vertex orbits and facet orbits of the full automorphism group."""
    _check_cap(K, cap)
    vertex_orbits = _orbits_of(K, [(v,) for v in range(K.m)])
    facet_orbits = _orbits_of(K, list(K.facets))
    return [[f[0] for f in orb] for orb in vertex_orbits], facet_orbits


def face_orbits(K: SimplicialComplex, faces: Iterable[VertexSet], cap: Optional[int] = None) -> list[list[VertexSet]]:
    """Partition ``faces`` into orbits under the automorphism group of K."""
    _check_cap(K, cap)
    return _orbits_of(K, [tuple(f) for f in faces])


def _orbits_of(K: SimplicialComplex, items: list[VertexSet]) -> list[list[VertexSet]]:
    inc = _Incidence(K)
    item_set = set(items)
    parent = {f: f for f in items}

    def find(f):
        while parent[f] != f:
            parent[f] = parent[parent[f]]
            f = parent[f]
        return f

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            parent[rb] = ra

    def marked(f: VertexSet) -> Colouring:
        fs = set(f)
        return tuple(1 if v in fs else 0 for v in range(K.m))

    refined = {f: _refine(inc, marked(f)) for f in items}
    for i, f in enumerate(items):
        for g in items[i + 1:]:
            if find(f) == find(g) or refined[f][1] != refined[g][1]:
                continue
            gamma = _search_iso(inc, marked(f), inc, marked(g))
            if gamma is None:
                continue
            # every item mapped into the list by gamma shares its orbit
            for h in items:
                img = tuple(sorted(gamma[v] for v in h))
                if img in item_set:
                    union(h, img)
    groups: dict[VertexSet, list[VertexSet]] = {}
    for f in items:
        groups.setdefault(find(f), []).append(f)
    return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])


def dedupe(complexes: Iterable[SimplicialComplex], cap: Optional[int] = None) -> list[SimplicialComplex]:
    """Keep one complex per isomorphism class, in first-seen order."""
    seen: set = set()
    out = []
    for K in complexes:
        key = canonical_form(K, cap).facets
        if key not in seen:
            seen.add(key)
            out.append(K)
    return out


def canonical_complex(K: SimplicialComplex, cap: Optional[int] = None) -> SimplicialComplex:
    form = canonical_form(K, cap)
    return normalize(form.facets, K.m)
