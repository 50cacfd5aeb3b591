"""Finite abstract simplicial complexes stored by their facets.

Vertices are the integers ``0 .. m-1``.  A face is a sorted tuple of vertices
(the empty tuple is the empty face).  Internally faces are also handled as
integer bitmasks, which keeps subset tests cheap for the subset-heavy
enumeration done by the Betti engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InvalidInput

VertexSet = tuple[int, ...]


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> VertexSet:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex on vertices ``0..m-1`` given by its inclusion-maximal faces.

    Build instances with :func:`normalize`; the constructor itself trusts its
    arguments.  ``m == 0`` with no facets is the complex ``{∅}`` whose only
    face is the empty set.
    """

    m: int
    facets: tuple[VertexSet, ...]

    @cached_property
    def facet_masks(self) -> tuple[int, ...]:
        return tuple(to_mask(f) for f in self.facets)

    @cached_property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    @cached_property
    def face_masks(self) -> frozenset[int]:
        """Every face (including the empty one) as a bitmask."""
        faces = {0}
        for fm in self.facet_masks:
            if fm in faces:
                continue
            # enumerate submasks of fm
            sub = fm
            while sub:
                faces.add(sub)
                sub = (sub - 1) & fm
        return frozenset(faces)

    @cached_property
    def faces_by_dim(self) -> tuple[tuple[VertexSet, ...], ...]:
        """Nonempty faces grouped by dimension, each group sorted lexicographically."""
        groups: list[list[VertexSet]] = [[] for _ in range(self.dim + 1)]
        for fm in self.face_masks:
            if fm:
                groups[fm.bit_count() - 1].append(from_mask(fm))
        return tuple(tuple(sorted(g)) for g in groups)

    @property
    def vertices(self) -> range:
        return range(self.m)

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def __repr__(self) -> str:
        return f"SimplicialComplex(m={self.m}, facets={list(self.facets)})"


def normalize(raw_facets: Iterable[Iterable[int]], m: int) -> SimplicialComplex:
    """Drop duplicates and non-maximal sets, sort, and validate indices."""
    if m < 0:
        raise InvalidInput(f"vertex count must be nonnegative, got {m}")
    masks = set()
    for raw in raw_facets:
        face = tuple(raw)
        for v in face:
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < m:
                raise InvalidInput(f"vertex {v!r} out of range 0..{m - 1}")
        if len(set(face)) != len(face):
            raise InvalidInput(f"repeated vertex in {face}")
        masks.add(to_mask(face))
    masks.discard(0)
    # larger sets first so that absorption only looks at already-kept sets
    ordered = sorted(masks, key=lambda x: -x.bit_count())
    kept: list[int] = []
    for fm in ordered:
        if not any(fm & k == fm for k in kept):
            kept.append(fm)
    covered = 0
    for fm in kept:
        covered |= fm
    if covered != (1 << m) - 1:
        missing = from_mask(((1 << m) - 1) & ~covered)
        raise InvalidInput(f"vertices {list(missing)} lie in no facet")
    return SimplicialComplex(m, tuple(sorted(from_mask(fm) for fm in kept)))


def is_face(K: SimplicialComplex, s: Iterable[int]) -> bool:
    return to_mask(s) in K.face_masks


def _relabelled(facet_masks: Iterable[int], labels: Sequence[int]) -> SimplicialComplex:
    index = {old: new for new, old in enumerate(labels)}
    facets = set()
    for fm in facet_masks:
        facets.add(tuple(sorted(index[v] for v in from_mask(fm))))
    return normalize(facets, len(labels))


def full_subcomplex(K: SimplicialComplex, W: Iterable[int]) -> tuple[SimplicialComplex, VertexSet]:
    """The full subcomplex K_W, relabelled to ``0..|W|-1``.

    Returns the complex and ``labels`` with ``labels[new] == old``.  Vertices of
    ``W`` are always present (as singleton facets if isolated).
    """
    labels = tuple(sorted(set(W)))
    for v in labels:
        if not 0 <= v < K.m:
            raise InvalidInput(f"vertex {v} out of range")
    wm = to_mask(labels)
    pieces = {fm & wm for fm in K.facet_masks}
    pieces.discard(0)
    return _relabelled(pieces, labels), labels


def link(K: SimplicialComplex, s: Iterable[int]) -> tuple[SimplicialComplex, VertexSet]:
    """``lk(s) = {t : t ∩ s = ∅, t ∪ s ∈ K}`` on the vertices it actually uses."""
    sm = to_mask(s)
    if sm not in K.face_masks:
        raise InvalidInput(f"{tuple(s)} is not a face")
    pieces = [fm & ~sm for fm in K.facet_masks if fm & sm == sm]
    used = 0
    for p in pieces:
        used |= p
    labels = from_mask(used)
    return _relabelled([p for p in pieces if p], labels), labels


def deletion(K: SimplicialComplex, v: int) -> tuple[SimplicialComplex, VertexSet]:
    """Faces of K avoiding ``v``, on the remaining vertices (order preserved)."""
    labels = tuple(u for u in range(K.m) if u != v)
    vm = 1 << v
    pieces = {fm & ~vm for fm in K.facet_masks}
    pieces.discard(0)
    return _relabelled(pieces, labels), labels


def join(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    """Join with the vertices of K2 shifted past those of K1."""
    shift = K1.m
    left = K1.facets or ((),)
    right = K2.facets or ((),)
    facets = [a + tuple(v + shift for v in b) for a in left for b in right]
    return normalize(facets, K1.m + K2.m)


def relabel(K: SimplicialComplex, perm: Sequence[int]) -> SimplicialComplex:
    """Apply the vertex map ``v -> perm[v]`` (a permutation of ``0..m-1``)."""
    if sorted(perm) != list(range(K.m)):
        raise InvalidInput("relabelling must be a permutation of the vertices")
    return normalize([[perm[v] for v in f] for f in K.facets], K.m)


def faces(K: SimplicialComplex, k: int) -> tuple[VertexSet, ...]:
    """All k-dimensional faces in lexicographic order; ``k = -1`` gives ``((),)``."""
    if k == -1:
        return ((),)
    if not 0 <= k <= K.dim:
        return ()
    return K.faces_by_dim[k]


def faces_by_dimension(K: SimplicialComplex) -> tuple[int, ...]:
    return tuple(len(g) for g in K.faces_by_dim)


def euler_characteristic(K: SimplicialComplex) -> int:
    return sum((-1) ** k * c for k, c in enumerate(faces_by_dimension(K)))


def missing_faces(K: SimplicialComplex) -> tuple[VertexSet, ...]:
    """Minimal non-faces, by increasing size then lexicographically.

    A minimal non-face of size s contains a face of size s-1, so candidates of
    size s are grown from faces of size s-1 one vertex at a time, and sizes
    stop at ``dim + 2``.
    """
    face_masks = K.face_masks
    found: list[VertexSet] = []
    for size in range(2, K.dim + 3):
        base = [fm for fm in face_masks if fm.bit_count() == size - 1]
        candidates = set()
        for fm in base:
            for v in range(K.m):
                bit = 1 << v
                if fm & bit:
                    continue
                cand = fm | bit
                if cand in face_masks or cand in candidates:
                    continue
                if all((cand & ~(1 << u)) in face_masks for u in from_mask(cand)):
                    candidates.add(cand)
        found.extend(sorted(from_mask(c) for c in candidates))
    return tuple(found)


def is_pseudomanifold(K: SimplicialComplex) -> bool:
    """Pure, every ridge in exactly two facets, facet-ridge graph connected."""
    if not K.facets or not K.is_pure():
        return False
    ridge_owners: dict[int, list[int]] = {}
    for idx, fm in enumerate(K.facet_masks):
        for v in from_mask(fm):
            ridge_owners.setdefault(fm & ~(1 << v), []).append(idx)
    if any(len(owners) != 2 for owners in ridge_owners.values()):
        return False
    adjacency: dict[int, list[int]] = {i: [] for i in range(len(K.facets))}
    for a, b in ridge_owners.values():
        adjacency[a].append(b)
        adjacency[b].append(a)
    seen = {0}
    stack = [0]
    while stack:
        for nxt in adjacency[stack.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return len(seen) == len(K.facets)


def is_cycle(K: SimplicialComplex) -> bool:
    """True iff K is a single cycle graph (a triangulated circle)."""
    if K.m < 3 or K.dim != 1 or not K.is_pure():
        return False
    return is_pseudomanifold(K)


def is_simplex_boundary(K: SimplicialComplex) -> bool:
    """True iff K is the boundary of the simplex on all of its vertices."""
    return K.m >= 2 and len(K.facets) == K.m and all(len(f) == K.m - 1 for f in K.facets)

