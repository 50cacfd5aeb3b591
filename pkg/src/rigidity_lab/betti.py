"""Bigraded Betti numbers of simple polytopes via Hochster's formula.

``beta^{-i,2j}(P)`` is the sum, over all j-element vertex sets W of the dual
complex K, of ``dim H̃_{j-i-1}(K_W; Q)``.  The formula is usually stated with
the facet unions ``P_W``; those deformation-retract onto their nerve, which is
the full subcomplex K_W, so the dimensions agree.

Tables are keyed by ``(i, 2j)``, matching the written form ``beta^{-i,2j}``.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

from .complex import missing_faces
from .errors import CapExceeded, WrongDimension
from .homology import reduced_homology_from_masks
from .polytope import DualPolytope

DEFAULT_CAP = 20


def default_cap() -> int:
    value = os.environ.get("RIGIDITY_CAP")
    return int(value) if value else DEFAULT_CAP


@dataclass(frozen=True)
class BettiTable:
    m: int
    n: int
    entries: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {tuple(k): int(v) for k, v in self.entries.items() if v}
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    def __getitem__(self, key: tuple[int, int]) -> int:
        """``table[i, 2j]``."""
        return self.entries.get(tuple(key), 0)

    def row(self, i: int) -> dict[int, int]:
        """``{j: beta^{-i,2j}}`` for the nonzero entries of row i."""
        return {d // 2: v for (ii, d), v in self.entries.items() if ii == i}

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return (self.m, self.n, self.entries) == (other.m, other.n, other.entries)

    def __hash__(self):
        return hash((self.m, self.n, tuple(self.entries.items())))

    def render(self) -> str:
        """Rows i, columns 2j, zeros shown as dots."""
        if not self.entries:
            return "(empty)"
        degs = sorted({d for _, d in self.entries})
        rows = sorted({i for i, _ in self.entries})
        width = max(len(str(v)) for v in self.entries.values())
        width = max(width, *(len(str(d)) for d in degs))
        head = "i\\2j " + " ".join(f"{d:>{width}}" for d in degs)
        lines = [head]
        for i in rows:
            cells = [str(self[i, d]) if self[i, d] else "." for d in degs]
            lines.append(f"{i:>4} " + " ".join(f"{c:>{width}}" for c in cells))
        return "\n".join(lines)


def bigraded_betti(P: DualPolytope, cap: Optional[int] = None) -> BettiTable:
    """Hochster's formula over all vertex subsets of the dual complex.

    Refuses (``CapExceeded``) when ``m`` exceeds the cap, since the work grows
    like ``2^m``.
    """
    K = P.complex
    m = K.m
    limit = default_cap() if cap is None else cap
    if m > limit:
        raise CapExceeded(m, limit)
    face_masks = K.face_masks
    totals: Counter[tuple[int, int]] = Counter({(0, 0): 1})  # W = ∅: dim H̃_{-1}(∅) = 1

    # Depth-first over W in increasing-vertex order; the faces of K_{W+v} are
    # those of K_W plus the faces of K that use v and otherwise lie in W.
    def visit(W: int, groups: list[list[int]], start: int) -> None:
        for v in range(start, m):
            bit = 1 << v
            grown = [list(g) for g in groups]
            grown[0].append(bit)
            for k, group in enumerate(groups):
                for f in group:
                    if f | bit in face_masks:
                        if k + 1 == len(grown):
                            grown.append([])
                        grown[k + 1].append(f | bit)
            W2 = W | bit
            if W2 not in face_masks:  # a face spans a simplex: nothing to add
                j = W2.bit_count()
                for k, d in reduced_homology_from_masks(grown).items():
                    if d:
                        totals[(j - 1 - k, 2 * j)] += d
            visit(W2, grown, v + 1)

    visit(0, [[]], 0)
    return BettiTable(m, P.n, totals)


def sigma(source) -> int:
    """``sum_j j * beta^{-1,2j}``; accepts a BettiTable or a DualPolytope."""
    if isinstance(source, DualPolytope):
        row = first_row_via_missing_faces(source)
    else:
        row = source.row(1)
    return sum(j * v for j, v in row.items() if j >= 2)


def first_row_via_missing_faces(P: DualPolytope) -> dict[int, int]:
    """``{j: number of missing faces with j vertices}`` = the i = 1 row."""
    return dict(sorted(Counter(len(mf) for mf in missing_faces(P.complex)).items()))


def kunneth_convolve(B1: BettiTable, B2: BettiTable) -> BettiTable:
    out: Counter[tuple[int, int]] = Counter()
    for (i1, d1), v1 in B1.entries.items():
        for (i2, d2), v2 in B2.entries.items():
            out[(i1 + i2, d1 + d2)] += v1 * v2
    return BettiTable(B1.m + B2.m, B1.n + B2.n, out)


def point_table() -> BettiTable:
    """Unit for :func:`kunneth_convolve`."""
    return BettiTable(0, 0, {(0, 0): 1})


def check_duality(B: BettiTable) -> bool:
    """``beta^{-i,2j} == beta^{-(m-n)+i, 2(m-j)}`` for every entry."""
    c = B.m - B.n
    return all(B[c - i, 2 * B.m - d] == v for (i, d), v in B.entries.items())


def table_tuple(B: BettiTable) -> tuple[int, ...]:
    """``(beta^{-1,4}, beta^{-2,6}, ..., beta^{-(m-4),2(m-3)})`` for 3-polytopes."""
    if B.n != 3:
        raise WrongDimension(f"Betti tuples are defined for n = 3, got n = {B.n}")
    return tuple(B[j - 1, 2 * j] for j in range(2, B.m - 2))


def moment_angle_betti(B: BettiTable) -> list[int]:
    """Betti numbers of the moment-angle complex: ``b_k = sum_{2j-i=k} beta^{-i,2j}``."""
    top = max((d - i for i, d in B.entries), default=0)
    out = [0] * (top + 1)
    for (i, d), v in B.entries.items():
        out[d - i] += v
    return out


def entries_list(B: BettiTable) -> list[list[int]]:
    return [[i, d, v] for (i, d), v in B.entries.items()]


def from_entries(m: int, n: int, rows: Iterable[Iterable[int]]) -> BettiTable:
    return BettiTable(m, n, {(i, d): v for i, d, v in rows})
