"""Reduced simplicial homology over the rationals with exact integer arithmetic.

Homology rather than cohomology is computed; over a field the dimensions agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .complex import SimplicialComplex, faces


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntegerMatrix":
        data = tuple(tuple(int(x) for x in r) for r in rows)
        ncols = cols if cols is not None else (len(data[0]) if data else 0)
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged matrix")
        return cls(len(data), ncols, data)

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        right = [[(c, x) for c, x in enumerate(row) if x] for row in other.entries]
        out = []
        for r in self.entries:
            acc = [0] * other.cols
            for k, a in enumerate(r):
                if a:
                    for c, b in right[k]:
                        acc[c] += a * b
            out.append(tuple(acc))
        return IntegerMatrix(self.rows, other.cols, tuple(out))

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)


def boundary_matrix(K: SimplicialComplex, k: int) -> IntegerMatrix:
    """Matrix of the boundary map from k-faces to (k-1)-faces.

    Rows are indexed by (k-1)-faces and columns by k-faces, both in
    lexicographic order.  For ``k == 0`` this is the augmentation onto the
    empty face: a single row of ones.
    """
    cols = faces(K, k)
    rows = faces(K, k - 1)
    index = {f: i for i, f in enumerate(rows)}
    data = [[0] * len(cols) for _ in rows]
    for j, face in enumerate(cols):
        for pos in range(len(face)):
            data[index[face[:pos] + face[pos + 1:]]][j] = -1 if pos % 2 else 1
    return IntegerMatrix(len(rows), len(cols), tuple(tuple(r) for r in data))


def _rank_rows(rows: list[list[int]], ncols: int) -> int:
    # Bareiss elimination, column by column, first nonzero row as pivot.
    rank = 0
    prev = 1
    nrows = len(rows)
    for c in range(ncols):
        pivot = next((r for r in range(rank, nrows) if rows[r][c]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p_row = rows[rank]
        p = p_row[c]
        for r in range(rank + 1, nrows):
            row = rows[r]
            a = row[c]
            if a:
                for j in range(c + 1, ncols):
                    row[j] = (p * row[j] - a * p_row[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    if row[j]:
                        row[j] = (p * row[j]) // prev
            row[c] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_exact(M: IntegerMatrix) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    return _rank_rows([list(r) for r in M.entries], M.cols)


def reduced_homology_dims(K: SimplicialComplex) -> dict[int, int]:
    """``{k: dim H̃_k(K; Q)}`` for ``k = -1 .. dim K``.

    The complex with no vertices has ``H̃_{-1} = Q``; every other complex has
    ``H̃_{-1} = 0``.
    """
    if K.m == 0:
        return {-1: 1}
    top = K.dim
    counts = {k: len(faces(K, k)) for k in range(-1, top + 1)}
    ranks = {k: rank_exact(boundary_matrix(K, k)) for k in range(0, top + 1)}
    ranks[top + 1] = 0
    return {k: counts[k] - ranks.get(k, 0) - ranks[k + 1] for k in range(-1, top + 1)}


def rank_sparse(rows: Sequence[dict[int, int]]) -> int:
    """Rank over Q of a sparse integer matrix given as ``{column: value}`` rows.

    Exact and fraction-free like :func:`rank_exact`, but it pivots on a unit
    entry whenever one exists, so boundary matrices never leave small integers;
    otherwise rows are combined as ``p*row - a*pivot`` and divided by their gcd.
    """
    rows = [dict(r) for r in rows]
    by_col: dict[int, set[int]] = {}
    for r, row in enumerate(rows):
        for c in row:
            by_col.setdefault(c, set()).add(r)
    rank = 0
    for c in sorted(by_col):
        holders = by_col[c]
        if not holders:
            continue
        pr = min(holders, key=lambda r: (abs(rows[r][c]) != 1, len(rows[r]), r))
        prow = rows[pr]
        p = prow[c]
        for cc in prow:
            by_col[cc].discard(pr)
        for r in list(holders):
            row = rows[r]
            a = row[c]
            if p == 1 or p == -1:
                scale, factor = 1, a * p
            else:
                scale, factor = p, a
            for cc in row:
                row[cc] *= scale
            for cc, val in prow.items():
                new = row.get(cc, 0) - factor * val
                if new:
                    if cc not in row:
                        by_col.setdefault(cc, set()).add(r)
                    row[cc] = new
                elif cc in row:
                    del row[cc]
                    by_col[cc].discard(r)
            if scale != 1 and row:
                g = gcd(*row.values())
                if g > 1:
                    for cc in row:
                        row[cc] //= g
        rank += 1
    return rank


def _boundary_rows(cells: list[int], lower: list[int]) -> list[dict[int, int]]:
    # one sparse row per cell: the transpose of the boundary matrix, same rank
    index = {f: i for i, f in enumerate(lower)}
    rows = []
    for cell in cells:
        row = {}
        sign = 1
        rest = cell
        while rest:
            low = rest & -rest
            row[index[cell ^ low]] = sign
            sign = -sign
            rest ^= low
        rows.append(row)
    return rows


def reduced_homology_from_masks(groups: Sequence[list[int]]) -> dict[int, int]:
    """Same as :func:`reduced_homology_dims` for a complex given as face bitmasks.

    ``groups[k]`` lists the k-dimensional faces (sorted ascending by mask); the
    list may end with empty groups.  Used by the Hochster engine, which would
    otherwise spend most of its time relabelling full subcomplexes.
    """
    top = len(groups) - 1
    while top >= 0 and not groups[top]:
        top -= 1
    if top < 0:
        return {-1: 1}
    ranks = [1] + [0] * (top + 1)  # ranks[k] = rank of ∂_k; ∂_0 is augmentation
    for k in range(1, top + 1):
        ranks[k] = rank_sparse(_boundary_rows(groups[k], groups[k - 1]))
    dims = {-1: 0}
    for k in range(0, top + 1):
        dims[k] = len(groups[k]) - ranks[k] - ranks[k + 1]
    return dims
