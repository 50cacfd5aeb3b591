"""Simple polytopes represented by the simplicial complex dual to their boundary.

Vertex ``i`` of the complex is facet ``F_i`` of the polytope, and a set of
vertices is a face of the complex exactly when the corresponding facets meet.
Validation stops at purity, the pseudomanifold condition and connectivity;
nothing checks that the complex is actually polytopal.  The guarantees hold for
complexes built with :mod:`rigidity_lab.constructors`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb

from .complex import (
    SimplicialComplex,
    faces,
    faces_by_dimension,
    is_cycle,
    is_pseudomanifold,
    link,
    missing_faces,
)
from .errors import NonCycleLink, NotPseudomanifold, NotPure, TooFewVertices, WrongDimension


@dataclass(frozen=True)
class DualPolytope:
    complex: SimplicialComplex
    n: int

    @property
    def m(self) -> int:
        return self.complex.m

    def __repr__(self) -> str:
        return f"DualPolytope(n={self.n}, m={self.m})"


def from_complex(K: SimplicialComplex) -> DualPolytope:
    if not K.facets:
        raise NotPure("complex has no facets")
    if not K.is_pure():
        raise NotPure("facets have different sizes")
    if not is_pseudomanifold(K):
        raise NotPseudomanifold("some ridge is not in exactly two facets, or the complex is disconnected")
    n = K.dim + 1
    if K.m < n + 1:
        raise TooFewVertices(f"{K.m} vertices cannot bound a {n}-polytope")
    return DualPolytope(K, n)


def f_vector(P: DualPolytope) -> tuple[int, ...]:
    """``f_i`` = number of i-faces of the dual complex (codimension i+1 faces of P)."""
    return faces_by_dimension(P.complex)


def h_vector(P: DualPolytope) -> tuple[int, ...]:
    """Expand ``sum_i h_i t^(n-i) = sum_j f_{j-1} (t-1)^(n-j)`` with ``f_{-1} = 1``."""
    n = P.n
    f = (1,) + f_vector(P)
    h = [0] * (n + 1)
    for j in range(n + 1):
        # f_{j-1} (t-1)^(n-j) contributes to t^(n-i) for i >= j
        for i in range(j, n + 1):
            h[i] += f[j] * comb(n - j, i - j) * (-1) ** (i - j)
    return tuple(h)


def f_from_h(h: tuple[int, ...]) -> tuple[int, ...]:
    """Invert :func:`h_vector` via ``t -> t + 1``; returns ``(f_0, ..., f_{n-1})``."""
    n = len(h) - 1
    # coefficient of t^(n-j) in sum_i h_i (t+1)^(n-i) is f_{j-1}
    f = [sum(h[i] * comb(n - i, j - i) for i in range(j + 1)) for j in range(n + 1)]
    return tuple(f[1:])


def two_face_profile(P: DualPolytope) -> dict[int, int]:
    """Count 2-faces of P by number of edges.

    A 2-face is dual to an (n-3)-face τ of the complex, and its gonality is the
    length of the cycle ``lk(τ)``.  For n = 3 these are the facet types
    ``3^a 4^b 5^c ...``.
    """
    if P.n < 3:
        raise WrongDimension(f"2-faces of a {P.n}-polytope are not proper faces")
    profile: Counter[int] = Counter()
    for tau in faces(P.complex, P.n - 3):
        lk, _ = link(P.complex, tau)
        if not is_cycle(lk):
            raise NonCycleLink(f"link of {tau} is not a cycle")
        profile[lk.m] += 1
    return dict(sorted(profile.items()))


def format_profile(profile: dict[int, int]) -> str:
    return " ".join(f"{k}^{v}" for k, v in sorted(profile.items()) if v)


def parse_profile(text: str) -> dict[int, int]:
    """Parse ``"4:5,5:2,6:2"`` or ``"4^5 5^2 6^2"``."""
    out: dict[int, int] = {}
    for part in text.replace(",", " ").split():
        sep = ":" if ":" in part else "^"
        k, _, v = part.partition(sep)
        out[int(k)] = out.get(int(k), 0) + int(v)
    return dict(sorted(out.items()))


def is_triangle_free(P: DualPolytope) -> bool:
    return two_face_profile(P).get(3, 0) == 0


def is_flag(P: DualPolytope) -> bool:
    return all(len(mf) == 2 for mf in missing_faces(P.complex))
