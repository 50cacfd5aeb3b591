"""Combinatorial invariants of simple polytopes through their dual simplicial spheres."""

from .betti import BettiTable, bigraded_betti, sigma, table_tuple
from .classify import is_product_of_simplices, is_vertex_cut_of_product
from .complex import SimplicialComplex, normalize
from .dsl import build, parse
from .isomorphism import are_isomorphic, canonical_form
from .polytope import DualPolytope, from_complex

__version__ = "0.1.0"

__all__ = [
    "BettiTable",
    "DualPolytope",
    "SimplicialComplex",
    "are_isomorphic",
    "bigraded_betti",
    "build",
    "canonical_form",
    "from_complex",
    "is_product_of_simplices",
    "is_vertex_cut_of_product",
    "normalize",
    "parse",
    "sigma",
    "table_tuple",
]
