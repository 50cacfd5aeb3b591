"""JSON documents and text renderings shared by the CLI and the notebooks.

Every document is built from plain dicts and lists with sorted keys where
order is not already meaningful, so that output is byte-for-byte stable.
"""

from __future__ import annotations

import json
import os
from typing import Optional, Union

from . import betti as B
from .classify import classification
from .complex import SimplicialComplex, normalize
from .constructors import NAMED, named
from .dsl import build
from .errors import InvalidInput, WrongDimension
from .isomorphism import are_isomorphic
from .polytope import (
    DualPolytope,
    f_vector,
    format_profile,
    from_complex,
    h_vector,
    is_flag,
    is_triangle_free,
    two_face_profile,
)


def complex_to_json(K: SimplicialComplex, name: Optional[str] = None) -> dict:
    doc: dict = {}
    if name is not None:
        doc["name"] = name
    doc["vertices"] = K.m
    doc["facets"] = [list(f) for f in K.facets]
    return doc


def complex_from_json(doc: dict) -> SimplicialComplex:
    try:
        m = int(doc["vertices"])
        facets = doc["facets"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"complex JSON needs 'vertices' and 'facets': {exc}") from None
    return normalize(facets, m)


def load(source: Union[str, dict]) -> tuple[DualPolytope, str]:
    """Resolve a DSL expression, a named polytope or a complex JSON file.

    Returns the polytope and a display name.
    """
    if isinstance(source, dict):
        return from_complex(complex_from_json(source)), source.get("name", "<json>")
    text = source.strip()
    if text in NAMED:
        return named(text), text
    if text.endswith(".json") or os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            doc = json.load(fh)
        return from_complex(complex_from_json(doc)), doc.get("name", text)
    return build(text), text


def invariants_to_json(P: DualPolytope) -> dict:
    try:
        profile = two_face_profile(P)
        prof_doc: Optional[dict] = {str(k): v for k, v in profile.items()}
        triangle_free: Optional[bool] = is_triangle_free(P)
    except WrongDimension:
        prof_doc, triangle_free = None, None
    return {
        "m": P.m,
        "n": P.n,
        "f": list(f_vector(P)),
        "h": list(h_vector(P)),
        "profile": prof_doc,
        "triangle_free": triangle_free,
        "flag": is_flag(P),
    }


def betti_to_json(table: B.BettiTable) -> dict:
    try:
        tup: Optional[list] = list(B.table_tuple(table))
    except WrongDimension:
        tup = None
    return {
        "m": table.m,
        "n": table.n,
        "entries": B.entries_list(table),
        "tuple": tup,
        "sigma": B.sigma(table),
        "moment_angle": B.moment_angle_betti(table),
    }


def betti_from_json(doc: dict) -> B.BettiTable:
    return B.from_entries(doc["m"], doc["n"], doc["entries"])


def compare(P1: DualPolytope, P2: DualPolytope, cap: Optional[int] = None) -> dict:
    """Betti equality, tuple equality and isomorphism of two polytopes."""
    t1 = B.bigraded_betti(P1, cap)
    t2 = B.bigraded_betti(P2, cap)
    same_betti = t1 == t2
    iso = are_isomorphic(P1.complex, P2.complex)
    tup1 = betti_to_json(t1)["tuple"]
    tup2 = betti_to_json(t2)["tuple"]
    return {
        "betti_equal": same_betti,
        "tuple_equal": tup1 is not None and tup1 == tup2,
        "isomorphic": iso is not None,
        "bijection": list(iso) if iso is not None else None,
        "equal_invariants_non_isomorphic": same_betti and iso is None,
        "tuples": [tup1, tup2],
    }


def classify_to_json(P: DualPolytope) -> dict:
    return classification(P)


def dumps(doc) -> str:
    return json.dumps(doc)


# text renderings

def render_complex(doc: dict) -> str:
    head = f"{doc.get('name', 'complex')}: {doc['vertices']} vertices, {len(doc['facets'])} facets"
    return "\n".join([head] + ["  " + " ".join(map(str, f)) for f in doc["facets"]])


def render_invariants(doc: dict) -> str:
    prof = doc["profile"]
    lines = [
        f"m = {doc['m']}, n = {doc['n']}",
        f"f = {tuple(doc['f'])}",
        f"h = {tuple(doc['h'])}",
        f"profile = {format_profile({int(k): v for k, v in prof.items()}) if prof is not None else 'n/a'}",
        f"triangle-free = {doc['triangle_free']}",
        f"flag = {doc['flag']}",
    ]
    return "\n".join(lines)


def render_betti(doc: dict) -> str:
    table = betti_from_json(doc)
    lines = [f"m = {doc['m']}, n = {doc['n']}, sigma = {doc['sigma']}"]
    if doc["tuple"] is not None:
        lines.append("(" + ",".join(map(str, doc["tuple"])) + ")")
    lines.append(table.render())
    lines.append("moment-angle: " + " ".join(map(str, doc["moment_angle"])))
    return "\n".join(lines)


def render_classification(doc: dict) -> str:
    prod = doc["product_of_simplices"]
    lines = [
        f"product of simplices: {'x'.join(f'D{k}' for k in prod) if prod else 'no'}",
        f"vertex cut of a product: {'yes' if doc['vertex_cut_of_product'] else 'no'}",
        f"sigma = {doc['sigma']}",
        f"frequencies = {doc['frequencies']}",
    ]
    if doc["witness"]:
        w = doc["witness"]
        lines.append(f"witness: collapse facet {w['cut_vertex']} -> product of simplices {w['product_dims']}")
    if doc.get("simplex_cut"):
        lines.append("note: this is also a vertex cut of a simplex")
    return "\n".join(lines)


def render_compare(doc: dict) -> str:
    lines = [
        f"Betti tables equal: {doc['betti_equal']}",
        f"tuples: {doc['tuples'][0]} vs {doc['tuples'][1]}",
        f"isomorphic: {doc['isomorphic']}",
    ]
    if doc["equal_invariants_non_isomorphic"]:
        lines.append("*** equal Betti tables but NOT isomorphic ***")
    return "\n".join(lines)
