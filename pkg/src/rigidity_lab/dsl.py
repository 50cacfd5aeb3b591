"""A small construction language for polytopes.

Grammar (whitespace is insignificant)::

    expr := "simplex(" int ")" | "polygon(" int ")" | "cube(" int ")"
          | "dodecahedron"
          | "product(" expr "," expr ")"
          | "vc(" expr ["," int] ")"
          | "truncate(" expr "," "[" int {"," int} "]" ")"
          | "consum(" expr "," int "," expr "," int ["," "[" int {"," int} "]"] ")"

``vc`` without an index cuts the vertex dual to the first facet of the first
automorphism orbit; :func:`rigidity_lab.constructors.vertex_cut_family` gives
all of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from . import constructors as C
from .errors import ParseError
from .polytope import DualPolytope


@dataclass(frozen=True)
class Simplex:
    n: int

    def __str__(self):
        return f"simplex({self.n})"


@dataclass(frozen=True)
class Polygon:
    k: int

    def __str__(self):
        return f"polygon({self.k})"


@dataclass(frozen=True)
class Cube:
    n: int

    def __str__(self):
        return f"cube({self.n})"


@dataclass(frozen=True)
class Named:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Product:
    left: "Expr"
    right: "Expr"

    def __str__(self):
        return f"product({self.left},{self.right})"


@dataclass(frozen=True)
class VertexCut:
    base: "Expr"
    facet_index: Optional[int] = None

    def __str__(self):
        tail = "" if self.facet_index is None else f",{self.facet_index}"
        return f"vc({self.base}{tail})"


@dataclass(frozen=True)
class Truncate:
    base: "Expr"
    face: tuple[int, ...]

    def __str__(self):
        return f"truncate({self.base},[{','.join(map(str, self.face))}])"


@dataclass(frozen=True)
class ConnectedSum:
    left: "Expr"
    facet1: int
    right: "Expr"
    facet2: int
    gluing: Optional[tuple[int, ...]] = None

    def __str__(self):
        tail = "" if self.gluing is None else f",[{','.join(map(str, self.gluing))}]"
        return f"consum({self.left},{self.facet1},{self.right},{self.facet2}{tail})"


Expr = Union[Simplex, Polygon, Cube, Named, Product, VertexCut, Truncate, ConnectedSum]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise ParseError(f"expected {ch!r}, found {found!r}", self.pos)
        self.pos += 1

    def word(self) -> str:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected a name", start)
        return self.text[start:self.pos]

    def integer(self) -> int:
        self.skip()
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        try:
            return int(self.text[start:self.pos])
        except ValueError:
            raise ParseError("expected an integer", start) from None

    def int_list(self) -> tuple[int, ...]:
        self.expect("[")
        items = [self.integer()]
        while self.peek() == ",":
            self.pos += 1
            items.append(self.integer())
        self.expect("]")
        return tuple(items)

    def expr(self) -> Expr:
        start = self.pos
        head = self.word()
        if head in C.NAMED:
            return Named(head)
        if head not in {"simplex", "polygon", "cube", "product", "vc", "truncate", "consum"}:
            raise ParseError(f"unknown constructor {head!r}", start)
        self.expect("(")
        if head in {"simplex", "polygon", "cube"}:
            value = self.integer()
            node = {"simplex": Simplex, "polygon": Polygon, "cube": Cube}[head](value)
        elif head == "product":
            left = self.expr()
            self.expect(",")
            node = Product(left, self.expr())
        elif head == "vc":
            base = self.expr()
            index = None
            if self.peek() == ",":
                self.pos += 1
                index = self.integer()
            node = VertexCut(base, index)
        elif head == "truncate":
            base = self.expr()
            self.expect(",")
            node = Truncate(base, self.int_list())
        else:
            left = self.expr()
            self.expect(",")
            f1 = self.integer()
            self.expect(",")
            right = self.expr()
            self.expect(",")
            f2 = self.integer()
            gluing = None
            if self.peek() == ",":
                self.pos += 1
                gluing = self.int_list()
            node = ConnectedSum(left, f1, right, f2, gluing)
        self.expect(")")
        return node


def parse(text: str) -> Expr:
    p = _Parser(text)
    node = p.expr()
    if p.peek():
        raise ParseError("trailing input", p.pos)
    return node


def build(expr: Union[Expr, str]) -> DualPolytope:
    if isinstance(expr, str):
        expr = parse(expr)
    if isinstance(expr, Simplex):
        return C.simplex_dual(expr.n)
    if isinstance(expr, Polygon):
        return C.polygon_dual(expr.k)
    if isinstance(expr, Cube):
        return C.cube_dual(expr.n)
    if isinstance(expr, Named):
        return C.named(expr.name)
    if isinstance(expr, Product):
        return C.product(build(expr.left), build(expr.right))
    if isinstance(expr, VertexCut):
        base = build(expr.base)
        if expr.facet_index is None:
            return C.vertex_cut(base)[0]
        return C.vertex_cut(base, expr.facet_index)
    if isinstance(expr, Truncate):
        return C.truncate(build(expr.base), expr.face)
    if isinstance(expr, ConnectedSum):
        return C.connected_sum(build(expr.left), expr.facet1, build(expr.right), expr.facet2, expr.gluing)
    raise TypeError(f"not a construction expression: {expr!r}")
