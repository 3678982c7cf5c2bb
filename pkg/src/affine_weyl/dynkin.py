"""Dynkin diagrams of finite and untwisted affine type.

Node labels are ``1..n`` and, for affine diagrams, ``0``.  Every matrix in
the package is indexed in the order ``1, 2, ..., n, 0``: the affine node
always occupies the last row and column.

EXAMPLES::

    >>> d = parse_type("B3~")
    >>> cartan_matrix(d)[-1]
    (0, -1, 0, 2)
    >>> marks(d)
    (1, 1, 2, 2)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import NamedTuple

from . import linalg

FAMILIES = "ABCDEFG"
MAX_CLASSICAL_RANK = 16

class InvalidRank(ValueError):
    pass


class InvalidNode(ValueError):
    pass


class NotAffine(ValueError):
    pass


class Edge(NamedTuple):
    """A bond between two nodes.

    For multiple bonds ``i`` is the long node and ``j`` the short one, so the
    arrow points ``i -> j``.
    """

    i: int
    j: int
    multiplicity: int = 1


def _check_rank(family: str, rank: int, affine: bool) -> None:
    ok = {
        "A": 1 <= rank <= MAX_CLASSICAL_RANK,
        "B": 2 <= rank <= MAX_CLASSICAL_RANK,
        "C": 2 <= rank <= MAX_CLASSICAL_RANK,
        "D": 4 <= rank <= MAX_CLASSICAL_RANK,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }[family]
    # A1~ has an infinite bond and B2~ coincides with C2~; neither is drawn.
    if affine and (family, rank) in {("A", 1), ("B", 2)}:
        ok = False
    if not ok:
        kind = "affine " if affine else ""
        raise InvalidRank(f"unsupported {kind}type {family}{rank}")


def _chain(nodes) -> list[Edge]:
    return [Edge(a, b) for a, b in zip(nodes, nodes[1:])]


def _finite_edges(family: str, n: int) -> list[Edge]:
    if family == "A":
        return _chain(range(1, n + 1))
    if family == "B":
        return _chain(range(1, n)) + [Edge(n - 1, n, 2)]
    if family == "C":
        return _chain(range(1, n)) + [Edge(n, n - 1, 2)]
    if family == "D":
        return _chain(range(1, n - 1)) + [Edge(n - 2, n - 1), Edge(n - 2, n)]
    if family == "E" and n == 6:
        return _chain(range(2, 7)) + [Edge(1, 4)]
    if family == "E":
        return _chain([1] + list(range(3, n + 1))) + [Edge(2, 4)]
    if family == "F":
        return [Edge(1, 2), Edge(2, 3, 2), Edge(3, 4)]
    if family == "G":
        return [Edge(2, 1, 3)]
    raise AssertionError(family)


def _affine_edges(family: str, n: int) -> list[Edge]:
    if family == "A":
        return [Edge(0, 1), Edge(0, n)]
    if family == "C":
        return [Edge(0, 1, 2)]
    attach = {"B": 2, "D": 2, "F": 1, "G": 2}.get(family)
    if family == "E":
        attach = 8 if n == 8 else 1
    return [Edge(0, attach)]


@dataclass(frozen=True)
class DynkinDiagram:
    family: str
    rank: int
    affine: bool = False

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidRank(f"unknown family {self.family!r}")
        _check_rank(self.family, self.rank, self.affine)

    @property
    def nodes(self) -> tuple[int, ...]:
        """Node labels in matrix order."""
        tail = (0,) if self.affine else ()
        return tuple(range(1, self.rank + 1)) + tail

    @property
    def size(self) -> int:
        return self.rank + int(self.affine)

    @property
    def edges(self) -> tuple[Edge, ...]:
        es = _finite_edges(self.family, self.rank)
        if self.affine:
            es += _affine_edges(self.family, self.rank)
        return tuple(es)

    @property
    def simply_laced(self) -> bool:
        return self.family in "ADE"

    def index(self, label: int) -> int:
        """Matrix position of a node label."""
        if label == 0 and self.affine:
            return self.rank
        if 1 <= label <= self.rank:
            return label - 1
        raise InvalidNode(f"{self.name} has no node {label}")

    def finite(self) -> "DynkinDiagram":
        return DynkinDiagram(self.family, self.rank, False)

    def affinization(self) -> "DynkinDiagram":
        return DynkinDiagram(self.family, self.rank, True)

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}" + ("~" if self.affine else "")

    def __str__(self) -> str:
        return self.name


def build_diagram(family: str, rank: int, affine: bool = False) -> DynkinDiagram:
    return DynkinDiagram(family.upper(), int(rank), bool(affine))


_TYPE_RE = re.compile(r"^\s*([A-Ga-g])\s*_?\s*(\d+)\s*(~|\^\(1\)|\^1)?\s*$")


def parse_type(text: str) -> DynkinDiagram:
    """Parse strings such as ``"B3"``, ``"e8~"`` or ``"E8^(1)"``."""
    m = _TYPE_RE.match(text)
    if not m:
        raise InvalidRank(f"cannot parse Dynkin type {text!r}")
    return build_diagram(m.group(1), int(m.group(2)), m.group(3) is not None)


@cache
def cartan_matrix(d: DynkinDiagram) -> linalg.Matrix:
    n = d.size
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for e in d.edges:
        i, j = d.index(e.i), d.index(e.j)
        a[i][j] = -e.multiplicity
        a[j][i] = -1
    return linalg.mat(a)


def coxeter_matrix(d: DynkinDiagram) -> linalg.Matrix:
    """Orders ``m_ij`` of ``s_i s_j``."""
    a = cartan_matrix(d)
    prod_to_m = {0: 2, 1: 3, 2: 4, 3: 6}
    n = d.size
    return tuple(
        tuple(1 if i == j else prod_to_m[a[i][j] * a[j][i]] for j in range(n)) for i in range(n)
    )


@cache
def root_lengths(d: DynkinDiagram) -> linalg.Vector:
    """Squared lengths ``|alpha_i|^2`` in matrix order.

    Relative lengths follow ``|a_i|^2 / |a_j|^2 = a_ij / a_ji`` along edges.
    Long roots have length 2 for B and F, short roots for C and G.
    """
    a = cartan_matrix(d)
    n = d.size
    length: list[Fraction | None] = [None] * n
    length[0] = Fraction(1)
    stack = [0]
    while stack:
        j = stack.pop()
        for i in range(n):
            if i != j and a[i][j] and length[i] is None:
                length[i] = length[j] * Fraction(a[i][j], a[j][i])
                stack.append(i)
    ref = min(length) if d.family in "CG" else max(length)
    return linalg.vec(2 * x / ref for x in length)


@cache
def marks(d: DynkinDiagram) -> linalg.Vector:
    """Marks ``(c_0, c_1, ..., c_n)`` with ``delta = sum c_i alpha_i``.

    Note the output order puts ``c_0`` first, unlike the matrix order.
    """
    if not d.affine:
        raise NotAffine(f"{d.name} is not affine")
    ker = linalg.nullspace(linalg.transpose(cartan_matrix(d)))
    assert len(ker) == 1, ker
    v = ker[0]
    v = linalg.scale(Fraction(1) / v[-1], v)
    assert all(isinstance(x, int) and x > 0 for x in v), v
    return (v[-1],) + v[:-1]


def marks_in_matrix_order(d: DynkinDiagram) -> linalg.Vector:
    c = marks(d)
    return c[1:] + c[:1]


def all_types(max_rank: int = 8, affine: bool = False) -> list[DynkinDiagram]:
    out = []
    for fam in FAMILIES:
        for r in range(1, max_rank + 1):
            try:
                out.append(DynkinDiagram(fam, r, affine))
            except InvalidRank:
                pass
    return out
