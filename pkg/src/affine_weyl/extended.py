"""Extended affine Weyl group: diagram automorphisms, ``u_j`` and weight orbits."""

from __future__ import annotations

import os
import re
from collections import deque
from dataclasses import dataclass
from functools import cache

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from . import linalg
from .dualspace import DualVec, fundamental_weight, weight_norm2
from .dynkin import DynkinDiagram, cartan_matrix
from .rootspace import weyl_group_order
from .weyl import descend, translation_element, translation_vector
from .words import Element, WeylWord, WordSyntaxError, as_element, identity_element, parse_letters

DEFAULT_ORBIT_CAP = 10**6


class OrbitBoundExceeded(RuntimeError):
    pass


def default_orbit_cap() -> int:
    env = os.environ.get("AFFINE_WEYL_ORBIT_CAP")
    return int(env) if env else DEFAULT_ORBIT_CAP


@dataclass(frozen=True)
class DiagramAutomorphism:
    """Node permutation ``i -> perm[i]``; ``perm`` is a label dictionary as sorted pairs."""

    diagram: DynkinDiagram
    images: tuple[int, ...]  # image of each label, in matrix order

    def __call__(self, label: int) -> int:
        return self.images[self.diagram.index(label)]

    @property
    def element(self) -> Element:
        d = self.diagram
        n = d.size
        m = [[0] * n for _ in range(n)]
        for i, label in enumerate(d.nodes):
            m[d.index(self(label))][i] = 1
        mat = linalg.mat(m)
        return Element(d, mat, linalg.transpose(mat))

    def is_identity(self) -> bool:
        return self.images == self.diagram.nodes

    def inverse(self) -> "DiagramAutomorphism":
        d = self.diagram
        inv = [0] * d.size
        for label in d.nodes:
            inv[d.index(self(label))] = label
        return DiagramAutomorphism(d, tuple(inv))

    def __mul__(self, other: "DiagramAutomorphism") -> "DiagramAutomorphism":
        return DiagramAutomorphism(self.diagram, tuple(self(other(x)) for x in self.diagram.nodes))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in sorted(self.diagram.nodes):
            if start in seen or self(start) == start:
                continue
            cyc, x = [], start
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cs = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cs) if cs else "()"


def identity_automorphism(d: DynkinDiagram) -> DiagramAutomorphism:
    return DiagramAutomorphism(d, d.nodes)


@cache
def automorphism_group(d: DynkinDiagram) -> tuple[DiagramAutomorphism, ...]:
    """All node permutations ``s`` with ``a_{s(i) s(j)} = a_ij``."""
    a = cartan_matrix(d)
    g = nx.DiGraph()
    g.add_nodes_from(d.nodes)
    for i, x in enumerate(d.nodes):
        for j, y in enumerate(d.nodes):
            if i != j and a[i][j]:
                g.add_edge(x, y, a=a[i][j])
    matcher = DiGraphMatcher(g, g, edge_match=lambda e1, e2: e1["a"] == e2["a"])
    autos = {DiagramAutomorphism(d, tuple(m[x] for x in d.nodes)) for m in matcher.isomorphisms_iter()}
    return tuple(sorted(autos, key=lambda s: (not s.is_identity(), s.images)))


def parse_automorphism(d: DynkinDiagram, text: str) -> DiagramAutomorphism:
    images = {x: x for x in d.nodes}
    for cyc in re.findall(r"\(([^)]*)\)", text):
        labels = [int(t) for t in cyc.replace(",", " ").split()]
        for a, b in zip(labels, labels[1:] + labels[:1]):
            images[a] = b
    sigma = DiagramAutomorphism(d, tuple(images[x] for x in d.nodes))
    if sigma not in automorphism_group(d):
        raise WordSyntaxError(f"{text} is not a diagram automorphism of {d}")
    return sigma


@dataclass(frozen=True, eq=False)
class ExtElement:
    """``auto * word`` with ``word`` in the affine Weyl group."""

    auto: DiagramAutomorphism
    word: WeylWord

    @property
    def diagram(self) -> DynkinDiagram:
        return self.word.diagram

    @property
    def element(self) -> Element:
        return self.auto.element * self.word.element

    def __eq__(self, other) -> bool:
        if not hasattr(other, "diagram"):
            return NotImplemented
        return self.element == as_element(other)

    def __hash__(self) -> int:
        return hash(self.element)

    def __mul__(self, other):
        return normal_form(self.element * as_element(other))

    def inverse(self) -> "ExtElement":
        return normal_form(self.element.inverse())

    def __str__(self) -> str:
        if self.auto.is_identity():
            return str(self.word)
        return f"{self.auto}*{self.word}" if self.word.letters else str(self.auto)

    def to_json(self) -> dict:
        return {"auto": str(self.auto), "word": str(self.word)}


def _match_automorphism(el: Element) -> DiagramAutomorphism | None:
    for sigma in automorphism_group(el.diagram):
        if sigma.element.mat == el.mat:
            return sigma
    return None


def normal_form(x) -> ExtElement:
    """Unique ``a * w`` with ``w`` reduced, found by right descent."""
    if isinstance(x, str):
        raise TypeError("parse the text with parse_ext_word first")
    el = as_element(x)
    letters, residual = descend(el)
    sigma = _match_automorphism(residual)
    if sigma is None:
        raise ValueError("element is not in the extended affine Weyl group")
    return ExtElement(sigma, WeylWord(el.diagram, letters))


def weight_translation(d: DynkinDiagram, j: int) -> ExtElement:
    """``u_j``: the translation ``f -> f + <delta, f> h_j``."""
    return normal_form(translation_element(fundamental_weight(d, j)))


_EXT_TOKEN = re.compile(
    r"\s*(?:(?P<u>[uU]_?(?P<uj>\d+)(?P<uinv>\^-1|\^\{-1\}|')?)|(?P<cyc>(?:\([\d ,]+\))+)|(?P<s>[^uU(]+))"
)


def parse_ext_word(d: DynkinDiagram, text: str) -> Element:
    """Parse products of ``s`` letters, ``uJ``/``uJ^-1`` and automorphism cycles.

    Example: ``"u1 12321"`` or ``"(0 1) s1 s2"``.
    """
    out = identity_element(d)
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _EXT_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise WordSyntaxError(f"cannot parse {text[pos:]!r}")
        pos = m.end()
        if m.group("u"):
            u = translation_element(fundamental_weight(d, int(m.group("uj"))))
            out = out * (u.inverse() if m.group("uinv") else u)
        elif m.group("cyc"):
            out = out * parse_automorphism(d, m.group("cyc")).element
        elif m.group("s").strip():
            letters = parse_letters(m.group("s"))
            try:
                out = out * WeylWord(d, letters).element
            except ValueError as exc:
                raise WordSyntaxError(str(exc)) from exc
    return out


def _finite_reflect(cartan, i: int, w: tuple) -> tuple:
    wi = w[i]
    if not wi:
        return w
    return tuple(x - wi * cartan[k][i] for k, x in enumerate(w))


def orbit(f: DualVec, cap: int | None = None) -> set[DualVec]:
    """Orbit of a level-0 vector under the finite Weyl group."""
    if f.level != 0:
        raise ValueError("orbit needs a vector in X_0")
    cap = default_orbit_cap() if cap is None else cap
    d = f.diagram
    n = d.rank
    cartan = cartan_matrix(d.finite())
    tail = f.coords[n:]
    start = f.weight_coords
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in range(n):
            u = _finite_reflect(cartan, i, w)
            if u not in seen:
                seen.add(u)
                if len(seen) > cap:
                    raise OrbitBoundExceeded(f"orbit exceeds cap {cap}")
                queue.append(u)
    return {DualVec(d, w + tail) for w in seen}


def sorted_orbit(f: DualVec, cap: int | None = None) -> list[DualVec]:
    return sorted(orbit(f, cap), key=lambda v: v.coords)


def stabilizer_order(f: DualVec, cap: int | None = None) -> int:
    size = len(orbit(f, cap))
    order = weyl_group_order(f.diagram)
    assert order % size == 0
    return order // size


def dominant_representative(f: DualVec) -> DualVec:
    """The unique dominant point in the finite Weyl orbit of ``f``."""
    d = f.diagram
    cartan = cartan_matrix(d.finite())
    w = f.weight_coords
    while True:
        i = next((k for k, x in enumerate(w) if x < 0), None)
        if i is None:
            return DualVec(d, w + f.coords[d.rank :])
        w = _finite_reflect(cartan, i, w)


def shortest_weights(d: DynkinDiagram) -> list[int]:
    norms = {j: weight_norm2(fundamental_weight(d, j)) for j in range(1, d.rank + 1)}
    low = min(norms.values())
    return [j for j, v in norms.items() if v == low]


def is_basic(x) -> bool:
    h = translation_vector(x)
    if h is None or h.is_zero():
        return False
    dom = dominant_representative(h)
    return any(dom == fundamental_weight(h.diagram, j) for j in shortest_weights(h.diagram))
