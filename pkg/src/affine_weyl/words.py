"""Words in simple reflections and their exact action matrices.

A word ``s_{l1 l2 ... lk}`` is the product ``s_l1 s_l2 ... s_lk`` read as a
composition of maps, so ``s_lk`` acts first.  Matrices act on column
coordinate vectors over the simple roots in matrix order (``1..n`` then
``0``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from . import linalg
from .dynkin import DynkinDiagram, InvalidNode, cartan_matrix


class WordSyntaxError(ValueError):
    pass


def _row_update(d: DynkinDiagram, j: int, rows: list[list]) -> None:
    """Left-multiply ``rows`` in place by the matrix of ``s_j`` (index form)."""
    a = cartan_matrix(d)
    new = [-x for x in rows[j]]
    for k in range(d.size):
        c = a[k][j]
        if c and k != j:
            rk = rows[k]
            new = [x - c * y for x, y in zip(new, rk)]
    rows[j] = new


def reflect_coords(d: DynkinDiagram, label: int, x: Sequence) -> tuple:
    """``s_j`` on root coordinates: only coordinate ``j`` changes."""
    a = cartan_matrix(d)
    j = d.index(label)
    out = list(x)
    out[j] = linalg.canon(x[j] - sum(a[i][j] * x[i] for i in range(d.size) if a[i][j]))
    return tuple(out)


@lru_cache(maxsize=None)
def simple_reflection_matrix(d: DynkinDiagram, label: int) -> linalg.Matrix:
    rows = [list(r) for r in linalg.identity(d.size)]
    _row_update(d, d.index(label), rows)
    return linalg.mat(rows)


@lru_cache(maxsize=8192)
def word_matrix(d: DynkinDiagram, letters: tuple[int, ...]) -> linalg.Matrix:
    rows = [list(r) for r in linalg.identity(d.size)]
    for label in reversed(letters):
        _row_update(d, d.index(label), rows)
    return tuple(tuple(r) for r in rows)


@dataclass(frozen=True, eq=False)
class Element:
    """A linear automorphism of the root space with a known inverse.

    Equality and hashing use the action matrix only.
    """

    diagram: DynkinDiagram
    mat: linalg.Matrix
    inv: linalg.Matrix

    def __mul__(self, other: "Element") -> "Element":
        other = as_element(other)
        _same(self.diagram, other.diagram)
        return Element(self.diagram, linalg.matmul(self.mat, other.mat), linalg.matmul(other.inv, self.inv))

    def __rmul__(self, other) -> "Element":
        return as_element(other) * self

    def inverse(self) -> "Element":
        return Element(self.diagram, self.inv, self.mat)

    def __pow__(self, k: int) -> "Element":
        base = self if k >= 0 else self.inverse()
        out = identity_element(self.diagram)
        for _ in range(abs(k)):
            out = out * base
        return out

    def __eq__(self, other) -> bool:
        if not hasattr(other, "diagram"):
            return NotImplemented
        other = as_element(other)
        return self.diagram == other.diagram and self.mat == other.mat

    def __hash__(self) -> int:
        return hash((self.diagram, self.mat))

    def act(self, coords: Sequence) -> tuple:
        return linalg.matvec(self.mat, coords)

    def is_identity(self) -> bool:
        return self.mat == linalg.identity(self.diagram.size)

    @property
    def element(self) -> "Element":
        return self


def identity_element(d: DynkinDiagram) -> Element:
    eye = linalg.identity(d.size)
    return Element(d, eye, eye)


def linear_element(d: DynkinDiagram, m: linalg.Matrix) -> Element:
    """Wrap an arbitrary invertible matrix (columns are images of the basis)."""
    m = linalg.mat(m)
    return Element(d, m, linalg.inverse(m))


def _same(a: DynkinDiagram, b: DynkinDiagram) -> None:
    if a != b:
        raise ContextMismatch(f"{a} vs {b}")


class ContextMismatch(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class WeylWord:
    """A word in the simple reflections of ``diagram``.

    ``==`` compares group elements (action matrices); use ``letters`` for
    literal comparison.
    """

    diagram: DynkinDiagram
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for x in self.letters:
            self.diagram.index(x)

    @property
    def mat(self) -> linalg.Matrix:
        return word_matrix(self.diagram, self.letters)

    @property
    def element(self) -> Element:
        return Element(self.diagram, self.mat, word_matrix(self.diagram, self.letters[::-1]))

    def inverse(self) -> "WeylWord":
        return WeylWord(self.diagram, self.letters[::-1])

    def __mul__(self, other):
        if isinstance(other, WeylWord):
            _same(self.diagram, other.diagram)
            return WeylWord(self.diagram, self.letters + other.letters)
        return self.element * other

    def __rmul__(self, other):
        return as_element(other) * self.element

    def __pow__(self, k: int) -> "WeylWord":
        base = self if k >= 0 else self.inverse()
        return WeylWord(self.diagram, base.letters * abs(k))

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other) -> bool:
        if not hasattr(other, "diagram"):
            return NotImplemented
        return self.element == as_element(other)

    def __hash__(self) -> int:
        return hash(self.element)

    def act(self, coords: Sequence) -> tuple:
        return linalg.matvec(self.mat, coords)

    def is_identity(self) -> bool:
        return self.element.is_identity()

    def __str__(self) -> str:
        return format_word(self.letters)

    def __repr__(self) -> str:
        return f"WeylWord({self.diagram.name}, {format_word(self.letters)!r})"


def as_element(x) -> Element:
    if isinstance(x, Element):
        return x
    el = getattr(x, "element", None)
    if el is None:
        raise TypeError(f"not a group element: {x!r}")
    return el


def format_word(letters: Iterable[int]) -> str:
    letters = tuple(letters)
    if not letters:
        return "e"
    if all(x <= 9 for x in letters):
        return "".join(map(str, letters))
    return " ".join(f"s{x}" for x in letters)


_TOKEN = re.compile(r"s_?\{(\d+)\}|s_?(\d+)|(\d+)")


def parse_letters(text: str) -> tuple[int, ...]:
    """Parse ``"s2 s3 s2 1 0"``, ``"23210"`` or ``"s_{232} s_0"``.

    Bare digit runs and braced subscripts are read one digit per letter;
    ``s<number>`` is a single letter, which is how labels above 9 are written.
    ``"e"`` or an empty string is the identity.
    """
    text = text.strip()
    if text in ("", "e", "id"):
        return ()
    out: list[int] = []
    pos = 0
    for m in _TOKEN.finditer(text):
        gap = text[pos : m.start()]
        if gap.strip(" ,*.·"):
            raise WordSyntaxError(f"unexpected {gap.strip()!r} in word {text!r}")
        pos = m.end()
        if m.group(2) is not None:
            out.append(int(m.group(2)))
        else:
            out.extend(int(c) for c in (m.group(1) or m.group(3)))
    if text[pos:].strip(" ,*.·"):
        raise WordSyntaxError(f"unexpected {text[pos:].strip()!r} in word {text!r}")
    return tuple(out)


def parse_word(d: DynkinDiagram, text: str) -> WeylWord:
    letters = parse_letters(text)
    try:
        return WeylWord(d, letters)
    except InvalidNode as exc:
        raise WordSyntaxError(str(exc)) from exc
