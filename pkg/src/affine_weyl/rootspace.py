"""Root space, bilinear form, finite root systems and affine roots.

Coordinates are over the simple roots in matrix order; in an affine
context the last coordinate is the coefficient of ``alpha_0``.
"""

from __future__ import annotations

import re
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache

from . import linalg
from .dynkin import DynkinDiagram, cartan_matrix, marks_in_matrix_order, root_lengths
from .words import ContextMismatch, WeylWord, reflect_coords, simple_reflection_matrix

DEFAULT_LEVEL_BOUND = 8


class NotARoot(ValueError):
    pass


class LevelBoundExceeded(ValueError):
    pass


class NoShortRoots(ValueError):
    pass


class RootSyntaxError(ValueError):
    pass


@dataclass(frozen=True)
class RootVec:
    """Element of the root space with exact rational coordinates."""

    diagram: DynkinDiagram
    coords: tuple

    def __post_init__(self):
        c = linalg.vec(self.coords)
        if len(c) != self.diagram.size:
            raise ValueError(f"{self.diagram} needs {self.diagram.size} coordinates, got {len(c)}")
        object.__setattr__(self, "coords", c)

    def _like(self, other: "RootVec") -> None:
        if not isinstance(other, RootVec) or other.diagram != self.diagram:
            raise ContextMismatch(f"cannot combine {self!r} with {other!r}")

    def __add__(self, other: "RootVec") -> "RootVec":
        self._like(other)
        return RootVec(self.diagram, linalg.add(self.coords, other.coords))

    def __sub__(self, other: "RootVec") -> "RootVec":
        self._like(other)
        return RootVec(self.diagram, linalg.sub(self.coords, other.coords))

    def __neg__(self) -> "RootVec":
        return RootVec(self.diagram, linalg.scale(-1, self.coords))

    def __rmul__(self, c) -> "RootVec":
        return RootVec(self.diagram, linalg.scale(c, self.coords))

    def __truediv__(self, c) -> "RootVec":
        return RootVec(self.diagram, linalg.scale(Fraction(1) / Fraction(c), self.coords))

    def __getitem__(self, label: int):
        return self.coords[self.diagram.index(label)]

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_positive(self) -> bool:
        return not self.is_zero() and all(x >= 0 for x in self.coords)

    def is_negative(self) -> bool:
        return not self.is_zero() and all(x <= 0 for x in self.coords)

    @property
    def height(self):
        return linalg.canon(sum(self.coords))

    def __str__(self) -> str:
        return format_root(self)


def simple_root(d: DynkinDiagram, label: int) -> RootVec:
    c = [0] * d.size
    c[d.index(label)] = 1
    return RootVec(d, c)


def null_root(d: DynkinDiagram) -> RootVec:
    """``delta = sum c_i alpha_i`` (affine only)."""
    return RootVec(d, marks_in_matrix_order(d))


def zero(d: DynkinDiagram) -> RootVec:
    return RootVec(d, [0] * d.size)


def format_root(v: RootVec) -> str:
    terms = []
    for label, x in zip(v.diagram.nodes, v.coords):
        if x == 0:
            continue
        coef = "" if x == 1 else "-" if x == -1 else linalg.fmt(x)
        terms.append(f"{coef}a{label}")
    if not terms:
        return "0"
    return "+".join(terms).replace("+-", "-")


_TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*(?:(?:a|α|alpha)_?\{?(\d+)\}?|(d|δ|delta))")


def parse_root(d: DynkinDiagram, text: str) -> RootVec:
    """Parse a root-space vector.

    Accepted forms: a bare digit string in subscript notation (``"12233"``
    is ``a1+2a2+2a3``), a coordinate list (``"[1,2,2]"`` or ``"1,2,2"``) or
    a signed sum of terms such as ``"-a3+d"``, ``"2a1-a12"`` where ``aXYZ``
    uses subscript notation and ``d`` is the null root.
    """
    s = text.strip()
    if re.fullmatch(r"\d+", s):
        return _from_digits(d, s)
    if s.startswith("[") or "," in s:
        try:
            parts = [p for p in s.strip("[] ").split(",") if p.strip()]
            return RootVec(d, [Fraction(p.strip()) for p in parts])
        except (ValueError, ZeroDivisionError) as exc:
            raise RootSyntaxError(f"bad coordinate list {text!r}") from exc
    total = zero(d)
    pos = 0
    compact = s.replace(" ", "")
    if not compact:
        raise RootSyntaxError("empty root")
    for m in _TERM.finditer(compact):
        if m.start() != pos:
            break
        pos = m.end()
        coef = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(1) == "-":
            coef = -coef
        term = null_root(d) if m.group(4) else _from_digits(d, m.group(3))
        total = total + coef * term
    if pos != len(compact):
        raise RootSyntaxError(f"cannot parse root {text!r}")
    return total


def _from_digits(d: DynkinDiagram, digits: str) -> RootVec:
    c = [0] * d.size
    try:
        for ch in digits:
            c[d.index(int(ch))] += 1
    except ValueError as exc:
        raise RootSyntaxError(str(exc)) from exc
    return RootVec(d, c)


@cache
def bilinear_form(d: DynkinDiagram) -> linalg.Matrix:
    """Gram matrix ``alpha_i . alpha_j = |alpha_j|^2 a_ij / 2``."""
    a = cartan_matrix(d)
    lengths = root_lengths(d)
    n = d.size
    return tuple(tuple(linalg.canon(Fraction(lengths[j] * a[i][j], 2)) for j in range(n)) for i in range(n))


def inner(u: RootVec, v: RootVec):
    u._like(v)
    s = bilinear_form(u.diagram)
    return linalg.dot(u.coords, linalg.matvec(s, v.coords))


def norm2(v: RootVec):
    return inner(v, v)


def simple_reflection(d: DynkinDiagram, j: int) -> linalg.Matrix:
    """Matrix of ``s_j`` on root coordinates."""
    return simple_reflection_matrix(d, j)


def reflect(v: RootVec, j: int) -> RootVec:
    return RootVec(v.diagram, reflect_coords(v.diagram, j, v.coords))


def reflection_matrix(beta: RootVec) -> linalg.Matrix:
    """``s_beta(v) = v - (2 v.beta / beta.beta) beta`` as a matrix."""
    d = beta.diagram
    nb = norm2(beta)
    if nb == 0:
        raise NotARoot(f"{beta} is isotropic")
    sb = linalg.matvec(bilinear_form(d), beta.coords)
    n = d.size
    return tuple(
        tuple(linalg.canon(int(i == j) - Fraction(2 * sb[j], nb) * beta.coords[i]) for j in range(n))
        for i in range(n)
    )


@dataclass(frozen=True)
class RootEntry:
    root: RootVec
    long: bool
    witness: WeylWord

    @property
    def height(self):
        return self.root.height


@dataclass(frozen=True)
class RootSystemTable:
    diagram: DynkinDiagram
    positive: tuple[RootEntry, ...]
    roots: frozenset = field(repr=False)

    @property
    def long_roots(self) -> list[RootVec]:
        return [e.root for e in self.positive if e.long]

    @property
    def short_roots(self) -> list[RootVec]:
        return [e.root for e in self.positive if not e.long]

    def __len__(self) -> int:
        return len(self.positive)


def _closure(d: DynkinDiagram, seeds: list[tuple]) -> dict[tuple, tuple[int, ...]]:
    """BFS under simple reflections; maps each vector to a word reaching it."""
    seen = {v: w for v, w in seeds}
    queue = deque(v for v, _ in seeds)
    while queue:
        v = queue.popleft()
        w = seen[v]
        for label in d.nodes:
            u = reflect_coords(d, label, v)
            if u not in seen:
                seen[u] = (label,) + w
                queue.append(u)
    return seen


def _finite_roots(d: DynkinDiagram) -> dict[tuple, tuple[tuple[int, ...], int]]:
    if d.affine:
        raise ValueError("root enumeration needs a finite diagram")
    return _root_paths(d, None)


def all_roots(d: DynkinDiagram) -> frozenset:
    return frozenset(_finite_roots(d))


@cache
def enumerate_roots(d: DynkinDiagram) -> RootSystemTable:
    """Positive roots, tagged long/short, with witness words.

    A witness word ``w`` satisfies ``w(highest) = root`` where ``highest`` is
    the highest root of the same length.
    """
    roots = _finite_roots(d)
    s = bilinear_form(d)
    normsq = {v: linalg.dot(v, linalg.matvec(s, v)) for v in roots}
    top = max(normsq.values())
    positive = [v for v in roots if all(x >= 0 for x in v)]
    witness: dict[tuple, tuple[int, ...]] = {}
    for is_long in (True, False):
        cands = [v for v in positive if (normsq[v] == top) == is_long]
        if not cands:
            continue
        hi = max(cands, key=sum)
        witness.update(_closure(d, [(hi, ())]))
    entries = sorted(positive, key=lambda v: (sum(v), v))
    table = tuple(RootEntry(RootVec(d, v), normsq[v] == top, WeylWord(d, witness[v])) for v in entries)
    return RootSystemTable(d, table, frozenset(roots))


def highest_root(d: DynkinDiagram) -> RootVec:
    d = d.finite()
    return max((e.root for e in enumerate_roots(d).positive if e.long), key=lambda r: r.height)


def highest_short_root(d: DynkinDiagram) -> RootVec:
    d = d.finite()
    short = [e.root for e in enumerate_roots(d).positive if not e.long]
    if not short:
        raise NoShortRoots(f"{d} is simply laced")
    return max(short, key=lambda r: r.height)


def weyl_group_order(d: DynkinDiagram) -> int:
    """``|W|`` as the product of degrees, read off from root heights.

    The number of exponents equal to ``k`` is ``#(height k) - #(height k+1)``.
    """
    heights = Counter(e.height for e in enumerate_roots(d.finite()).positive)
    out = 1
    for k in sorted(heights):
        out *= (k + 1) ** (heights[k] - heights.get(k + 1, 0))
    return out


def exponents(d: DynkinDiagram) -> list[int]:
    heights = Counter(e.height for e in enumerate_roots(d.finite()).positive)
    return sorted(k for k in heights for _ in range(heights[k] - heights.get(k + 1, 0)))


def affine_components(v: RootVec) -> tuple[RootVec, object]:
    """Split ``v = finite + m delta`` with ``m`` the ``alpha_0`` coefficient.

    The finite part is returned in the affine context, supported on
    ``alpha_1..alpha_n``.
    """
    d = v.diagram
    if not d.affine:
        raise ValueError("affine_components needs an affine context")
    m = v.coords[-1]
    return v - m * null_root(d), m


def finite_part(v: RootVec) -> RootVec:
    """Finite part of an affine vector, in the finite context."""
    fin, _ = affine_components(v)
    return RootVec(v.diagram.finite(), fin.coords[:-1])


def to_affine(v: RootVec) -> RootVec:
    d = v.diagram
    if d.affine:
        return v
    return RootVec(d.affinization(), v.coords + (0,))


def is_root(v: RootVec) -> bool:
    d = v.diagram
    if not linalg.is_integral(v.coords):
        return False
    if not d.affine:
        return v.coords in all_roots(d)
    fin = finite_part(v)
    return fin.coords in all_roots(fin.diagram)


def level(v: RootVec):
    return affine_components(v)[1]


@cache
def _root_paths(d: DynkinDiagram, bound: int | None) -> dict[tuple, tuple[tuple[int, ...], int]]:
    """Roots mapped to ``(w, i)`` with ``w(alpha_i) = root``.

    Affine roots are explored only up to ``|level| <= bound``; since a
    positive root descends to a simple root through roots of smaller level,
    every root within the bound is reached.
    """
    seen: dict[tuple, tuple[tuple[int, ...], int]] = {}
    queue = deque()
    for label in d.nodes:
        e = simple_root(d, label).coords
        seen[e] = ((), label)
        queue.append(e)
    while queue:
        v = queue.popleft()
        w, i = seen[v]
        for label in d.nodes:
            u = reflect_coords(d, label, v)
            if u in seen or (bound is not None and abs(u[-1]) > bound):
                continue
            seen[u] = ((label,) + w, i)
            queue.append(u)
    return seen


def reflection_word(beta: RootVec, level_bound: int = DEFAULT_LEVEL_BOUND) -> WeylWord:
    """A word for ``s_beta``: if ``beta = w(alpha_i)`` then ``s_beta = w s_i w^-1``."""
    d = beta.diagram
    if not is_root(beta):
        raise NotARoot(f"{beta} is not a root of {d}")
    if d.affine and abs(beta.coords[-1]) > level_bound:
        raise LevelBoundExceeded(f"level {beta.coords[-1]} exceeds bound {level_bound}")
    w, i = _root_paths(d, level_bound if d.affine else None)[beta.coords]
    return WeylWord(d, w + (i,) + w[::-1])


def format_affine(v: RootVec) -> str:
    """Write an affine vector as ``simple root + m d`` when possible, else ``finite + m d``."""
    d = v.diagram
    if not d.affine:
        return format_root(v)
    delta = null_root(d)
    m = v.coords[-1]
    for label in d.nodes:
        for sign in (1, -1):
            k = m - sign if label == 0 else m
            if v - k * delta == sign * simple_root(d, label):
                return format_root(v - k * delta) + _delta_suffix(k)
    fin, m = affine_components(v)
    head = format_root(fin) if not fin.is_zero() else ""
    tail = _delta_suffix(m)
    if not head:
        return tail.lstrip("+") or "0"
    return head + tail


def _delta_suffix(k) -> str:
    if k == 0:
        return ""
    coef = "" if abs(k) == 1 else linalg.fmt(abs(k))
    return ("+" if k > 0 else "-") + f"{coef}d"
