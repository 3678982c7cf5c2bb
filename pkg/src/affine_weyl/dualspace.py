"""The dual space with basis ``h_1..h_n`` (and ``h_delta`` when affine).

The pairing is ``<alpha_i, h_j> = delta_ij``, ``<delta, h_delta> = 1`` and
``<delta, h_j> = 0``.  In coordinates ``<v, f> = v^T G f`` where ``G`` is
the identity except for the ``alpha_0`` row ``(-c_1, ..., -c_n, 1)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from . import linalg
from .dynkin import DynkinDiagram, cartan_matrix, marks, root_lengths
from .rootspace import NotARoot, RootVec, bilinear_form, is_root, norm2
from .words import ContextMismatch


class NotInSameXk(ValueError):
    pass


class WeightSyntaxError(ValueError):
    pass


@dataclass(frozen=True)
class DualVec:
    """Dual-space vector; coordinates over ``(h_1..h_n[, h_delta])``."""

    diagram: DynkinDiagram
    coords: tuple

    def __post_init__(self):
        c = linalg.vec(self.coords)
        if len(c) != self.diagram.size:
            raise ValueError(f"{self.diagram} needs {self.diagram.size} coordinates, got {len(c)}")
        object.__setattr__(self, "coords", c)

    def _like(self, other) -> None:
        if not isinstance(other, DualVec) or other.diagram != self.diagram:
            raise ContextMismatch(f"cannot combine {self!r} with {other!r}")

    def __add__(self, other: "DualVec") -> "DualVec":
        self._like(other)
        return DualVec(self.diagram, linalg.add(self.coords, other.coords))

    def __sub__(self, other: "DualVec") -> "DualVec":
        self._like(other)
        return DualVec(self.diagram, linalg.sub(self.coords, other.coords))

    def __neg__(self) -> "DualVec":
        return DualVec(self.diagram, linalg.scale(-1, self.coords))

    def __rmul__(self, c) -> "DualVec":
        return DualVec(self.diagram, linalg.scale(c, self.coords))

    def __truediv__(self, c) -> "DualVec":
        return DualVec(self.diagram, linalg.scale(Fraction(1) / Fraction(c), self.coords))

    @property
    def weight_coords(self) -> tuple:
        """Coordinates over ``h_1..h_n`` only."""
        return self.coords[: self.diagram.rank]

    @property
    def level(self):
        """The ``k`` with this vector in ``X_k`` (0 in a finite context)."""
        return self.coords[-1] if self.diagram.affine else 0

    def is_weight(self) -> bool:
        return self.level == 0 and linalg.is_integral(self.weight_coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self) -> str:
        return format_dual(self)


def fundamental_weight(d: DynkinDiagram, j: int) -> DualVec:
    if not 1 <= j <= d.rank:
        raise ValueError(f"no fundamental weight h{j} in {d}")
    c = [0] * d.size
    c[j - 1] = 1
    return DualVec(d, c)


def h_delta(d: DynkinDiagram) -> DualVec:
    if not d.affine:
        raise ValueError("h_delta needs an affine context")
    return DualVec(d, [0] * d.rank + [1])


def dual_zero(d: DynkinDiagram) -> DualVec:
    return DualVec(d, [0] * d.size)


def format_dual(f: DualVec) -> str:
    d = f.diagram
    names = [f"h{i}" for i in range(1, d.rank + 1)] + (["hd"] if d.affine else [])
    terms = []
    for name, x in zip(names, f.coords):
        if x == 0:
            continue
        coef = "" if x == 1 else "-" if x == -1 else linalg.fmt(x)
        terms.append(f"{coef}{name}")
    return "+".join(terms).replace("+-", "-") if terms else "0"


_WTERM = re.compile(r"([+-]?)(\d+(?:/\d+)?)?\*?h_?\{?(\d+|d|δ|delta)\}?")


def parse_weight(d: DynkinDiagram, text: str) -> DualVec:
    """Parse ``"h1"``, ``"2h1-h6"``, ``"3/2h3+hd"`` or a coordinate list."""
    s = text.replace(" ", "")
    if s.startswith("[") or "," in s:
        try:
            return DualVec(d, [Fraction(p) for p in s.strip("[]").split(",") if p])
        except (ValueError, ZeroDivisionError) as exc:
            raise WeightSyntaxError(f"bad coordinate list {text!r}") from exc
    if s in ("0", ""):
        return dual_zero(d)
    out = dual_zero(d)
    pos = 0
    for m in _WTERM.finditer(s):
        if m.start() != pos:
            break
        pos = m.end()
        coef = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(1) == "-":
            coef = -coef
        key = m.group(3)
        try:
            basis = h_delta(d) if key in ("d", "δ", "delta") else fundamental_weight(d, int(key))
        except ValueError as exc:
            raise WeightSyntaxError(str(exc)) from exc
        out = out + coef * basis
    if pos != len(s):
        raise WeightSyntaxError(f"cannot parse weight {text!r}")
    return out


@cache
def pairing_matrix(d: DynkinDiagram) -> linalg.Matrix:
    """``G`` with ``<v, f> = v^T G f``."""
    g = [list(r) for r in linalg.identity(d.size)]
    if d.affine:
        c = marks(d)
        g[-1] = [-x for x in c[1:]] + [1]
    return linalg.mat(g)


@cache
def pairing_matrix_inverse(d: DynkinDiagram) -> linalg.Matrix:
    g = [list(r) for r in linalg.identity(d.size)]
    if d.affine:
        g[-1] = list(marks(d)[1:]) + [1]
    return linalg.mat(g)


def pair(v: RootVec, f: DualVec):
    if v.diagram != f.diagram:
        raise ContextMismatch(f"{v.diagram} vs {f.diagram}")
    return linalg.dot(v.coords, linalg.matvec(pairing_matrix(v.diagram), f.coords))


def _from_pairings(d: DynkinDiagram, p) -> DualVec:
    """The dual vector with ``<alpha_i, f> = p_i`` for every node in matrix order."""
    return DualVec(d, linalg.matvec(pairing_matrix_inverse(d), p))


def pi_map(v: RootVec) -> DualVec:
    """``pi(u)`` is defined by ``<v, pi(u)> = v . u`` for all ``v``."""
    return _from_pairings(v.diagram, linalg.matvec(bilinear_form(v.diagram), v.coords))


def coroot(beta: RootVec) -> DualVec:
    """``pi`` of the coroot ``2 beta / |beta|^2``."""
    if not is_root(beta):
        raise NotARoot(f"{beta} is not a root of {beta.diagram}")
    return pi_map(Fraction(2) / norm2(beta) * beta)


def simple_coroot(d: DynkinDiagram, label: int) -> DualVec:
    """``pi`` of ``alpha_j`` check; its pairings are column ``j`` of the Cartan matrix."""
    a = cartan_matrix(d)
    j = d.index(label)
    return _from_pairings(d, [a[i][j] for i in range(d.size)])


def coroot_coefficients(beta: RootVec) -> tuple:
    """Integer pairings ``b_j = <alpha_j, pi(beta check)>`` in matrix order."""
    f = coroot(beta)
    g = pairing_matrix(beta.diagram)
    return linalg.matvec(g, f.coords)


@cache
def _finite_cartan_inverse_t(d: DynkinDiagram) -> linalg.Matrix:
    return linalg.inverse(linalg.transpose(cartan_matrix(d.finite())))


def weight_in_coroots(d: DynkinDiagram, i: int) -> tuple:
    """Coefficients of ``h_i`` over the simple coroots (row ``i`` of ``(C^T)^-1``)."""
    if not 1 <= i <= d.rank:
        raise ValueError(f"no fundamental weight h{i} in {d}")
    return _finite_cartan_inverse_t(d)[i - 1]


def coroot_coordinates(f: DualVec) -> tuple:
    """Express a level-0 vector over the simple coroots ``pi(alpha_i check)``."""
    d = f.diagram
    if f.level != 0:
        raise NotInSameXk("coroot coordinates need a level-0 vector")
    inv_t = _finite_cartan_inverse_t(d)
    w = f.weight_coords
    return tuple(linalg.canon(sum(w[i] * inv_t[i][k] for i in range(d.rank))) for k in range(d.rank))


@cache
def weight_gram(d: DynkinDiagram) -> linalg.Matrix:
    """``(h_i, h_j) = ((C^T)^-1)_ij * 2 / |alpha_j|^2``."""
    inv_t = _finite_cartan_inverse_t(d)
    lengths = root_lengths(d.finite())
    n = d.rank
    return tuple(tuple(linalg.canon(inv_t[i][j] * Fraction(2) / lengths[j]) for j in range(n)) for i in range(n))


def x0_form(f: DualVec, g: DualVec):
    """Positive definite form on ``X_0``.

    Two points of the same ``X_k`` are first moved to ``X_0`` by subtracting
    ``k h_delta``.
    """
    f._like(g)
    if f.level != g.level:
        raise NotInSameXk(f"levels {f.level} and {g.level} differ")
    gram = weight_gram(f.diagram)
    return linalg.dot(f.weight_coords, linalg.matvec(gram, g.weight_coords))


def weight_norm2(f: DualVec):
    return x0_form(f, f)


def coroot_norms(d: DynkinDiagram) -> tuple:
    """``|pi(alpha_i check)|^2 = 4 / |alpha_i|^2`` for the finite nodes."""
    return linalg.vec(Fraction(4) / x for x in root_lengths(d.finite()))
