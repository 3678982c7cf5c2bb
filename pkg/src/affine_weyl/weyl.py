"""Actions, reduced words, translations and the ``W x| Q`` decomposition."""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .dualspace import (
    DualVec,
    coroot_coordinates,
    h_delta,
    pairing_matrix,
    pairing_matrix_inverse,
    simple_coroot,
)
from .dynkin import DynkinDiagram, cartan_matrix
from .rootspace import (
    DEFAULT_LEVEL_BOUND,
    RootVec,
    affine_components,
    finite_part,
    is_root,
    null_root,
    NotARoot,
    reflection_word,
    simple_root,
)
from .words import ContextMismatch, Element, WeylWord, as_element, identity_element

MAX_DESCENT_STEPS = 100_000


class ZeroLevel(ValueError):
    pass


class NotATranslation(ValueError):
    pass


class NotInGroup(ValueError):
    pass


def act(x, v: RootVec) -> RootVec:
    el = as_element(x)
    if el.diagram != v.diagram:
        raise ContextMismatch(f"{el.diagram} vs {v.diagram}")
    return RootVec(v.diagram, el.act(v.coords))


def dual_matrix(x) -> linalg.Matrix:
    """Matrix of the contragredient action, ``N = G^-1 (M^-1)^T G``."""
    el = as_element(x)
    d = el.diagram
    g = pairing_matrix(d)
    ginv = pairing_matrix_inverse(d)
    return linalg.matmul(ginv, linalg.matmul(linalg.transpose(el.inv), g))


def act_dual(x, f: DualVec) -> DualVec:
    el = as_element(x)
    if el.diagram != f.diagram:
        raise ContextMismatch(f"{el.diagram} vs {f.diagram}")
    return DualVec(f.diagram, linalg.matvec(dual_matrix(el), f.coords))


def _negative(col) -> bool:
    return any(x < 0 for x in col)


def descend(x) -> tuple[tuple[int, ...], Element]:
    """Strip simple reflections off the right while some ``w(alpha_i) < 0``.

    Returns ``(letters, residual)`` with ``x = residual * s_{letters}`` and
    ``letters`` reduced; the residual sends every simple root to a positive
    root.  Ties go to the smallest matrix index.
    """
    el = as_element(x)
    d = el.diagram
    a = cartan_matrix(d)
    n = d.size
    cols = [list(c) for c in linalg.transpose(el.mat)]
    stripped: list[int] = []
    for _ in range(MAX_DESCENT_STEPS):
        i = next((k for k in range(n) if _negative(cols[k])), None)
        if i is None:
            break
        ci = cols[i]
        for k in range(n):
            if k == i:
                continue
            c = a[k][i]
            if c:
                cols[k] = [x - c * y for x, y in zip(cols[k], ci)]
        cols[i] = [-y for y in ci]
        stripped.append(d.nodes[i])
    else:
        raise NotInGroup("descent did not terminate")
    letters = tuple(reversed(stripped))
    word = WeylWord(d, letters)
    residual = Element(d, linalg.mat(zip(*cols)), linalg.matmul(word.mat, el.inv))
    return letters, residual


def length_and_reduced(x) -> tuple[int, WeylWord]:
    el = as_element(x)
    letters, residual = descend(el)
    if not residual.is_identity():
        raise NotInGroup("element has a nontrivial diagram automorphism part")
    return len(letters), WeylWord(el.diagram, letters)


def reduce_word(x) -> WeylWord:
    return length_and_reduced(x)[1]


def _require_affine(d: DynkinDiagram) -> None:
    if not d.affine:
        raise ValueError(f"{d} is not affine")


def make_translation(beta: RootVec, level_bound: int = DEFAULT_LEVEL_BOUND) -> WeylWord:
    """``t_beta = s_alpha s_beta`` for ``beta = alpha + m delta`` with ``m != 0``."""
    d = beta.diagram
    _require_affine(d)
    if not is_root(beta):
        raise NotARoot(f"{beta} is not a root of {d}")
    _, m = affine_components(beta)
    if m == 0:
        raise ZeroLevel(f"{beta} has level 0")
    alpha = finite_part(beta)
    s_alpha = reflection_word(alpha)
    return WeylWord(d, s_alpha.letters) * reflection_word(beta, level_bound)


def simple_translation(d: DynkinDiagram, j: int) -> WeylWord:
    """``t_j = t_{alpha_j + delta}`` for ``j >= 1`` and ``t_0 = t_{alpha_0}``."""
    _require_affine(d)
    beta = simple_root(d, j)
    if j != 0:
        beta = beta + null_root(d)
    return make_translation(beta)


def translation_element(h: DualVec) -> Element:
    """The map ``v -> v - <v, h> delta``, i.e. ``f -> f + <delta, f> h``."""
    d = h.diagram
    _require_affine(d)
    if h.level != 0:
        raise ValueError("translation vectors live in X_0")
    gh = linalg.matvec(pairing_matrix(d), h.coords)
    delta = null_root(d).coords
    n = d.size

    def build(sign):
        return tuple(tuple(linalg.canon(int(i == k) - sign * delta[i] * gh[k]) for k in range(n)) for i in range(n))

    return Element(d, build(1), build(-1))


def translation_vector(x) -> DualVec | None:
    el = as_element(x)
    d = el.diagram
    if not d.affine:
        return None
    hd = h_delta(d)
    nmat = dual_matrix(el)
    h = DualVec(d, linalg.sub([row[-1] for row in nmat], hd.coords))
    if h.level != 0:
        return None
    if translation_element(h).mat != el.mat:
        return None
    return h


def translation_word(h: DualVec) -> WeylWord:
    """A reduced word for the translation by ``h`` in the coroot lattice."""
    d = h.diagram
    _require_affine(d)
    k = coroot_coordinates(h)
    if not linalg.is_integral(k):
        raise NotATranslation(f"{h} is not in the coroot lattice")
    word = WeylWord(d, ())
    for label, ki in zip(d.nodes, k):
        word = word * simple_translation(d, label) ** ki
    return reduce_word(word)


@dataclass(frozen=True)
class TranslationDecomp:
    """``element = t_h * w`` with ``w`` in the finite Weyl group."""

    finite: WeylWord
    lattice: DualVec

    @property
    def coroot_coeffs(self) -> tuple:
        return coroot_coordinates(self.lattice)

    @property
    def weight_coords(self) -> tuple:
        return self.lattice.weight_coords

    def recombine(self) -> Element:
        return translation_element(self.lattice) * self.finite.element

    def to_json(self) -> dict:
        return {
            "finite": str(self.finite),
            "lattice": {
                "coroot_coeffs": [linalg.fmt(x) for x in self.coroot_coeffs],
                "weight_coords": [linalg.fmt(x) for x in self.weight_coords],
            },
        }


def decompose(x) -> TranslationDecomp:
    el = as_element(x)
    d = el.diagram
    _require_affine(d)
    hd = h_delta(d)
    h = DualVec(d, linalg.sub(linalg.matvec(dual_matrix(el), hd.coords), hd.coords))
    rest = translation_element(-h) * el
    letters, residual = descend(rest)
    if not residual.is_identity() or 0 in letters:
        raise NotInGroup("element is not of the form t_h w with w finite")
    return TranslationDecomp(WeylWord(d, letters), h)


def conjugate_translation(w, t):
    """``w t w^-1``; a word when both inputs are words."""
    if translation_vector(t) is None:
        raise NotATranslation(f"{t!r} is not a translation")
    if isinstance(w, WeylWord) and isinstance(t, WeylWord):
        return w * t * w.inverse()
    el = as_element(w)
    return el * as_element(t) * el.inverse()


def relation_words(d: DynkinDiagram) -> list[tuple[WeylWord, int]]:
    """Defining relators ``(s_i s_j)^{m_ij}`` including ``s_i^2``."""
    from .dynkin import coxeter_matrix

    m = coxeter_matrix(d)
    out = []
    for i, a in enumerate(d.nodes):
        for j, b in enumerate(d.nodes):
            if i <= j:
                pair = WeylWord(d, (a,) if i == j else (a, b))
                out.append((pair, m[i][j] if i != j else 2))
    return out


def identity_word(d: DynkinDiagram) -> WeylWord:
    return WeylWord(d, ())


__all__ = [
    "act",
    "act_dual",
    "conjugate_translation",
    "decompose",
    "descend",
    "dual_matrix",
    "identity_element",
    "length_and_reduced",
    "make_translation",
    "simple_translation",
    "translation_element",
    "translation_vector",
    "translation_word",
    "TranslationDecomp",
    "WeylWord",
    "simple_coroot",
]
