"""Two worked checks inside ``E8~`` plus the per-type data table.

Each report is a list of exact comparisons.  Action tables are compared
basis vector by basis vector so that a failure names the first mismatch.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .dualspace import (
    DualVec,
    coroot,
    coroot_coordinates,
    fundamental_weight,
    parse_weight,
    pi_map,
    weight_gram,
    weight_norm2,
)
from .dynkin import DynkinDiagram, coxeter_matrix, parse_type, root_lengths
from .extended import orbit
from .rootspace import (
    RootVec,
    bilinear_form,
    enumerate_roots,
    highest_root,
    highest_short_root,
    inner,
    norm2,
    null_root,
    parse_root,
    simple_root,
    weyl_group_order,
)
from .weyl import act, act_dual, simple_translation, translation_vector
from .words import Element, identity_element, linear_element, parse_word


class ActionTableMismatch(AssertionError):
    pass


@dataclass
class Check:
    check_id: str
    description: str
    expected: str
    computed: str
    passed: bool

    def to_json(self) -> dict:
        return {
            "id": self.check_id,
            "description": self.description,
            "expected": self.expected,
            "computed": self.computed,
            "passed": self.passed,
        }


@dataclass
class CaseReport:
    case_id: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, check_id: str, description: str, expected, computed) -> Check:
        c = Check(check_id, description, _show(expected), _show(computed), expected == computed)
        self.checks.append(c)
        return c

    def add_table(self, check_id: str, description: str, element, sources, targets, names) -> Check:
        bad = first_mismatch(element, sources, targets, names)
        c = Check(check_id, description, "all images match", bad or "all images match", bad is None)
        self.checks.append(c)
        return c

    def raise_for_failure(self) -> None:
        for c in self.checks:
            if not c.passed:
                raise ActionTableMismatch(f"{self.case_id}/{c.check_id}: {c.description}: {c.computed}")

    def to_json(self) -> dict:
        return {"case": self.case_id, "passed": self.passed, "checks": [c.to_json() for c in self.checks]}


def _show(x) -> str:
    if isinstance(x, (list, tuple)):
        return "(" + ", ".join(_show(y) for y in x) + ")"
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return linalg.fmt(x)
    return str(x)


def first_mismatch(element, sources: Sequence[RootVec], targets: Sequence[RootVec], names: Sequence[str]):
    """Name of the first basis vector whose image differs, or ``None``."""
    for src, tgt, name in zip(sources, targets, names):
        got = act(element, src)
        if got != tgt:
            return f"{name} -> {got}, expected {tgt}"
    return None


def element_from_images(d: DynkinDiagram, images: dict[int, RootVec]) -> Element:
    """Linear map sending ``alpha_j`` to ``images[j]``; unlisted nodes are fixed."""
    cols = [images.get(j, simple_root(d, j)).coords for j in d.nodes]
    return linear_element(d, tuple(zip(*cols)))


def _simple_basis(d: DynkinDiagram) -> tuple[list[RootVec], list[str]]:
    return [simple_root(d, j) for j in d.nodes], [f"a{j}" for j in d.nodes]


# -- E8 elliptic translations ------------------------------------------------


def verify_e8_elliptic() -> CaseReport:
    d = parse_type("E8~")
    rep = CaseReport("e8_elliptic")
    R = lambda s: parse_root(d, s)  # noqa: E731
    W = lambda s: parse_weight(d, s)  # noqa: E731
    basis, names = _simple_basis(d)
    delta = null_root(d)

    tj2 = element_from_images(d, {1: R("a1-2d"), 3: R("a3+d")})
    tj1 = element_from_images(d, {1: R("a1-2d"), 6: R("a6+d")})
    t1 = simple_translation(d, 1)

    h2 = W("2h1-h3")
    rep.add("a", "T_J2 is the translation by 2h1-h3", h2, translation_vector(tj2))
    rep.add("a", "|2h1-h3|^2", 2, weight_norm2(h2))
    rep.add("a", "2h1-h3 = pi(a1)", h2, pi_map(simple_root(d, 1)))
    rep.add("a", "T_J2 = t_1", True, tj2 == t1)

    h1 = W("2h1-h6")
    rep.add("b", "T_J1 is the translation by 2h1-h6", h1, translation_vector(tj1))
    rep.add("b", "|2h1-h6|^2", 4, weight_norm2(h1))

    r = R("a1233445")
    rep.add("c", "2h1-h6 = pi(a1) + pi(a1233445)", h1, pi_map(simple_root(d, 1) + r))
    rep.add("c", "2h1-h6 = pi(a11233445)", h1, pi_map(R("a11233445")))
    rep.add("c", "a1 . a1233445", 0, inner(simple_root(d, 1), r))
    rep.add("c", "|a1233445|^2", 2, norm2(r))

    w = parse_word(d, "345243")
    rep.add("d", "w(a1) for w = s_345243", r, act(w, simple_root(d, 1)))

    composite = t1.element * (w.element * t1.element * w.element.inverse())
    targets = [act(tj1, v) for v in basis]
    rep.add_table("e", "t_1 w t_1 w^-1 on the simple roots", composite, basis, targets, names)
    rep.add_table(
        "e",
        "T_J1 table: a1 -> a1-2d, a6 -> a6+d, others fixed",
        composite,
        [simple_root(d, 1), simple_root(d, 6)],
        [R("a1-2d"), R("a6+d")],
        ["a1", "a6"],
    )
    rep.add("e", "T_J1 fixes delta", delta, act(tj1, delta))
    rep.add("e", "t_1 commutes with w t_1 w^-1", True, _commute(t1.element, w.element * t1.element * w.element.inverse()))

    e8 = parse_type("E8")
    rep.add("f", "|W(E8) h8|", 240, len(orbit(fundamental_weight(e8, 8))))
    rep.add("f", "|W(E8) h1|", 2160, len(orbit(fundamental_weight(e8, 1))))
    return rep


def _commute(x: Element, y: Element) -> bool:
    return x * y == y * x


# -- F4~ inside E8~ ------------------------------------------------------------

B_WORDS = {0: "8708", 1: "6576", 2: "4254", 3: "3", 4: "1"}
BETAS = {0: "a7880", 1: "a5667", 2: "a2445", 3: "a3", 4: "a1"}
MIXED_ORDER = ["b1", "b2", "b3", "b4", "b0", "a2", "a5", "a7", "a0"]

# images of the mixed basis under each b_i
B_ACTION = {
    1: ["-b1", "b2+b1", "b3", "b4", "b0+b1", "a2", "a7", "a5", "a0"],
    2: ["b1+b2", "-b2", "b3+b2", "b4", "b0", "a5", "a2", "a7", "a0"],
    3: ["b1", "b2+2b3", "-b3", "b4+b3", "b0", "a2", "a5", "a7", "a0"],
    4: ["b1", "b2", "b3+b4", "-b4", "b0", "a2", "a5", "a7", "a0"],
    0: ["b1+b0", "b2", "b3", "b4", "-b0", "a2", "a5", "a0", "a7"],
}

U1_ALPHA = ["a1", "a5", "a3", "a4", "a2", "a1233444555666778-d", "a0", "a8+d", "a7"]
U1_MIXED = ["b1-d", "b2", "b3", "b4", "b0+2d", "a5", "a2", "a0", "a7"]
U1_SQ_ALPHA = ["a1", "a2", "a3", "a4", "a5", "a6-d", "a7", "a8+2d", "a0"]
PHI_ALPHA = ["a1+d", "-a2", "a23445-d", "-a4", "-a5", "-a12334456+d", "-a7", "-a8", "-a0"]
PHI_SQ_ALPHA = ["a1+2d", "a2", "a3-2d", "a4", "a5", "a6+d", "a7", "a8", "a0"]


class F4InE8:
    """The ``b``-generators and ``beta``-roots with a small expression parser."""

    def __init__(self):
        self.d = parse_type("E8~")
        self.b = {k: parse_word(self.d, v) for k, v in B_WORDS.items()}
        self.beta = {k: parse_root(self.d, v) for k, v in BETAS.items()}

    def bword(self, digits: str) -> Element:
        out = identity_element(self.d)
        for ch in digits:
            out = out * self.b[int(ch)].element
        return out

    def vec(self, text: str) -> RootVec:
        """Parse sums like ``"b2+2b3"``, ``"a5"``, ``"b1-d"``."""
        import re

        total = RootVec(self.d, [0] * self.d.size)
        for sign, coef, kind, sub in re.findall(r"([+-]?)(\d*)([abd])(\d*)", text.replace(" ", "")):
            c = int(coef) if coef else 1
            c = -c if sign == "-" else c
            if kind == "b":
                v = self.beta[int(sub)]
            elif kind == "d":
                v = null_root(self.d)
            else:
                v = parse_root(self.d, "a" + sub)
            total = total + c * v
        return total

    def mixed_basis(self) -> list[RootVec]:
        return [self.vec(name) for name in MIXED_ORDER]

    def u1(self) -> Element:
        return self.b[0].element * self.bword("1232143") * self.b[2].element * self.bword("3412321")

    def phi(self) -> Element:
        return element_from_images(self.d, dict(zip(self.d.nodes, (parse_root(self.d, t) for t in PHI_ALPHA))))

    def x(self) -> Element:
        return self.bword("412321")


def verify_f4_in_e8() -> CaseReport:
    sys_ = F4InE8()
    d = sys_.d
    rep = CaseReport("f4_in_e8")
    basis, names = _simple_basis(d)
    f4 = parse_type("F4~")
    m = coxeter_matrix(f4)
    delta = null_root(d)

    bad = []
    for i, x in enumerate(f4.nodes):
        for j, y in enumerate(f4.nodes):
            if i <= j:
                el = sys_.b[x].element * sys_.b[y].element if i != j else sys_.b[x].element
                order = m[i][j] if i != j else 2
                if not (el**order).is_identity():
                    bad.append(f"(b{x} b{y})^{order}")
                if i != j and any((el**k).is_identity() for k in range(1, order)):
                    bad.append(f"(b{x} b{y}) has order below {order}")
    rep.add("a", "b_i satisfy the F4~ Coxeter relations", "none failing", ", ".join(bad) or "none failing")

    norms = tuple(norm2(sys_.beta[i]) for i in range(5))
    rep.add("b", "|beta_i|^2 for i = 0..4", (4, 4, 4, 2, 2), norms)

    order = [1, 2, 3, 4, 0]
    gram = tuple(tuple(inner(sys_.beta[i], sys_.beta[j]) for j in order) for i in order)
    f4_form = bilinear_form(f4)
    rep.add("c", "beta Gram matrix = 2 x F4~ form", tuple(tuple(2 * x for x in row) for row in f4_form), gram)
    j_roots = [parse_root(d, t) for t in ("a2", "a5", "a7", "a0")]
    dots = tuple(inner(sys_.beta[i], r) for i in range(5) for r in j_roots)
    rep.add("c", "beta_i . J", (0,) * 20, dots)

    mixed = sys_.mixed_basis()
    for i in (1, 2, 3, 4, 0):
        targets = [sys_.vec(t) for t in B_ACTION[i]]
        rep.add_table("d", f"b{i} on the mixed basis", sys_.b[i], mixed, targets, MIXED_ORDER)

    delta_f4 = sum((c * sys_.beta[i] for i, c in zip(range(5), (1, 2, 3, 4, 2))), RootVec(d, [0] * d.size))
    rep.add("e", "b0+2b1+3b2+4b3+2b4 = delta", delta, delta_f4)

    R = lambda s: parse_root(d, s)  # noqa: E731
    half = Fraction(1, 2)
    expected_coroots = [
        pi_map(half * R("a70") + R("a8")),
        pi_map(half * R("a57") + R("a6")),
        pi_map(half * R("a25") + R("a4")),
        pi_map(R("a3")),
        pi_map(R("a1")),
    ]
    # beta_0..beta_2 have norm 4, so they are not E8~ roots; use 2 beta / |beta|^2
    bcheck = [pi_map(Fraction(2) / norm2(sys_.beta[i]) * sys_.beta[i]) for i in range(5)]
    rep.add("f", "pi(beta_i check) for i = 0..4", tuple(expected_coroots), tuple(bcheck))
    H1 = 2 * bcheck[1] + 3 * bcheck[2] + 2 * bcheck[3] + bcheck[4]
    rep.add("f", "H1 = pi(a1 + 3/2 a2 + 2a3 + 3a4 + 5/2 a5 + 2a6 + a7)", pi_map(R("a1+3/2a2+2a3+3a4+5/2a5+2a6+a7")), H1)
    rep.add("f", "2 H1 = h6 - 2h8", parse_weight(d, "h6-2h8"), 2 * H1)
    rep.add("f", "H1 has a non-integer weight coordinate", True, not linalg.is_integral(H1.coords))

    u1 = sys_.u1()
    rep.add_table("g", "U1 on the simple roots", u1, basis, [R(t) for t in U1_ALPHA], names)
    rep.add_table("g", "U1 on the mixed basis", u1, mixed, [sys_.vec(t) for t in U1_MIXED], MIXED_ORDER)
    u1sq = u1 * u1
    rep.add_table("g", "U1^2 on the simple roots", u1sq, basis, [R(t) for t in U1_SQ_ALPHA], names)
    rep.add("g", "U1^2 is the translation by h6-2h8", parse_weight(d, "h6-2h8"), translation_vector(u1sq))
    rep.add("g", "|h6-2h8|^2", 4, weight_norm2(parse_weight(d, "h6-2h8")))
    rep.add("g", "U1 itself is not an E8~ translation", None, translation_vector(u1))

    phi = sys_.phi()
    x = sys_.x()
    target = parse_weight(d, "-2h1+2h3-h6")
    rep.add_table("h", "phi_a^2 on the simple roots", phi * phi, basis, [R(t) for t in PHI_SQ_ALPHA], names)
    rep.add("h", "phi_a^2 is the translation by -2h1+2h3-h6", target, translation_vector(phi * phi))
    rep.add("h", "|-2h1+2h3-h6|^2", 4, weight_norm2(target))
    rep.add("h", "X(h6-2h8) for X = b_412321", target, act_dual(x, parse_weight(d, "h6-2h8")))
    rep.add("h", "X U1^2 X^-1 = phi_a^2", True, x * u1sq * x.inverse() == phi * phi)
    lhs = parse_word(d, "0752").element * sys_.b[0].element * sys_.b[2].element * x * u1 * x.inverse()
    rep.add("h", "s_0752 b0 b2 X U1 X^-1 = phi_a", True, lhs == phi)
    return rep


# -- per-type data table -------------------------------------------------------


@dataclass
class Table3Row:
    diagram: DynkinDiagram
    num_positive: int
    c: tuple
    order_w: int
    k: tuple
    k_short: tuple | None
    weight_norms: tuple
    coroot_of_highest_long: DualVec
    coroot_of_highest_short: DualVec | None

    def to_json(self) -> dict:
        f = lambda xs: None if xs is None else [linalg.fmt(x) for x in xs]  # noqa: E731
        return {
            "type": self.diagram.name,
            "num_positive": self.num_positive,
            "c": list(self.c),
            "order_W": self.order_w,
            "k": f(self.k),
            "k_short": f(self.k_short),
            "weight_norms": f(self.weight_norms),
            "coroot_of_highest_long": str(self.coroot_of_highest_long),
            "coroot_of_highest_short": None if self.coroot_of_highest_short is None else str(self.coroot_of_highest_short),
        }


def table3(d: DynkinDiagram) -> Table3Row:
    """Root counts, marks, group order, coroot data and weight norms.

    ``k`` lists the coefficients of the highest-root coroot over the simple
    coroots, ``k_i = c_i |alpha_i|^2 / |highest|^2``; ``k_short`` does the
    same for the highest short root.
    """
    d = d.finite()
    table = enumerate_roots(d)
    hi = highest_root(d)
    c = hi.coords
    lengths = root_lengths(d)
    hn = norm2(hi)
    k = tuple(linalg.canon(Fraction(ci * li) / hn) for ci, li in zip(c, lengths))
    try:
        hs = highest_short_root(d)
    except ValueError:
        hs = None
    k_short = coroot_coordinates(coroot(hs)) if hs is not None else None
    assert k == coroot_coordinates(coroot(hi))
    norms = tuple(weight_gram(d)[i][i] for i in range(d.rank))
    return Table3Row(
        diagram=d,
        num_positive=len(table),
        c=c,
        order_w=weyl_group_order(d),
        k=k,
        k_short=k_short,
        weight_norms=norms,
        coroot_of_highest_long=coroot(hi),
        coroot_of_highest_short=coroot(hs) if hs is not None else None,
    )


def verify_all() -> list[CaseReport]:
    return [verify_e8_elliptic(), verify_f4_in_e8()]
