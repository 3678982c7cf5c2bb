"""Published values transcribed verbatim, plus explicit corrections.

Tables are lists in node order unless a comment says otherwise.  Roots use
the package's text syntax (``a2+d`` etc.), weights use ``2h1-h2``.
"""

from fractions import Fraction as F
from math import factorial

CARTAN = {
    "B3": [[2, -1, 0], [-1, 2, -2], [0, -1, 2]],
    "B3~": [[2, -1, 0, 0], [-1, 2, -2, -1], [0, -1, 2, 0], [0, -1, 0, 2]],
    "C3": [[2, -1, 0], [-1, 2, -1], [0, -2, 2]],
    "C3~": [[2, -1, 0, -1], [-1, 2, -1, 0], [0, -2, 2, 0], [-2, 0, 0, 2]],
    "F4": [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]],
    "F4~": [[2, -1, 0, 0, -1], [-1, 2, -2, 0, 0], [0, -1, 2, -1, 0], [0, 0, -1, 2, 0], [-1, 0, 0, 0, 2]],
    "G2": [[2, -1], [-3, 2]],
    "G2~": [[2, -1, 0], [-3, 2, -1], [0, -1, 2]],
    "E8~": [
        [2, 0, -1, 0, 0, 0, 0, 0, 0],
        [0, 2, 0, -1, 0, 0, 0, 0, 0],
        [-1, 0, 2, -1, 0, 0, 0, 0, 0],
        [0, -1, -1, 2, -1, 0, 0, 0, 0],
        [0, 0, 0, -1, 2, -1, 0, 0, 0],
        [0, 0, 0, 0, -1, 2, -1, 0, 0],
        [0, 0, 0, 0, 0, -1, 2, -1, 0],
        [0, 0, 0, 0, 0, 0, -1, 2, -1],
        [0, 0, 0, 0, 0, 0, 0, -1, 2],
    ],
}

# (long, short) positive roots as coefficient strings
ROOTS = {
    "B3": ({"a12233", "a1233", "a233", "a12", "a2", "a1"}, {"a123", "a23", "a3"}),
    "C3": ({"a11223", "a223", "a3"}, {"a1223", "a123", "a23", "a12", "a2", "a1"}),
    "G2": ({"3a1+2a2", "3a1+a2", "a2"}, {"2a1+a2", "a1+a2", "a1"}),
}
F4_ROOT_SPLIT = (12, 12)

# translation words, basis images on (a1..an, a0) and X_1 shifts
TRANSLATIONS = [
    ("B3~", "23212320", ["a1", "a2+d", "a3", "a0-2d"], "-h2"),
    ("B3~", "23202321", ["a1-2d", "a2+d", "a3", "a0"], "2h1-h2"),
    ("B3~", "0232012321", ["a1-2d", "a2", "a3", "a0+2d"], "2h1"),
    ("B3~", "2012320123", ["a1", "a2+2d", "a3-2d", "a0"], "-2h2+2h3"),
    ("C3~", "123210", ["a1+d", "a2", "a3", "a0-2d"], "-h1"),
    ("C3~", "210123", ["a1", "a2+d", "a3-2d", "a0"], "-h2+2h3"),
    ("C3~", "0102321232", ["a1", "a2-d", "a3", "a0+2d"], "h2"),
    ("C3~", "2320102321", ["a1-2d", "a2+d", "a3", "a0"], "2h1-h2"),
    ("F4~", "1232143" "2" "3412321" "0", ["a1+d", "a2", "a3", "a4", "a0-2d"], "-h1"),
    ("F4~", "2341232" "01" "2321432", ["a1+d", "a2-2d", "a3-d", "a4", "a0"], "-h1+2h2-h3"),
    ("F4~", "0123210" "4321323" "4" "3231234", ["a1", "a2", "a3", "a4-d", "a0+2d"], "h4"),
    (
        "F4~",
        "3231234" "0123210" "4321323" "4" "3231234" "4321323",
        ["a1", "a2", "a3+d", "a4-2d", "a0"],
        "-h3+2h4",
    ),
    ("G2~", "212120", ["a1", "a2+d", "a0-2d"], "-h2"),
    ("G2~", "12021", ["a1+d", "a2-2d", "a0-d"], "-h1+2h2"),
    ("G2~", "0212012121", ["a1-d", "a2", "a0+3d"], "h1"),
    ("G2~", "2102120121", ["a1-2d", "a2+3d", "a0"], "2h1-3h2"),
]

# printed rows that disagree with t_j(a_i) = a_i - a_ij d; keyed by the
# printed (type, word), valued by the corrected (word, images)
TRANSLATION_CORRECTIONS = {
    # a0 -> a0 - a_01 d with a_01 = -2
    ("C3~", "2320102321"): ("2320102321", ["a1-2d", "a2+d", "a3", "a0+2d"]),
    # the inverse of s_3412321 was printed as s_232143; a3 -> a3 - a_32 d with a_32 = -1
    ("F4~", "2341232" "01" "2321432"): ("3412321" "0" "1232143" "2", ["a1+d", "a2-2d", "a3+d", "a4", "a0"]),
    # s_12 s_021212 s_21 reduces to 120212; a0 -> a0 - a_02 d with a_02 = -1
    ("G2~", "12021"): ("120212", ["a1+d", "a2-2d", "a0+d"]),
}

# G2 t_2 as the product s_12 t_0^-1 s_21 before simplification
G2_T2_UNSIMPLIFIED = "12" "021212" "21"


def corrected_translations():
    out = []
    for name, word, images, shift in TRANSLATIONS:
        if (name, word) in TRANSLATION_CORRECTIONS:
            word, images = TRANSLATION_CORRECTIONS[(name, word)]
        out.append((name, word, images, shift))
    return out

# weight translations: (type, j, automorphism cycles, word, images of a1..an, a0)
WEIGHT_TRANSLATIONS = [
    ("B3~", 1, "(0 1)", "12321", ["a1-d", "a2", "a3", "a0+d"]),
    ("B3~", 2, "()", "02321232", ["a1", "a2-d", "a3", "a0+2d"]),
    ("B3~", 3, "(0 1)", "123023123", ["a1", "a2", "a3-d", "a0+2d"]),
    ("C3~", 1, "()", "012321", ["a1-d", "a2", "a3", "a0+2d"]),
    ("C3~", 2, "()", "010" "2321232", ["a1", "a2-d", "a3", "a0+2d"]),
    ("C3~", 3, "(0 3)(1 2)", "321323", ["a1", "a2", "a3-d", "a0+d"]),
]

# the per-type data table as printed; E6/E7 marks are printed in chain order
# followed by the branch node, so they are reordered below
PRINTED_TABLE = {
    "E6": dict(num_positive=36, c_printed=(1, 2, 3, 2, 1, 2), order_w=2**7 * 3**4 * 5,
               weight_norms=(2, F(4, 3), F(10, 3), 6, F(10, 3), F(4, 3)), long="h1", short=None),
    "E7": dict(num_positive=63, c_printed=(2, 3, 4, 3, 2, 1, 2), order_w=2**10 * 3**4 * 5 * 7,
               weight_norms=(2, F(7, 2), 6, 12, F(15, 2), 4, F(3, 2)), long="h1", short=None),
    "E8": dict(num_positive=120, c_printed=(2, 3, 4, 6, 5, 4, 3, 2), order_w=2**14 * 3**5 * 5**2 * 7,
               weight_norms=(4, 8, 14, 30, 20, 12, 6, 2), long="h8", short=None),
    "F4": dict(num_positive=24, c_printed=(2, 3, 4, 2), order_w=2**7 * 3**2, k_printed=(2, 4, 3, 2),
               weight_norms=(2, 6, 12, 4), long="h1", short="h4"),
    "G2": dict(num_positive=6, c_printed=(3, 2), order_w=12, k_printed=(2, 3),
               weight_norms=(2, F(2, 3)), long="h2", short="h1"),
}


def printed_c_in_node_order(name: str) -> tuple:
    c = PRINTED_TABLE[name]["c_printed"]
    if name == "E6":
        # chain 2,3,4,5,6 then node 1
        return (c[5],) + c[:5]
    if name == "E7":
        # chain 1,3,4,5,6,7 then node 2
        return (c[0], c[6]) + c[1:6]
    return c


def classical_row(family: str, n: int) -> dict:
    """Printed closed forms for the classical rows, evaluated at rank ``n``."""
    if family == "A":
        return dict(num_positive=n * (n + 1) // 2, c=(1,) * n, order_w=factorial(n + 1), k=(1,) * n,
                    weight_norms=tuple(F(i * (n + 1 - i), n + 1) for i in range(1, n + 1)),
                    long="h1+h" + str(n), short=None)
    if family == "B":
        return dict(num_positive=n * n, c=(1,) + (2,) * (n - 1), order_w=2**n * factorial(n),
                    k=(1,) + (2,) * (n - 2) + (1,), weight_norms=tuple(range(1, n + 1)), long="h2", short="2h1")
    if family == "C":
        return dict(num_positive=n * n, c=(2,) * (n - 1) + (1,), order_w=2**n * factorial(n), k=(1,) * n,
                    weight_norms=tuple(range(1, n)) + (F(n, 4),), long="2h1", short="h2")
    if family == "D":
        c = (1,) + (2,) * (n - 3) + (1, 1)
        return dict(num_positive=n * (n - 1), c=c, order_w=2 ** (n - 1) * factorial(n), k=c,
                    weight_norms=tuple(range(1, n - 1)) + (F(n, 4), F(n, 4)), long="h2", short=None)
    raise ValueError(family)


# printed entries that disagree with direct computation, with the value used
CORRECTIONS = {
    # the C_n long coroot; 2 a_highest / |a_highest|^2 pairs to (1, 0, ..., 0)
    ("C", "long"): "h1",
    # C2 is B2 with the nodes swapped, so h2 appears with coefficient 2
    ("C2", "short"): "2h2",
}
