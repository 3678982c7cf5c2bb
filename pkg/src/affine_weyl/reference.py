"""Closed-form reference values for the per-type data table.

Used by ``verify table3``; :func:`affine_weyl.casestudies.table3` computes
the same quantities independently and never reads this module.  All lists
are in node order.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

FIXTURE_RANKS = {"A": range(2, 9), "B": range(2, 9), "C": range(2, 9), "D": range(4, 9)}
EXCEPTIONAL = [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]


def fixture_types() -> list[tuple[str, int]]:
    out = [(f, n) for f, ranks in FIXTURE_RANKS.items() for n in ranks]
    return out + EXCEPTIONAL


def _weight(n: int, coeffs: dict[int, int]) -> tuple:
    return tuple(coeffs.get(i, 0) for i in range(1, n + 1))


def expected_row(family: str, n: int) -> dict:
    """Reference data; coroots are given as weight coordinates over ``h_1..h_n``."""
    F = Fraction
    if family == "A":
        c = (1,) * n
        return dict(
            num_positive=n * (n + 1) // 2,
            c=c,
            order_w=factorial(n + 1),
            k=c,
            weight_norms=tuple(F(i * (n + 1 - i), n + 1) for i in range(1, n + 1)),
            coroot_long=_weight(n, {1: 1, n: 1}) if n > 1 else (2,),
            coroot_short=None,
        )
    if family == "B":
        return dict(
            num_positive=n * n,
            c=(1,) + (2,) * (n - 1),
            order_w=2**n * factorial(n),
            k=(1,) + (2,) * (n - 2) + (1,),
            weight_norms=tuple(range(1, n + 1)),
            coroot_long=_weight(n, {2: 1}),
            coroot_short=_weight(n, {1: 2}),
        )
    if family == "C":
        # C2 is B2 with the nodes swapped, so its short coroot is 2h2
        short = _weight(n, {2: 2}) if n == 2 else _weight(n, {2: 1})
        return dict(
            num_positive=n * n,
            c=(2,) * (n - 1) + (1,),
            order_w=2**n * factorial(n),
            k=(1,) * n,
            weight_norms=tuple(range(1, n)) + (F(n, 4),),
            coroot_long=_weight(n, {1: 1}),
            coroot_short=short,
        )
    if family == "D":
        c = (1,) + (2,) * (n - 3) + (1, 1)
        return dict(
            num_positive=n * (n - 1),
            c=c,
            order_w=2 ** (n - 1) * factorial(n),
            k=c,
            weight_norms=tuple(range(1, n - 1)) + (F(n, 4), F(n, 4)),
            coroot_long=_weight(n, {2: 1}),
            coroot_short=None,
        )
    exceptional = {
        ("E", 6): dict(
            num_positive=36,
            c=(2, 1, 2, 3, 2, 1),
            order_w=2**7 * 3**4 * 5,
            weight_norms=(2, F(4, 3), F(10, 3), 6, F(10, 3), F(4, 3)),
            coroot_long=_weight(6, {1: 1}),
            coroot_short=None,
        ),
        ("E", 7): dict(
            num_positive=63,
            c=(2, 2, 3, 4, 3, 2, 1),
            order_w=2**10 * 3**4 * 5 * 7,
            weight_norms=(2, F(7, 2), 6, 12, F(15, 2), 4, F(3, 2)),
            coroot_long=_weight(7, {1: 1}),
            coroot_short=None,
        ),
        ("E", 8): dict(
            num_positive=120,
            c=(2, 3, 4, 6, 5, 4, 3, 2),
            order_w=2**14 * 3**5 * 5**2 * 7,
            weight_norms=(4, 8, 14, 30, 20, 12, 6, 2),
            coroot_long=_weight(8, {8: 1}),
            coroot_short=None,
        ),
        ("F", 4): dict(
            num_positive=24,
            c=(2, 3, 4, 2),
            order_w=2**7 * 3**2,
            k=(2, 3, 2, 1),
            k_short=(2, 4, 3, 2),
            weight_norms=(2, 6, 12, 4),
            coroot_long=_weight(4, {1: 1}),
            coroot_short=_weight(4, {4: 1}),
        ),
        ("G", 2): dict(
            num_positive=6,
            c=(3, 2),
            order_w=12,
            k=(1, 2),
            k_short=(2, 3),
            weight_norms=(2, F(2, 3)),
            coroot_long=_weight(2, {2: 1}),
            coroot_short=_weight(2, {1: 1}),
        ),
    }
    row = dict(exceptional[(family, n)])
    row.setdefault("k", row["c"])
    return row


def compare_row(row, expected: dict) -> list[str]:
    """Names of mismatching fields between a computed row and a reference dict."""
    got = dict(
        num_positive=row.num_positive,
        c=tuple(row.c),
        order_w=row.order_w,
        k=tuple(row.k),
        weight_norms=tuple(row.weight_norms),
        coroot_long=tuple(row.coroot_of_highest_long.weight_coords),
        coroot_short=None if row.coroot_of_highest_short is None else tuple(row.coroot_of_highest_short.weight_coords),
    )
    if "k_short" in expected:
        got["k_short"] = tuple(row.k_short)
    norm = lambda v: tuple(v) if isinstance(v, (list, tuple, range)) else v  # noqa: E731
    return [key for key, val in expected.items() if norm(got[key]) != norm(val)]
