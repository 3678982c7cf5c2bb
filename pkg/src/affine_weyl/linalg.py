"""Exact small-matrix helpers.

Matrices are tuples of row tuples holding ``int`` or ``Fraction`` entries.
Values with denominator one are always stored as ``int`` so that hashing
and JSON output stay canonical.  Inversion and kernels are delegated to
sympy; everything on hot paths is plain integer arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

import sympy

Number = int | Fraction
Vector = tuple
Matrix = tuple


def canon(x) -> Number:
    """Return ``x`` as an int when integral, else as a Fraction."""
    if isinstance(x, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, sympy.Rational):
        p, q = int(x.p), int(x.q)
        return p if q == 1 else Fraction(p, q)
    if isinstance(x, Rational):
        return canon(Fraction(x.numerator, x.denominator))
    if isinstance(x, str):
        return canon(Fraction(x))
    raise TypeError(f"not an exact rational: {x!r}")


def vec(xs: Iterable) -> Vector:
    return tuple(canon(x) for x in xs)


def mat(rows: Iterable[Iterable]) -> Matrix:
    return tuple(vec(r) for r in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(canon(sum(x * y for x, y in zip(row, col))) for col in bt) for row in a)


def matvec(a: Matrix, x: Sequence) -> Vector:
    return tuple(canon(sum(r * y for r, y in zip(row, x))) for row in a)


def dot(x: Sequence, y: Sequence) -> Number:
    return canon(sum(a * b for a, b in zip(x, y)))


def add(x: Sequence, y: Sequence) -> Vector:
    return tuple(canon(a + b) for a, b in zip(x, y))


def sub(x: Sequence, y: Sequence) -> Vector:
    return tuple(canon(a - b) for a, b in zip(x, y))


def scale(c, x: Sequence) -> Vector:
    return tuple(canon(c * a) for a in x)


def inverse(a: Matrix) -> Matrix:
    m = sympy.Matrix(a)
    if m.det() == 0:
        raise ZeroDivisionError("singular matrix")
    return mat(m.inv().tolist())


def nullspace(a: Matrix) -> list[Vector]:
    return [vec(v) for v in sympy.Matrix(a).nullspace()]


def rank(a: Matrix) -> int:
    return sympy.Matrix(a).rank()


def solve(a: Matrix, b: Sequence) -> Vector:
    """Solve ``a x = b`` for square nonsingular ``a``."""
    return matvec(inverse(a), b)


def is_integral(xs: Iterable) -> bool:
    return all(isinstance(canon(x), int) for x in xs)


def fmt(x: Number) -> str:
    x = canon(x)
    return str(x) if isinstance(x, int) else f"{x.numerator}/{x.denominator}"
