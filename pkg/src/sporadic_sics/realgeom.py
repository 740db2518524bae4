"""Real equiangular lines in dimensions 2 and 3, and the counting bounds.

The three-dimensional constructions run in exact golden-field arithmetic;
matrices are tuples of row tuples.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import sqrt

import numpy as np

from .golden import PHI, GoldenScalar
from .octonions import LineSet, dot

Matrix = tuple[tuple, ...]

IDENTITY3: Matrix = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n, m = len(a), len(b[0])
    return tuple(tuple(dot(a[i], [b[k][j] for k in range(len(b))]) for j in range(m)) for i in range(n))


def matvec(a: Matrix, v: tuple) -> tuple:
    return tuple(dot(row, v) for row in a)


def neg(a: Matrix) -> Matrix:
    return tuple(tuple(-x for x in row) for row in a)


def matpow(a: Matrix, n: int) -> Matrix:
    out = IDENTITY3
    for _ in range(n):
        out = matmul(out, a)
    return out


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def det3(a: Matrix):
    return (
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    )


def real_wh_ops() -> tuple[Matrix, Matrix]:
    """Cyclic shift ``X`` and sign operator ``Z = diag(1, -1, 1)``."""
    x = ((0, 0, 1), (1, 0, 0), (0, 1, 0))
    z = ((1, 0, 0), (0, -1, 0), (0, 0, 1))
    return x, z


def group_closure(generators: list[Matrix], limit: int = 24) -> list[Matrix]:
    """Breadth-first closure under multiplication; raises past ``limit`` elements."""
    elements = [IDENTITY3]
    seen = {IDENTITY3}
    frontier = [IDENTITY3]
    while frontier:
        nxt = []
        for g in frontier:
            for h in generators:
                k = matmul(g, h)
                if k not in seen:
                    seen.add(k)
                    elements.append(k)
                    nxt.append(k)
                    if len(elements) > limit:
                        raise ArithmeticError(f"closure exceeded {limit} elements")
        frontier = nxt
    return elements


def tetrahedral_group() -> list[Matrix]:
    """Closure of ``{X, -Z}``."""
    x, z = real_wh_ops()
    return group_closure([x, neg(z)])


def golden_fiducial() -> GoldenScalar:
    """Positive root of ``y^2 - y - 1``."""
    return PHI


def fiducial_overlap_condition(y: GoldenScalar) -> tuple[GoldenScalar, GoldenScalar]:
    """``(<Zv, v>, <X^2 v, v>)`` for ``v = (0, 1, y)``."""
    x, z = real_wh_ops()
    v = (GoldenScalar(0), GoldenScalar(1), y)
    return dot(matvec(z, v), v), dot(matvec(matpow(x, 2), v), v)


def _canonical_line(v: tuple) -> tuple:
    """Representative with first nonzero entry positive."""
    for x in v:
        if x != 0:
            return v if x > 0 else tuple(-c for c in v)
    return v


def icosahedron_orbit() -> LineSet:
    """Orbit of ``(0, 1, phi)`` under the tetrahedral group and global sign."""
    zero, one = GoldenScalar(0), GoldenScalar(1)
    v = (zero, one, golden_fiducial())
    orbit: list[tuple] = []
    for g in tetrahedral_group():
        for s in (1, -1):
            w = tuple(s * c for c in matvec(g, v))
            if w not in orbit:
                orbit.append(w)
    orbit.sort(key=lambda w: tuple(float(c) for c in w))
    lines: list[tuple] = []
    for w in orbit:
        c = _canonical_line(w)
        if c not in lines:
            lines.append(c)
    return LineSet(3, tuple(lines), Fraction(1, 5), orbit=tuple(orbit))


def icosahedron_expected() -> set[tuple]:
    """The twelve vectors ``(0, +-1, +-phi)`` and their cyclic shifts."""
    zero = GoldenScalar(0)
    out = set()
    for s1, s2 in itertools.product((1, -1), repeat=2):
        a, b = GoldenScalar(s1), s2 * PHI
        out |= {(zero, a, b), (a, b, zero), (b, zero, a)}
    return out


def trine_r2() -> tuple[list[np.ndarray], LineSet]:
    """Three unit vectors at 120 degrees; returns floats and an exact-cosine line set."""
    angles = [2 * np.pi * k / 3 for k in range(3)]
    vecs = [np.array([np.cos(t), np.sin(t)]) for t in angles]
    lines = LineSet(2, tuple(tuple(float(x) for x in v) for v in vecs), Fraction(1, 4))
    return vecs, lines


def gerzon_bound(d: int, field: str = "complex") -> int:
    """Maximum number of equiangular lines.

    ``field`` is ``"real"`` (d(d+1)/2), ``"complex"`` (d^2) or
    ``"octonionic3"`` (27, defined only for d = 3).
    """
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    if field == "real":
        return d * (d + 1) // 2
    if field == "complex":
        return d * d
    if field == "octonionic3":
        if d != 3:
            raise ValueError("the octonionic bound is only defined for d = 3")
        # dimension of the self-adjoint 3x3 octonionic matrices
        return 3 + 3 * 8
    raise ValueError(f"unknown field {field!r}")


def welch_angle(d: int, field: str = "complex") -> float:
    """Common cosine of a Gerzon-saturating set: ``1/sqrt(d+1)`` complex, ``1/sqrt(d+2)`` real."""
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    if field == "complex":
        return 1 / sqrt(d + 1)
    if field == "real":
        return 1 / sqrt(d + 2)
    raise ValueError(f"unknown field {field!r}")
