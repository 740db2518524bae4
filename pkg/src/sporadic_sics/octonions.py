"""Octonion units, the Fano plane, and the 28 equiangular lines in R^7.

Everything here uses exact integer arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .pauli import PauliLabel, is_antisymmetric

# Cayley-Graves table: _TABLE[i][j] = signed index of e_i e_j, with e_0 = 1.
# A signed index s means sign(s) * e_|s|, and -8 stands for -1 (i.e. -e_0).
_NEG_ONE = -8
_TABLE = (
    (0, 1, 2, 3, 4, 5, 6, 7),
    (1, _NEG_ONE, 3, -2, 5, -4, -7, 6),
    (2, -3, _NEG_ONE, 1, 6, 7, -4, -5),
    (3, 2, -1, _NEG_ONE, 7, -6, 5, -4),
    (4, -5, -6, -7, _NEG_ONE, 1, 2, 3),
    (5, 4, -7, 6, -1, _NEG_ONE, -3, 2),
    (6, 7, 4, -5, -2, 3, _NEG_ONE, -1),
    (7, -6, 5, 4, -3, -2, 1, _NEG_ONE),
)


@dataclass(frozen=True)
class OctonionUnit:
    """``sign * e_index`` with ``e_0 = 1``."""

    index: int
    sign: int = 1

    def __post_init__(self) -> None:
        if not 0 <= self.index <= 7:
            raise ValueError(f"octonion index must be in 0..7, got {self.index}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    def __neg__(self) -> "OctonionUnit":
        return OctonionUnit(self.index, -self.sign)

    def __mul__(self, other: "OctonionUnit") -> "OctonionUnit":
        return octonion_mul(self, other)

    def __str__(self) -> str:
        name = "1" if self.index == 0 else f"e{self.index}"
        return name if self.sign > 0 else f"-{name}"


def e(i: int) -> OctonionUnit:
    return OctonionUnit(i)


def octonion_mul(a: OctonionUnit, b: OctonionUnit) -> OctonionUnit:
    entry = _TABLE[a.index][b.index]
    if entry == _NEG_ONE:
        idx, sgn = 0, -1
    else:
        idx, sgn = abs(entry), (1 if entry >= 0 else -1)
    return OctonionUnit(idx, a.sign * b.sign * sgn)


def product_sign(i: int, j: int) -> int:
    """Sign in ``e_i e_j = +- e_k``."""
    return octonion_mul(e(i), e(j)).sign


#: Fano lines in the listed order, points labelled by octonion index
FANO_LINES: tuple[tuple[int, int, int], ...] = (
    (1, 2, 3),
    (1, 4, 5),
    (1, 7, 6),
    (2, 4, 6),
    (2, 5, 7),
    (3, 4, 7),
    (3, 6, 5),
)


@dataclass(frozen=True)
class FanoPlane:
    lines: tuple[tuple[int, int, int], ...]
    incidence: tuple[tuple[int, ...], ...]  # incidence[line][point-1]

    def lines_through(self, point: int) -> list[int]:
        return [k for k, ln in enumerate(self.lines) if point in ln]

    def line_index(self, line: Sequence[int]) -> int:
        key = frozenset(line)
        for k, ln in enumerate(self.lines):
            if frozenset(ln) == key:
                return k
        raise KeyError(tuple(line))


def fano_plane() -> FanoPlane:
    inc = tuple(tuple(1 if p in ln else 0 for p in range(1, 8)) for ln in FANO_LINES)
    return FanoPlane(FANO_LINES, inc)


def fano_axioms(plane: FanoPlane) -> dict[str, bool]:
    m = plane.incidence
    return {
        "each line has 3 points": all(sum(row) == 3 for row in m),
        "each point on 3 lines": all(sum(row[p] for row in m) == 3 for p in range(7)),
        "two lines share 1 point": all(
            sum(x * y for x, y in zip(m[a], m[b])) == 1 for a, b in itertools.combinations(range(7), 2)
        ),
        "lines closed under xor": all(ln[0] ^ ln[1] == ln[2] for ln in plane.lines),
    }


@dataclass(frozen=True)
class LineSet:
    """Equiangular line candidates with exact entries.

    ``cosine_squared`` is the exact common value of
    ``<u,v>^2 / (|u|^2 |v|^2)`` claimed for distinct lines; ``tags`` names
    each vector; ``orbit`` optionally holds the signed vectors the lines
    were collected from.
    """

    dimension: int
    vectors: tuple[tuple, ...]
    cosine_squared: object
    tags: tuple = ()
    orbit: tuple[tuple, ...] = ()

    def __len__(self) -> int:
        return len(self.vectors)

    @property
    def cosine(self) -> float:
        return float(self.cosine_squared) ** 0.5


def dot(u: Sequence, v: Sequence):
    total = 0
    for a, b in zip(u, v):
        total = total + a * b
    return total


def equiangular_defects(lines: LineSet) -> list[tuple[int, int]]:
    """Pairs violating ``<u,v>^2 == c^2 |u|^2 |v|^2`` exactly."""
    c2 = lines.cosine_squared
    bad = []
    for i, j in itertools.combinations(range(len(lines.vectors)), 2):
        u, v = lines.vectors[i], lines.vectors[j]
        ip = dot(u, v)
        if ip * ip != c2 * dot(u, u) * dot(v, v):
            bad.append((i, j))
    return bad


def fano_lines_r7() -> LineSet:
    """Rows of the incidence matrix: norm^2 3, pairwise inner product 1."""
    m = fano_plane().incidence
    return LineSet(7, tuple(m), Fraction(1, 9), tags=tuple(FANO_LINES))


def antiflags() -> list[tuple[int, int]]:
    """``(line_index, point)`` pairs with the point off the line, line-major."""
    return [(k, p) for k, ln in enumerate(FANO_LINES) for p in range(1, 8) if p not in ln]


def antiflag_vector(line_index: int, point: int) -> tuple[int, ...]:
    """Incidence row of the line, entry ``q`` signed by ``e_q e_point``."""
    ln = FANO_LINES[line_index]
    if point in ln:
        raise ValueError(f"point {point} lies on line {ln}")
    return tuple(product_sign(q, point) if q in ln else 0 for q in range(1, 8))


def antiflag_lines_28() -> LineSet:
    flags = antiflags()
    vecs = tuple(antiflag_vector(k, p) for k, p in flags)
    return LineSet(7, vecs, Fraction(1, 9), tags=tuple(flags))


def line_code(line: Sequence[int]) -> int:
    """Three-bit code of a Fano line: the nonzero ``c`` with ``p . c = 0 (mod 2)`` on it.

    Points are read as three-bit vectors; each line is the set of nonzero
    points orthogonal (mod 2) to a unique nonzero vector, its code.
    """
    pts = set(line)
    for c in range(1, 8):
        if all(bin(p & c).count("1") % 2 == 0 for p in pts):
            return c
    raise ValueError(f"{tuple(line)} is not a Fano line")


def antiflag_to_pauli(line: int | Sequence[int], point: int) -> PauliLabel:
    """Pauli label with x-powers = point bits and z-powers = the line's code.

    ``line`` is an index into :data:`FANO_LINES` or the line's points.
    Incident pairs raise ``ValueError``: they give symmetric labels.
    """
    pts = FANO_LINES[line] if isinstance(line, int) else tuple(line)
    label = PauliLabel.from_xz(point, line_code(pts))
    if point in pts:
        raise ValueError(f"({pts}, {point}) is a flag; label {label} is symmetric")
    return label


def flag_label(line: int | Sequence[int], point: int) -> PauliLabel:
    """Same encoding as :func:`antiflag_to_pauli` without the anti-flag check."""
    pts = FANO_LINES[line] if isinstance(line, int) else tuple(line)
    return PauliLabel.from_xz(point, line_code(pts))


def antiflag_bijection() -> dict[tuple[int, int], PauliLabel]:
    return {(k, p): antiflag_to_pauli(k, p) for k, p in antiflags()}


def so8_lines_28() -> LineSet:
    """Per point, its lines-through indicator plus the three single sign flips."""
    plane = fano_plane()
    vecs, tags = [], []
    for p in range(1, 8):
        base = [plane.incidence[k][p - 1] for k in range(7)]
        vecs.append(tuple(base))
        tags.append((p, None))
        for k in plane.lines_through(p):
            flipped = list(base)
            flipped[k] = -flipped[k]
            vecs.append(tuple(flipped))
            tags.append((p, k))
    return LineSet(7, tuple(vecs), Fraction(1, 9), tags=tuple(tags))


def hoggar_label_to_octonions(label: PauliLabel | int | str) -> tuple[OctonionUnit, OctonionUnit]:
    """``(x-bits, z-bits)`` as a pair of units from ``{1, e1, ..., e7}``."""
    if isinstance(label, str):
        label = PauliLabel.from_bits(label)
    elif isinstance(label, int):
        label = PauliLabel(label)
    return e(label.x_bits), e(label.z_bits)


def antisymmetry_matches_antiflags() -> bool:
    """Anti-flags hit every antisymmetric label once; flags give symmetric labels."""
    images = [antiflag_to_pauli(k, p) for k, p in antiflags()]
    anti = {lab for lab in map(PauliLabel, range(64)) if is_antisymmetric(lab)}
    flags_symmetric = all(
        not is_antisymmetric(flag_label(k, p)) for k, ln in enumerate(FANO_LINES) for p in ln
    )
    return len(set(images)) == 28 and set(images) == anti and flags_symmetric
