"""Weyl-Heisenberg displacements and the three-qubit Pauli group.

Three-qubit labels are six bits ``m1..m6`` grouped as one
``(x-power, z-power)`` pair per qubit. A label serializes as the integer
whose binary digits are ``m1 m2 m3 m4 m5 m6`` with ``m1`` most
significant, and prints as that six-character bit string.

The tensor factors follow the literal convention

    sigma_x^m1 sigma_z^m2  (x)  (-i)^(m3 m4) sigma_x^m3 sigma_z^m4
                           (x)  (-i)^(m5 m6) sigma_x^m5 sigma_z^m6

so the first factor carries no ``(-i)`` correction. A label with
``m1 = m2 = 1`` therefore realizes ``-i sigma_y`` on qubit one, which
differs from ``sigma_y`` by a global phase only.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .linalg import I2, SIGMA_X, SIGMA_Z, tensor


@dataclass(frozen=True)
class WhLabel:
    """Displacement label ``(l, alpha)`` in dimension ``d``, reduced mod d."""

    d: int
    l: int
    alpha: int

    def __post_init__(self) -> None:
        if self.d < 2:
            raise ValueError(f"dimension must be >= 2, got {self.d}")
        object.__setattr__(self, "l", self.l % self.d)
        object.__setattr__(self, "alpha", self.alpha % self.d)


def wh_shift(d: int) -> np.ndarray:
    """Cyclic shift ``X|n> = |n+1 mod d>``."""
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    return np.roll(np.eye(d, dtype=complex), 1, axis=0)


def wh_phase(d: int) -> np.ndarray:
    """Clock ``Z|n> = exp(2 pi i n / d)|n>``."""
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    return np.diag(np.exp(2j * np.pi * np.arange(d) / d))


def displacement(label: WhLabel) -> np.ndarray:
    """``D = (-exp(i pi / d))^(l alpha) X^l Z^alpha``."""
    d, l, a = label.d, label.l, label.alpha
    phase = (-np.exp(1j * np.pi / d)) ** (l * a)
    return phase * (np.linalg.matrix_power(wh_shift(d), l) @ np.linalg.matrix_power(wh_phase(d), a))


def wh_displacements(d: int) -> list[np.ndarray]:
    """All ``d^2`` displacements ordered lexicographically by ``(l, alpha)``."""
    return [displacement(WhLabel(d, l, a)) for l in range(d) for a in range(d)]


@dataclass(frozen=True, order=True)
class PauliLabel:
    """Six-bit label of a three-qubit displacement operator."""

    value: int

    def __post_init__(self) -> None:
        if not 0 <= self.value < 64:
            raise ValueError(f"Pauli label must be in [0, 64), got {self.value}")

    @classmethod
    def from_bits(cls, bits) -> "PauliLabel":
        """Build from ``(m1, ..., m6)`` or a six-character bit string."""
        if isinstance(bits, str):
            if len(bits) != 6 or set(bits) - {"0", "1"}:
                raise ValueError(f"expected six-character bit string, got {bits!r}")
            return cls(int(bits, 2))
        bits = tuple(int(b) for b in bits)
        if len(bits) != 6 or any(b not in (0, 1) for b in bits):
            raise ValueError(f"expected six bits, got {bits}")
        v = 0
        for b in bits:
            v = (v << 1) | b
        return cls(v)

    @classmethod
    def from_xz(cls, x: int, z: int) -> "PauliLabel":
        """Build from three-bit x- and z-power integers, qubit one first."""
        bits = []
        for q in range(3):
            shift = 2 - q
            bits += [(x >> shift) & 1, (z >> shift) & 1]
        return cls.from_bits(bits)

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.value >> (5 - k)) & 1 for k in range(6))

    @property
    def x_bits(self) -> int:
        """x-powers ``m1 m3 m5`` read as a three-bit integer."""
        m = self.bits
        return (m[0] << 2) | (m[2] << 1) | m[4]

    @property
    def z_bits(self) -> int:
        """z-powers ``m2 m4 m6`` read as a three-bit integer."""
        m = self.bits
        return (m[1] << 2) | (m[3] << 1) | m[5]

    def __xor__(self, other: "PauliLabel") -> "PauliLabel":
        return PauliLabel(self.value ^ other.value)

    def __str__(self) -> str:
        return format(self.value, "06b")


ALL_PAULI_LABELS = tuple(PauliLabel(v) for v in range(64))


def _factor(x: int, z: int, corrected: bool) -> np.ndarray:
    m = np.linalg.matrix_power(SIGMA_X, x) @ np.linalg.matrix_power(SIGMA_Z, z)
    if corrected and x and z:
        m = -1j * m
    return m


@lru_cache(maxsize=64)
def _three_qubit_pauli(value: int) -> np.ndarray:
    m = PauliLabel(value).bits
    out = tensor(
        _factor(m[0], m[1], corrected=False),
        _factor(m[2], m[3], corrected=True),
        _factor(m[4], m[5], corrected=True),
    )
    out.setflags(write=False)
    return out


def three_qubit_pauli(label: PauliLabel | int | str) -> np.ndarray:
    """Realize a label as an 8x8 unitary (see module docstring for phases)."""
    if isinstance(label, str):
        label = PauliLabel.from_bits(label)
    elif isinstance(label, int):
        label = PauliLabel(label)
    return _three_qubit_pauli(label.value).copy()


def is_antisymmetric(label: PauliLabel | int | str) -> bool:
    """True iff ``m1 m2 + m3 m4 + m5 m6`` is odd."""
    if isinstance(label, str):
        label = PauliLabel.from_bits(label)
    elif isinstance(label, int):
        label = PauliLabel(label)
    m = label.bits
    return (m[0] * m[1] + m[2] * m[3] + m[4] * m[5]) % 2 == 1


def antisymmetric_labels() -> list[PauliLabel]:
    return [lab for lab in ALL_PAULI_LABELS if is_antisymmetric(lab)]


def transpose_antisymmetric(m: np.ndarray, tol: float = 1e-12) -> bool:
    """Direct test ``max |M + M^T| < tol`` on a realized matrix."""
    return float(np.max(np.abs(m + m.T))) < tol


def _matmul_loops(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Triple-loop matrix product, kept independent of BLAS for cross-checks."""
    n, k = a.shape
    k2, p = b.shape
    if k != k2:
        raise ValueError("shape mismatch")
    out = np.zeros((n, p), dtype=complex)
    for i in range(n):
        for j in range(p):
            s = 0j
            for t in range(k):
                s += a[i, t] * b[t, j]
            out[i, j] = s
    return out


def ghz_sides(sign: int = -1, independent: bool = False) -> tuple[np.ndarray, np.ndarray]:
    """Both sides of the GHZ sign identity as matrices.

    Left side is ``X X X``; right side is ``sign * (X Z Z)(Z X Z)(Z Z X)``.
    """
    x, z = SIGMA_X, SIGMA_Z
    lhs = tensor(x, x, x)
    a, b, c = tensor(x, z, z), tensor(z, x, z), tensor(z, z, x)
    if independent:
        prod = _matmul_loops(_matmul_loops(a, b), c)
    else:
        prod = a @ b @ c
    return lhs, sign * prod


def verify_ghz_identity(sign: int = -1, independent: bool = False) -> bool:
    """Check ``X X X = sign * (X Z Z)(Z X Z)(Z Z X)`` entrywise."""
    lhs, rhs = ghz_sides(sign, independent)
    return bool(np.array_equal(lhs, rhs))


def pauli_identity() -> np.ndarray:
    return tensor(I2, I2, I2)
