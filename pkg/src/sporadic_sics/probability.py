"""SIC probabilistic representation of quantum states and counting bounds."""

from __future__ import annotations

from fractions import Fraction
from math import comb

import numpy as np

from .golden import PHI, GoldenScalar
from .linalg import DEFAULT_TOL, hermitian_eigenvalues
from .sic import SicEnsemble

#: probabilities below this count as zeros
ZERO_TOL = 1e-9


def _check_state(rho: np.ndarray, tol: float) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if abs(np.trace(rho) - 1) > tol:
        raise ValueError(f"state has trace {np.trace(rho).real:.6g}, expected 1")
    vals = hermitian_eigenvalues(rho, tol=max(tol, 1e-9))
    if vals[-1] < -tol:
        raise ValueError(f"state is not positive semidefinite (eigenvalue {vals[-1]:.3g})")
    return rho


def represent(e: SicEnsemble, rho: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Born-rule probabilities ``p(i) = tr(rho P_i) / d``."""
    rho = _check_state(rho, max(tol, 1e-9))
    if rho.shape != (e.d, e.d):
        raise ValueError(f"state has shape {rho.shape}, ensemble dimension is {e.d}")
    p = np.array([np.sum(pi.T * rho).real for pi in e.projectors]) / e.d
    # clip rounding noise below zero; entries are exact zeros in the dual families
    return np.where(np.abs(p) < 1e-15, 0.0, p)


def represent_pure(e: SicEnsemble, psi: np.ndarray) -> np.ndarray:
    """Probabilities for the pure state ``|psi><psi|`` (``psi`` is normalized first)."""
    psi = np.asarray(psi, dtype=complex)
    psi = psi / np.linalg.norm(psi)
    vecs = np.array(e.vectors())
    return np.abs(np.conj(vecs) @ psi) ** 2 / e.d


def reconstruct(e: SicEnsemble, p: np.ndarray) -> np.ndarray:
    """``rho = sum_i [(d+1) p(i) - 1/d] P_i``."""
    p = np.asarray(p, dtype=float)
    if p.shape != (len(e.projectors),):
        raise ValueError(f"probability vector has length {p.size}, expected {len(e.projectors)}")
    d = e.d
    coeffs = (d + 1) * p - 1 / d
    return np.tensordot(coeffs, np.array(e.projectors), axes=1)


def validate_probability(p: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    if np.any(p < -tol):
        raise ValueError("negative probability")
    if abs(p.sum() - 1) > tol:
        raise ValueError(f"probabilities sum to {p.sum():.15g}")
    return p


def shannon_entropy(p: np.ndarray) -> float:
    """Entropy in bits, with ``0 log 0 = 0``."""
    p = np.asarray(p, dtype=float)
    nz = p[p > 0]
    return float(-np.sum(nz * np.log2(nz)))


def purity_sum(p: np.ndarray, d: int, tol: float = 1e-12) -> tuple[float, bool]:
    """``sum p^2`` and whether it equals the pure-state value ``2/(d(d+1))``."""
    s = float(np.sum(np.asarray(p, dtype=float) ** 2))
    return s, abs(s - 2 / (d * (d + 1))) <= tol


def n_eff(p: np.ndarray) -> float:
    s = float(np.sum(np.asarray(p, dtype=float) ** 2))
    if s == 0:
        raise ValueError("effective number undefined for the zero vector")
    return 1 / s


def n_eff_pure(d: int) -> int:
    """Pure-state effective number of outcomes, ``C(d+1, 2)``."""
    return comb(d + 1, 2)


def max_zero_bound(d: int, field: str = "complex") -> int:
    """Most zeros a represented pure state can have.

    ``d(d-1)/2`` over the complex numbers; ``(d^2 - 1)/3`` over the reals,
    rounded down when it is not an integer.
    """
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    if field == "complex":
        return d * (d - 1) // 2
    if field == "real":
        return (d * d - 1) // 3
    raise ValueError(f"unknown field {field!r}")


def count_zeros(p: np.ndarray, tol: float = ZERO_TOL) -> int:
    return int(np.sum(np.abs(np.asarray(p, dtype=float)) < tol))


def fibonacci_lucas_dims(k_max: int) -> list[int]:
    """``phi^(2k) + phi^(-2k) + 1`` for ``k = 1..k_max``, evaluated exactly."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    out = []
    for k in range(1, k_max + 1):
        v: GoldenScalar = PHI ** (2 * k) + PHI ** (-2 * k) + 1
        if not v.is_rational() or v.a.denominator != 1:
            raise ArithmeticError(f"non-integer value {v} at k={k}")
        out.append(int(v.a))
    return out


def fibonacci_lucas_exact(k: int) -> GoldenScalar:
    return PHI ** (2 * k) + PHI ** (-2 * k) + 1


def binom_fraction(d: int) -> Fraction:
    """Pure-state purity ``2/(d(d+1))`` as an exact fraction."""
    return Fraction(2, d * (d + 1))
