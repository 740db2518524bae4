"""Small dense linear algebra for operators on spaces of dimension <= 64.

Matrices are plain ``numpy`` arrays of dtype ``complex128``; state vectors
are one-dimensional complex arrays. Every function here is pure.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

#: default algebraic tolerance for float comparisons
DEFAULT_TOL = 1e-10

MAX_DIM = 64

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def _square(a: np.ndarray, name: str = "matrix") -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"{name} must be square, got shape {a.shape}")
    return a


def dagger(a: np.ndarray) -> np.ndarray:
    return np.conj(np.asarray(a)).T


def hermitian_deviation(a: np.ndarray) -> float:
    """Largest entrywise ``|A - A^dagger|``."""
    a = _square(a)
    return float(np.max(np.abs(a - dagger(a)), initial=0.0))


def is_hermitian(a: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    return hermitian_deviation(a) <= tol


def hs_inner(a: np.ndarray, b: np.ndarray) -> complex:
    """Hilbert-Schmidt inner product ``tr(A^dagger B)``."""
    a = _square(a, "A")
    b = _square(b, "B")
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return complex(np.sum(np.conj(a) * b))


def tensor(*factors: np.ndarray) -> np.ndarray:
    """Kronecker product of one or more matrices, left to right."""
    if not factors:
        raise ValueError("tensor needs at least one factor")
    out = np.asarray(factors[0], dtype=complex)
    for f in factors[1:]:
        out = np.kron(out, np.asarray(f, dtype=complex))
    return out


def normalize(v: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=complex)
    n = np.linalg.norm(v)
    if n == 0:
        raise ValueError("cannot normalize the zero vector")
    return v / n


def projector(v: np.ndarray) -> np.ndarray:
    """Rank-1 projector onto the line through ``v`` (normalized first)."""
    v = normalize(v)
    return np.outer(v, np.conj(v))


def fidelity(u: np.ndarray, v: np.ndarray) -> float:
    """Projective overlap ``|<u,v>|^2`` of two normalized vectors."""
    return float(abs(np.vdot(u, v)) ** 2)


def _jacobi_symmetric(a: np.ndarray, tol: float = 1e-15, max_sweeps: int = 60) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations."""
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if n == 1:
        return a.diagonal().copy()
    scale = max(np.max(np.abs(a)), 1e-300)
    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(np.tril(a, -1) ** 2))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300 or abs(apq) < tol * 1e-3 * scale:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0)) if theta != 0 else 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                a[p, q] = a[q, p] = 0.0
    return a.diagonal().copy()


def hermitian_eigenvalues(a: np.ndarray, tol: float = DEFAULT_TOL) -> list[float]:
    """Real spectrum of a Hermitian matrix, sorted descending.

    Uses cyclic Jacobi rotations. Complex input is realified to the
    symmetric matrix ``[[Re A, -Im A], [Im A, Re A]]`` whose spectrum is
    that of ``A`` with every eigenvalue doubled; one copy of each pair is
    kept.
    """
    a = _square(a)
    n = a.shape[0]
    if n > MAX_DIM:
        raise ValueError(f"dimension {n} exceeds supported maximum {MAX_DIM}")
    dev = hermitian_deviation(a)
    if dev > tol * max(1.0, float(np.max(np.abs(a), initial=0.0))):
        raise ValueError(f"matrix is not Hermitian (deviation {dev:.3g})")
    a = (a + dagger(a)) / 2
    if np.all(a.imag == 0):
        vals = np.sort(_jacobi_symmetric(a.real))[::-1]
        return [float(x) for x in vals]
    re, im = a.real, a.imag
    big = np.block([[re, -im], [im, re]])
    vals = np.sort(_jacobi_symmetric(big))[::-1]
    return [float(x) for x in vals[::2]]


def gram_matrix(ops: Sequence[np.ndarray]) -> np.ndarray:
    """Matrix of Hilbert-Schmidt inner products ``tr(A_j^dagger A_k)``."""
    stack = np.array([np.asarray(o, dtype=complex).ravel() for o in ops])
    return np.conj(stack) @ stack.T


def operator_rank(ops: Sequence[np.ndarray], tol: float = DEFAULT_TOL) -> int:
    """Dimension of the real span of Hermitian operators.

    Counts Gram-matrix eigenvalues above ``tol`` times the largest one.
    """
    ops = list(ops)
    if not ops:
        raise ValueError("operator_rank of an empty list")
    shape = np.asarray(ops[0]).shape
    for o in ops:
        if np.asarray(o).shape != shape:
            raise ValueError("operators differ in dimension")
    # real inner product <A,B> = Re tr(A^dagger B) on the real vector space
    g = gram_matrix(ops).real
    vals = hermitian_eigenvalues(g, tol=max(tol, 1e-9))
    top = vals[0]
    if top <= 0:
        return 0
    return sum(1 for v in vals if v > tol * top)


def vector_rank(vectors: Sequence[np.ndarray], tol: float = DEFAULT_TOL) -> int:
    """Complex dimension of the span of state vectors."""
    stack = np.array([np.asarray(v, dtype=complex) for v in vectors])
    g = np.conj(stack) @ stack.T
    vals = hermitian_eigenvalues(g, tol=max(tol, 1e-9))
    top = vals[0]
    if top <= 0:
        return 0
    return sum(1 for v in vals if v > tol * top)


def omega(d: int = 3) -> complex:
    """Principal d-th root of unity ``exp(2 pi i / d)``."""
    return complex(np.exp(2j * np.pi / d))
