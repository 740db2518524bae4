"""Random-restart direct search for pure states of minimal SIC entropy."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .probability import shannon_entropy
from .sic import SicEnsemble

#: fidelity above which two minimizers are the same line
DEDUP_FIDELITY = 1 - 1e-6


def entropy_objective(e: SicEnsemble):
    """Entropy of ``represent(e, |psi><psi|)`` as a function of ``(Re psi, Im psi)``.

    The argument is renormalized on every call, so the search runs on the
    unit sphere without constraints.
    """
    vecs = np.conj(np.array(e.vectors()))
    d = e.d

    def h(x: np.ndarray) -> float:
        psi = x[:d] + 1j * x[d:]
        p = np.abs(vecs @ psi) ** 2
        total = p.sum()
        if total == 0:
            return np.inf
        return shannon_entropy(p / total)

    return h


def _to_state(x: np.ndarray, d: int) -> np.ndarray:
    psi = x[:d] + 1j * x[d:]
    psi = psi / np.linalg.norm(psi)
    # fix the global phase on the largest component for reproducible output
    k = int(np.argmax(np.abs(psi)))
    return psi * np.exp(-1j * np.angle(psi[k]))


def search_restart(e: SicEnsemble, seed: int, restart: int, polish: int = 1, maxfev: int | None = None):
    """One restart seeded with ``seed + restart``; returns ``(state, entropy)``."""
    d = e.d
    h = entropy_objective(e)
    rng = np.random.default_rng(seed + restart)
    x = rng.normal(size=2 * d)
    opts = {"xatol": 1e-9, "fatol": 1e-13, "maxfev": maxfev or 2000 * d, "adaptive": True}
    for _ in range(1 + polish):
        x = x / np.linalg.norm(x)
        res = minimize(h, x, method="Nelder-Mead", options=opts)
        x = res.x
    state = _to_state(x, d)
    return state, h(np.concatenate([state.real, state.imag]))


def dedup(found: list[tuple[np.ndarray, float]], fidelity: float = DEDUP_FIDELITY) -> list[tuple[np.ndarray, float]]:
    """Keep one representative per line, preferring lower entropy."""
    out: list[tuple[np.ndarray, float]] = []
    for state, h in sorted(found, key=lambda t: t[1]):
        if all(abs(np.vdot(s, state)) ** 2 < fidelity for s, _ in out):
            out.append((state, h))
    return out


def entropy_min_search(
    e: SicEnsemble, restarts: int = 64, seed: int = 0, maxfev: int | None = None
) -> list[tuple[np.ndarray, float]]:
    """Projectively distinct local minima, sorted by entropy.

    Each restart is independent and seeded with ``seed + index`` so the
    result does not depend on the order restarts are run in.
    """
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    found = [search_restart(e, seed, r, maxfev=maxfev) for r in range(restarts)]
    return dedup(found)


@dataclass
class SearchSummary:
    minimum: float
    minimizers: list[np.ndarray]  # states within ``tol`` of the minimum
    all_minima: list[tuple[np.ndarray, float]]


def summarize(found: list[tuple[np.ndarray, float]], tol: float = 1e-6) -> SearchSummary:
    m = min(h for _, h in found)
    return SearchSummary(m, [s for s, h in found if h <= m + tol], found)


def perturbation_check(
    e: SicEnsemble, state: np.ndarray, trials: int = 10_000, seed: int = 0, scales=(1e-4, 1e-1)
) -> float:
    """Smallest entropy among random perturbations of ``state``.

    Perturbation sizes are log-uniform over ``scales``; directions are
    complex Gaussian. Every perturbed vector is renormalized.
    """
    rng = np.random.default_rng(seed)
    d = e.d
    vecs = np.conj(np.array(e.vectors()))
    state = np.asarray(state, dtype=complex)
    state = state / np.linalg.norm(state)
    eps = np.exp(rng.uniform(np.log(scales[0]), np.log(scales[1]), size=trials))
    dirs = rng.normal(size=(trials, d)) + 1j * rng.normal(size=(trials, d))
    dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
    psis = state[None, :] + eps[:, None] * dirs
    psis /= np.linalg.norm(psis, axis=1, keepdims=True)
    p = np.abs(psis @ vecs.T) ** 2 / d
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(p > 0, -p * np.log2(p), 0.0)
    return float(np.min(terms.sum(axis=1)))
