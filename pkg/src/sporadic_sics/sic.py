"""Constructions of the sporadic SICs in dimensions 2, 3 and 8."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .certificate import Certificate
from .linalg import (
    DEFAULT_TOL,
    I2,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    gram_matrix,
    hermitian_eigenvalues,
    normalize,
    omega,
    operator_rank,
)
from .pauli import ALL_PAULI_LABELS, three_qubit_pauli, wh_displacements

# fidelity above this marks two orbit states as the same line
COLLISION_FIDELITY = 1 - 1e-8


class OrbitCollapseError(ValueError):
    """An orbit produced fewer than d^2 projectively distinct states."""

    def __init__(self, i: int, j: int, fid: float) -> None:
        super().__init__(f"orbit states {i} and {j} coincide (fidelity {fid:.12f})")
        self.pair = (i, j)
        self.fidelity = fid


@dataclass
class SicEnsemble:
    """Dimension ``d`` plus ``d^2`` rank-1 projectors.

    ``states`` holds unit vectors spanning each projector when the
    construction supplies them; ``labels`` names each member.
    """

    d: int
    projectors: list[np.ndarray]
    provenance: str
    states: list[np.ndarray] | None = None
    labels: list[str] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.projectors)

    @property
    def effects(self) -> list[np.ndarray]:
        return [p / self.d for p in self.projectors]

    def gram(self) -> np.ndarray:
        """Real matrix of ``tr(P_j P_k)``."""
        return gram_matrix(self.projectors).real

    def vectors(self) -> list[np.ndarray]:
        """Unit vectors for each projector (leading eigenvector if absent)."""
        if self.states is not None:
            return self.states
        out = []
        for p in self.projectors:
            w, v = np.linalg.eigh(p)
            out.append(v[:, -1])
        return out


def bloch_to_density(x: float, y: float, z: float, tol: float = DEFAULT_TOL) -> np.ndarray:
    """``(I + x sigma_x + y sigma_y + z sigma_z) / 2``."""
    r2 = x * x + y * y + z * z
    if r2 > 1 + tol:
        raise ValueError(f"Bloch vector has norm {np.sqrt(r2):.6g} > 1")
    return 0.5 * (I2 + x * SIGMA_X + y * SIGMA_Y + z * SIGMA_Z)


def density_to_bloch(rho: np.ndarray) -> np.ndarray:
    return np.array([np.trace(rho @ s).real for s in (SIGMA_X, SIGMA_Y, SIGMA_Z)])


def qubit_bloch_vectors(sign: int) -> list[np.ndarray]:
    """Tetrahedron vertices ``(s, s', sign*s*s')/sqrt(3)``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    out = []
    for s, sp in itertools.product((1, -1), repeat=2):
        out.append(np.array([s, sp, sign * s * sp]) / np.sqrt(3))
    return out


def qubit_sic(sign: int = 1) -> SicEnsemble:
    vecs = qubit_bloch_vectors(sign)
    projs = [bloch_to_density(*v) for v in vecs]
    labels = [f"({s:+d},{sp:+d})" for s, sp in itertools.product((1, -1), repeat=2)]
    return SicEnsemble(2, projs, f"qubit-{'plus' if sign > 0 else 'minus'}", labels=labels)


def coxeter_table() -> list[np.ndarray]:
    """Coxeter's nine homogeneous vectors, row by row, unnormalized."""
    w = omega(3)
    rows = []
    for k in range(3):
        wk = w**k
        rows += [
            np.array([0, 1, -wk], dtype=complex),
            np.array([-wk, 0, 1], dtype=complex),
            np.array([1, -wk, 0], dtype=complex),
        ]
    return rows


def hesse_sic_coxeter() -> SicEnsemble:
    vecs = [v / np.sqrt(2) for v in coxeter_table()]
    return SicEnsemble(
        3,
        [np.outer(v, v.conj()) for v in vecs],
        "hesse-coxeter",
        states=vecs,
        labels=[f"c{k}" for k in range(9)],
    )


HESSE_FIDUCIAL = np.array([0, 1, -1], dtype=complex) / np.sqrt(2)


def hoggar_fiducial(sign: int = 1) -> np.ndarray:
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return normalize(np.array([-1 + sign * 2j] + [1] * 7, dtype=complex))


def orbit_sic(
    fiducial: np.ndarray,
    operators: Sequence[np.ndarray],
    provenance: str = "orbit",
    labels: Sequence[str] | None = None,
) -> SicEnsemble:
    """Orbit of a fiducial vector under a list of unitaries, in operator order.

    Raises :class:`OrbitCollapseError` naming the first colliding pair if the
    orbit has fewer than ``d^2`` distinct lines.
    """
    psi = normalize(fiducial)
    d = psi.shape[0]
    states = [normalize(np.asarray(u) @ psi) for u in operators]
    mat = np.array(states)
    fids = np.abs(np.conj(mat) @ mat.T) ** 2
    n = len(states)
    for i in range(n):
        for j in range(i + 1, n):
            if fids[i, j] > COLLISION_FIDELITY:
                raise OrbitCollapseError(i, j, float(fids[i, j]))
    if n != d * d:
        raise ValueError(f"orbit has {n} states, expected {d * d}")
    return SicEnsemble(
        d,
        [np.outer(s, s.conj()) for s in states],
        provenance,
        states=states,
        labels=list(labels) if labels is not None else [str(k) for k in range(n)],
    )


def hesse_sic_orbit() -> SicEnsemble:
    """Orbit of ``(0, 1, -1)/sqrt(2)`` under the d=3 displacements, (l, alpha) order."""
    labels = [f"D{l}{a}" for l in range(3) for a in range(3)]
    return orbit_sic(HESSE_FIDUCIAL, wh_displacements(3), "hesse-orbit", labels)


def hoggar_sic(sign: int = 1) -> SicEnsemble:
    """Orbit of the Hoggar fiducial under the 64 three-qubit Paulis, label order."""
    ops = [three_qubit_pauli(lab) for lab in ALL_PAULI_LABELS]
    name = f"hoggar-{'plus' if sign > 0 else 'minus'}"
    return orbit_sic(hoggar_fiducial(sign), ops, name, [str(lab) for lab in ALL_PAULI_LABELS])


def fidelity_matrix(a: Sequence[np.ndarray], b: Sequence[np.ndarray]) -> np.ndarray:
    ma = np.array([normalize(v) for v in a])
    mb = np.array([normalize(v) for v in b])
    return np.abs(np.conj(ma) @ mb.T) ** 2


def match_lines(a: Sequence[np.ndarray], b: Sequence[np.ndarray]) -> tuple[list[int], list[float]]:
    """Greedy best-fidelity matching of two equal-size line sets.

    Returns ``perm`` with ``a[i]`` matched to ``b[perm[i]]`` and the
    matched fidelities. Each ``b`` is used at most once.
    """
    if len(a) != len(b):
        raise ValueError("line sets differ in size")
    f = fidelity_matrix(a, b)
    n = len(a)
    pairs = sorted(((f[i, j], i, j) for i in range(n) for j in range(n)), reverse=True)
    perm = [-1] * n
    used: set[int] = set()
    for val, i, j in pairs:
        if perm[i] < 0 and j not in used:
            perm[i] = j
            used.add(j)
    return perm, [float(f[i, perm[i]]) for i in range(n)]


def hessian_polyhedron() -> list[tuple[str, np.ndarray]]:
    """The 27 vertices as ``(segre_symbol, vector)`` with exponents 1..3."""
    w = omega(3)
    out = []
    for mu in (1, 2, 3):
        for nu in (1, 2, 3):
            out.append((f"0{mu}{nu}", np.array([0, w**mu, -(w**nu)], dtype=complex)))
            out.append((f"{nu}0{mu}", np.array([-(w**nu), 0, w**mu], dtype=complex)))
            out.append((f"{mu}{nu}0", np.array([w**mu, -(w**nu), 0], dtype=complex)))
    return sorted(out, key=lambda t: t[0])


def hessian_diameters(tol: float = DEFAULT_TOL) -> list[list[str]]:
    """Group vertices into classes related by multiplication by omega."""
    verts = hessian_polyhedron()
    w = omega(3)
    classes: list[list[str]] = []
    seen: set[str] = set()
    for sym, v in verts:
        if sym in seen:
            continue
        cls = [sym]
        for sym2, v2 in verts:
            if sym2 != sym and any(np.max(np.abs(v2 - w**k * v)) < tol for k in (1, 2)):
                cls.append(sym2)
        seen.update(cls)
        classes.append(sorted(cls))
    return classes


@dataclass
class AdjacencyReport:
    pairs: int
    values_by_class: dict[str, list[float]]
    consistent: bool


def symbol_agreement(a: str, b: str) -> int:
    return sum(x == y for x, y in zip(a, b))


def hessian_adjacency_classes(tol: float = 1e-9) -> AdjacencyReport:
    """Compare ``Re<u,v>`` against Segre-symbol agreement on cross-diameter pairs.

    Class ``"one"`` is agreement in exactly one place; ``"two-or-none"`` is
    everything else. The report is consistent when each class takes a
    single value and the two values differ.
    """
    verts = dict(hessian_polyhedron())
    diam = {s: k for k, cls in enumerate(hessian_diameters()) for s in cls}
    values: dict[str, set[float]] = {"one": set(), "two-or-none": set()}
    pairs = 0
    for a, b in itertools.combinations(sorted(verts), 2):
        if diam[a] == diam[b]:
            continue
        pairs += 1
        re = float(np.vdot(verts[a], verts[b]).real)
        key = "one" if symbol_agreement(a, b) == 1 else "two-or-none"
        values[key].add(round(re / tol) * tol)
    by_class = {k: sorted(v) for k, v in values.items()}
    consistent = (
        len(by_class["one"]) == 1
        and len(by_class["two-or-none"]) == 1
        and abs(by_class["one"][0] - by_class["two-or-none"][0]) > tol
    )
    return AdjacencyReport(pairs, by_class, consistent)


def verify_sic(e: SicEnsemble, tol: float = DEFAULT_TOL) -> Certificate:
    """Run the SIC/POVM axioms on an ensemble; failures are recorded, not raised."""
    d = e.d
    cert = Certificate(f"sic:{e.provenance}")
    cert.require("count = d^2", len(e.projectors) == d * d)
    eye = np.eye(d)
    idem = max(float(np.max(np.abs(p @ p - p))) for p in e.projectors)
    cert.add("projector idempotence", idem, tol)
    tr = max(abs(np.trace(p) - 1) for p in e.projectors)
    cert.add("unit trace", tr, tol)
    herm = max(float(np.max(np.abs(p - p.conj().T))) for p in e.projectors)
    cert.add("hermitian", herm, tol)
    g = gram_matrix(e.projectors)
    target = (d * np.eye(len(e.projectors)) + 1) / (d + 1)
    cert.add("gram condition", float(np.max(np.abs(g - target))), tol)
    eff = sum(e.effects)
    cert.add("effects sum to identity", float(np.max(np.abs(eff - eye))), tol)
    rank = operator_rank(e.projectors, tol=1e-8)
    cert.add("operator rank = d^2", abs(rank - d * d), 0.0)
    vals = hermitian_eigenvalues(g.real, tol=1e-8)
    want = [float(d)] + [d / (d + 1)] * (d * d - 1)
    cert.add("gram spectrum", max(abs(a - b) for a, b in zip(vals, want)), tol)
    return cert
