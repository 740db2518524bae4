"""Dual structures: the MUB dual of the Hesse SIC and the twin Hoggar SICs."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .linalg import DEFAULT_TOL, normalize, vector_rank
from .pauli import ALL_PAULI_LABELS, PauliLabel, is_antisymmetric
from .probability import ZERO_TOL, reconstruct
from .sic import SicEnsemble, density_to_bloch, hesse_sic_orbit, hoggar_sic


@dataclass(frozen=True)
class AffinePlane9:
    """Affine plane of order 3 on grid points 1..9 (row-major)."""

    points: tuple[int, ...]
    lines: tuple[tuple[int, int, int], ...]
    parallel_classes: tuple[tuple[int, int, int], ...]  # indices into ``lines``

    def lines_through(self, point: int) -> list[int]:
        return [k for k, ln in enumerate(self.lines) if point in ln]

    def parallel(self, a: int, b: int) -> bool:
        return any(a in cls and b in cls for cls in self.parallel_classes)


def affine_plane9() -> AffinePlane9:
    lines = (
        (1, 2, 3), (4, 5, 6), (7, 8, 9),
        (1, 4, 7), (2, 5, 8), (3, 6, 9),
        (1, 5, 9), (2, 6, 7), (3, 4, 8),
        (1, 6, 8), (2, 4, 9), (3, 5, 7),
    )  # fmt: skip
    classes = ((0, 1, 2), (3, 4, 5), (6, 7, 8), (9, 10, 11))
    return AffinePlane9(tuple(range(1, 10)), lines, classes)


def check_affine_plane(plane: AffinePlane9) -> dict[str, bool]:
    """Incidence axioms; parallel lines are disjoint, others meet once."""
    on_four = all(len(plane.lines_through(p)) == 4 for p in plane.points)
    meets = True
    for a, b in itertools.combinations(range(len(plane.lines)), 2):
        common = len(set(plane.lines[a]) & set(plane.lines[b]))
        meets &= common == (0 if plane.parallel(a, b) else 1)
    return {"each point on 4 lines": on_four, "intersections": meets}


def line_probability(line: tuple[int, ...], n: int = 9) -> np.ndarray:
    """Zeros on the line's points, uniform elsewhere."""
    p = np.full(n, 1 / (n - len(line)))
    p[[i - 1 for i in line]] = 0.0
    return p


@dataclass
class MubDual:
    states: list[np.ndarray]  # one per affine line, in line order
    bases: list[list[int]]  # indices into ``states`` by parallel class
    probabilities: list[np.ndarray]
    purity_deviation: float


def _pure_vector(rho: np.ndarray) -> tuple[np.ndarray, float]:
    """Leading eigenvector of ``rho`` and its deviation ``max|rho^2 - rho|``."""
    dev = float(np.max(np.abs(rho @ rho - rho)))
    w, v = np.linalg.eigh((rho + rho.conj().T) / 2)
    return v[:, -1], dev


def mub_dual(e: SicEnsemble | None = None, tol: float = DEFAULT_TOL) -> MubDual:
    """Reconstruct one pure state per affine-plane line of the Hesse SIC."""
    e = e if e is not None else hesse_sic_orbit()
    plane = affine_plane9()
    states, probs, worst = [], [], 0.0
    for line in plane.lines:
        p = line_probability(line)
        rho = reconstruct(e, p)
        v, dev = _pure_vector(rho)
        if dev > max(tol, 1e-8):
            raise ArithmeticError(f"line {line} reconstructs to a mixed matrix (deviation {dev:.3g})")
        worst = max(worst, dev)
        states.append(v)
        probs.append(p)
    return MubDual(states, [list(c) for c in plane.parallel_classes], probs, worst)


def orthogonality_matrix(a: list[np.ndarray], b: list[np.ndarray], tol: float = ZERO_TOL) -> np.ndarray:
    ma = np.array([normalize(v) for v in a])
    mb = np.array([normalize(v) for v in b])
    return np.abs(np.conj(ma) @ mb.T) ** 2 < tol


@dataclass
class SicMubIncidence:
    matrix: np.ndarray  # 9 x 12, True where SIC state i is orthogonal to MUB state j
    per_sic: list[int]
    per_mub: list[int]

    @property
    def counts(self) -> tuple[int, int]:
        """Common (per-SIC, per-MUB) count, or -1 where counts are not uniform."""
        a = self.per_sic[0] if len(set(self.per_sic)) == 1 else -1
        b = self.per_mub[0] if len(set(self.per_mub)) == 1 else -1
        return a, b

    @property
    def total(self) -> int:
        return int(self.matrix.sum())


def sic_mub_incidence(e: SicEnsemble | None = None, dual: MubDual | None = None) -> SicMubIncidence:
    e = e if e is not None else hesse_sic_orbit()
    dual = dual if dual is not None else mub_dual(e)
    m = orthogonality_matrix(e.vectors(), dual.states)
    return SicMubIncidence(m, [int(x) for x in m.sum(1)], [int(x) for x in m.sum(0)])


@dataclass
class SubspaceReport:
    """States orthogonal to a pivot, with their span and Bloch geometry."""

    indices: list[int]
    states: list[np.ndarray]
    span_rank: int
    fidelities: list[float]
    bloch: list[np.ndarray]  # Bloch vectors inside the 2-dimensional complement

    def bloch_coplanarity(self) -> float:
        """|det| of the first three Bloch vectors; zero when coplanar."""
        if len(self.bloch) < 3:
            return 0.0
        return float(abs(np.linalg.det(np.array(self.bloch[:3]))))


def _complement_basis(pivot: np.ndarray) -> np.ndarray:
    """Orthonormal basis (columns) of the complement of ``pivot`` in C^3."""
    pivot = normalize(pivot)
    q = np.eye(len(pivot), dtype=complex) - np.outer(pivot, pivot.conj())
    w, v = np.linalg.eigh(q)
    return v[:, w > 0.5]


def _subspace_report(pivot: np.ndarray, candidates: list[np.ndarray], expected: int) -> SubspaceReport:
    pivot = normalize(pivot)
    idx = [k for k, c in enumerate(candidates) if abs(np.vdot(pivot, c)) ** 2 < ZERO_TOL]
    if len(idx) != expected:
        raise ValueError(f"expected {expected} orthogonal states, found {len(idx)}")
    states = [normalize(candidates[k]) for k in idx]
    basis = _complement_basis(pivot)
    bloch = []
    for s in states:
        c = normalize(basis.conj().T @ s)
        bloch.append(density_to_bloch(np.outer(c, c.conj())))
    fids = [float(abs(np.vdot(a, b)) ** 2) for a, b in itertools.combinations(states, 2)]
    return SubspaceReport(idx, states, vector_rank(states, tol=1e-8), fids, bloch)


def trine_extract(mub_state: np.ndarray, e: SicEnsemble | None = None) -> SubspaceReport:
    """The three Hesse states orthogonal to a MUB state."""
    e = e if e is not None else hesse_sic_orbit()
    return _subspace_report(mub_state, e.vectors(), 3)


def qubit_sic_from_dual(sic_state: np.ndarray, dual: MubDual | None = None) -> SubspaceReport:
    """The four MUB states orthogonal to a Hesse state."""
    dual = dual if dual is not None else mub_dual()
    return _subspace_report(sic_state, dual.states, 4)


@dataclass
class TwinIncidence:
    """64 x 64 zero pattern; rows plus-SIC labels, columns minus-SIC labels."""

    zero_pattern: np.ndarray
    overlaps: np.ndarray  # tr(P+_j P-_k)

    @property
    def row_counts(self) -> list[int]:
        return [int(x) for x in self.zero_pattern.sum(1)]

    @property
    def col_counts(self) -> list[int]:
        return [int(x) for x in self.zero_pattern.sum(0)]

    def nonzero_overlap_deviation(self, target: float = 2 / 9) -> float:
        vals = self.overlaps[~self.zero_pattern]
        return float(np.max(np.abs(vals - target)))

    def zero_overlap_max(self) -> float:
        return float(np.max(self.overlaps[self.zero_pattern]))

    def fiducial_zero_labels(self) -> list[PauliLabel]:
        """Minus-SIC labels whose states are orthogonal to the plus fiducial."""
        return [ALL_PAULI_LABELS[k] for k in np.flatnonzero(self.zero_pattern[0])]


@lru_cache(maxsize=1)
def _twin_overlaps() -> np.ndarray:
    plus = np.array(hoggar_sic(1).states)
    minus = np.array(hoggar_sic(-1).states)
    out = np.abs(np.conj(plus) @ minus.T) ** 2
    out.setflags(write=False)
    return out


def twin_incidence(tol: float = ZERO_TOL) -> TwinIncidence:
    ov = np.array(_twin_overlaps())
    return TwinIncidence(ov < tol, ov)


def antisymmetric_label_set() -> set[PauliLabel]:
    return {lab for lab in ALL_PAULI_LABELS if is_antisymmetric(lab)}


#: four reference minus-state patterns (36 ones, 28 zeros each)
REFERENCE_ROWS = (
    "1110111011100001111011101110000111101110111000010001000100011110",
    "1101110111010010110111011101001011011101110100100010001000101101",
    "1011101110110100101110111011010010111011101101000100010001001011",
    "0111011101111000011101110111100001110111011110001000100010000111",
)


@dataclass
class Table1Result:
    patterns: np.ndarray  # 64 x 64 ints, rows minus states, columns plus representation
    max_rounding: float  # max |36 p - round(36 p)|
    alignment: tuple[list[int], list[int]] | None  # (row choice, column permutation)


def table1_patterns(tol: float = 1e-8) -> Table1Result:
    """Minus states in the plus representation, scaled by 36 and rounded."""
    probs = np.array(_twin_overlaps()).T / 8
    scaled = 36 * probs
    rounded = np.rint(scaled)
    dev = float(np.max(np.abs(scaled - rounded)))
    if dev > tol or not set(np.unique(rounded)) <= {0.0, 1.0}:
        raise ArithmeticError(f"non-binary pattern entry (deviation {dev:.3g})")
    pats = rounded.astype(int)
    return Table1Result(pats, dev, align_rows(pats, [list(map(int, r)) for r in REFERENCE_ROWS]))


def align_rows(patterns: np.ndarray, wanted: list[list[int]]) -> tuple[list[int], list[int]] | None:
    """Find distinct rows of ``patterns`` and one column permutation matching ``wanted``.

    Returns ``(rows, perm)`` with ``patterns[rows[k]][perm[c]] == wanted[k][c]``
    for every wanted row ``k`` and column ``c``, or ``None``. Identity is tried
    first; otherwise a backtracking search matches column-profile histograms
    row by row (a permutation exists iff the multisets of column profiles agree).
    """
    pats = np.asarray(patterns)
    want = np.asarray(wanted)
    k = want.shape[0]
    n = pats.shape[0]

    def hist(rows: np.ndarray) -> Counter:
        return Counter(map(tuple, rows.T))

    targets = [hist(want[: j + 1]) for j in range(k)]

    def search(chosen: list[int]) -> list[int] | None:
        j = len(chosen)
        if j == k:
            return chosen
        for r in range(n):
            if r in chosen:
                continue
            if hist(pats[chosen + [r]]) == targets[j]:
                found = search(chosen + [r])
                if found is not None:
                    return found
        return None

    rows = search([])
    if rows is None:
        return None
    # build the permutation by pairing columns with equal profiles
    ours = pats[rows]
    buckets: dict[tuple, list[int]] = {}
    for c in range(ours.shape[1]):
        buckets.setdefault(tuple(ours[:, c]), []).append(c)
    perm = []
    for c in range(want.shape[1]):
        perm.append(buckets[tuple(want[:, c])].pop(0))
    return rows, perm

