import itertools

import numpy as np
import pytest

from sporadic_sics import duality, sic
from sporadic_sics.pauli import PauliLabel


def test_affine_plane_axioms():
    plane = duality.affine_plane9()
    assert all(duality.check_affine_plane(plane).values())
    assert len(plane.lines) == 12 and len(plane.parallel_classes) == 4
    for a, b in itertools.combinations(range(1, 10), 2):
        assert sum(a in ln and b in ln for ln in plane.lines) == 1
    for p in range(1, 10):
        assert len(plane.lines_through(p)) == 4


def test_line_probability():
    p = duality.line_probability((1, 2, 3))
    assert np.isclose(p.sum(), 1) and np.count_nonzero(p) == 6


def test_mub_dual_structure():
    dual = duality.mub_dual()
    for cls in dual.bases:
        m = np.array([dual.states[j] for j in cls])
        assert np.allclose(m.conj() @ m.T, np.eye(3), atol=1e-10)


def test_incidence_counts():
    inc = duality.sic_mub_incidence()
    assert inc.counts == (4, 3) and inc.total == 36


def test_trine_bloch_vectors_coplanar():
    e = sic.hesse_sic_orbit()
    rep = duality.trine_extract(duality.mub_dual(e).states[0], e)
    assert rep.bloch_coplanarity() < 1e-10
    assert all(np.isclose(np.linalg.norm(b), 1) for b in rep.bloch)


def test_dual_qubit_sic_is_tetrahedron():
    e = sic.hesse_sic_orbit()
    rep = duality.qubit_sic_from_dual(e.vectors()[0])
    for a, b in itertools.combinations(rep.bloch, 2):
        assert np.isclose(np.dot(a, b), -1 / 3)


def test_subspace_report_wrong_count():
    with pytest.raises(ValueError, match="expected 3"):
        duality.trine_extract(np.array([1, 0.3, 0.2j]))


def test_twin_incidence():
    twin = duality.twin_incidence()
    assert twin.zero_overlap_max() < 1e-12
    assert twin.zero_pattern[0, 0] == bool(twin.zero_pattern[0, 0])
    assert PauliLabel(0) not in twin.fiducial_zero_labels()
    assert duality.antisymmetric_label_set() == set(twin.fiducial_zero_labels())


def test_table1_alignment_identity():
    res = duality.table1_patterns()
    rows, perm = res.alignment
    assert rows == [0, 1, 2, 3] and perm == list(range(64))


def test_align_rows_finds_permutation():
    pats = duality.table1_patterns().patterns
    rng = np.random.default_rng(1)
    shuffle = rng.permutation(64)
    wanted = [[int(pats[r][shuffle[c]]) for c in range(64)] for r in (5, 9)]
    rows, perm = duality.align_rows(pats, wanted)
    for k in range(2):
        assert [int(pats[rows[k]][perm[c]]) for c in range(64)] == wanted[k]


def test_align_rows_reports_impossible():
    pats = duality.table1_patterns().patterns
    assert duality.align_rows(pats, [[1] * 64]) is None
