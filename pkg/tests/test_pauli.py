import itertools

import numpy as np
import pytest

from sporadic_sics import linalg, pauli
from sporadic_sics.pauli import ALL_PAULI_LABELS, PauliLabel, WhLabel


@pytest.mark.parametrize("d", [2, 3, 8])
def test_displacements_unitary_and_orthogonal(d):
    ops = pauli.wh_displacements(d)
    assert len(ops) == d * d
    for u in ops:
        assert np.allclose(u @ u.conj().T, np.eye(d))
    g = linalg.gram_matrix(ops)
    assert np.allclose(g, d * np.eye(d * d))


def test_qutrit_composition_all_pairs():
    """All 81 products of qutrit displacements are displacements up to a phase."""
    d = 3
    for (l1, a1), (l2, a2) in itertools.product(itertools.product(range(3), repeat=2), repeat=2):
        prod = pauli.displacement(WhLabel(d, l1, a1)) @ pauli.displacement(WhLabel(d, l2, a2))
        target = pauli.displacement(WhLabel(d, l1 + l2, a1 + a2))
        phase = np.trace(target.conj().T @ prod) / d
        assert np.isclose(abs(phase), 1)
        assert np.allclose(prod, phase * target)


def test_wh_label_reduces():
    assert WhLabel(3, 4, -1) == WhLabel(3, 1, 2)
    with pytest.raises(ValueError):
        WhLabel(1, 0, 0)


def test_label_bits_round_trip():
    for lab in ALL_PAULI_LABELS:
        assert PauliLabel.from_bits(lab.bits) == lab
        assert PauliLabel.from_bits(str(lab)) == lab
        assert PauliLabel.from_xz(lab.x_bits, lab.z_bits) == lab
    assert PauliLabel.from_bits("110000").x_bits == 0b100
    with pytest.raises(ValueError):
        PauliLabel.from_bits("1102")
    with pytest.raises(ValueError):
        PauliLabel(64)


def test_xor_composition():
    """P(a) P(b) is P(a xor b) up to a phase in {+-1, +-i}, for all 64 x 64 pairs."""
    mats = [pauli.three_qubit_pauli(lab) for lab in ALL_PAULI_LABELS]
    for a, b in itertools.product(ALL_PAULI_LABELS, repeat=2):
        prod = mats[a.value] @ mats[b.value]
        target = mats[(a ^ b).value]
        phase = np.trace(target.conj().T @ prod) / 8
        assert min(abs(phase - p) for p in (1, -1, 1j, -1j)) < 1e-12
        assert np.allclose(prod, phase * target)


def test_hilbert_schmidt_orthogonality():
    g = linalg.gram_matrix([pauli.three_qubit_pauli(lab) for lab in ALL_PAULI_LABELS])
    assert np.allclose(g, 8 * np.eye(64))


def test_antisymmetry_rule_matches_transpose():
    labels = pauli.antisymmetric_labels()
    assert len(labels) == 28
    for lab in ALL_PAULI_LABELS:
        m = pauli.three_qubit_pauli(lab)
        assert pauli.transpose_antisymmetric(m) == pauli.is_antisymmetric(lab)
        if not pauli.is_antisymmetric(lab):
            assert np.allclose(m, m.T)


def test_pauli_cache_returns_copies():
    m = pauli.three_qubit_pauli(5)
    m[0, 0] = 99
    assert pauli.three_qubit_pauli(5)[0, 0] != 99


def test_ghz_identity_both_routes():
    assert pauli.verify_ghz_identity(-1)
    assert pauli.verify_ghz_identity(-1, independent=True)
    assert not pauli.verify_ghz_identity(1)
    assert np.array_equal(pauli.three_qubit_pauli(0), pauli.pauli_identity())
