import numpy as np
import pytest

from sporadic_sics import search, sic


def test_restart_is_deterministic():
    e = sic.qubit_sic(1)
    a = search.search_restart(e, seed=0, restart=3)
    b = search.search_restart(e, seed=0, restart=3)
    assert np.array_equal(a[0], b[0]) and a[1] == b[1]


def test_order_independence():
    e = sic.qubit_sic(1)
    full = search.entropy_min_search(e, restarts=6, seed=2)
    runs = [search.search_restart(e, 2, r) for r in reversed(range(6))]
    again = search.dedup(runs)
    assert [h for _, h in full] == [h for _, h in again]


def test_qubit_minimum():
    found = search.entropy_min_search(sic.qubit_sic(-1), restarts=16, seed=0)
    summ = search.summarize(found)
    assert abs(summ.minimum - np.log2(3)) < 1e-6
    f = sic.fidelity_matrix(summ.minimizers, sic.qubit_sic(1).vectors())
    assert np.all(f.max(axis=1) > 1 - 1e-6)


def test_dedup_merges_phases():
    v = np.array([1, 1j]) / np.sqrt(2)
    out = search.dedup([(v, 1.0), (np.exp(0.7j) * v, 0.9), (np.array([1, 0]), 2.0)])
    assert len(out) == 2 and out[0][1] == 0.9


def test_restarts_validation():
    with pytest.raises(ValueError):
        search.entropy_min_search(sic.qubit_sic(1), restarts=0)


def test_perturbation_check_on_minimum():
    plus, minus = sic.hoggar_sic(1), sic.hoggar_sic(-1)
    worst = search.perturbation_check(plus, minus.vectors()[0], trials=500)
    assert worst >= np.log2(36) - 1e-6
    # a generic state is not a local minimum of entropy
    rng = np.random.default_rng(0)
    v = rng.normal(size=8) + 1j * rng.normal(size=8)
    h = search.entropy_objective(plus)(np.concatenate([v.real, v.imag]))
    assert search.perturbation_check(plus, v, trials=500) < h
