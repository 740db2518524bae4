import numpy as np
import pytest

from sporadic_sics import realgeom as rg
from sporadic_sics.golden import GoldenScalar
from sporadic_sics.octonions import equiangular_defects


def test_fiducial_condition():
    y = rg.golden_fiducial()
    a, b = rg.fiducial_overlap_condition(y)
    assert a * a == b * b  # equal absolute overlaps
    assert y * y - y - 1 == 0


def test_tetrahedral_group():
    g = rg.tetrahedral_group()
    assert len(g) == 12 and len(set(g)) == 12
    assert all(rg.det3(m) == 1 for m in g)
    for a in g:
        for b in g:
            assert rg.matmul(a, b) in g
        assert rg.transpose(a) in g


def test_group_closure_limit():
    rot = ((0, -1, 0), (1, 0, 0), (0, 0, 1))
    flip = ((1, 0, 0), (0, 0, -1), (0, 1, 0))
    with pytest.raises(ArithmeticError):
        rg.group_closure([rot, flip], limit=10)


def test_icosahedron():
    ico = rg.icosahedron_orbit()
    assert set(ico.orbit) == rg.icosahedron_expected()
    assert equiangular_defects(ico) == []
    assert all(isinstance(x, GoldenScalar) for v in ico.vectors for x in v)


def test_trine():
    vecs, lines = rg.trine_r2()
    for i in range(3):
        for j in range(i + 1, 3):
            assert np.isclose(np.dot(vecs[i], vecs[j]), -0.5)
    assert np.allclose(sum(vecs), 0)
    assert len(lines) == rg.gerzon_bound(2, "real")


def test_gerzon_and_welch():
    assert rg.gerzon_bound(3, "real") == 6 and rg.gerzon_bound(3, "complex") == 9
    assert np.isclose(rg.welch_angle(7, "real"), 1 / 3)
    assert np.isclose(rg.welch_angle(8), 1 / 3)
    assert np.isclose(rg.welch_angle(3, "real") ** 2, 1 / 5)
    with pytest.raises(ValueError):
        rg.gerzon_bound(4, "octonionic3")
    with pytest.raises(ValueError):
        rg.gerzon_bound(1)
    with pytest.raises(ValueError):
        rg.welch_angle(3, "quaternion")
