from fractions import Fraction

import numpy as np
import pytest

from sporadic_sics import duality, probability, sic

ENSEMBLES = {2: lambda: sic.qubit_sic(1), 3: sic.hesse_sic_orbit, 8: lambda: sic.hoggar_sic(1)}


def random_density(d, rng, rank):
    g = rng.normal(size=(d, rank)) + 1j * rng.normal(size=(d, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


@pytest.mark.parametrize("d", [2, 3, 8])
@pytest.mark.parametrize("rank", [1, 2])
def test_round_trip(d, rank):
    e = ENSEMBLES[d]()
    rng = np.random.default_rng(d * 10 + rank)
    for _ in range(20):
        rho = random_density(d, rng, rank)
        p = probability.represent(e, rho)
        probability.validate_probability(p)
        assert np.allclose(probability.reconstruct(e, p), rho, atol=1e-12)


@pytest.mark.parametrize("d", [2, 3, 8])
def test_pure_state_purity(d):
    e = ENSEMBLES[d]()
    rng = np.random.default_rng(d)
    for _ in range(20):
        v = rng.normal(size=d) + 1j * rng.normal(size=d)
        p = probability.represent_pure(e, v / np.linalg.norm(v))
        s, ok = probability.purity_sum(p, d)
        assert ok
        assert np.isclose(probability.n_eff(p), probability.n_eff_pure(d))
    mixed = probability.represent(e, np.eye(d) / d)
    assert not probability.purity_sum(mixed, d)[1]


def test_represent_validates():
    e = sic.qubit_sic(1)
    with pytest.raises(ValueError, match="trace"):
        probability.represent(e, np.eye(2))
    with pytest.raises(ValueError, match="positive"):
        probability.represent(e, np.diag([1.5, -0.5]))
    with pytest.raises(ValueError, match="shape"):
        probability.represent(e, np.eye(3) / 3)
    with pytest.raises(ValueError, match="length"):
        probability.reconstruct(e, np.ones(3) / 3)


def test_validate_probability():
    with pytest.raises(ValueError):
        probability.validate_probability(np.array([0.5, 0.6]))
    with pytest.raises(ValueError):
        probability.validate_probability(np.array([1.5, -0.5]))


def test_entropy():
    assert probability.shannon_entropy(np.array([0.5, 0.5])) == 1.0
    assert probability.shannon_entropy(np.array([1.0, 0.0])) == 0.0
    assert np.isclose(probability.shannon_entropy(np.ones(36) / 36), np.log2(36))


def test_zero_counts_saturate():
    q = probability.represent_pure(sic.qubit_sic(1), sic.qubit_sic(-1).vectors()[2])
    assert probability.count_zeros(q) == 1
    e = sic.hesse_sic_orbit()
    for m in duality.mub_dual(e).states:
        assert probability.count_zeros(probability.represent_pure(e, m)) == 3
    plus = sic.hoggar_sic(1)
    for v in sic.hoggar_sic(-1).vectors()[:8]:
        assert probability.count_zeros(probability.represent_pure(plus, v)) == 28


def test_bounds():
    assert [probability.max_zero_bound(d) for d in (2, 3, 8)] == [1, 3, 28]
    assert probability.max_zero_bound(23, "real") == 176
    assert probability.n_eff_pure(8) == 36
    assert probability.binom_fraction(8) == Fraction(1, 36)
    with pytest.raises(ValueError):
        probability.max_zero_bound(1)
    with pytest.raises(ValueError):
        probability.max_zero_bound(3, "quaternion")


def test_fibonacci_lucas():
    vals = probability.fibonacci_lucas_dims(8)
    assert vals[:5] == [4, 8, 19, 48, 124]
    # phi^(2k) + phi^(-2k) is the Lucas number L(2k)
    lucas = [2, 1]
    for _ in range(20):
        lucas.append(lucas[-1] + lucas[-2])
    assert vals == [lucas[2 * k] + 1 for k in range(1, 9)]
    with pytest.raises(ValueError):
        probability.fibonacci_lucas_dims(0)
