import pytest

from sporadic_sics import families

EXACT = {"fano-28", "so8-28", "icosahedron"}


@pytest.mark.parametrize("family", families.FAMILIES)
def test_family_passes_default_tolerance(family):
    cert = families.verify_family(family)
    assert cert.subject == family
    assert cert.overall, [c.name for c in cert.checks if not c.passed]


@pytest.mark.parametrize("family", families.FAMILIES)
def test_tiny_tolerance_separates_exact_families(family):
    cert = families.verify_family(family, 1e-30)
    assert cert.overall == (family in EXACT)


def test_unknown_family():
    with pytest.raises(KeyError):
        families.build("nope")
    with pytest.raises(KeyError):
        families.verify_family("nope")


def test_build_sic_families():
    for fam in families.SIC_FAMILIES:
        e = families.build_sic(fam)
        assert len(e) == e.d**2


def test_bounds_table():
    t = families.bounds_table()
    assert t["gerzon"]["(7, real)"] == 28
    assert t["max_zeros"]["(23, real)"] == 176
    assert t["fibonacci_lucas"] == [4, 8, 19, 48, 124]
