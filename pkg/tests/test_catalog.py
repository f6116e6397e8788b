import pytest

from hopfgalois.catalog import (SUPPORTED_PRIMES, catalog, catalog_checks,
                                completeness_check_p3, cyclic_generator)
from hopfgalois.groups import (conj_by, dihedral, is_normalized_by, is_regular,
                               left_regular, right_regular)


@pytest.mark.parametrize("p", SUPPORTED_PRIMES)
def test_catalog_checks_all_pass(p):
    for name, ok, detail in catalog_checks(p):
        assert ok, f"{name} failed at p={p}: {detail}"


@pytest.mark.parametrize("p", SUPPORTED_PRIMES)
def test_catalog_shape(p):
    entries = catalog(p)
    assert len(entries) == p + 2
    assert [e.label for e in entries][:2] == ["rho", "lambda"]
    assert entries[0].iso_label == f"D{p}"
    assert entries[1].iso_label == f"D{p}"
    for c in range(p):
        assert entries[2 + c].label == f"N{c}"
        assert entries[2 + c].iso_label == f"C{2 * p}"


@pytest.mark.parametrize("p", [3, 5, 7])
def test_cyclic_generator_relations(p):
    G = dihedral(p)
    lam = left_regular(G)
    rho = right_regular(G)
    r = lam.elements[G.generators[0]]
    s = lam.elements[G.generators[1]]
    for c in range(p):
        eta = cyclic_generator(p, c)
        assert eta.order() == 2 * p
        # conjugation by r fixes eta, by s inverts it
        assert conj_by(r, eta) == eta
        assert conj_by(s, eta) == eta.inverse()
        # the unique involution is right translation by r^c s
        assert eta.power(p) == rho.elements[c + p]


@pytest.mark.parametrize("p", [3, 5])
def test_catalog_subgroups_regular_normalized(p):
    G = dihedral(p)
    lam = left_regular(G)
    for e in catalog(p):
        assert is_regular(e.subgroup)
        assert is_normalized_by(e.subgroup, lam)
        assert e.subgroup.verify_subgroup()


def test_catalog_entries_distinct():
    keys = {e.subgroup.canonical_key() for e in catalog(7)}
    assert len(keys) == 9


def test_completeness_at_p3():
    assert completeness_check_p3()


@pytest.mark.parametrize("bad", [2, 4, 9, 11 * 13])
def test_catalog_rejects_unsupported(bad):
    with pytest.raises(ValueError):
        catalog(bad)
