import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfgalois.groups import (ClosureBoundExceeded, FiniteGroup, Perm,
                               PermSubgroup, UnknownGroupType, closure, conj_by,
                               cyclic, dihedral, elementary_abelian_4,
                               enumerate_regular_normalized,
                               equivariant_iso_search, group_isomorphisms,
                               is_normalized_by, is_regular, iso_type,
                               left_regular, minimal_generators, right_regular)

perms6 = st.permutations(range(6)).map(lambda im: Perm(tuple(im)))


def test_perm_basics():
    p = Perm((1, 2, 0))
    assert p.order() == 3
    assert (p * p.inverse()).is_identity()
    assert p.power(4) == p
    assert not p.has_fixed_point()
    assert Perm.identity(3).has_fixed_point()


@given(perms6, perms6)
@settings(max_examples=50, deadline=None)
def test_perm_inverse_antihomomorphism(p, q):
    assert (p * q).inverse() == q.inverse() * p.inverse()


@given(perms6, st.integers(0, 3))
@settings(max_examples=50, deadline=None)
def test_perm_power_matches_repeated_product(p, k):
    out = Perm.identity(6)
    for _ in range(k):
        out = out * p
    assert p.power(k) == out


def test_dihedral_construction():
    G = dihedral(3)
    G.check_axioms()
    assert G.order == 6
    r, s = G.generators
    assert G.element_order(r) == 3
    assert G.element_order(s) == 2
    # s r s = r^-1
    assert G.mul(G.mul(s, r), s) == G.inv(r)


@pytest.mark.parametrize("bad", [1, 2, 4, 9, 15])
def test_dihedral_rejects_non_odd_primes(bad):
    with pytest.raises(ValueError):
        dihedral(bad)


def test_cyclic_and_klein():
    cyclic(6).check_axioms()
    V = elementary_abelian_4()
    V.check_axioms()
    assert sorted(V.element_order(a) for a in range(4)) == [1, 2, 2, 2]


def test_regular_representations_commute():
    G = dihedral(5)
    lam, rho = left_regular(G), right_regular(G)
    assert is_regular(lam) and is_regular(rho)
    for a in lam.elements:
        for b in rho.elements:
            assert a * b == b * a
    assert lam.canonical_key() != rho.canonical_key()


def test_conjugation_normalizes_catalog_subgroups():
    G = dihedral(3)
    lam, rho = left_regular(G), right_regular(G)
    assert is_normalized_by(rho, lam)
    assert is_normalized_by(lam, lam)
    g = lam.elements[1]
    x = rho.elements[2]
    assert conj_by(g, x) == g * x * g.inverse()


def test_closure_and_bound():
    G = dihedral(3)
    lam = left_regular(G)
    full = closure([lam.elements[1], lam.elements[3]])
    assert full.order == 6
    assert full.verify_subgroup()
    with pytest.raises(ClosureBoundExceeded):
        closure([lam.elements[1], lam.elements[3]], bound=4)


def test_closure_bound_env(monkeypatch):
    G = dihedral(3)
    lam = left_regular(G)
    monkeypatch.setenv("HGL_CLOSURE_BOUND", "4")
    with pytest.raises(ClosureBoundExceeded):
        closure([lam.elements[1], lam.elements[3]])
    monkeypatch.setenv("HGL_CLOSURE_BOUND", "6")
    assert closure([lam.elements[1], lam.elements[3]]).order == 6


def test_iso_type_labels():
    assert iso_type(left_regular(cyclic(6))) == "C6"
    assert iso_type(left_regular(dihedral(3))) == "D3"
    assert iso_type(left_regular(dihedral(7))) == "D7"
    assert iso_type(left_regular(elementary_abelian_4())) == "C2xC2"
    assert iso_type(left_regular(cyclic(14))) == "C14"


def test_iso_type_rejects_unknown_census():
    # C2 x C4 is neither cyclic nor dihedral nor Klein
    c2, c4 = cyclic(2), cyclic(4)
    table = tuple(
        tuple(c2.mul(a2, b2) * 4 + c4.mul(a4, b4)
              for b2 in range(2) for b4 in range(4))
        for a2 in range(2) for a4 in range(4))
    G = FiniteGroup(table, tuple(str(i) for i in range(8)), 0, (4, 1))
    G.check_axioms()
    with pytest.raises(UnknownGroupType):
        iso_type(left_regular(G))
    with pytest.raises(ValueError):
        iso_type(left_regular(cyclic(16)))  # 16 is not 2*(odd prime)
    # 2q for odd prime q is identifiable at any size
    assert iso_type(left_regular(dihedral(11))) == "D11"
    assert iso_type(left_regular(cyclic(26))) == "C26"


def test_group_isomorphism_counts():
    d3, c6 = left_regular(dihedral(3)), left_regular(cyclic(6))
    assert len(group_isomorphisms(d3, d3)) == 6
    assert len(group_isomorphisms(c6, c6)) == 2
    assert group_isomorphisms(d3, c6) == []
    iso = group_isomorphisms(d3, d3)[0]
    assert iso.verify()


def test_minimal_generators_regenerate():
    N = left_regular(dihedral(5))
    gens = [N.elements[t] for t in minimal_generators(N)]
    assert closure(gens).canonical_key() == N.canonical_key()
    assert len(gens) == 2


def test_equivariant_search_separates_translations():
    G = dihedral(3)
    lam, rho = left_regular(G), right_regular(G)
    isos, rejected = equivariant_iso_search(lam, rho, G)
    assert isos == []
    assert len(rejected) == 6
    for iso, (g, t) in rejected:
        gp = lam.elements[g]
        x = lam.elements[t]
        lhs = rho.elements[iso.mapping[lam.index_of(conj_by(gp, x))]]
        rhs = conj_by(gp, rho.elements[iso.mapping[t]])
        assert lhs != rhs  # witness really is a failure


def test_equivariant_search_positive():
    G = dihedral(3)
    lam = left_regular(G)
    isos, _ = equivariant_iso_search(lam, lam, G)
    assert isos  # identity at least
    ident = tuple(range(6))
    assert any(iso.mapping == ident for iso in isos)


def test_enumerate_d3():
    subs = enumerate_regular_normalized(dihedral(3))
    assert len(subs) == 5
    census = sorted(iso_type(N) for N in subs)
    assert census == ["C6", "C6", "C6", "D3", "D3"]
    for N in subs:
        assert is_regular(N)
        assert N.verify_subgroup()


def test_enumerate_klein():
    subs = enumerate_regular_normalized(elementary_abelian_4())
    assert sorted(iso_type(N) for N in subs) == ["C2xC2", "C4", "C4", "C4"]


def test_enumerate_rejects_large_groups():
    with pytest.raises(ValueError):
        enumerate_regular_normalized(dihedral(5))


def test_subgroup_lookup():
    N = left_regular(dihedral(3))
    assert N.index_of(N.elements[4]) == 4
    with pytest.raises(KeyError):
        N.index_of(Perm((1, 0, 2, 3, 4, 5)))
