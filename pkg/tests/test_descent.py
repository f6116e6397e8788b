import pytest

from hopfgalois.algebra import HopfPresentation, hopf_axiom_report
from hopfgalois.catalog import catalog, cyclic_generator
from hopfgalois.descent import (NormalizationError, base_change_is_group_algebra,
                                descend, explicit_basis_matches,
                                explicit_classical_basis, group_algebra,
                                hopf_action, hopf_galois_matrix, lform_matrix,
                                measuring_report, semilinear_action,
                                verify_hopf_galois)
from hopfgalois.extensions import split_model, splitting_field_cubic
from hopfgalois.groups import Perm, closure, dihedral, is_normalized_by, left_regular
from hopfgalois.linalg import Matrix, ONE, Q, ZERO, vec_is_zero

LABELS3 = ("rho", "lambda", "N0", "N1", "N2")


def test_all_five_descents_pass_axioms(descended3):
    for label in LABELS3:
        H = descended3[label]
        assert H.dim == 6
        report = hopf_axiom_report(H)
        assert report.passed, (label, report.failures())


def test_commutativity_pattern(descended3):
    assert not descended3["rho"].is_commutative()
    assert not descended3["lambda"].is_commutative()
    for c in range(3):
        assert descended3[f"N{c}"].is_commutative()
    for label in LABELS3:
        assert descended3[label].is_cocommutative()


def test_descended_basis_is_pointwise_fixed(L3, descended3):
    for label in LABELS3:
        H = descended3[label]
        A = H.provenance.parent
        act = semilinear_action(A)
        for j in range(H.dim):
            col = list(H.provenance.basis.column(j))
            for g in range(L3.group.order):
                assert act.apply(g, col) == col


def test_comultiplication_reconstructs_in_group_algebra(descended3):
    """Expanding the descended comultiplication back into L[N] (x)_L L[N]
    must give the group-like diagonal of each basis element."""
    for label in LABELS3:
        H = descended3[label]
        A = H.provenance.parent
        B = H.provenance.basis
        n = A.N.order
        chunks = [[A.chunk(B.column(i), t) for t in range(n)] for i in range(H.dim)]
        L = A.L
        zero = [ZERO] * L.dim
        for k in range(H.dim):
            terms = H.comul_terms(k)
            for t in range(n):
                for u in range(n):
                    acc = list(zero)
                    for (i, j), c in terms.items():
                        prod = L.mul(chunks[i][t], chunks[j][u])
                        for idx, v in enumerate(prod):
                            if v:
                                acc[idx] += c * v
                    expected = chunks[k][t] if t == u else zero
                    assert acc == expected, (label, k, t, u)


def test_antipode_is_slot_inversion(descended3):
    for label in LABELS3:
        H = descended3[label]
        A = H.provenance.parent
        B = H.provenance.basis
        for k in range(H.dim):
            col = B.column(k)
            flipped = [ZERO] * A.dim
            for t in range(A.N.order):
                ti = A.N.index_of(A.N.elements[t].inverse())
                chunk = A.chunk(col, t)
                for a, v in enumerate(chunk):
                    flipped[ti * A.L.dim + a] = v
            assert list(B.apply(H.antipode.column(k))) == flipped


def test_counit_sums_slots(descended3):
    for label in LABELS3:
        H = descended3[label]
        A = H.provenance.parent
        L = A.L
        for k in range(H.dim):
            col = H.provenance.basis.column(k)
            total = [ZERO] * L.dim
            for t in range(A.N.order):
                for a, v in enumerate(A.chunk(col, t)):
                    total[a] += v
            assert total == [H.counit[0, k] * u for u in L.unit]


def test_hopf_galois_property(descended3):
    for label in LABELS3:
        check = verify_hopf_galois(descended3[label])
        assert check.passed
        assert check.rank == 36


def test_measuring(descended3):
    for label in LABELS3:
        report = measuring_report(descended3[label])
        assert report.passed, (label, report.failures())


def test_base_change_recovers_group_algebra(descended3):
    for label in LABELS3:
        assert base_change_is_group_algebra(descended3[label])


def test_explicit_bases(descended3):
    assert explicit_basis_matches(descended3["rho"], "classical")
    assert explicit_basis_matches(descended3["lambda"], "translation")
    for c in range(3):
        assert explicit_basis_matches(descended3[f"N{c}"], "cyclic",
                                      gen=cyclic_generator(3, c))


def test_explicit_basis_kind_mismatch(descended3):
    # the translation form insists on N = lambda(G)
    with pytest.raises(ValueError):
        explicit_basis_matches(descended3["N0"], "translation")
    # the classical form insists on a centralized N
    with pytest.raises(ValueError):
        explicit_basis_matches(descended3["lambda"], "classical")
    with pytest.raises(ValueError):
        explicit_basis_matches(descended3["N0"], "unknown-kind")


def test_classical_basis_is_group_elements(L3, catalog3):
    A = group_algebra(L3, catalog3[0].subgroup)
    B = explicit_classical_basis(A)
    for j in range(B.cols):
        col = B.column(j)
        nonzero_slots = [t for t in range(A.N.order)
                         if not vec_is_zero(A.chunk(col, t))]
        assert len(nonzero_slots) == 1
        assert list(A.chunk(col, nonzero_slots[0])) == list(L3.unit)


def test_action_negative_control(L3, descended3):
    mats = hopf_action(descended3["N0"])
    j = hopf_galois_matrix(L3, mats)
    assert j.rank() == 36
    zeroed = list(mats)
    zeroed[3] = Matrix.zeros(6, 6)
    assert hopf_galois_matrix(L3, zeroed).rank() < 36


def test_lform_negative_control(descended3):
    H = descended3["N1"]
    A = H.provenance.parent
    B = H.provenance.basis
    full = lform_matrix(A, B)
    assert full.rank() == 36
    truncated = Matrix.from_columns([B.column(j) for j in range(5)], rows=A.dim)
    assert lform_matrix(A, truncated).rank() == 30


def test_corrupted_comultiplication_fails_axioms(descended3):
    H = descended3["N0"]
    cols = [list(H.comul.column(j)) for j in range(H.dim)]
    cols[2][7] += Q(1, 3)
    broken = HopfPresentation(H.prod, H.unit,
                              Matrix.from_columns(cols, rows=36),
                              H.counit, H.antipode, names=H.names)
    assert not hopf_axiom_report(broken).passed


def test_non_normalized_subgroup_rejected(L3):
    six_cycle = Perm((1, 2, 3, 4, 5, 0))
    N = closure([six_cycle])
    assert N.order == 6
    assert not is_normalized_by(N, left_regular(L3.group))
    with pytest.raises(NormalizationError):
        semilinear_action(group_algebra(L3, N))


def test_semilinear_action_verifies(L3, catalog3):
    for e in catalog3:
        act = semilinear_action(group_algebra(L3, e.subgroup))
        act.verify()


@pytest.mark.parametrize("p,label", [(5, "rho"), (5, "lambda"), (5, "N0"),
                                     (7, "N2"), (7, "lambda")])
def test_split_model_descents(p, label):
    L = split_model(dihedral(p))
    entry = {e.label: e for e in catalog(p)}[label]
    H = descend(group_algebra(L, entry.subgroup), label=label)
    assert H.dim == 2 * p
    assert hopf_axiom_report(H).passed
    assert base_change_is_group_algebra(H)
    if label == "rho":
        assert explicit_basis_matches(H, "classical")
    elif label == "lambda":
        assert explicit_basis_matches(H, "translation")
    else:
        assert explicit_basis_matches(H, "cyclic",
                                      gen=cyclic_generator(p, int(label[1:])))


def test_descend_labels_provenance(descended3):
    for label in LABELS3:
        prov = descended3[label].provenance
        assert prov.label == label
        assert prov.basis.cols == 6
