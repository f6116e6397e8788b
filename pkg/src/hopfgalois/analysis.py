"""Classification of the descended Hopf algebras.

Two classifications run side by side and are cross-checked:

* Hopf isomorphism classes, decided combinatorially: two structures give
  isomorphic Hopf algebras exactly when their subgroups admit a group
  isomorphism commuting with conjugation by left translations.  Positive
  witnesses are re-verified on the descended presentations (the induced
  linear map must pass every Hopf-map identity); negative answers come with
  an exhaustive certificate listing every plain group isomorphism together
  with the first equivariance failure.

* Algebra structure, decided by exact Wedderburn data: commutative
  algebras are split into ideals by rational eigenvalues of multiplication
  operators; the 6-dimensional noncommutative ones are split by the two
  degree-1 character idempotents, and the remaining 4-dimensional block is
  recognized as 2x2 matrices over its center once a square-zero element is
  found (an explicit witness or a small exact scan; when no witness turns
  up the component is reported as undetermined, never guessed).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product

from math import gcd

from .algebra import hopf_map_violation
from .catalog import catalog
from .descent import group_algebra, descend
from .groups import dihedral, equivariant_iso_search, left_regular, right_regular
from .linalg import (Matrix, ONE, Q, ZERO, column_space_basis, hstack,
                     vec_is_zero, vstack)

KIND_FIELD = "field"
KIND_MATRIX2 = "matrix2_over_center"
KIND_DIVISION = "division_noncommutative"
KIND_UNDETERMINED = "undetermined"
VALID_KINDS = (KIND_FIELD, KIND_MATRIX2, KIND_DIVISION, KIND_UNDETERMINED)


@dataclass
class WedderburnComponent:
    dim: int
    center_dim: int
    kind: str
    unit: tuple
    basis: Matrix

    def key(self):
        return (self.dim, self.center_dim, self.kind)


@dataclass
class WedderburnReport:
    components: list

    def summary(self):
        """Multiset of (dim, center_dim, kind), sorted."""
        return tuple(sorted(c.key() for c in self.components))

    @property
    def total_dim(self):
        return sum(c.dim for c in self.components)


def is_commutative(H):
    return H.is_commutative()


def is_cocommutative(H):
    return H.is_cocommutative()


# -- commutative splitting ----------------------------------------------------

def minimal_polynomial(M):
    """Monic minimal polynomial of a square matrix, low degree first."""
    n = M.rows
    powers = [Matrix.identity(n)]
    vectors = [list(powers[0].entries)]
    while True:
        powers.append(powers[-1] * M)
        vectors.append(list(powers[-1].entries))
        span = Matrix.from_columns(vectors[:-1], rows=n * n)
        sol = span.solve(Matrix.from_columns([vectors[-1]], rows=n * n))
        if sol is not None:
            coeffs = [-sol[i, 0] for i in range(sol.rows)]
            coeffs.append(ONE)
            return coeffs
        if len(powers) > n + 1:
            raise AssertionError("minimal polynomial must have degree <= dim")


def _divisors(n):
    n = abs(n)
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def rational_roots(coeffs):
    """All rational roots of a polynomial with rational coefficients."""
    while coeffs and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    if not coeffs:
        raise ValueError("zero polynomial")
    scale = 1
    for c in coeffs:
        d = int(Q(c).denominator)
        scale = scale // gcd(scale, d) * d
    ints = [int(Q(c) * scale) for c in coeffs]
    roots = []
    low = 0
    while ints[low] == 0:
        low += 1
    if low > 0:
        roots.append(ZERO)
    lead = ints[-1]
    trail = ints[low]
    cands = set()
    for num in _divisors(trail):
        for den in _divisors(lead):
            cands.add(Q(num, den))
            cands.add(Q(-num, den))
    for cand in sorted(cands):
        val = ZERO
        for c in reversed(ints):
            val = val * cand + c
        if val == 0:
            roots.append(cand)
    return sorted(set(roots))


def _restricted_operator(H, basis, x):
    """Matrix of multiplication by x on the span of `basis` columns."""
    images = [H.mul(x, basis.column(m)) for m in range(basis.cols)]
    sol = basis.solve(Matrix.from_columns(images, rows=H.dim))
    if sol is None:
        raise AssertionError("span is not an ideal")
    return sol


def _split_unit(H, unit, part_a, part_b):
    combined = hstack(part_a, part_b)
    sol = combined.solve(Matrix.from_columns([list(unit)], rows=H.dim))
    if sol is None:
        raise AssertionError("unit left the component")
    ua = part_a.apply([sol[i, 0] for i in range(part_a.cols)])
    ub = part_b.apply([sol[part_a.cols + i, 0] for i in range(part_b.cols)])
    for u in (ua, ub):
        if H.mul(u, u) != u:
            raise AssertionError("component unit is not idempotent")
    if H.mul(ua, ub) != [ZERO] * H.dim:
        raise AssertionError("component units are not orthogonal")
    return ua, ub


def commutative_wedderburn(H):
    """Decomposition of a commutative algebra into indecomposable ideals.

    Splitting elements are the basis vectors and their pairwise sums; each
    is used through the rational eigenvalues of its multiplication operator.
    Components that no splitting element separates are reported with kind
    "field" when 1-dimensional and "undetermined" otherwise.
    """
    if not H.is_commutative():
        raise ValueError("commutative_wedderburn needs a commutative algebra")
    n = H.dim
    seq = [H.basis_vector(i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = H.basis_vector(i)
            v[j] = ONE
            seq.append(v)

    work = [(list(H.unit), Matrix.identity(n))]
    done = []
    while work:
        unit, basis = work.pop(0)
        k = basis.cols
        if k == 1:
            done.append(WedderburnComponent(1, 1, KIND_FIELD,
                                            tuple(unit), basis))
            continue
        split = None
        for z in seq:
            zc = H.mul(unit, z)
            Mz = _restricted_operator(H, basis, zc)
            for a in rational_roots(minimal_polynomial(Mz)):
                shifted = Mz - Matrix.identity(k) * a
                ker = shifted.kernel()
                if 0 < ker.cols < k:
                    part_a = column_space_basis(basis * ker)
                    part_b = column_space_basis(basis * shifted)
                    if part_a.cols + part_b.cols != k:
                        raise AssertionError("eigen-split dimensions do not add up")
                    ua, ub = _split_unit(H, unit, part_a, part_b)
                    split = ((ua, part_a), (ub, part_b))
                    break
            if split:
                break
        if split:
            work.extend(split)
        else:
            done.append(WedderburnComponent(k, k, KIND_UNDETERMINED,
                                            tuple(unit), basis))
    done.sort(key=lambda c: (c.dim, tuple(c.unit)))
    return WedderburnReport(done)


# -- noncommutative dimension 6 -----------------------------------------------

def character_idempotents(p):
    """The two degree-1 character idempotents of Q[D_p], as coordinate
    vectors over the group-element basis: e = (1/2p) sum chi(g^-1) g with
    chi trivial resp. the sign character.  For an odd prime p the sign
    character is -1 exactly on the involutions, and chi(g) = chi(g^-1)."""
    G = dihedral(p)
    n = G.order
    e1 = [Q(1, n)] * n
    e2 = [Q(-1, n) if G.element_order(g) == 2 else Q(1, n) for g in range(n)]
    return e1, e2


def _idempotents_in(H):
    """The two character idempotents expressed in H's own basis.

    Works for a dihedral group algebra (group attached, no provenance) and
    for presentations descended from a dihedral N: the sign character is
    intrinsic, -1 exactly on the involutions of N.
    """
    if H.provenance is None:
        G = H.group
        if G is None or G.order != H.dim:
            raise ValueError("need a group algebra or a descended presentation")
        orders = [G.element_order(g) for g in range(G.order)]
        n = G.order
        e1 = [Q(1, n)] * n
        e2 = [Q(-1, n) if o == 2 else Q(1, n) for o in orders]
        return e1, e2
    A = H.provenance.parent
    N = A.N
    n = N.order
    vec1 = [ZERO] * A.dim
    vec2 = [ZERO] * A.dim
    for t in range(n):
        sign = Q(-1, n) if N.element_orders[t] == 2 else Q(1, n)
        for a, u in enumerate(A.L.unit):
            if u:
                vec1[t * A.L.dim + a] += Q(1, n) * u
                vec2[t * A.L.dim + a] += sign * u
    sol = H.provenance.basis.solve(
        Matrix.from_columns([vec1, vec2], rows=A.dim))
    if sol is None:
        raise ValueError("character idempotents do not lie in the descended ring")
    return [sol[i, 0] for i in range(H.dim)], [sol[i, 1] for i in range(H.dim)]


def find_square_zero_element(H, basis=None, bound=2):
    """Exact scan for a nonzero x with x*x = 0 in the span of `basis`.

    Coordinates run over the integer box [-bound, bound]^k in a fixed
    order; returns the first witness or None.  A scan failure is reported
    as None, never as a nonexistence proof.
    """
    if basis is None:
        basis = Matrix.identity(H.dim)
    k = basis.cols
    cols = [basis.column(m) for m in range(k)]
    for coords in iter_product(range(-bound, bound + 1), repeat=k):
        if all(c == 0 for c in coords):
            continue
        x = [ZERO] * H.dim
        for m, c in enumerate(coords):
            if c:
                for idx, v in enumerate(cols[m]):
                    if v:
                        x[idx] += c * v
        if vec_is_zero(x):
            continue
        if vec_is_zero(H.mul(x, x)):
            return x
    return None


def _center_dim(H, basis):
    rows = []
    for m in range(basis.cols):
        b = basis.column(m)
        op = H.mult_operator(b) - H.right_mult_operator(b)
        rows.append(op * basis)
    return vstack(*rows).kernel().cols


def noncommutative_wedderburn_p3(H, nilpotent=None, scan_bound=2):
    """Wedderburn data for the 6-dimensional noncommutative case.

    Splits off the two character idempotents (two rational field
    components) and analyzes the remaining 4-dimensional ideal: center
    must be the span of its unit, and a square-zero element certifies
    2x2 matrices over the center.  Without a certificate the component
    kind is "undetermined" (e.g. a division algebra would scan clean).
    """
    if H.dim != 6:
        raise ValueError("this routine handles dimension 6 only")
    if H.is_commutative():
        raise ValueError("use commutative_wedderburn for commutative input")
    e1, e2 = _idempotents_in(H)
    for e in (e1, e2):
        if H.mul(e, e) != list(e):
            raise AssertionError("character element is not idempotent")
    if not vec_is_zero(H.mul(e1, e2)):
        raise AssertionError("character idempotents are not orthogonal")
    e3 = [u - a - b for u, a, b in zip(H.unit, e1, e2)]

    components = []
    for e in (e1, e2):
        basis = column_space_basis(H.mult_operator(e))
        if basis.cols != 1:
            raise AssertionError("character component is not 1-dimensional")
        components.append(WedderburnComponent(1, 1, KIND_FIELD, tuple(e), basis))

    basis3 = column_space_basis(H.mult_operator(e3))
    if basis3.cols != 4:
        raise AssertionError("matrix component should have dimension 4")
    center = _center_dim(H, basis3)
    witness = None
    if nilpotent is not None:
        x = list(nilpotent)
        in_span = basis3.solve(Matrix.from_columns([x], rows=H.dim)) is not None
        if in_span and not vec_is_zero(x) and vec_is_zero(H.mul(x, x)):
            witness = x
    if witness is None:
        witness = find_square_zero_element(H, basis3, bound=scan_bound)
    kind = KIND_MATRIX2 if (center == 1 and witness is not None) else KIND_UNDETERMINED
    components.append(WedderburnComponent(4, center, kind, tuple(e3), basis3))
    report = WedderburnReport(components)
    assert report.total_dim == 6
    return report


def nilpotent_witness(L):
    """The square-zero element a*lam(s) + a z^2*lam(rs) + a z*lam(r^2 s)
    of L[lam(D_3)], as a coordinate vector (L must be a cubic model with
    basis 1, a, a^2, z, az, a^2z).

    The three reflection coefficients are a, r^2(a), r(a); conjugation
    rotates them along while fixing the slots' recursion, so the element
    is G-fixed, and its square vanishes because 1 + z + z^2 = 0.
    """
    G = L.group
    if L.model != "cubic" or G.order != 6:
        raise ValueError("nilpotent witness lives over the cubic D_3 model")
    lam = left_regular(G)
    A = group_algebra(L, lam)
    a_vec = L.basis_vector(1)                       # a
    az_vec = L.basis_vector(4)                      # az
    azz_vec = [ZERO] * 6
    azz_vec[1] = -ONE                               # a z^2 = -a - az
    azz_vec[4] = -ONE
    s_idx, rs_idx, r2s_idx = 3, 4, 5
    vec = [ZERO] * A.dim
    for coeff, g in ((a_vec, s_idx), (azz_vec, rs_idx), (az_vec, r2s_idx)):
        emb = A.embed(coeff, A.N.index_of(lam.elements[g]))
        vec = [x + y for x, y in zip(vec, emb)]
    return vec


# -- isomorphism classes ------------------------------------------------------

@dataclass
class PairEvidence:
    """Outcome of comparing one pair of structures."""

    isomorphic: bool
    witness: object = None            # GroupIso when isomorphic
    induced_map_checked: bool = False
    certificate: list = None          # rejections when not isomorphic
    isos_tested: int = 0


@dataclass
class HopfIsoClassReport:
    labels: list
    classes: list
    evidence: dict

    def class_of(self, label):
        for cls in self.classes:
            if label in cls:
                return cls
        raise KeyError(label)


def _induced_hopf_map(Ha, Hb, iso):
    """The linear map of descended presentations induced by a subgroup iso."""
    Aa, Ab = Ha.provenance.parent, Hb.provenance.parent
    d = Aa.L.dim
    cols = []
    for k in range(Ha.dim):
        vec = [ZERO] * Ab.dim
        for t, ch in Aa.split(Ha.provenance.basis.column(k)):
            base = iso.mapping[t] * d
            for a, c in enumerate(ch):
                if c:
                    vec[base + a] += c
        cols.append(vec)
    moved = Matrix.from_columns(cols, rows=Ab.dim)
    sol = Hb.provenance.basis.solve(moved)
    if sol is None:
        raise AssertionError("induced image left the target fixed ring")
    return sol


def hopf_iso_classes(p, L, descended=None):
    """Partition of the catalog labels into Hopf isomorphism classes.

    Every pair is decided by the equivariant-isomorphism criterion; each
    positive answer is cross-checked by verifying the induced linear map on
    the descended presentations against all Hopf-map identities, and each
    negative answer records the exhaustive certificate.
    """
    entries = catalog(p)
    G = L.group
    if descended is None:
        descended = {}
    for e in entries:
        if e.label not in descended:
            descended[e.label] = descend(group_algebra(L, e.subgroup), label=e.label)

    labels = [e.label for e in entries]
    evidence = {}
    parent = {lab: lab for lab in labels}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            a, b = entries[i], entries[j]
            isos, rejected = equivariant_iso_search(a.subgroup, b.subgroup, G)
            if isos:
                T = _induced_hopf_map(descended[a.label], descended[b.label], isos[0])
                violation = hopf_map_violation(T, descended[a.label], descended[b.label])
                if violation is not None:
                    raise AssertionError(
                        f"equivariant witness for ({a.label},{b.label}) fails: {violation}")
                evidence[(a.label, b.label)] = PairEvidence(
                    True, witness=isos[0], induced_map_checked=True,
                    isos_tested=len(isos) + len(rejected))
                parent[find(b.label)] = find(a.label)
            else:
                cert = [(iso.mapping, (G.names[g], t)) for iso, (g, t) in rejected]
                evidence[(a.label, b.label)] = PairEvidence(
                    False, certificate=cert, isos_tested=len(rejected))

    classes = []
    for lab in labels:
        root = find(lab)
        for cls in classes:
            if find(cls[0]) == root:
                cls.append(lab)
                break
        else:
            classes.append([lab])

    # consistency: evidence must agree with the partition
    for (la, lb), ev in evidence.items():
        same = find(la) == find(lb)
        if same != ev.isomorphic:
            raise AssertionError("pairwise evidence is not transitive")
    return HopfIsoClassReport(labels=labels, classes=classes, evidence=evidence)


def minimal_splitting_subfield_check(L):
    """Equivariance over every subgroup of G separates lam from rho.

    Returns a list of records, one per subgroup G' of G: the number of
    G'-equivariant isomorphisms lam(G) -> rho(G).  Only the trivial
    subgroup admits any, so no proper intermediate field splits the two
    translation structures into each other; the center being trivial is
    recorded alongside.
    """
    G = L.group
    lam = left_regular(G)
    rho = right_regular(G)
    records = []
    for sub in G.all_subgroups():
        indices = sorted(sub)
        isos, _ = equivariant_iso_search(lam, rho, G, respect=indices)
        records.append({
            "subgroup": tuple(G.names[i] for i in indices),
            "size": len(indices),
            "equivariant_count": len(isos),
            "expected_nonzero": len(indices) == 1,
        })
    return {
        "records": records,
        "center_trivial": G.center() == (G.identity,),
        "passed": all((rec["equivariant_count"] > 0) == rec["expected_nonzero"]
                      for rec in records),
    }


def algebra_iso_classes_p3(L, descended=None):
    """Partition of the five p=3 structures by exact Wedderburn summary."""
    entries = catalog(3)
    if descended is None:
        descended = {}
    for e in entries:
        if e.label not in descended:
            descended[e.label] = descend(group_algebra(L, e.subgroup), label=e.label)
    lam_key = left_regular(L.group).canonical_key()
    reports = {}
    for e in entries:
        H = descended[e.label]
        if H.is_commutative():
            reports[e.label] = commutative_wedderburn(H)
        else:
            hint = None
            prov = H.provenance
            if (L.model == "cubic" and prov is not None
                    and prov.parent.N.canonical_key() == lam_key):
                sol = prov.basis.solve(
                    Matrix.from_columns([nilpotent_witness(L)], rows=prov.parent.dim))
                if sol is not None:
                    hint = [sol[i, 0] for i in range(H.dim)]
            reports[e.label] = noncommutative_wedderburn_p3(H, nilpotent=hint)
    classes = []
    for e in entries:
        summary = reports[e.label].summary()
        for cls in classes:
            if reports[cls[0]].summary() == summary:
                cls.append(e.label)
                break
        else:
            classes.append([e.label])
    return classes, reports
