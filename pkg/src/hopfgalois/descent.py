"""Galois descent for group algebras L[N].

For a regular subgroup N of Perm(G) normalized by left translations, the
group algebra L[N] carries the semilinear action

    g . (x * eta) = g(x) * (lam_g eta lam_g^-1),

and its fixed ring H is a Q-Hopf algebra of dimension |N|.  This module
computes H with exact structure constants, counit, antipode and
comultiplication, and provides the verification operations: Hopf axiom
report, the induced action of H on L with its measuring property, exact
bijectivity of the Hopf-Galois map j: L (x) H -> End(L), the base-change
check L (x) H = L[N], and span comparison against closed-form bases.

Comultiplication descends through the base-change map Phi: L (x) H -> L[N],
x (x) h -> x*h.  Applying Phi^-1 to Delta(h) = sum_t x_t (eta_t (x) eta_t)
one tensor leg at a time rewrites it over h_i (x) h_j; the coefficients are
provably rational, and this implementation checks that exactly instead of
assuming it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AxiomReport, HopfPresentation
from .extensions import fixed_subalgebra, quadratic_sqrt_witness
from .groups import conj_by, left_regular
from .linalg import (Matrix, ONE, ZERO, integer_normalized, spans_equal,
                     vec_add, vec_is_zero, vstack)


class DescentError(RuntimeError):
    """An exact identity that descent theory guarantees failed to hold."""


class NormalizationError(RuntimeError):
    """N is not normalized by the left translations."""

    def __init__(self, g_name, eta_name):
        super().__init__(f"conjugate of {eta_name} by lam[{g_name}] leaves N")
        self.g_name = g_name
        self.eta_name = eta_name


class GroupAlgebraOverL:
    """The group algebra L[N], basis (eta_t, e_a) at index t*dim(L) + a."""

    def __init__(self, L, N):
        if N.degree != L.group.order:
            raise ValueError("N must permute the points of G")
        self.L = L
        self.N = N
        self.dim = L.dim * N.order

    def chunk(self, vec, t):
        d = self.L.dim
        return list(vec[t * d:(t + 1) * d])

    def split(self, vec):
        """Nonzero (slot, L-chunk) pairs of a coordinate vector."""
        d = self.L.dim
        out = []
        for t in range(self.N.order):
            ch = vec[t * d:(t + 1) * d]
            if any(ch):
                out.append((t, list(ch)))
        return out

    def embed(self, x, t):
        """The element x * eta_t for an L-coordinate vector x."""
        vec = [ZERO] * self.dim
        d = self.L.dim
        for a, c in enumerate(x):
            if c:
                vec[t * d + a] = c
        return vec

    def unit_vector(self):
        return self.embed(self.L.unit, self.N.identity_position)

    def mul(self, x, y):
        out = [ZERO] * self.dim
        d = self.L.dim
        mt = self.N.mult_table
        for t, xc in self.split(x):
            row = mt[t]
            for u, yc in self.split(y):
                w = row[u]
                pr = self.L.mul(xc, yc)
                base = w * d
                for a, c in enumerate(pr):
                    if c:
                        out[base + a] += c
        return out

    def scalar_mul(self, x, vec):
        """Multiplication by x in L, applied chunk by chunk."""
        out = [ZERO] * self.dim
        d = self.L.dim
        for t, ch in self.split(vec):
            pr = self.L.mul(x, ch)
            base = t * d
            for a, c in enumerate(pr):
                if c:
                    out[base + a] = c
        return out

    def name_of_basis(self, idx):
        d = self.L.dim
        return f"{self.L.names[idx % d]}*{self.N.name_of(idx // d)}"


def group_algebra(L, N):
    return GroupAlgebraOverL(L, N)


class SemilinearAction:
    """The twisted G-action on L[N]: Galois on coefficients, conjugation on N.

    Conjugation position maps are computed eagerly (this is where a
    normalization failure surfaces, with the offending pair); the action
    matrices themselves are built on demand.
    """

    def __init__(self, parent):
        self.parent = parent
        L, N = parent.L, parent.N
        G = L.group
        lam = left_regular(G)
        conj_map = []
        for g in range(G.order):
            row = []
            for t, eta in enumerate(N.elements):
                image = conj_by(lam.elements[g], eta)
                if image not in N:
                    raise NormalizationError(G.names[g], N.name_of(t))
                row.append(N.index_of(image))
            conj_map.append(tuple(row))
        self.conj_map = tuple(conj_map)
        self._matrices = {}

    def matrix(self, g):
        if g not in self._matrices:
            A = self.parent
            d = A.L.dim
            act = A.L.action[g]
            cols = []
            for t in range(A.N.order):
                tp = self.conj_map[g][t]
                for a in range(d):
                    col = [ZERO] * A.dim
                    for b in range(d):
                        c = act[b, a]
                        if c:
                            col[tp * d + b] = c
                    cols.append(col)
            self._matrices[g] = Matrix.from_columns(cols, rows=A.dim)
        return self._matrices[g]

    def apply(self, g, vec):
        A = self.parent
        out = [ZERO] * A.dim
        d = A.L.dim
        for t, ch in A.split(vec):
            img = A.L.act(g, ch)
            base = self.conj_map[g][t] * d
            for a, c in enumerate(img):
                if c:
                    out[base + a] = c
        return out

    def verify(self):
        """Exact invariants: homomorphism in g, Q-algebra maps on L[N]."""
        A = self.parent
        G = A.L.group
        ident = Matrix.identity(A.dim)
        assert self.matrix(G.identity) == ident
        for g in range(G.order):
            for h in range(G.order):
                assert self.matrix(g) * self.matrix(h) == self.matrix(G.mul(g, h)), \
                    "semilinear action is not a homomorphism"
        for g in range(G.order):
            for i in range(A.dim):
                ei = [ZERO] * A.dim
                ei[i] = ONE
                gi = self.apply(g, ei)
                for j in range(A.dim):
                    ej = [ZERO] * A.dim
                    ej[j] = ONE
                    lhs = self.apply(g, A.mul(ei, ej))
                    rhs = A.mul(gi, self.apply(g, ej))
                    assert lhs == rhs, "semilinear action is not multiplicative"


def semilinear_action(A):
    return SemilinearAction(A)


@dataclass
class DescentProvenance:
    """How a HopfPresentation was obtained: fixed ring of which L[N]."""

    parent: GroupAlgebraOverL
    basis: Matrix
    label: str = None


def _rational_multiple_of_unit(L, vec, context):
    """The rational c with vec = c * unit(L); DescentError otherwise."""
    if vec_is_zero(vec):
        return ZERO
    c = None
    for k, u in enumerate(L.unit):
        if u:
            c = vec[k] / u
            break
    if c is None or [c * u for u in L.unit] != list(vec):
        raise DescentError(f"{context}: expected a rational multiple of the unit")
    return c


def descend(A, label=None):
    """The fixed ring of L[N] as an exact Hopf presentation over Q.

    The fixed-space basis comes from the kernel of the stacked
    (matrix(g) - 1) over the generators of G only (their fixed space equals
    the fixed space of all of G); columns are integer-normalized with
    content 1 and sorted, so the output is reproducible.
    """
    act = semilinear_action(A)
    G = A.L.group
    n = A.N.order
    ident = Matrix.identity(A.dim)
    stacked = vstack(*[act.matrix(g) - ident for g in G.generators])
    ker = stacked.kernel()
    if ker.cols != n:
        raise DescentError(f"fixed ring has dimension {ker.cols}, expected {n}")
    cols = sorted((integer_normalized(c) for c in ker.columns()), key=tuple)
    B = Matrix.from_columns(cols, rows=A.dim)
    hcols = B.columns()

    prods = [A.mul(hcols[i], hcols[j]) for i in range(n) for j in range(n)]
    sols = B.solve(Matrix.from_columns(prods, rows=A.dim))
    if sols is None:
        raise DescentError("a product of fixed vectors left the fixed ring")
    prod = tuple(tuple(tuple(sols.column(i * n + j)) for j in range(n)) for i in range(n))

    unit_sol = B.solve(Matrix.from_columns([A.unit_vector()]))
    if unit_sol is None:
        raise DescentError("the unit of L[N] is not in the fixed ring")
    unit = unit_sol.column(0)

    eps = []
    for k in range(n):
        total = [ZERO] * A.L.dim
        for _, ch in A.split(hcols[k]):
            total = vec_add(total, ch)
        eps.append(_rational_multiple_of_unit(A.L, total, "counit"))
    counit = Matrix(1, n, eps)

    inv = A.N.inverse_table
    scols = []
    for k in range(n):
        v = [ZERO] * A.dim
        d = A.L.dim
        for t, ch in A.split(hcols[k]):
            base = inv[t] * d
            for a, c in enumerate(ch):
                if c:
                    v[base + a] = c
        scols.append(v)
    antipode = B.solve(Matrix.from_columns(scols, rows=A.dim))
    if antipode is None:
        raise DescentError("an antipode image left the fixed ring")

    comul = _descended_comultiplication(A, B)

    prov = DescentProvenance(parent=A, basis=B, label=label)
    names = tuple(f"h{k}" for k in range(n))
    return HopfPresentation(prod, unit, comul, counit, antipode,
                            names=names, provenance=prov)


def lform_matrix(A, B):
    """Matrix of Phi: L (x) H -> L[N], x (x) h -> x*h; column (a,k) = a*n+k."""
    d = A.L.dim
    n = B.cols
    hsplit = [A.split(B.column(k)) for k in range(n)]
    cols = []
    for a in range(d):
        e_a = A.L.basis_vector(a)
        for k in range(n):
            col = [ZERO] * A.dim
            for t, ch in hsplit[k]:
                pr = A.L.mul(e_a, ch)
                base = t * d
                for bb, c in enumerate(pr):
                    if c:
                        col[base + bb] = c
            cols.append(col)
    return Matrix.from_columns(cols, rows=A.dim)


def _descended_comultiplication(A, B):
    d = A.L.dim
    n = B.cols
    phi = lform_matrix(A, B)
    phi_inv = phi.inverse()
    if phi_inv is None:
        raise DescentError("base change L (x) H -> L[N] is not invertible")

    comul_cols = []
    for k in range(n):
        # stage 1: x_t eta_t = sum_i y_i h_i with y_i in L, so that
        # Delta(h_k) = sum_i h_i (x) w_i with w_i = sum_t y_i^(t) eta_t
        w = [[ZERO] * A.dim for _ in range(n)]
        for t, ch in A.split(B.column(k)):
            y = phi_inv.apply(A.embed(ch, t))
            base = t * d
            for a in range(d):
                arow = a * n
                for i in range(n):
                    c = y[arow + i]
                    if c:
                        w[i][base + a] = c
        # stage 2: w_i must be a rational combination of the h_j
        col = [ZERO] * (n * n)
        for i in range(n):
            if vec_is_zero(w[i]):
                continue
            z = phi_inv.apply(w[i])
            for j in range(n):
                zvec = [z[a * n + j] for a in range(d)]
                c = _rational_multiple_of_unit(A.L, zvec, "comultiplication")
                if c:
                    col[i * n + j] = c
        comul_cols.append(col)
    return Matrix.from_columns(comul_cols, rows=n * n)


def _provenance_of(H):
    if H.provenance is None:
        raise ValueError("operation needs a presentation produced by descend()")
    return H.provenance


def hopf_action(H, L=None):
    """Action matrices of the basis of H on L.

    Each eta in N acts on L as the Galois automorphism eta^-1[identity],
    extended L-linearly over the coefficients:
    (sum_t x_t eta_t) . y = sum_t x_t * (eta_t^-1[1])(y).
    """
    prov = _provenance_of(H)
    A = prov.parent
    if L is None:
        L = A.L
    elif L is not A.L:
        raise ValueError("presentation was descended over a different model")
    G = L.group
    slot_gal = [eta.inverse()(G.identity) for eta in A.N.elements]
    mats = []
    for k in range(H.dim):
        m = Matrix.zeros(L.dim, L.dim)
        for t, ch in A.split(prov.basis.column(k)):
            m = m + L.mult_operator(ch) * L.action[slot_gal[t]]
        mats.append(m)
    return mats


def measuring_report(H, L=None):
    """Exact check that H measures L: h.(xy) = sum (h1.x)(h2.y), h.1 = eps(h)1."""
    prov = _provenance_of(H)
    L = L if L is not None else prov.parent.L
    mats = hopf_action(H, L)
    report = AxiomReport()

    ok, detail = True, None
    for k in range(H.dim):
        if mats[k].apply(L.unit) != [H.counit[0, k] * u for u in L.unit]:
            ok, detail = False, f"h{k}.1 != eps(h{k})1"
            break
    report.add("measures-unit", ok, detail)

    ok, detail = True, None
    action_cols = [[m.column(a) for a in range(L.dim)] for m in mats]
    for k in range(H.dim):
        if not ok:
            break
        terms = H.comul_terms(k)
        for a in range(L.dim):
            if not ok:
                break
            for b in range(L.dim):
                lhs = mats[k].apply(L.prod[a][b])
                rhs = [ZERO] * L.dim
                for (i, j), c in terms.items():
                    pr = L.mul(action_cols[i][a], action_cols[j][b])
                    for idx, vv in enumerate(pr):
                        if vv:
                            rhs[idx] += c * vv
                if lhs != rhs:
                    ok, detail = False, f"measuring fails at (h{k}, {L.names[a]}, {L.names[b]})"
                    break
    report.add("measures-products", ok, detail)
    return report


def hopf_galois_matrix(L, action_matrices):
    """Matrix of j: L (x) H -> End(L), x (x) h -> (y -> x*(h.y)).

    Endomorphisms are flattened row-major; column (a, k) is a*|H| + k.
    """
    d = L.dim
    cols = []
    mult_ops = [L.mult_operator(L.basis_vector(a)) for a in range(d)]
    for a in range(d):
        for m in action_matrices:
            composed = mult_ops[a] * m
            cols.append([composed[p, q] for p in range(d) for q in range(d)])
    return Matrix.from_columns(cols, rows=d * d)


@dataclass
class HopfGaloisCheck:
    rank: int
    expected: int
    passed: bool


def verify_hopf_galois(H, L=None):
    """Exact bijectivity of j: L (x) H -> End_Q(L)."""
    prov = _provenance_of(H)
    L = L if L is not None else prov.parent.L
    j = hopf_galois_matrix(L, hopf_action(H, L))
    rank = j.rank()
    expected = L.dim * L.dim
    return HopfGaloisCheck(rank=rank, expected=expected,
                           passed=(rank == expected and j.cols == expected))


def base_change_is_group_algebra(H, L=None):
    """Whether L (x) H -> L[N] is bijective (H is an L-form of L[N])."""
    prov = _provenance_of(H)
    A = prov.parent
    if L is not None and L is not A.L:
        raise ValueError("presentation not descended over this model")
    phi = lform_matrix(A, prov.basis)
    return phi.cols == A.dim and phi.rank() == A.dim


# -- closed-form bases --------------------------------------------------------

def explicit_classical_basis(A):
    """Basis {1 * eta_t}: valid when conjugation fixes N pointwise."""
    lam = left_regular(A.L.group)
    for lamg in lam.elements:
        for eta in A.N.elements:
            if conj_by(lamg, eta).images != eta.images:
                raise ValueError("classical basis needs a centralized N")
    cols = [A.embed(A.L.unit, t) for t in range(A.N.order)]
    return Matrix.from_columns(cols, rows=A.dim)


def explicit_translation_basis(A):
    """Closed-form basis of the fixed ring of L[lam(G)] for dihedral G.

    With w the rational-square witness (r(w) = w, s(w) = -w) and y running
    over a basis of the s-fixed subalgebra:

      1,
      lam(r^i) + lam(r^(p-i))        and   w*(lam(r^i) - lam(r^(p-i))),
      sum_i r^((p+1)/2 * i)(y) * lam(r^i s).

    The reflection coefficients solve the fixedness recursion b_{i+2} =
    r(b_i) on the coefficients of lam(r^i s).
    """
    L = A.L
    G = L.group
    lam = left_regular(G)
    if A.N.canonical_key() != lam.canonical_key():
        raise ValueError("translation basis needs N = lam(G)")
    r_idx, s_idx = G.generators
    p = G.element_order(r_idx)
    w = quadratic_sqrt_witness(L)
    slot = [A.N.index_of(lam.elements[g]) for g in range(G.order)]

    def rpow(i):
        g = G.identity
        for _ in range(i % p):
            g = G.mul(g, r_idx)
        return g

    cols = [A.embed(L.unit, slot[G.identity])]
    for i in range(1, (p - 1) // 2 + 1):
        plus = vec_add(A.embed(L.unit, slot[rpow(i)]), A.embed(L.unit, slot[rpow(p - i)]))
        minus = vec_add(A.embed(w, slot[rpow(i)]),
                        [-c for c in A.embed(w, slot[rpow(p - i)])])
        cols.append(plus)
        cols.append(minus)
    ybasis = fixed_subalgebra(L, [s_idx]).basis
    step = (p + 1) // 2
    for m in range(ybasis.cols):
        y = ybasis.column(m)
        vec = [ZERO] * A.dim
        for i in range(p):
            coeff = L.act(rpow(step * i), y)
            g = G.mul(rpow(i), s_idx)
            vec = vec_add(vec, A.embed(coeff, slot[g]))
        cols.append(vec)
    return Matrix.from_columns(cols, rows=A.dim)


def explicit_cyclic_basis(A, gen):
    """Closed-form basis for a cyclic N = <gen> of order 2p:

    1, gen^p, gen^i + gen^(2p-i), w*(gen^i - gen^(2p-i)) for i = 1..p-1,
    with w the rational-square witness of L.
    """
    L = A.L
    n = A.N.order
    if n % 2 or gen not in A.N or gen.order() != n:
        raise ValueError("need a generator of a cyclic N of even order")
    p = n // 2
    w = quadratic_sqrt_witness(L)
    slot = [A.N.index_of(gen.power(k)) for k in range(n)]
    cols = [A.embed(L.unit, slot[0]), A.embed(L.unit, slot[p])]
    for i in range(1, p):
        plus = vec_add(A.embed(L.unit, slot[i]), A.embed(L.unit, slot[n - i]))
        minus = vec_add(A.embed(w, slot[i]), [-c for c in A.embed(w, slot[n - i])])
        cols.append(plus)
        cols.append(minus)
    return Matrix.from_columns(cols, rows=A.dim)


def explicit_basis_matches(H, kind, gen=None):
    """Span equality of the descended basis with a closed-form basis."""
    prov = _provenance_of(H)
    A = prov.parent
    if kind == "classical":
        ref = explicit_classical_basis(A)
    elif kind == "translation":
        ref = explicit_translation_basis(A)
    elif kind == "cyclic":
        if gen is None:
            raise ValueError("cyclic basis needs the generator")
        ref = explicit_cyclic_basis(A, gen)
    else:
        raise ValueError(f"unknown basis kind {kind!r}")
    return spans_equal(prov.basis, ref)
