"""Concrete models of the Galois extension L/Q.

Three models are provided, all as commutative structure-constant algebras
carrying an action of their Galois group by algebra automorphisms:

* splitting_field_cubic(v): the degree-6 splitting field of x^3 - v with
  dihedral group D_3, on the basis (1, a, a^2, z, az, a^2z) where a^3 = v
  and z is a primitive cube root of unity (z^2 = -1 - z);
* quadratic_field(b): Q(sqrt(b)) with its order-2 group;
* split_model(G): the algebra Maps(G, Q) of Q-valued functions on G with G
  permuting the coordinate idempotents by left translation.  This is the
  split Galois algebra that makes every p feasible without number fields.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .algebra import Algebra
from .groups import cyclic, dihedral
from .linalg import Matrix, Q, ZERO, ONE, integer_normalized, rational, vstack


def _int_is_cube(n):
    if n < 0:
        return _int_is_cube(-n)
    lo, hi = 0, 1
    while hi ** 3 < n:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** 3 < n:
            lo = mid + 1
        else:
            hi = mid
    return lo ** 3 == n


def is_rational_cube(q):
    q = Q(q)
    return _int_is_cube(int(q.numerator)) and _int_is_cube(int(q.denominator))


def is_rational_square(q):
    q = Q(q)
    if q < 0:
        return False
    num, den = int(q.numerator), int(q.denominator)
    return isqrt(num) ** 2 == num and isqrt(den) ** 2 == den


class GaloisAlgebra(Algebra):
    """Commutative algebra with a finite group acting by automorphisms.

    `action[g]` is the matrix of the automorphism attached to group element
    index g; the assignment g -> action[g] is a homomorphism.
    """

    def __init__(self, prod, unit, group, action, names=None, model=None):
        super().__init__(prod, unit, names=names)
        self.group = group
        self.action = tuple(action)
        self.model = model
        if len(self.action) != group.order:
            raise ValueError("need one action matrix per group element")
        for m in self.action:
            if m.rows != self.dim or m.cols != self.dim:
                raise ValueError("action matrix shape mismatch")

    def act(self, g, x):
        return self.action[g].apply(x)

    def fixed_space(self, indices):
        """Kernel of the stacked (action(g) - 1) for g in indices."""
        indices = list(indices)
        if not indices:
            return Matrix.identity(self.dim)
        ident = Matrix.identity(self.dim)
        stacked = vstack(*[self.action[g] - ident for g in indices])
        return stacked.kernel()

    def verify(self):
        """Full invariant check; used by tests, not by hot paths."""
        assert self.unit_is_identity(), "unit fails"
        assert self.is_commutative(), "not commutative"
        assert self.is_associative(), "not associative"
        G = self.group
        ident = Matrix.identity(self.dim)
        assert self.action[G.identity] == ident, "identity must act trivially"
        for g in range(G.order):
            for h in range(G.order):
                assert self.action[g] * self.action[h] == self.action[G.mul(g, h)], \
                    "action is not a homomorphism"
        for g in range(G.order):
            m = self.action[g]
            for i in range(self.dim):
                for j in range(self.dim):
                    lhs = m.apply(self.prod[i][j])
                    rhs = self.mul(m.column(i), m.column(j))
                    assert lhs == rhs, "action is not by algebra maps"
        assert self.fixed_space(range(G.order)).cols == 1, "fixed field larger than Q"


@dataclass
class Subalgebra:
    """A subspace of a GaloisAlgebra given by basis columns."""

    parent: GaloisAlgebra
    basis: Matrix

    @property
    def dim(self):
        return self.basis.cols

    def is_closed(self):
        cols = self.basis.columns()
        unit_sol = self.basis.solve(Matrix.from_columns([self.parent.unit]))
        if unit_sol is None:
            return False
        prods = [self.parent.mul(x, y) for x in cols for y in cols]
        return self.basis.solve(Matrix.from_columns(prods, rows=self.parent.dim)) is not None


def splitting_field_cubic(v):
    """Splitting field of x^3 - v as a GaloisAlgebra with group D_3.

    v must be a nonzero rational that is not a cube, so that the polynomial
    is irreducible and the extension has degree 6.  Basis order is
    (1, a, a^2, z, az, a^2z) with a the cube root and z^2 = -1 - z.
    The generator r sends a to az and fixes z; s fixes a and sends z to z^2.
    """
    v = rational(v)
    if v == 0 or is_rational_cube(v):
        raise ValueError(f"{v} is a rational cube; x^3 - v does not cut out a field")
    G = dihedral(3)
    dim = 6

    def reduce_monomial(i, j):
        # a^i z^j as a coordinate vector, i < 6, j < 4
        out = {}

        def put(ii, jj, coeff):
            if coeff == 0:
                return
            if jj >= 2:
                # z^2 = -1 - z
                put(ii, jj - 2, -coeff)
                put(ii, jj - 1, -coeff)
                return
            if ii >= 3:
                put(ii - 3, jj, coeff * v)
                return
            key = ii + 3 * jj
            out[key] = out.get(key, ZERO) + coeff

        put(i, j, ONE)
        return out

    prod = []
    for a1 in range(dim):
        i1, j1 = a1 % 3, a1 // 3
        row = []
        for a2 in range(dim):
            i2, j2 = a2 % 3, a2 // 3
            vec = [ZERO] * dim
            for key, c in reduce_monomial(i1 + i2, j1 + j2).items():
                vec[key] += c
            row.append(tuple(vec))
        prod.append(tuple(row))

    unit = [ONE] + [ZERO] * 5

    # generator matrices, built by pushing each basis monomial through the map
    def matrix_for(image_of_a, image_of_z):
        cols = []
        for idx in range(dim):
            i, j = idx % 3, idx // 3
            # (image_of_a)^i * (image_of_z)^j where images are monomials a^x z^y
            ax, ay = image_of_a
            zx, zy = image_of_z
            vec = [ZERO] * dim
            for key, c in reduce_monomial(ax * i + zx * j, ay * i + zy * j).items():
                vec[key] += c
            cols.append(vec)
        return Matrix.from_columns(cols, rows=dim)

    mat_r = matrix_for((1, 1), (0, 1))   # r: a -> a z, z -> z
    mat_s = matrix_for((1, 0), (0, 2))   # s: a -> a, z -> z^2
    ident = Matrix.identity(dim)
    action = []
    for g in range(6):
        i, j = g % 3, g // 3
        m = ident
        for _ in range(i):
            m = m * mat_r
        for _ in range(j):
            m = m * mat_s
        action.append(m)

    names = ("1", "a", "a^2", "z", "az", "a^2z")
    return GaloisAlgebra(prod, unit, G, action, names=names, model="cubic")


def quadratic_field(b):
    """Q(sqrt(b)) for a non-square rational b, with its order-2 group."""
    b = rational(b)
    if b == 0 or is_rational_square(b):
        raise ValueError(f"{b} is a rational square; need a quadratic extension")
    G = cyclic(2)
    prod = (
        ((ONE, ZERO), (ZERO, ONE)),
        ((ZERO, ONE), (b, ZERO)),
    )
    unit = (ONE, ZERO)
    action = (Matrix.identity(2), Matrix.from_rows([[ONE, ZERO], [ZERO, -ONE]]))
    return GaloisAlgebra(prod, unit, G, action, names=("1", "w"), model="quadratic")


def split_model(G):
    """The split Galois algebra Maps(G, Q) with the left translation action.

    The basis is the coordinate idempotents d_h; g sends d_h to d_{gh}.
    """
    n = G.order
    prod = []
    for i in range(n):
        row = []
        for j in range(n):
            vec = [ZERO] * n
            if i == j:
                vec[i] = ONE
            row.append(tuple(vec))
        prod.append(tuple(row))
    unit = [ONE] * n
    action = []
    for g in range(n):
        cols = []
        for h in range(n):
            col = [ZERO] * n
            col[G.mul(g, h)] = ONE
            cols.append(col)
        action.append(Matrix.from_columns(cols, rows=n))
    names = tuple(f"d[{name}]" for name in G.names)
    return GaloisAlgebra(prod, unit, G, action, names=names, model="split")


def fixed_subalgebra(L, indices):
    """Fixed subalgebra of the subgroup generated by the given elements.

    The fixed space of a generating set equals the fixed space of the whole
    subgroup, so only the listed elements are stacked.  Basis columns are
    integer-normalized and sorted for reproducibility.
    """
    ker = L.fixed_space(indices)
    cols = sorted((integer_normalized(c) for c in ker.columns()),
                  key=lambda col: tuple(col))
    return Subalgebra(L, Matrix.from_columns(cols, rows=L.dim))


def quadratic_sqrt_witness(L):
    """Element of the rotation-fixed quadratic subalgebra negated by s.

    For L with dihedral group (generators r of odd order p and s of order
    2), returns the unique integer-normalized w with r(w) = w, s(w) = -w
    and w^2 rational.  Raises ValueError if no such element exists.
    """
    G = L.group
    if len(G.generators) == 1:
        r_idx, s_idx = G.identity, G.generators[0]
    else:
        r_idx, s_idx = G.generators
    if G.element_order(s_idx) != 2 or G.element_order(r_idx) % 2 == 0:
        raise ValueError("expected dihedral generators (r odd order, s order 2)")
    quad = L.fixed_space([r_idx])
    anti = (L.action[s_idx] * quad + quad).kernel()
    if anti.cols == 0:
        raise ValueError("no element is negated by the reflection")
    w = integer_normalized((quad * anti).column(0))
    w2 = L.mul(w, w)
    ratio = None
    for k, u in enumerate(L.unit):
        if u:
            ratio = w2[k] / u
            break
    if [ratio * u for u in L.unit] != w2:
        raise ValueError("witness square is not rational")
    return w


def rational_square_of(L, w):
    """The rational d with w*w = d * unit; raises if w^2 is not rational."""
    w2 = L.mul(w, w)
    for k, u in enumerate(L.unit):
        if u:
            d = w2[k] / u
            if [d * uu for uu in L.unit] == w2:
                return d
            break
    raise ValueError("square is not a rational multiple of the unit")
