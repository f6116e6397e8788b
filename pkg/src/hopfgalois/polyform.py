"""Two-generator polynomial presentation of the commutative structures.

The commutative Hopf algebras descended from the cyclic structures admit a
presentation Q[x, y] / I with

    I = ( y^2 - b x^2 + u,  (x-2)(x-1)(x+1)(x+2),  (x-1)(x+1)xy ),

u = 4b, where b is the rational square of the quadratic witness of L.  On
the basis (1, x, x^2, x^3, y, xy) multiplication reduces by the confluent
rules y^2 -> b x^2 - u, x^4 -> 5x^2 - 4 and x^2 y -> y (the last lies in I:
x^2 y - y = -(y/4)(x^4 - 5x^2 + 4) + (x/4)(x^3 y - x y)).  The Hopf maps

    D(x) = (1/2) x (x) x + (1/2b) y (x) y,   D(y) = (1/2)(x (x) y + y (x) x),
    eps(x) = 2, eps(y) = 0, sigma(x) = x, sigma(y) = -y

extend multiplicatively.  The explicit isomorphism to a descended cyclic
structure sends x to gen + gen^-1 and y to w*(gen - gen^-1) with w the
quadratic witness; all Hopf identities of that map are checked exactly.
"""

from __future__ import annotations

from .algebra import Algebra, HopfPresentation
from .descent import _provenance_of
from .extensions import is_rational_square, quadratic_sqrt_witness
from .linalg import Matrix, ONE, Q, ZERO, rational, vec_add

MONOMIALS = ((0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (1, 1))
MONOMIAL_INDEX = {m: k for k, m in enumerate(MONOMIALS)}
MONOMIAL_NAMES = ("1", "x", "x^2", "x^3", "y", "xy")


class PolyMapError(RuntimeError):
    """An explicit Hopf-map identity failed; carries the identity name."""

    def __init__(self, identity):
        super().__init__(f"map violates the {identity} identity")
        self.identity = identity


def normal_form(i, j, b):
    """Coordinates of x^i y^j on the basis (1, x, x^2, x^3, y, xy)."""
    b = rational(b)
    if i < 0 or j < 0:
        raise ValueError("exponents must be nonnegative")
    if j >= 2:
        high = normal_form(i + 2, j - 2, b)
        low = normal_form(i, j - 2, b)
        return [b * h - 4 * b * l for h, l in zip(high, low)]
    if j == 1 and i >= 2:
        return normal_form(i - 2, 1, b)
    if j == 0 and i >= 4:
        five = normal_form(i - 2, 0, b)
        four = normal_form(i - 4, 0, b)
        return [5 * h - 4 * l for h, l in zip(five, four)]
    vec = [ZERO] * 6
    vec[MONOMIAL_INDEX[(i, j)]] = ONE
    return vec


def ideal_generators(b):
    """The three generators of I as sparse polynomials {(i,j): coeff}."""
    b = rational(b)
    return (
        {(0, 2): ONE, (2, 0): -b, (0, 0): 4 * b},
        {(4, 0): ONE, (2, 0): Q(-5), (0, 0): Q(4)},
        {(3, 1): ONE, (1, 1): -ONE},
    )


def evaluate_poly(poly, point):
    x, y = point
    total = ZERO
    for (i, j), c in poly.items():
        total += c * x ** i * y ** j
    return total


def _tensor_mul(alg, u, v):
    out = {}
    for (a, bb), c1 in u.items():
        for (cc, d), c2 in v.items():
            coeff = c1 * c2
            left = alg.prod[a][cc]
            right = alg.prod[bb][d]
            for ii, li in enumerate(left):
                if not li:
                    continue
                cli = coeff * li
                for jj, rj in enumerate(right):
                    if rj:
                        key = (ii, jj)
                        out[key] = out.get(key, ZERO) + cli * rj
    return {k: v2 for k, v2 in out.items() if v2}


class PolyHopfAlgebra(HopfPresentation):
    """The presentation Q[x,y]/I as a HopfPresentation, with its parameter."""

    def __init__(self, b):
        b = rational(b)
        if b == 0:
            raise ValueError("b = 0 makes the comultiplication coefficient 1/2b undefined")
        if is_rational_square(b):
            raise ValueError(f"b = {b} is a rational square; the quadratic witness would be rational")
        prod = []
        for (i1, j1) in MONOMIALS:
            row = []
            for (i2, j2) in MONOMIALS:
                row.append(tuple(normal_form(i1 + i2, j1 + j2, b)))
            prod.append(tuple(row))
        unit = [ONE, ZERO, ZERO, ZERO, ZERO, ZERO]
        plain = Algebra(prod, unit)

        dx = {(1, 1): Q(1, 2), (4, 4): 1 / (2 * b)}
        dy = {(1, 4): Q(1, 2), (4, 1): Q(1, 2)}
        comul_cols = []
        for (i, j) in MONOMIALS:
            term = {(0, 0): ONE}
            for _ in range(i):
                term = _tensor_mul(plain, term, dx)
            for _ in range(j):
                term = _tensor_mul(plain, term, dy)
            col = [ZERO] * 36
            for (a, bb), c in term.items():
                col[a * 6 + bb] = c
            comul_cols.append(col)
        comul = Matrix.from_columns(comul_cols, rows=36)

        counit = Matrix(1, 6, [Q(2) ** i if j == 0 else ZERO for (i, j) in MONOMIALS])
        anti_cols = []
        for k, (i, j) in enumerate(MONOMIALS):
            col = [ZERO] * 6
            col[k] = -ONE if j else ONE
            anti_cols.append(col)
        antipode = Matrix.from_columns(anti_cols, rows=6)

        super().__init__(prod, unit, comul, counit, antipode, names=MONOMIAL_NAMES)
        self.b = b
        self.u = 4 * b


def poly_hopf_algebra(b):
    return PolyHopfAlgebra(b)


def variety_points(b):
    """The six rational points of the ideal's variety, when they exist.

    The x-quartic forces x in {-2,-1,1,2}; at x = +-2 the third generator
    forces y = 0, and at x = +-1 the first forces y^2 = -3b.  All six points
    are rational exactly when -3b is a rational square (e.g. b = -3, where
    y = +-3).  Raises ValueError otherwise.
    """
    b = rational(b)
    t2 = -3 * b
    if not is_rational_square(t2):
        raise ValueError(f"-3b = {t2} is not a rational square; the variety is not split")
    from math import isqrt
    num = isqrt(int(t2.numerator))
    den = isqrt(int(t2.denominator))
    t = Q(num, den)
    pts = [(Q(-2), ZERO), (Q(-1), t), (Q(1), t), (Q(2), ZERO), (Q(1), -t), (Q(-1), -t)]
    for g in ideal_generators(b):
        for pt in pts:
            if evaluate_poly(g, pt) != 0:
                raise AssertionError(f"point {pt} does not annihilate the ideal")
    return pts


def evaluation_matrix(points):
    """Row j evaluates the basis monomials at point j."""
    rows = []
    for (x, y) in points:
        rows.append([x ** i * y ** j for (i, j) in MONOMIALS])
    return Matrix.from_rows(rows)


def evaluation_is_homomorphism(P, point):
    """Exact check that evaluation at a point is an algebra map to Q."""
    x, y = point
    vals = [x ** i * y ** j for (i, j) in MONOMIALS]
    for k in range(6):
        for l in range(6):
            prod_val = sum((c * vals[m] for m, c in enumerate(P.prod[k][l]) if c), ZERO)
            if prod_val != vals[k] * vals[l]:
                return False
    unit_val = sum((c * vals[m] for m, c in enumerate(P.unit) if c), ZERO)
    return unit_val == 1


def check_iso_to_descended(P, H, gen):
    """The Hopf isomorphism from the presentation onto a descended cyclic
    structure: x -> gen + gen^-1, y -> w*(gen - gen^-1).

    Returns the 6x6 matrix of the map on the chosen bases after verifying
    every Hopf-map identity exactly; raises PolyMapError naming the first
    violated identity otherwise.
    """
    prov = _provenance_of(H)
    A = prov.parent
    L = A.L
    if H.dim != 6 or P.dim != 6:
        raise ValueError("presentation and target must have dimension 6")
    w = quadratic_sqrt_witness(L)
    t_plus = A.N.index_of(gen)
    t_minus = A.N.index_of(gen.inverse())
    x_ln = vec_add(A.embed(L.unit, t_plus), A.embed(L.unit, t_minus))
    y_ln = vec_add(A.embed(w, t_plus), [-c for c in A.embed(w, t_minus)])
    sol = prov.basis.solve(Matrix.from_columns([x_ln, y_ln], rows=A.dim))
    if sol is None:
        raise PolyMapError("membership")
    x_h = [sol[i, 0] for i in range(6)]
    y_h = [sol[i, 1] for i in range(6)]
    cols = []
    for (i, j) in MONOMIALS:
        img = list(H.unit)
        for _ in range(i):
            img = H.mul(img, x_h)
        for _ in range(j):
            img = H.mul(img, y_h)
        cols.append(img)
    T = Matrix.from_columns(cols, rows=6)
    from .algebra import hopf_map_violation
    violation = hopf_map_violation(T, P, H)
    if violation is not None:
        raise PolyMapError(violation)
    return T


def scaling_invariance_check(b):
    """The presentations with parameters 4b and b are isomorphic via
    x -> x, y -> 2y (same witness field, rescaled witness).  Returns the
    diagonal matrix of the map after exact verification."""
    b = rational(b)
    src = PolyHopfAlgebra(4 * b)
    dst = PolyHopfAlgebra(b)
    diag = [ONE, ONE, ONE, ONE, Q(2), Q(2)]
    cols = []
    for k in range(6):
        col = [ZERO] * 6
        col[k] = diag[k]
        cols.append(col)
    T = Matrix.from_columns(cols, rows=6)
    from .algebra import hopf_map_violation
    violation = hopf_map_violation(T, src, dst)
    if violation is not None:
        raise PolyMapError(violation)
    return T


def point_decomposition_check(b):
    """Cross-check of the Wedderburn splitting against the variety points.

    The six evaluation maps are pairwise distinct algebra homomorphisms;
    their Lagrange idempotents (preimages of the delta functions under the
    evaluation matrix) must coincide, as a set, with the component units
    found by the eigenvalue splitting.  Returns a report dict.
    """
    from .analysis import commutative_wedderburn
    P = poly_hopf_algebra(b)
    pts = variety_points(b)
    ev = evaluation_matrix(pts)
    report = {
        "points": pts,
        "evaluations_are_homomorphisms": all(
            evaluation_is_homomorphism(P, pt) for pt in pts),
        "points_distinct": len(set(pts)) == 6,
        "evaluation_rank": ev.rank(),
    }
    lagrange = ev.solve(Matrix.identity(6))
    wedder = commutative_wedderburn(P)
    units = {tuple(c.unit) for c in wedder.components}
    lag_units = {tuple(lagrange.column(j)) for j in range(6)}
    report["wedderburn_summary"] = wedder.summary()
    report["six_one_dimensional"] = wedder.summary() == tuple([(1, 1, "field")] * 6)
    report["units_match_lagrange"] = units == lag_units
    report["passed"] = (report["evaluations_are_homomorphisms"]
                        and report["points_distinct"]
                        and report["evaluation_rank"] == 6
                        and report["six_one_dimensional"]
                        and report["units_match_lagrange"])
    return report
