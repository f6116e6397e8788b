import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfgalois.linalg import (Matrix, ONE, Q, ZERO, hstack, integer_normalized,
                               rational, spans_equal, vec_dot, vstack)

rationals = st.fractions(min_value=-30, max_value=30, max_denominator=7).map(
    lambda f: Q(f.numerator, f.denominator))


def small_matrix(rows, cols):
    return st.lists(
        st.lists(rationals, min_size=cols, max_size=cols),
        min_size=rows, max_size=rows,
    ).map(Matrix.from_rows)


square = st.integers(2, 4).flatmap(lambda n: small_matrix(n, n))


def test_construction_and_entries():
    m = Matrix.from_rows([[1, 2], [3, 4]])
    assert m.rows == 2 and m.cols == 2
    assert m[1, 0] == 3
    assert list(m.row(1)) == [Q(3), Q(4)]
    assert list(m.column(1)) == [Q(2), Q(4)]
    assert m.transpose() == Matrix.from_rows([[1, 3], [2, 4]])


def test_rational_coercion():
    assert rational("3/4") == Q(3, 4)
    assert rational(-5) == Q(-5)
    assert rational(2, 6) == Q(1, 3)


def test_arithmetic():
    a = Matrix.from_rows([[1, 2], [3, 4]])
    b = Matrix.from_rows([[0, 1], [1, 0]])
    assert a + (-a) == Matrix.zeros(2, 2)
    assert (a - b) + b == a
    assert a * Matrix.identity(2) == a
    assert (a * b)[0, 0] == 2
    assert (a * Q(1, 2))[1, 1] == 2
    assert (Q(1, 2) * a) == a * Q(1, 2)


@given(square)
@settings(max_examples=60, deadline=None)
def test_rref_idempotent(m):
    r, pivots = m.rref()
    r2, pivots2 = r.rref()
    assert r == r2
    assert pivots == pivots2


@given(square)
@settings(max_examples=60, deadline=None)
def test_kernel_annihilated(m):
    k = m.kernel()
    assert m.rank() + k.cols == m.cols
    for j in range(k.cols):
        assert all(v == 0 for v in m.apply(k.column(j)))


@given(square, st.data())
@settings(max_examples=60, deadline=None)
def test_solve_residual(m, data):
    x = data.draw(st.lists(rationals, min_size=m.cols, max_size=m.cols))
    rhs = Matrix.from_columns([m.apply(x)], rows=m.rows)
    sol = m.solve(rhs)
    assert sol is not None
    assert m.apply(sol.column(0)) == m.apply(x)


def test_solve_inconsistent():
    m = Matrix.from_rows([[1], [1]])
    rhs = Matrix.from_columns([[Q(0), Q(1)]], rows=2)
    assert m.solve(rhs) is None


@given(square)
@settings(max_examples=40, deadline=None)
def test_inverse_when_full_rank(m):
    if m.rank() < m.rows:
        assert m.inverse() is None
    else:
        inv = m.inverse()
        assert m * inv == Matrix.identity(m.rows)
        assert inv * m == Matrix.identity(m.rows)


@given(small_matrix(2, 2), small_matrix(3, 3), st.data())
@settings(max_examples=40, deadline=None)
def test_kron_on_simple_tensors(a, b, data):
    x = data.draw(st.lists(rationals, min_size=2, max_size=2))
    y = data.draw(st.lists(rationals, min_size=3, max_size=3))
    xy = [xi * yj for xi in x for yj in y]
    ax = a.apply(x)
    by = b.apply(y)
    assert a.kron(b).apply(xy) == [ai * bj for ai in ax for bj in by]


def test_integer_normalized():
    assert integer_normalized([Q(1, 2), Q(-3, 4)]) == [Q(2), Q(-3)]
    assert integer_normalized([Q(-2), Q(4)]) == [Q(1), Q(-2)]
    with pytest.raises(ValueError):
        integer_normalized([Q(0), Q(0)])


def test_stacking():
    a = Matrix.identity(2)
    b = Matrix.zeros(2, 2)
    assert hstack(a, b).cols == 4
    assert vstack(a, b).rows == 4


def test_spans_equal():
    b1 = Matrix.from_columns([[ONE, ZERO], [ZERO, ONE]], rows=2)
    b2 = Matrix.from_columns([[Q(2), Q(2)], [ZERO, Q(3)]], rows=2)
    b3 = Matrix.from_columns([[ONE, ONE]], rows=2)
    assert spans_equal(b1, b2)
    assert not spans_equal(b1, b3)


def test_vec_dot():
    assert vec_dot([Q(1), Q(2)], [Q(3), Q(4)]) == 11
