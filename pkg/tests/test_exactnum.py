from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jetgauge.exactnum import (
    ExactMatrix,
    QuadScalar,
    commutator,
    mat_mul,
    nullspace_exact,
    qs,
    rank_exact,
    solve_exact,
    sqrt_rational,
    trace_metric,
)

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)
quads = st.builds(QuadScalar, fractions, fractions, fractions, fractions)
nonzero_quads = quads.filter(bool)


def test_basis_products():
    assert qs(0, 1) * qs(0, 1) == qs(2)
    assert qs(0, 0, 1) * qs(0, 0, 1) == qs(5)
    assert qs(0, 0, 0, 1) * qs(0, 0, 0, 1) == qs(10)
    assert qs(0, 1) * qs(0, 0, 1) == qs(0, 0, 0, 1)
    assert qs(0, 1) * qs(0, 0, 0, 1) == qs(0, 0, 2)
    assert qs(0, 0, 1) * qs(0, 0, 0, 1) == qs(0, 5)


def test_difference_of_squares():
    assert (qs(1) + qs(0, 0, 1)) * (qs(1) - qs(0, 0, 1)) == qs(-4)


def test_inv_sqrt2_times_sqrt10():
    # (1/sqrt2) * sqrt10 = sqrt5, expanded in the fixed basis
    assert qs(0, F(1, 2)) * qs(0, 0, 0, 1) == qs(0, 0, 1)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        qs(1) / qs(0)


@given(quads, quads, quads)
def test_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x


@given(nonzero_quads)
def test_multiplicative_inverse(x):
    assert x * x.inverse() == qs(1)


@given(quads, nonzero_quads)
def test_division_roundtrip(x, y):
    assert (x / y) * y == x


def test_to_float():
    assert qs(F(1, 2)).to_float() == 0.5
    assert qs(0).to_float() == 0.0
    assert qs(0, 0, F(1, 5)).to_float() == 0.4472135954999579


def test_sqrt_rational():
    assert sqrt_rational(F(0)) == qs(0)
    assert sqrt_rational(F(1, 5)) == qs(0, 0, F(1, 5))
    assert sqrt_rational(F(4, 5)) == qs(0, 0, F(2, 5))
    assert sqrt_rational(F(1, 2)) == qs(0, F(1, 2))
    assert sqrt_rational(F(9, 4)) == qs(F(3, 2))
    assert sqrt_rational(F(3)) is None
    with pytest.raises(ValueError):
        sqrt_rational(F(-1))


@given(
    st.fractions(min_value=F(1, 20), max_value=50, max_denominator=20),
    st.sampled_from([1, 2, 5, 10]),
)
def test_sqrt_rational_roundtrip(s, k):
    root = sqrt_rational(s * s * k)
    assert root is not None
    assert root * root == qs(s * s * k)


def test_str_forms():
    assert str(qs(0)) == "0"
    assert str(qs(F(1, 2), 0, F(-3, 4))) == "1/2 - 3/4*sqrt5"
    assert str(qs(0, 1)) == "sqrt2"


# -- matrices -------------------------------------------------------------


def so2_x12():
    return ExactMatrix([[0, 1], [-1, 0]])


def test_identity_product():
    a = ExactMatrix([[1, 2], [3, F(4, 7)]])
    assert mat_mul(ExactMatrix.identity(2), a) == a
    assert mat_mul(ExactMatrix.zeros(2), a) == ExactMatrix.zeros(2)


def test_x12_squared_is_minus_identity():
    x = so2_x12()
    assert mat_mul(x, x) == ExactMatrix.identity(2).scale(qs(-1))


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        mat_mul(ExactMatrix.identity(2), ExactMatrix.identity(3))
    with pytest.raises(ValueError):
        trace_metric([qs(1)] * 3, ExactMatrix.identity(2), ExactMatrix.identity(2))


small_mats = st.builds(
    lambda rows: ExactMatrix(rows),
    st.lists(st.lists(fractions, min_size=3, max_size=3), min_size=3, max_size=3),
)


@given(small_mats, small_mats)
@settings(max_examples=50)
def test_commutator_antisymmetry(a, b):
    assert commutator(a, b) == -commutator(b, a)


@given(small_mats)
def test_commutator_with_self_vanishes(a):
    assert commutator(a, a).is_zero()


def test_trace_metric_examples():
    x = so2_x12()
    assert trace_metric([qs(1), qs(1)], x, x) == qs(-2)
    h = [qs(0), qs(1)]
    a = ExactMatrix([[5, 0], [0, 0]])  # support only on the zero row/col
    assert trace_metric(h, a, a) == qs(0)


@given(small_mats, small_mats, st.lists(fractions, min_size=3, max_size=3))
@settings(max_examples=50)
def test_trace_metric_cyclic_consistency(a, b, hdiag):
    # tr(h A B) computed directly equals tr(B h A) assembled the other way
    h = [qs(v) for v in hdiag]
    direct = trace_metric(h, a, b)
    hmat = ExactMatrix.diagonal(h)
    assert direct == ((b @ hmat) @ a).trace()


@given(small_mats, small_mats, small_mats, st.lists(fractions, min_size=3, max_size=3))
@settings(max_examples=30)
def test_trace_metric_bilinear(a, b, c, hdiag):
    h = [qs(v) for v in hdiag]
    assert trace_metric(h, a + b, c) == trace_metric(h, a, c) + trace_metric(h, b, c)
    assert trace_metric(h, a, b + c) == trace_metric(h, a, b) + trace_metric(h, a, c)


def test_det_and_solve():
    m = ExactMatrix([[2, 1, 0], [0, 3, 1], [1, 0, 1]])
    assert m.det() == qs(7)
    cols = [[m.rows[i][j] for i in range(3)] for j in range(3)]
    sol = solve_exact(cols, [qs(1), qs(2), qs(3)])
    recon = [
        sum((cols[j][i] * sol[j] for j in range(3)), qs(0)) for i in range(3)
    ]
    assert recon == [qs(1), qs(2), qs(3)]


def test_solve_inconsistent_returns_none():
    cols = [[qs(1), qs(0), qs(0)]]
    assert solve_exact(cols, [qs(0), qs(1), qs(0)]) is None


def test_nullspace_and_rank():
    rows = [[qs(1), qs(2), qs(3)], [qs(2), qs(4), qs(6)]]
    assert rank_exact(rows) == 1
    ns = nullspace_exact(rows)
    assert len(ns) == 2
    for v in ns:
        for row in rows:
            assert sum((a * b for a, b in zip(row, v)), qs(0)) == qs(0)
