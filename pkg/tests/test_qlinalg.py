import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from dialg.qlinalg import EchelonBasis, QMatrix, dense, rank, row_space_contains, row_space_equal, rref

entries = st.integers(-3, 3).map(Fraction) | st.fractions(-3, 3, max_denominator=5)


@st.composite
def matrices(draw, max_rows=7, max_cols=7):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return QMatrix.from_rows([[draw(entries) for _ in range(c)] for _ in range(r)], c)


def test_identity_rank():
    assert rank(QMatrix.identity(7)) == 7


@given(matrices())
def test_rank_matches_textbook_elimination(m):
    assert rank(m) == oracles.gauss_rank(m.rows)


@given(matrices())
def test_rank_equals_transpose_rank(m):
    assert rank(m) == rank(m.transpose())


@given(matrices())
def test_rref_deterministic_and_idempotent(m):
    a, r, piv = rref(m)
    assert rref(m) == (a, r, piv)
    b, r2, piv2 = rref(a)
    assert (b, r2, piv2) == (a, r, piv)
    for i, c in enumerate(piv):
        assert a[i, c] == 1
        assert all(a[k, c] == 0 for k in range(a.nrows) if k != i)


@given(matrices(), matrices())
def test_stack_rank_bounds(a, b):
    if a.ncols != b.ncols:
        b = QMatrix.from_rows([list(r[: a.ncols]) + [0] * (a.ncols - len(r)) for r in b.rows], a.ncols)
    s = a.stack(b)
    assert rank(s) >= max(rank(a), rank(b))
    assert all(row_space_contains(s, r) for r in a.rows)


def test_membership_trivial():
    v = [1, 2, 3]
    assert row_space_contains(QMatrix.from_rows([v]), v)
    assert not row_space_contains(QMatrix.from_rows([v]), [1, 2, 4])


def test_width_mismatch():
    with pytest.raises(ValueError):
        row_space_contains(QMatrix.from_rows([[1, 2]]), [1, 2, 3])
    with pytest.raises(ValueError):
        row_space_equal(QMatrix.from_rows([[1, 2]]), QMatrix.from_rows([[1, 2, 3]]))


@given(matrices())
def test_row_space_equal_under_permutation_and_scaling(m):
    rows = list(m.rows)
    random.Random(0).shuffle(rows)
    assert row_space_equal(m, QMatrix.from_rows(rows, m.ncols))
    assert row_space_equal(m, QMatrix.from_rows([[2 * x for x in r] for r in m.rows], m.ncols))


def test_large_transpose_rank():
    rng = random.Random(7)
    rows = [[rng.choice([0, 0, 0, 1, -1, 2]) for _ in range(600)] for _ in range(40)]
    rows += [[a + b for a, b in zip(rows[i], rows[i + 1])] for i in range(0, 60, 2) if i + 1 < 40]
    m = QMatrix.from_rows(rows, 600)
    assert rank(m) == rank(m.transpose()) == 40


@given(matrices())
def test_echelon_basis_agrees_with_dense(m):
    e = EchelonBasis(m.ncols)
    for r in m.rows:
        e.add({i: x for i, x in enumerate(r) if x})
    assert e.rank == rank(m)
    assert row_space_equal(e.to_qmatrix() if e.rank else QMatrix((), m.ncols), rref(m)[0]) if e.rank else rank(m) == 0
    for r in m.rows:
        assert e.contains({i: x for i, x in enumerate(r) if x})


def test_no_floats_anywhere():
    m = QMatrix.from_rows([[1, 3], [2, 7]])
    red, _, _ = rref(m)
    assert all(isinstance(x, Fraction) for row in red.rows for x in row)
    assert dense({1: Fraction(1, 3)}, 3) == [0, Fraction(1, 3), 0]
