import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.polys.domains import GF as SGF
from sympy.polys.matrices import DomainMatrix

from grpair.exactalg import (
    GF,
    QQ,
    FieldMismatch,
    Matrix,
    MatrixFormatError,
    Scalar,
    Subspace,
    det,
    kernel_basis,
    parse_field,
    random_invertible,
    random_matrix,
    random_sl,
    rank,
    rref,
    subspace_ops,
)


def _sympy_rank(m: Matrix) -> int:
    if m.field is QQ:
        return sympy.Matrix(m.tolist()).rank()
    dm = DomainMatrix([[SGF(m.field.p)(x) for x in row] for row in m.tolist()], m.shape, SGF(m.field.p))
    return dm.rank()


def test_field_parsing():
    assert parse_field("rational") is QQ
    assert parse_field("fp:7") == GF(7)
    for bad in ("fp:6", "fp:3", "fp:x", "real"):
        with pytest.raises(ValueError):
            parse_field(bad)


def test_scalar_mixed_fields_rejected():
    with pytest.raises(FieldMismatch):
        Scalar(1, GF(7)) + Scalar(1, GF(11))
    assert Scalar(3, GF(7)) * Scalar(5, GF(7)) == Scalar(1, GF(7))
    assert Scalar(Fraction(1, 2), QQ) + Scalar(Fraction(1, 2), QQ) == Scalar(1, QQ)


def test_rref_hand_example():
    rows, pivots = rref(Matrix([[1, 2, 3], [2, 4, 6]], QQ))
    assert [list(r) for r in rows] == [[1, 2, 3]]
    assert pivots == [0] or tuple(pivots) == (0,)
    assert rank(Matrix([[1, 2, 3], [2, 4, 6]], QQ)) == 1


def test_det_rejects_non_square():
    with pytest.raises(ValueError):
        det(Matrix([[1, 2, 3], [4, 5, 6]], QQ))


@pytest.mark.parametrize("field", [QQ, GF(7), GF(10007)], ids=lambda f: f.tag)
def test_rank_and_det_against_sympy(field):
    rng = random.Random(11)
    for _ in range(15):
        r, c = rng.randrange(1, 7), rng.randrange(1, 7)
        m = random_matrix(r, c, field, rng, bound=2)
        if rng.random() < 0.4 and r > 1:
            e = [list(x) for x in m.entries]
            e[-1] = e[0]
            m = Matrix(e, field)
        assert rank(m) == _sympy_rank(m)
    for _ in range(10):
        m = random_matrix(5, 5, field, rng, bound=4)
        want = sympy.Matrix(m.tolist()).det()
        got = det(m).value
        if field is QQ:
            assert got == Fraction(int(want.p), int(want.q))
        else:
            assert got == int(want) % field.p


def test_kernel_matches_sympy_nullspace():
    rng = random.Random(3)
    for _ in range(10):
        m = random_matrix(3, 6, QQ, rng, bound=3)
        K = kernel_basis(m)
        ns = sympy.Matrix(m.tolist()).nullspace()
        assert K.dim == len(ns)
        oracle = Subspace([[Fraction(int(x.p), int(x.q)) for x in v] for v in ns], 6, QQ)
        assert K == oracle
        for v in K.basis:
            assert all(x == 0 for x in m.apply(v))


def test_inverse_and_transpose():
    rng = random.Random(5)
    for F in (QQ, GF(7)):
        g = random_invertible(6, F, rng)
        assert g @ g.inverse() == Matrix.identity(6, F)
        assert g.inverse_transpose() == g.T.inverse()
    with pytest.raises((ZeroDivisionError, ValueError)):
        Matrix([[1, 2], [2, 4]], QQ).inverse()


def test_random_sl_has_det_one():
    rng = random.Random(9)
    for F in (QQ, GF(10007)):
        assert det(random_sl(5, F, rng)) == Scalar(1, F)


def test_subspace_operations():
    F = QQ
    a = Subspace([[1, 0, 0, 0], [0, 1, 0, 0]], 4, F)
    b = Subspace([[0, 1, 0, 0], [0, 0, 1, 0]], 4, F)
    ops = subspace_ops(a, b)
    assert ops.intersection == Subspace([[0, 1, 0, 0]], 4, F)
    assert ops.sum.dim == 3
    assert not ops.equal
    assert [0, 5, 0, 0] in a and [0, 0, 1, 0] not in a
    assert a.annihilator() == Subspace([[0, 0, 1, 0], [0, 0, 0, 1]], 4, F)
    # canonical basis does not depend on the spanning set
    assert Subspace([[1, 1, 0, 0], [1, -1, 0, 0], [2, 0, 0, 0]], 4, F) == a


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5), min_size=1, max_size=5),
       st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5), min_size=1, max_size=5))
def test_dimension_formula(va, vb):
    a, b = Subspace(va, 5, QQ), Subspace(vb, 5, QQ)
    assert a.sum(b).dim + a.intersection(b).dim == a.dim + b.dim


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_det_multiplicative_mod_p(seed):
    rng = random.Random(seed)
    F = GF(101)
    a, b = random_matrix(4, 4, F, rng), random_matrix(4, 4, F, rng)
    assert det(a @ b) == det(a) * det(b)


def test_matrix_document_round_trip():
    m = Matrix([[Fraction(1, 2), -3], [0, Fraction(-7, 4)]], QQ)
    assert Matrix.loads(m.dumps()) == m
    p = Matrix([[1, 6], [3, 4]], GF(7))
    assert Matrix.loads(p.dumps()) == p


def test_matrix_document_errors_name_position():
    text = '{"field": "rational", "rows": 2, "cols": 2, "entries": [["1", "2"], ["3", "x/y"]]}'
    with pytest.raises(MatrixFormatError, match="row 1, column 1"):
        Matrix.loads(text)
    with pytest.raises(MatrixFormatError):
        Matrix.loads('{"field": "rational", "rows": 2, "cols": 2, "entries": [["1", "2"]]}')
    with pytest.raises(MatrixFormatError):
        Matrix.loads("not json")


def test_field_override_reduces_entries():
    m = Matrix.loads('{"field": "rational", "rows": 1, "cols": 2, "entries": [["8", "1/2"]]}', GF(7))
    assert m.tolist() == [[1, 4]]
