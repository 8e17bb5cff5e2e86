from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from binary_k1.errors import DimensionMismatch, InvalidInput, NonSquare, NotInvertible
from binary_k1.fields import GF, QQ, Scalar, parse_field, field_from_json
from binary_k1.matrix import (Matrix, column_space_basis, det, image_basis, inverse, kernel_basis,
                              kron, rank, rref, solve_any)
from oracles import brute_det

F5 = GF(5)


def M(rows, f=QQ):
    return Matrix(f, rows)


# -- fields --------------------------------------------------------------------


def test_rational_encoding():
    assert QQ.encode(Fraction(2, 3)) == "2/3"
    assert QQ.encode(Fraction(4, 2)) == "2"
    assert QQ.coerce("-6/4") == Fraction(-3, 2)


def test_prime_field_reduces_and_inverts():
    assert F5.coerce(7) == 2
    assert F5.coerce("1/2") == 3
    assert F5.inv(2) == 3
    assert F5.encode(4) == 4


@pytest.mark.parametrize("p", [4, 1, 0, -7, 100])
def test_non_prime_modulus_rejected(p):
    with pytest.raises(InvalidInput):
        GF(p)


def test_parse_field_spellings():
    assert parse_field("q") == QQ
    assert parse_field("fp:7") == GF(7)
    for bad in ("fp:4", "fp:x", "r"):
        with pytest.raises(InvalidInput):
            parse_field(bad)


def test_field_descriptor_round_trip():
    assert field_from_json(QQ.to_json()) == QQ
    assert field_from_json({"field": "Fp", "p": 101}) == GF(101)
    with pytest.raises(InvalidInput):
        field_from_json({"field": "Fp", "p": 9})


def test_scalar_arithmetic():
    a = Scalar.of(QQ, 2)
    assert str(a / Scalar.of(QQ, 3)) == "2/3"
    assert a ** -2 == Scalar.of(QQ, "1/4")
    assert (Scalar.of(F5, 2) * Scalar.of(F5, 3)).value == 1


def test_bad_entries_rejected():
    with pytest.raises(InvalidInput):
        M([[True]])
    with pytest.raises(InvalidInput):
        M([["x"]])
    with pytest.raises(InvalidInput):
        Matrix(F5, [["1/5"]])
    with pytest.raises(DimensionMismatch):
        Matrix(QQ, [[1, 2], [3]])


# -- rref / det / solve ------------------------------------------------------------


def test_rref_rank_one():
    _, piv, _ = rref(M([[1, 2], [2, 4]]))
    assert piv == [0]
    assert rank(M([[1, 2], [2, 4]])) == 1


def test_rref_identity():
    red, piv, _ = rref(Matrix.identity(QQ, 3))
    assert piv == [0, 1, 2] and red.is_identity()


def test_rref_permutation_f5():
    _, piv, _ = rref(M([[0, 1], [1, 0]], F5))
    assert piv == [0, 1]


def test_rref_row_ops_det_relation():
    m = M([[0, 2, 1], [3, 1, 0], [1, 1, 1]])
    red, piv, rod = rref(m)
    assert red.is_identity()
    # every row operation scales det by rod's factor, ending at det(I) = 1
    assert det(m) == rod.inverse()


def test_det_examples():
    assert det(Matrix.diagonal(QQ, [2, 3])) == Scalar.of(QQ, 6)
    assert det(M([[0, 1], [1, 0]])) == Scalar.of(QQ, -1)
    assert det(Matrix.diagonal(F5, [2, 3])) == Scalar.of(F5, 1)
    assert det(Matrix.zeros(QQ, 0, 0)) == Scalar.of(QQ, 1)


def test_det_non_square():
    with pytest.raises(NonSquare):
        det(Matrix.zeros(QQ, 2, 3))


def test_solve_any_examples():
    assert solve_any(M([[2]]), M([[4]])) == M([[2]])
    assert solve_any(M([[1, -1]]), M([[1]])) == M([[1], [0]])
    assert solve_any(M([[0]]), M([[1]])) is None
    with pytest.raises(DimensionMismatch):
        solve_any(M([[1]]), M([[1], [2]]))


def test_column_space_basis_examples():
    assert column_space_basis(M([[1, 2], [2, 4]])) == M([[1], [2]])
    assert column_space_basis(Matrix.identity(QQ, 2)).is_identity()
    z = column_space_basis(Matrix.zeros(QQ, 2, 3))
    assert z.shape == (2, 0)


def test_image_basis_is_canonical():
    a = M([[1, 2], [2, 4]])
    assert image_basis(a) == image_basis(a.scale(Fraction(5)))
    assert image_basis(M([[1, 0, 2], [0, 1, 3]])).is_identity()


def test_inverse_and_singular():
    a = M([[2, 1], [1, 1]])
    assert (a @ inverse(a)).is_identity()
    with pytest.raises(NotInvertible):
        inverse(M([[1, 2], [2, 4]]))


def test_kernel_basis_spans_kernel():
    a = M([[1, 2, 3], [2, 4, 6]])
    k = kernel_basis(a)
    assert k.shape == (3, 2) and (a @ k).is_zero() and rank(k) == 2


def test_kron_shape_and_mixed_product():
    a, b = M([[1, 2], [0, 1]]), M([[3], [4]])
    k = kron(a, b)
    assert k.shape == (4, 2)
    assert k @ kron(Matrix.identity(QQ, 2), M([[1]])) == k


# -- properties --------------------------------------------------------------------

ints = st.integers(-4, 4)


def square(n):
    return st.lists(st.lists(ints, min_size=n, max_size=n), min_size=n, max_size=n)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(square(n), square(n))))
def test_det_matches_leibniz_and_is_multiplicative(pair):
    a, b = pair
    for f, p in ((QQ, None), (GF(101), 101)):
        A, B = Matrix(f, a), Matrix(f, b)
        assert det(A).value == f.coerce(brute_det(a, p))
        assert det(A @ B) == det(A) * det(B)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_solve_any_recovers_image_basis(r, c, data):
    rows = data.draw(st.lists(st.lists(ints, min_size=c, max_size=c), min_size=r, max_size=r))
    for f in (QQ, GF(7)):
        m = Matrix(f, rows)
        j = column_space_basis(m)
        assert m @ solve_any(m, j) == j
        assert rank(j) == j.ncols == rank(m)
        x = solve_any(m, image_basis(m))
        assert m @ x == image_basis(m)
