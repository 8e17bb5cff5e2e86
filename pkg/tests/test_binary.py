import pytest

from binary_k1.binary import (BinaryComplex, RelationExpr, build_conjugated_ladder, diagonal_of,
                              direct_sum_binary, make_ses, shift_binary, swap_top_bottom,
                              tau_swap, two_term, validate_ladder, validate_ses, BinaryLadder,
                              BinarySES)
from binary_k1.complexes import ChainComplex, zero_complex
from binary_k1.errors import (FieldMismatch, NotAcyclic, NotInvertible, NotInvolution,
                              ShapeMismatch)
from binary_k1.fields import GF, QQ
from binary_k1.matrix import Matrix, det
from binary_k1.randgen import GenConfig, gen_binary, random_involution, random_matrix
from binary_k1.torsion import binary_torsion as t

import numpy as np


def M(rows, f=QQ):
    return Matrix(f, rows)


def empty(f=QQ):
    return BinaryComplex(zero_complex(f), zero_complex(f))


def test_two_term_valid():
    p = two_term(M([[2]]), M([[3]]))
    assert p.dims == (1, 1) and p.top.d(1) == M([[2]]) and p.bot.d(1) == M([[3]])


def test_two_term_identity_is_diagonal():
    assert two_term(Matrix.identity(QQ, 2), Matrix.identity(QQ, 2)).is_diagonal()


def test_two_term_permutation_f5():
    f = GF(5)
    two_term(M([[0, 1], [1, 0]], f), Matrix.identity(f, 2))


def test_two_term_errors():
    with pytest.raises(NotInvertible):
        two_term(M([[0]]), M([[1]]))
    with pytest.raises(ShapeMismatch):
        two_term(M([[1]]), Matrix.identity(QQ, 2))
    with pytest.raises(FieldMismatch):
        two_term(M([[1]]), M([[1]], GF(5)))


def test_non_acyclic_rejected():
    c = ChainComplex(QQ, (1, 1), [M([[0]])])
    ok = ChainComplex(QQ, (1, 1), [M([[1]])])
    with pytest.raises(NotAcyclic):
        BinaryComplex(ok, c)
    with pytest.raises(NotAcyclic):
        diagonal_of(c)


def test_tau_swap_examples():
    one = tau_swap(QQ, 1)
    assert one.top.d(1).is_identity() and one.bot.d(1) == M([[0, 1], [1, 0]])
    assert t(one).value == -1
    assert tau_swap(QQ, 0).dims == (0,)
    # oracle: determinant of the 4x4 block permutation
    assert t(tau_swap(QQ, 2)) == det(tau_swap(QQ, 2).bot.d(1)).inverse()
    assert t(tau_swap(QQ, 2)).value == 1


def test_swap_examples():
    p = two_term(M([[2]]), M([[3]]))
    assert swap_top_bottom(p) == two_term(M([[3]]), M([[2]]))
    q = gen_binary(GenConfig(seed=4, length=3))
    assert swap_top_bottom(swap_top_bottom(q)) == q
    d = diagonal_of(q.top)
    assert swap_top_bottom(d) == d


def test_diagonal_of_examples():
    c = ChainComplex(QQ, (1, 1), [M([[1]])])
    assert diagonal_of(c) == two_term(M([[1]]), M([[1]]))
    c121 = ChainComplex(QQ, (1, 2, 1), [M([[0, 1]]), M([[1], [0]])])
    d = diagonal_of(c121)
    assert d.length == 2 and d.is_diagonal()


def test_shift_and_sum_examples():
    p = two_term(M([[2]]), M([[3]]))
    assert shift_binary(p, 1).dims == (0, 1, 1)
    assert direct_sum_binary(p, empty()) == p


@pytest.mark.parametrize("seed", range(8))
def test_torsion_of_direct_sum(field, seed):
    a = gen_binary(GenConfig(seed=seed, field=field, length=3))
    b = gen_binary(GenConfig(seed=seed + 50, field=field, length=2))
    assert t(direct_sum_binary(a, b)) == t(a) * t(b)


# -- SES ---------------------------------------------------------------------------


def test_split_ses_total_is_direct_sum():
    a = gen_binary(GenConfig(seed=1, length=2))
    b = gen_binary(GenConfig(seed=2, length=2))
    s = make_ses(a, b)
    assert s.total == direct_sum_binary(a, b)


def test_random_nonsplit_ses_valid_over_q():
    rng = np.random.default_rng(3)
    a = gen_binary(GenConfig(seed=5, length=3, max_rank=2), ranks=[1, 2, 1])
    b = gen_binary(GenConfig(seed=6, length=3, max_rank=2), ranks=[2, 1, 1])
    g = [random_matrix(rng, QQ, x, y) for x, y in zip(a.dims, b.dims)]
    s = make_ses(a, b, g, g)
    assert validate_ses(s)
    assert s.total != direct_sum_binary(a, b)


def test_ses_with_empty_sub():
    b = gen_binary(GenConfig(seed=2, length=2))
    s = make_ses(empty().padded(2), b)
    assert s.total == b


def test_invalid_ses_detected():
    a = two_term(M([[1]]), M([[1]]))
    s = make_ses(a, a)
    bad = BinarySES(s.sub, s.total, s.quot, s.incl, tuple(m.scale(0) for m in s.proj))
    assert not validate_ses(bad)


# -- ladders -----------------------------------------------------------------------


def test_identity_ladder():
    p = gen_binary(GenConfig(seed=3, length=3))
    ids = [Matrix.identity(QQ, m) for m in p.dims]
    lad = build_conjugated_ladder(p, ids, ids)
    assert lad.target == p and validate_ladder(lad)


def test_minus_identity_ladder_on_generator():
    p = two_term(M([[2]]), M([[3]]))
    lad = build_conjugated_ladder(p, [M([[-1]]), M([[-1]])], [M([[1]]), M([[1]])])
    assert lad.target == p and validate_ladder(lad)


def test_random_involution_ladder_k4(field):
    rng = np.random.default_rng(9)
    p = gen_binary(GenConfig(seed=9, field=field, length=4))
    s = [random_involution(rng, field, m) for m in p.dims]
    u = [random_involution(rng, field, m) for m in p.dims]
    assert validate_ladder(build_conjugated_ladder(p, s, u))


def test_non_involution_rejected():
    p = two_term(M([[2]]), M([[3]]))
    with pytest.raises(NotInvolution):
        build_conjugated_ladder(p, [M([[2]]), M([[1]])], [M([[1]]), M([[1]])])


def test_broken_ladder_fails_validation():
    p = two_term(M([[2]]), M([[3]]))
    lad = BinaryLadder(p, p, (M([[2]]), M([[1]])), (M([[1]]), M([[1]])))
    assert not validate_ladder(lad)


# -- formal combinations ---------------------------------------------------------


def test_relation_expr_mixing_fields_rejected():
    with pytest.raises(FieldMismatch):
        RelationExpr.of((1, two_term(M([[1]]), M([[1]]))),
                        (1, two_term(M([[1]], GF(5)), M([[1]], GF(5)))))
