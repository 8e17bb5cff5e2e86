"""Seeded generators for every instance family the verification suites use.

Randomness comes from ``numpy.random.Generator`` (PCG64). A :class:`GenConfig`
seed fully determines the output; suites derive one 64-bit seed per trial via
``numpy.random.SeedSequence`` so any failing trial can be replayed alone.

Acyclic complexes are produced by conjugating the standard complex
``d_n(x, y) = (y, 0)`` on ``P_n = F^{b_n} + F^{b_{n-1}}`` with random
invertible matrices; every acyclic complex with those image ranks arises this
way.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from .binary import (BinaryComplex, BinaryLadder, BinarySES, build_conjugated_ladder,
                     make_ses)
from .complexes import ChainComplex
from .fields import QQ, PrimeField
from .matrix import Matrix, inverse, kron, rank
from .totals import NenashevDiagram, validate_diagram


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    field: object = QQ
    max_rank: int = 2
    length: int = 3
    entry_bound: int = 3

    def __post_init__(self):
        if self.max_rank < 0 or self.length < 1:
            raise ValueError("need max_rank >= 0 and length >= 1")

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)


def trial_seed(seed: int, trial: int) -> int:
    return int(np.random.SeedSequence([seed, trial]).generate_state(1, dtype=np.uint64)[0])


# -- matrices ------------------------------------------------------------------


def _int(rng, lo: int, hi: int) -> int:
    return int(rng.integers(lo, hi + 1))


def random_scalar(rng, field, bound: int = 3):
    if isinstance(field, PrimeField):
        return _int(rng, 0, field.p - 1)
    return Fraction(_int(rng, -bound, bound))


def random_matrix(rng, field, nrows: int, ncols: int, bound: int = 3) -> Matrix:
    rows = [[random_scalar(rng, field, bound) for _ in range(ncols)] for _ in range(nrows)]
    return Matrix(field, rows, nrows, ncols, coerce=False)


def _nonzero_rational(rng, bound: int) -> Fraction:
    num = _int(rng, 1, bound) * (1 if rng.integers(2) else -1)
    den = _int(rng, 1, bound) if rng.integers(3) == 0 else 1
    return Fraction(num, den)


def random_invertible(rng, field, n: int, bound: int = 3) -> Matrix:
    """Uniform by rejection over F_p; over Q a product perm * L * D * U with small entries."""
    if isinstance(field, PrimeField):
        while True:
            m = random_matrix(rng, field, n, n)
            if rank(m) == n:
                return m
    perm = [int(x) for x in rng.permutation(n)]
    L = [[Fraction(0)] * n for _ in range(n)]
    U = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        L[i][i] = Fraction(1)
        U[i][i] = _nonzero_rational(rng, bound)
        for j in range(i):
            L[i][j] = Fraction(_int(rng, -1, 1))
        for j in range(i + 1, n):
            U[i][j] = Fraction(_int(rng, -1, 1))
    P = [[Fraction(1 if perm[i] == j else 0) for j in range(n)] for i in range(n)]
    return (Matrix(field, P, n, n, coerce=False) @ Matrix(field, L, n, n, coerce=False)
            @ Matrix(field, U, n, n, coerce=False))


def random_involution(rng, field, n: int, bound: int = 3) -> Matrix:
    """A diag(+-1) A^{-1}; exactly squares to the identity."""
    a = random_invertible(rng, field, n, bound)
    signs = [field.coerce(1 if rng.integers(2) else -1) for _ in range(n)]
    return a @ Matrix.diagonal(field, signs) @ inverse(a)


# -- complexes -----------------------------------------------------------------


def random_ranks(rng, length: int, max_rank: int, p0_zero: bool = False) -> list[int]:
    """Image ranks b_0 .. b_{length-1}; zeros occur with positive probability."""
    ranks = [_int(rng, 0, max_rank) for _ in range(length)]
    if p0_zero and ranks:
        ranks[0] = 0
    return ranks


def standard_complex(field, ranks) -> ChainComplex:
    k = len(ranks)
    b = list(ranks) + [0]
    dims = [b[n] + (b[n - 1] if n > 0 else 0) for n in range(k + 1)]
    diffs = []
    for n in range(1, k + 1):
        d = [[field.zero] * dims[n] for _ in range(dims[n - 1])]
        for i in range(b[n - 1]):
            d[i][b[n] + i] = field.one
        diffs.append(Matrix(field, d, dims[n - 1], dims[n], coerce=False))
    return ChainComplex(field, dims, diffs)


def conjugate(c: ChainComplex, mats, inverses=None) -> ChainComplex:
    """d_n -> A_{n-1} d_n A_n^{-1}."""
    if inverses is None:
        inverses = [inverse(a) for a in mats]
    diffs = [mats[n - 1] @ c.diffs[n - 1] @ inverses[n] for n in range(1, c.length + 1)]
    return ChainComplex(c.field, c.dims, diffs)


def _random_conjugation(rng, c: ChainComplex, bound: int) -> ChainComplex:
    return conjugate(c, [random_invertible(rng, c.field, m, bound) for m in c.dims])


def gen_acyclic(cfg: GenConfig, rng=None) -> ChainComplex:
    rng = rng if rng is not None else cfg.rng()
    std = standard_complex(cfg.field, random_ranks(rng, cfg.length, cfg.max_rank))
    return _random_conjugation(rng, std, cfg.entry_bound)


def gen_binary(cfg: GenConfig, rng=None, *, diagonal: bool = False,
               p0_zero: bool = False, ranks=None) -> BinaryComplex:
    """Two independent conjugations of one standard complex."""
    rng = rng if rng is not None else cfg.rng()
    if ranks is None:
        ranks = random_ranks(rng, cfg.length, cfg.max_rank, p0_zero)
    std = standard_complex(cfg.field, ranks)
    top = _random_conjugation(rng, std, cfg.entry_bound)
    bot = top if diagonal else _random_conjugation(rng, std, cfg.entry_bound)
    return BinaryComplex(top, bot)


def gen_ladder(cfg: GenConfig, rng=None, *, identity: bool = False) -> BinaryLadder:
    rng = rng if rng is not None else cfg.rng()
    p = gen_binary(cfg, rng)
    f = cfg.field
    if identity:
        sigma = tau = [Matrix.identity(f, m) for m in p.dims]
    else:
        sigma = [random_involution(rng, f, m, cfg.entry_bound) for m in p.dims]
        tau = [random_involution(rng, f, m, cfg.entry_bound) for m in p.dims]
    return build_conjugated_ladder(p, sigma, tau)


def gen_ses(cfg: GenConfig, rng=None, *, split: bool = False) -> BinarySES:
    rng = rng if rng is not None else cfg.rng()
    sub = gen_binary(cfg, rng)
    quot = gen_binary(cfg, rng)
    if split:
        return make_ses(sub, quot)
    f, b = cfg.field, cfg.entry_bound
    g_top = [random_matrix(rng, f, a, c, b) for a, c in zip(sub.dims, quot.dims)]
    g_bot = [random_matrix(rng, f, a, c, b) for a, c in zip(sub.dims, quot.dims)]
    return make_ses(sub, quot, g_top, g_bot)


def gen_nenashev(cfg: GenConfig, rng=None) -> NenashevDiagram:
    """Tensor product of two length-2 standard complexes, conjugated objectwise.

    Object (r, i) is B_r (x) A_i; rows are r = 2 (M), 1 (N), 0 (P). The top and
    bottom structures use independent conjugations.
    """
    rng = rng if rng is not None else cfg.rng()
    f = cfg.field

    def ranks():
        # all-zero ranks give an empty diagram; resample when there is room
        r = random_ranks(rng, 2, cfg.max_rank)
        while cfg.max_rank > 0 and not any(r):
            r = random_ranks(rng, 2, cfg.max_rank)
        return r

    A = standard_complex(f, ranks())
    B = standard_complex(f, ranks())
    eye = Matrix.identity

    def horiz(r, i):  # (r, i) -> (r, i-1)
        return kron(eye(f, B.dims[r]), A.diffs[i - 1])

    def vert(r, i):  # (r, i) -> (r-1, i)
        return kron(B.diffs[r - 1], eye(f, A.dims[i]))

    def structure():
        U = {(r, i): random_invertible(rng, f, B.dims[r] * A.dims[i], cfg.entry_bound)
             for r in range(3) for i in range(3)}
        Ui = {key: inverse(u) for key, u in U.items()}
        rows = {}
        for r in range(3):
            diffs = [U[(r, i - 1)] @ horiz(r, i) @ Ui[(r, i)] for i in (1, 2)]
            rows[r] = ChainComplex(f, [B.dims[r] * a for a in A.dims], diffs)
        verts = {r: tuple(U[(r - 1, i)] @ vert(r, i) @ Ui[(r, i)] for i in range(3))
                 for r in (1, 2)}
        return rows, verts

    top_rows, top_v = structure()
    bot_rows, bot_v = structure()
    M, N, P = (BinaryComplex(top_rows[r], bot_rows[r]) for r in (2, 1, 0))
    d = NenashevDiagram(M, N, P, top_v[2], bot_v[2], top_v[1], bot_v[1])
    if not validate_diagram(d):
        raise AssertionError("generated Nenashev diagram failed validation")
    return d


def with_seed(cfg: GenConfig, seed: int) -> GenConfig:
    return replace(cfg, seed=seed)
