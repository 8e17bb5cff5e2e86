"""Total complexes of ladders and of 3x3 Nenashev diagrams, and the objects
T', T_b, T_f, T_{b,f} used to decompose the Nenashev relation.

Sign convention for totals: a row placed at offset r (its degree n sits in
total degree n + r) has horizontal differential multiplied by (-1)**r;
vertical maps carry no sign.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binary import (BinaryComplex, BinaryLadder, swap_top_bottom, tau_swap, validate_ladder)
from .errors import InvalidDiagram, InvalidLadder
from .matrix import Matrix
from .shortening import image_factorization


def ladder_total(l: BinaryLadder) -> BinaryComplex:
    """T_n = P_{n-1} + Q_n with d(p, q) = (-d p, sigma(p) + d q), likewise for the bottom."""
    if not validate_ladder(l):
        raise InvalidLadder("ladder does not validate")
    P, Q = l.source, l.target
    f = P.field
    k = P.length

    def total(pc, qc, maps):
        diffs = []
        for n in range(1, k + 2):
            rows = [P.dim(n - 2), Q.dim(n - 1)]
            cols = [P.dim(n - 1), Q.dim(n)]
            blocks = {(0, 0): -pc.d(n - 1), (1, 1): qc.d(n)}
            if 0 <= n - 1 <= k:
                blocks[(1, 0)] = maps[n - 1]
            diffs.append(Matrix.assemble(f, rows, cols, blocks))
        return diffs

    dims = [P.dim(n - 1) + Q.dim(n) for n in range(k + 2)]
    return BinaryComplex.from_diffs(f, dims, total(P.top, Q.top, l.sigma),
                                    total(P.bot, Q.bot, l.tau))


@dataclass(frozen=True)
class NenashevDiagram:
    """Rows M (top), N, P (bottom) on [0, 2] and vertical maps per column.

    ``f_top[i], f_bot[i]: M_i -> N_i`` and ``g_top[i], g_bot[i]: N_i -> P_i``.
    """

    M: BinaryComplex
    N: BinaryComplex
    P: BinaryComplex
    f_top: tuple[Matrix, ...]
    f_bot: tuple[Matrix, ...]
    g_top: tuple[Matrix, ...]
    g_bot: tuple[Matrix, ...]

    @property
    def field(self):
        return self.N.field


def column(d: NenashevDiagram, i: int) -> BinaryComplex:
    """C_i = M_i => N_i => P_i, with M_i in degree 2."""
    dims = [d.P.dims[i], d.N.dims[i], d.M.dims[i]]
    return BinaryComplex.from_diffs(d.field, dims, [d.g_top[i], d.f_top[i]],
                                    [d.g_bot[i], d.f_bot[i]])


def validate_diagram(d: NenashevDiagram) -> bool:
    rows = (d.M, d.N, d.P)
    if any(r.length != 2 or r.field != d.field for r in rows):
        return False
    maps = (d.f_top, d.f_bot, d.g_top, d.g_bot)
    if any(len(m) != 3 for m in maps):
        return False
    for i in range(3):
        for fm in (d.f_top[i], d.f_bot[i]):
            if fm.shape != (d.N.dims[i], d.M.dims[i]):
                return False
        for gm in (d.g_top[i], d.g_bot[i]):
            if gm.shape != (d.P.dims[i], d.N.dims[i]):
                return False
    for side, fs, gs in (("top", d.f_top, d.g_top), ("bot", d.f_bot, d.g_bot)):
        M, N, P = (getattr(r, side) for r in rows)
        for i in (1, 2):
            if N.d(i) @ fs[i] != fs[i - 1] @ M.d(i):
                return False
            if P.d(i) @ gs[i] != gs[i - 1] @ N.d(i):
                return False
    try:
        for i in range(3):
            column(d, i)
    except ValueError:
        return False
    return True


def _total_side(d: NenashevDiagram, side: str) -> list[Matrix]:
    f = d.field
    M, N, P = (getattr(r, side) for r in (d.M, d.N, d.P))
    fs = getattr(d, "f_" + side)
    gs = getattr(d, "g_" + side)

    def vert(maps, i, rows, cols):
        return maps[i] if 0 <= i <= 2 else Matrix.zeros(f, rows, cols)

    diffs = []
    for n in range(1, 5):
        rows = [M.dim(n - 3), N.dim(n - 2), P.dim(n - 1)]
        cols = [M.dim(n - 2), N.dim(n - 1), P.dim(n)]
        diffs.append(Matrix.assemble(f, rows, cols, {
            (0, 0): M.d(n - 2),
            (1, 0): vert(fs, n - 2, rows[1], cols[0]),
            (1, 1): -N.d(n - 1),
            (2, 1): vert(gs, n - 1, rows[2], cols[1]),
            (2, 2): P.d(n),
        }))
    return diffs


def nenashev_total(d: NenashevDiagram) -> BinaryComplex:
    """Total complex on [0, 4]; T_n = M_{n-2} + N_{n-1} + P_n in that order."""
    if not validate_diagram(d):
        raise InvalidDiagram("diagram does not validate")
    dims = [d.M.dim(n - 2) + d.N.dim(n - 1) + d.P.dim(n) for n in range(5)]
    return BinaryComplex.from_diffs(d.field, dims, _total_side(d, "top"), _total_side(d, "bot"))


def _binary(f, degs, top, bot) -> BinaryComplex:
    dims = [sum(x) for x in degs]
    tops = [Matrix.assemble(f, degs[n - 1], degs[n], top[n - 1]) for n in range(1, len(degs))]
    bots = [Matrix.assemble(f, degs[n - 1], degs[n], bot[n - 1]) for n in range(1, len(degs))]
    return BinaryComplex.from_diffs(f, dims, tops, bots)


def t_prime(T: BinaryComplex) -> BinaryComplex:
    """Twice-shortened length-2 replacement of a length-4 total complex.

    Factor the top d_3, d_2 through J_3, J_2 and the bottom ones through
    K_3, K_2; then

        degree 2:  T_4 + J_3 + K_3 + K_2 + J_2
        degree 1:  T_3 + K_3 + J_3 + T_2 + J_2 + K_2 + T_1
        degree 0:  J_3 + K_3 + K_2 + J_2 + T_0
    """
    f = T.field
    J3, eJ3 = image_factorization(T.top.d(3))
    J2, eJ2 = image_factorization(T.top.d(2))
    K3, eK3 = image_factorization(T.bot.d(3))
    K2, eK2 = image_factorization(T.bot.d(2))
    j3, j2 = J3.ncols, J2.ncols
    I3, I2 = Matrix.identity(f, j3), Matrix.identity(f, j2)
    t = [T.dim(n) for n in range(5)]
    degs = [[j3, j3, j2, j2, t[0]],
            [t[3], j3, j3, t[2], j2, j2, t[1]],
            [t[4], j3, j3, j2, j2]]
    top = [{(0, 0): eJ3, (1, 1): I3, (2, 3): eK2, (3, 4): I2, (4, 6): T.top.d(1)},
           {(0, 0): T.top.d(4), (2, 1): I3, (3, 2): K3, (5, 3): I2, (6, 4): J2}]
    bot = [{(1, 0): eK3, (0, 2): I3, (3, 3): eJ2, (2, 5): I2, (4, 6): T.bot.d(1)},
           {(0, 0): T.bot.d(4), (3, 1): J3, (1, 2): I3, (6, 3): K2, (4, 4): I2}]
    return _binary(f, degs, top, bot)


def t_b(p: BinaryComplex) -> BinaryComplex:
    """P with three extra copies of P_2 stacked above it."""
    f = p.field
    a = p.dims[2]
    I = Matrix.identity(f, a)
    degs = [[a, a, p.dims[0]], [a, a, a, p.dims[1]], [a, a]]
    top = [{(0, 0): I, (1, 1): I, (2, 3): p.top.d(1)},
           {(2, 0): I, (3, 1): p.top.d(2)}]
    bot = [{(1, 0): I, (0, 2): I, (2, 3): p.bot.d(1)},
           {(3, 0): p.bot.d(2), (1, 1): I}]
    return _binary(f, degs, top, bot)


def t_f(p: BinaryComplex) -> BinaryComplex:
    """P with three extra copies of P_0 stacked below it."""
    f = p.field
    c = p.dims[0]
    I = Matrix.identity(f, c)
    degs = [[c, c], [p.dims[1], c, c, c], [p.dims[2], c, c]]
    top = [{(0, 0): p.top.d(1), (1, 1): I},
           {(0, 0): p.top.d(2), (2, 1): I, (3, 2): I}]
    bot = [{(1, 0): p.bot.d(1), (0, 2): I},
           {(0, 0): p.bot.d(2), (3, 1): I, (1, 2): I}]
    return _binary(f, degs, top, bot)


def t_bf(p: BinaryComplex) -> BinaryComplex:
    """P with copies of P_2 above and copies of P_0 below."""
    f = p.field
    a, c = p.dims[2], p.dims[0]
    Ia, Ic = Matrix.identity(f, a), Matrix.identity(f, c)
    degs = [[a, a, c, c], [a, a, a, p.dims[1], c, c, c], [a, a, c, c]]
    top = [{(0, 0): Ia, (1, 1): Ia, (2, 3): p.top.d(1), (3, 4): Ic},
           {(2, 0): Ia, (3, 1): p.top.d(2), (5, 2): Ic, (6, 3): Ic}]
    bot = [{(1, 0): Ia, (0, 2): Ia, (3, 3): p.bot.d(1), (2, 5): Ic},
           {(3, 0): p.bot.d(2), (1, 1): Ia, (6, 2): Ic, (4, 3): Ic}]
    return _binary(f, degs, top, bot)


def remark_objects(d: NenashevDiagram) -> dict[str, BinaryComplex]:
    """T, T', T_b(P), T_f(M), T_{b,f}(sw(N)) and the columns C_0, C_1, C_2."""
    T = nenashev_total(d)
    return {
        "T": T,
        "T'": t_prime(T),
        "T_b(P)": t_b(d.P),
        "T_f(M)": t_f(d.M),
        "T_bf(sw(N))": t_bf(swap_top_bottom(d.N)),
        "C_0": column(d, 0),
        "C_1": column(d, 1),
        "C_2": column(d, 2),
    }


def tau_object(field, dim: int) -> BinaryComplex:
    """tau_X for an object X of the given dimension."""
    return tau_swap(field, dim)
