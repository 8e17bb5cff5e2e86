"""Grayson shortening and everything built from it.

For P supported on [0, k+1] write d_2 = J . epi_J and d'_2 = K . epi_K, where
the columns of J (resp. K) form a basis of im d_2 (resp. im d'_2) inside P_1.
The shortening has

    degree 0:  J + K + P_0
    degree 1:  P_2 + K + J + P_1
    degree 2:  P_3 + J + K
    degree i:  P_{i+1}                       (i >= 3)

with the summands in this order for both differentials.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binary import (BinaryComplex, BinaryLadder, BinarySES, RelationExpr, swap_top_bottom,
                     tau_swap, validate_ladder, validate_ses)
from .errors import DimensionMismatch, InvalidLadder, InvalidSES, TooShort
from .matrix import Matrix, image_basis, inverse, solve_any


@dataclass(frozen=True)
class ShorteningData:
    """Factorisations d_2 = J @ epi_J and d'_2 = K @ epi_K through image bases.

    ``J`` and ``K`` double as the monomorphisms into P_1. The isomorphism J -> K
    used by the truncations is the identity in these coordinates.
    """

    J: Matrix
    K: Matrix
    epi_J: Matrix
    epi_K: Matrix

    @property
    def rank(self) -> int:
        return self.J.ncols


def image_factorization(d: Matrix) -> tuple[Matrix, Matrix]:
    """(basis, epi) with ``basis @ epi == d`` and ``basis`` the canonical image basis."""
    basis = image_basis(d)
    return basis, solve_any(basis, d)


def shortening_data(p: BinaryComplex) -> ShorteningData:
    if p.length < 2:
        raise TooShort("need support of length at least 2")
    J, eJ = image_factorization(p.top.d(2))
    K, eK = image_factorization(p.bot.d(2))
    return ShorteningData(J, K, eJ, eK)


def _check_data(p: BinaryComplex, data: ShorteningData):
    d2, e2 = p.top.d(2), p.bot.d(2)
    if data.J @ data.epi_J != d2 or data.K @ data.epi_K != e2:
        raise DimensionMismatch("shortening data does not factor d_2 / d'_2")
    if data.J.ncols != data.K.ncols:
        raise DimensionMismatch("image ranks of d_2 and d'_2 differ")


def grayson_shorten(p: BinaryComplex, data: ShorteningData | None = None) -> BinaryComplex:
    """The Grayson shortening of ``p``.

    Supported on [0, k] for input on [0, k+1] with k >= 2; input on [0, 2]
    gives output on [0, 2], and input on [0, 1] gives the switched complex.
    """
    if p.length < 1:
        raise TooShort("shortening needs support of length at least 1")
    if p.length == 1:
        return swap_top_bottom(p)
    if data is None:
        data = shortening_data(p)
    _check_data(p, data)
    f = p.field
    j = data.rank
    T, B = p.top, p.bot
    m = [p.dim(n) for n in range(p.length + 2)]
    out_len = max(p.length - 1, 2)
    I = Matrix.identity(f, j)

    deg = [[j, j, m[0]], [m[2], j, j, m[1]], [m[3], j, j]]
    deg += [[m[i + 1]] for i in range(3, out_len + 1)]

    top = [
        Matrix.assemble(f, deg[0], deg[1], {(0, 0): data.epi_J, (1, 1): I, (2, 3): B.d(1)}),
        Matrix.assemble(f, deg[1], deg[2], {(0, 0): T.d(3), (2, 1): I, (3, 2): data.K}),
    ]
    bot = [
        Matrix.assemble(f, deg[0], deg[1], {(0, 2): I, (1, 0): data.epi_K, (2, 3): T.d(1)}),
        Matrix.assemble(f, deg[1], deg[2], {(0, 0): B.d(3), (1, 2): I, (3, 1): data.J}),
    ]
    for i in range(3, out_len + 1):
        top.append(Matrix.assemble(f, deg[i - 1], deg[i], {(0, 0): T.d(i + 1)}))
        bot.append(Matrix.assemble(f, deg[i - 1], deg[i], {(0, 0): B.d(i + 1)}))
    dims = [sum(x) for x in deg]
    return BinaryComplex.from_diffs(f, dims, top, bot)


def tau_of(p: BinaryComplex) -> BinaryComplex:
    """tau_P = <id | swap> on J + J, where J is the image of d_2."""
    if p.length < 2:
        raise TooShort("tau_P needs support of length at least 2")
    return tau_swap(p.field, shortening_data(p).rank)


def truncate_ge1(p: BinaryComplex, data: ShorteningData | None = None) -> BinaryComplex:
    """... P_3 => P_2 => J, reindexed so that J sits in degree 0."""
    if p.length < 2:
        raise TooShort("truncation needs support of length at least 2")
    data = data or shortening_data(p)
    dims = [data.rank] + [p.dim(n) for n in range(2, p.length + 1)]
    top = [data.epi_J] + [p.top.d(n) for n in range(3, p.length + 1)]
    bot = [data.epi_K] + [p.bot.d(n) for n in range(3, p.length + 1)]
    return BinaryComplex.from_diffs(p.field, dims, top, bot)


def truncate_le2(p: BinaryComplex, data: ShorteningData | None = None) -> BinaryComplex:
    """J => P_1 => P_0 with monomorphisms J and K (identified with J)."""
    if p.length < 2:
        raise TooShort("truncation needs support of length at least 2")
    data = data or shortening_data(p)
    dims = [p.dim(0), p.dim(1), data.rank]
    return BinaryComplex.from_diffs(p.field, dims, [p.top.d(1), data.J], [p.bot.d(1), data.K])


def include_ik(p: BinaryComplex) -> BinaryComplex:
    """Regard a complex on [0, k] as one on [0, k+1]."""
    return p.padded(p.length + 1)


def shorten_pk(p: BinaryComplex) -> RelationExpr:
    """The formal element -short(P) - tau_P."""
    return RelationExpr.of((-1, grayson_shorten(p)), (-1, tau_of(p)))


def _get(maps, n, f):
    return maps[n] if n < len(maps) else Matrix.zeros(f, 0, 0)


def shorten_ladder(l: BinaryLadder, transport: bool = True) -> BinaryLadder:
    """The induced ladder (short(P), short(Q), short(sigma), short(tau)).

    With ``transport`` the target is shortened along the factorisation carried
    over from the source by sigma_1 / tau_1, which makes the induced maps on
    J and K identities (so involutions stay involutions). Otherwise both
    sides use their own canonical image bases and sigma^J, tau^K are solved for.
    """
    if not validate_ladder(l):
        raise InvalidLadder("input ladder does not validate")
    P, Q = l.source, l.target
    f = P.field
    s, t = l.sigma, l.tau
    if P.length == 1:
        out = BinaryLadder(swap_top_bottom(P), swap_top_bottom(Q), t, s)
    else:
        dP = shortening_data(P)
        if transport:
            dQ = ShorteningData(s[1] @ dP.J, t[1] @ dP.K,
                                dP.epi_J @ inverse(s[2]), dP.epi_K @ inverse(t[2]))
        else:
            dQ = shortening_data(Q)
        sJ = solve_any(dQ.J, s[1] @ dP.J)
        tK = solve_any(dQ.K, t[1] @ dP.K)
        sP, sQ = grayson_shorten(P, dP), grayson_shorten(Q, dQ)
        diag = lambda *ms: Matrix.block_diag(f, ms)  # noqa: E731
        g = lambda maps, n: _get(maps, n, f)  # noqa: E731
        # sigma is a map of top components, whose low end carries P's bottom.
        new_s = [diag(sJ, tK, t[0]), diag(g(s, 2), tK, sJ, t[1]), diag(g(s, 3), sJ, tK)]
        new_t = [diag(sJ, tK, s[0]), diag(g(t, 2), tK, sJ, s[1]), diag(g(t, 3), sJ, tK)]
        for i in range(3, sP.length + 1):
            new_s.append(g(s, i + 1))
            new_t.append(g(t, i + 1))
        out = BinaryLadder(sP, sQ, tuple(new_s), tuple(new_t))
    if not validate_ladder(out):
        raise InvalidLadder("shortened ladder does not validate")
    return out


def ses_shorten(s: BinarySES) -> BinarySES:
    """Shorten every term of a short exact sequence compatibly."""
    if not validate_ses(s):
        raise InvalidSES("input sequence does not validate")
    P1, P, P2 = s.sub, s.total, s.quot
    f = P.field
    if P.length == 1:
        out = BinarySES(swap_top_bottom(P1), swap_top_bottom(P), swap_top_bottom(P2), s.incl, s.proj)
    else:
        d1, d2 = shortening_data(P1), shortening_data(P2)

        def compatible(sub_basis, quot_basis, dq2, dt2):
            sec = solve_any(dq2, quot_basis)
            x = solve_any(s.proj[2], sec)
            basis = Matrix.hstack(f, [s.incl[1] @ sub_basis, dt2 @ x], P.dim(1))
            return basis, solve_any(basis, dt2)

        J, eJ = compatible(d1.J, d2.J, P2.top.d(2), P.top.d(2))
        K, eK = compatible(d1.K, d2.K, P2.bot.d(2), P.bot.d(2))
        data = ShorteningData(J, K, eJ, eK)
        a, b = d1.rank, d2.rank
        inc = Matrix.vstack(f, [Matrix.identity(f, a), Matrix.zeros(f, b, a)], a)
        prj = Matrix.hstack(f, [Matrix.zeros(f, b, a), Matrix.identity(f, b)], b)
        g = lambda maps, n: maps[n] if n < len(maps) else Matrix.zeros(f, 0, 0)  # noqa: E731
        short = grayson_shorten(P, data)

        def induced(maps, e):
            out = [Matrix.block_diag(f, [e, e, maps[0]]),
                   Matrix.block_diag(f, [maps[2], e, e, maps[1]]),
                   Matrix.block_diag(f, [g(maps, 3), e, e])]
            out += [g(maps, i + 1) for i in range(3, short.length + 1)]
            return tuple(out)

        out = BinarySES(grayson_shorten(P1), short, grayson_shorten(P2),
                        induced(s.incl, inc), induced(s.proj, prj))
    if not validate_ses(out):
        raise InvalidSES("shortened sequence does not validate")
    return out
