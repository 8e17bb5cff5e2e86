"""Binary acyclic complexes, ladders between them and short exact sequences."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from . import complexes as cx
from .complexes import ChainComplex
from .errors import (DimensionMismatch, FieldMismatch, InvalidSES,
                     NotAcyclic, NotChainMap, NotInvertible, NotInvolution, ShapeMismatch)
from .matrix import Matrix, is_invertible, rank


class BinaryComplex:
    """One graded object with a top and a bottom differential, both acyclic.

    Validation happens at construction; pass ``check=False`` only for values
    that are acyclic by construction and re-checked elsewhere.
    """

    __slots__ = ("top", "bot")

    def __init__(self, top: ChainComplex, bot: ChainComplex, *, check: bool = True):
        if top.field != bot.field:
            raise FieldMismatch("top and bottom over different fields")
        if top.dims != bot.dims:
            raise DimensionMismatch(f"top dims {top.dims} != bottom dims {bot.dims}")
        if check:
            if not cx.is_acyclic(top):
                raise NotAcyclic("top differential is not acyclic")
            if not cx.is_acyclic(bot):
                raise NotAcyclic("bottom differential is not acyclic")
        self.top = top
        self.bot = bot

    @classmethod
    def from_diffs(cls, field, dims: Sequence[int], top: Sequence[Matrix],
                   bot: Sequence[Matrix], *, check: bool = True) -> BinaryComplex:
        return cls(ChainComplex(field, dims, top), ChainComplex(field, dims, bot), check=check)

    @property
    def field(self):
        return self.top.field

    @property
    def dims(self) -> tuple[int, ...]:
        return self.top.dims

    @property
    def length(self) -> int:
        return self.top.length

    def dim(self, n: int) -> int:
        return self.top.dim(n)

    def is_diagonal(self) -> bool:
        return self.top.diffs == self.bot.diffs

    def padded(self, length: int) -> BinaryComplex:
        return BinaryComplex(self.top.padded(length), self.bot.padded(length), check=False)

    def trimmed(self, min_length: int = 0) -> BinaryComplex:
        return BinaryComplex(self.top.trimmed(min_length), self.bot.trimmed(min_length), check=False)

    def __eq__(self, other):
        if not isinstance(other, BinaryComplex):
            return NotImplemented
        return self.top == other.top and self.bot == other.bot

    def __hash__(self):
        return hash((self.top, self.bot))

    def __repr__(self):
        return f"BinaryComplex({self.field!r}, dims={list(self.dims)})"


def is_binary_acyclic(p: BinaryComplex) -> bool:
    return cx.is_acyclic(p.top) and cx.is_acyclic(p.bot)


def two_term(alpha: Matrix, beta: Matrix) -> BinaryComplex:
    """The generator <alpha|beta>: P_1 -> P_0 with top alpha and bottom beta."""
    if alpha.field != beta.field:
        raise FieldMismatch("alpha and beta over different fields")
    if not alpha.is_square() or alpha.shape != beta.shape:
        raise ShapeMismatch(f"need equal square shapes, got {alpha.shape} and {beta.shape}")
    if not (is_invertible(alpha) and is_invertible(beta)):
        raise NotInvertible("<alpha|beta> needs isomorphisms")
    n = alpha.nrows
    return BinaryComplex.from_diffs(alpha.field, (n, n), [alpha], [beta], check=False)


def swap_matrix(field, n: int) -> Matrix:
    """[[0, I], [I, 0]] on F^n + F^n."""
    i = Matrix.identity(field, n)
    return Matrix.assemble(field, [n, n], [n, n], {(0, 1): i, (1, 0): i})


def tau_swap(field, n: int) -> BinaryComplex:
    """<id | swap> on F^n + F^n; the empty complex when n = 0."""
    if n == 0:
        return BinaryComplex(cx.zero_complex(field), cx.zero_complex(field), check=False)
    return two_term(Matrix.identity(field, 2 * n), swap_matrix(field, n))


def swap_top_bottom(p: BinaryComplex) -> BinaryComplex:
    return BinaryComplex(p.bot, p.top, check=False)


def diagonal_of(c: ChainComplex) -> BinaryComplex:
    if not cx.is_acyclic(c):
        raise NotAcyclic("diagonal_of needs an acyclic complex")
    return BinaryComplex(c, c, check=False)


def shift_binary(p: BinaryComplex, by: int) -> BinaryComplex:
    return BinaryComplex(cx.shift(p.top, by), cx.shift(p.bot, by), check=False)


def unshift_binary(p: BinaryComplex, by: int = 1) -> BinaryComplex:
    return BinaryComplex(cx.unshift(p.top, by), cx.unshift(p.bot, by), check=False)


def direct_sum_binary(a: BinaryComplex, b: BinaryComplex) -> BinaryComplex:
    return BinaryComplex(cx.direct_sum(a.top, b.top), cx.direct_sum(a.bot, b.bot), check=False)


def direct_sum_all(field, items: Sequence[BinaryComplex]) -> BinaryComplex:
    out = BinaryComplex(cx.zero_complex(field), cx.zero_complex(field), check=False)
    for p in items:
        out = direct_sum_binary(out, p)
    return out


# -- ladders -------------------------------------------------------------------


@dataclass(frozen=True)
class BinaryLadder:
    """Isomorphisms sigma: source.top -> target.top and tau: source.bot -> target.bot."""

    source: BinaryComplex
    target: BinaryComplex
    sigma: tuple[Matrix, ...]
    tau: tuple[Matrix, ...]


def _is_chain_iso(maps: Sequence[Matrix], src: ChainComplex, dst: ChainComplex) -> bool:
    if src.dims != dst.dims or len(maps) != len(src.dims):
        return False
    for n, s in enumerate(maps):
        if s.shape != (dst.dims[n], src.dims[n]) or not is_invertible(s):
            return False
    return all(maps[n - 1] @ src.diffs[n - 1] == dst.diffs[n - 1] @ maps[n]
               for n in range(1, src.length + 1))


def validate_ladder(l: BinaryLadder) -> bool:
    return (l.source.field == l.target.field
            and _is_chain_iso(l.sigma, l.source.top, l.target.top)
            and _is_chain_iso(l.tau, l.source.bot, l.target.bot))


def is_involution(m: Matrix) -> bool:
    return m.is_square() and (m @ m).is_identity()


def build_conjugated_ladder(p: BinaryComplex, sigma: Sequence[Matrix],
                            tau: Sequence[Matrix]) -> BinaryLadder:
    """Ladder (p, q, sigma, tau) with q_i = p_i and q's differentials conjugated.

    top_q d_i = sigma_{i-1} d_i sigma_i^{-1}, and likewise for the bottom with tau.
    """
    sigma, tau = tuple(sigma), tuple(tau)
    if len(sigma) != len(p.dims) or len(tau) != len(p.dims):
        raise DimensionMismatch("need one sigma_i and one tau_i per degree")
    for n, (s, t) in enumerate(zip(sigma, tau)):
        if s.shape != (p.dims[n],) * 2 or t.shape != (p.dims[n],) * 2:
            raise ShapeMismatch(f"ladder maps in degree {n} have the wrong shape")
        if not (is_involution(s) and is_involution(t)):
            raise NotInvolution(f"sigma_{n} or tau_{n} is not an involution")
    top = [sigma[n - 1] @ p.top.diffs[n - 1] @ sigma[n] for n in range(1, p.length + 1)]
    bot = [tau[n - 1] @ p.bot.diffs[n - 1] @ tau[n] for n in range(1, p.length + 1)]
    q = BinaryComplex.from_diffs(p.field, p.dims, top, bot)
    lad = BinaryLadder(p, q, sigma, tau)
    if not validate_ladder(lad):
        raise NotChainMap("conjugated ladder does not commute")
    return lad


# -- short exact sequences -------------------------------------------------------


@dataclass(frozen=True)
class BinarySES:
    """sub >-> total ->> quot, with ``incl[n]`` and ``proj[n]`` per degree."""

    sub: BinaryComplex
    total: BinaryComplex
    quot: BinaryComplex
    incl: tuple[Matrix, ...]
    proj: tuple[Matrix, ...]


def _is_chain_map(maps, src: ChainComplex, dst: ChainComplex) -> bool:
    return all(maps[n - 1] @ src.diffs[n - 1] == dst.diffs[n - 1] @ maps[n]
               for n in range(1, src.length + 1))


def validate_ses(s: BinarySES) -> bool:
    k = s.total.length
    if s.sub.length != k or s.quot.length != k:
        return False
    if len(s.incl) != k + 1 or len(s.proj) != k + 1:
        return False
    for n in range(k + 1):
        i, p = s.incl[n], s.proj[n]
        if i.shape != (s.total.dims[n], s.sub.dims[n]) or p.shape != (s.quot.dims[n], s.total.dims[n]):
            return False
        if rank(i) != i.ncols or rank(p) != p.nrows:
            return False
        if not (p @ i).is_zero() or i.ncols + p.nrows != s.total.dims[n]:
            return False
    return (_is_chain_map(s.incl, s.sub.top, s.total.top)
            and _is_chain_map(s.incl, s.sub.bot, s.total.bot)
            and _is_chain_map(s.proj, s.total.top, s.quot.top)
            and _is_chain_map(s.proj, s.total.bot, s.quot.bot))


def make_ses(sub: BinaryComplex, quot: BinaryComplex, g_top: Sequence[Matrix] | None = None,
             g_bot: Sequence[Matrix] | None = None) -> BinarySES:
    """Extension of ``quot`` by ``sub`` twisted by the degreewise maps g_n: P''_n -> P'_n.

    The total differential is [[d'_n, e_n], [0, d''_n]] with
    e_n = d'_n g_n - g_{n-1} d''_n, separately for top and bottom. With g = 0
    this is the split sequence.
    """
    if sub.field != quot.field:
        raise FieldMismatch("sub and quotient over different fields")
    f = sub.field
    k = max(sub.length, quot.length)
    sub, quot = sub.padded(k), quot.padded(k)
    zero_g = [Matrix.zeros(f, sub.dims[n], quot.dims[n]) for n in range(k + 1)]
    g_top = list(g_top) if g_top is not None else zero_g
    g_bot = list(g_bot) if g_bot is not None else zero_g
    for gs in (g_top, g_bot):
        if len(gs) < k + 1:
            gs.extend(zero_g[len(gs):])
        for n in range(k + 1):
            if gs[n].shape != (sub.dims[n], quot.dims[n]):
                raise ShapeMismatch(f"g_{n} has shape {gs[n].shape}")

    def twisted(ds: ChainComplex, dq: ChainComplex, g):
        out = []
        for n in range(1, k + 1):
            e = ds.diffs[n - 1] @ g[n] - g[n - 1] @ dq.diffs[n - 1]
            out.append(Matrix.assemble(f, [sub.dims[n - 1], quot.dims[n - 1]],
                                       [sub.dims[n], quot.dims[n]],
                                       {(0, 0): ds.diffs[n - 1], (0, 1): e,
                                        (1, 1): dq.diffs[n - 1]}))
        return out

    dims = [a + b for a, b in zip(sub.dims, quot.dims)]
    total = BinaryComplex.from_diffs(f, dims, twisted(sub.top, quot.top, g_top),
                                     twisted(sub.bot, quot.bot, g_bot))
    incl = tuple(Matrix.vstack(f, [Matrix.identity(f, sub.dims[n]),
                                   Matrix.zeros(f, quot.dims[n], sub.dims[n])], sub.dims[n])
                 for n in range(k + 1))
    proj = tuple(Matrix.hstack(f, [Matrix.zeros(f, quot.dims[n], sub.dims[n]),
                                   Matrix.identity(f, quot.dims[n])], quot.dims[n])
                 for n in range(k + 1))
    ses = BinarySES(sub, total, quot, incl, proj)
    if not validate_ses(ses):
        raise InvalidSES("constructed sequence failed validation")
    return ses


# -- formal combinations ----------------------------------------------------------


@dataclass(frozen=True)
class RelationExpr:
    """Formal integer combination sum(c * [P]) of binary complexes."""

    terms: tuple[tuple[int, BinaryComplex], ...] = dc_field(default_factory=tuple)

    def __post_init__(self):
        fields = {p.field for _, p in self.terms}
        if len(fields) > 1:
            raise FieldMismatch("relation mixes fields")

    def __add__(self, other: RelationExpr) -> RelationExpr:
        return RelationExpr(self.terms + other.terms)

    def __neg__(self) -> RelationExpr:
        return RelationExpr(tuple((-c, p) for c, p in self.terms))

    def __sub__(self, other: RelationExpr) -> RelationExpr:
        return self + (-other)

    @classmethod
    def of(cls, *terms) -> RelationExpr:
        return cls(tuple((int(c), p) for c, p in terms))

