"""Chain complexes of finite-dimensional vector spaces supported on [0, k].

A complex stores ``dims = [m_0, ..., m_k]`` and ``diffs = [d_1, ..., d_k]``
with ``d_n`` an ``m_{n-1} x m_n`` matrix. Degree n lives at ``dims[n]`` and
its outgoing differential at ``diffs[n - 1]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch, FieldMismatch, NotAcyclic
from .matrix import Matrix, column_space_basis, rank, solve_any


@dataclass(frozen=True)
class GradedObject:
    field: object
    dims: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.dims) - 1


class ChainComplex:
    __slots__ = ("field", "dims", "diffs")

    def __init__(self, field, dims: Sequence[int], diffs: Sequence[Matrix]):
        dims = tuple(int(d) for d in dims)
        if not dims or any(d < 0 for d in dims):
            raise DimensionMismatch(f"bad dimension vector {dims}")
        if len(diffs) != len(dims) - 1:
            raise DimensionMismatch(f"{len(dims)} degrees need {len(dims) - 1} differentials")
        for n, d in enumerate(diffs, start=1):
            if d.field != field:
                raise FieldMismatch(f"d_{n} over {d.field!r}, complex over {field!r}")
            if d.shape != (dims[n - 1], dims[n]):
                raise DimensionMismatch(
                    f"d_{n} has shape {d.shape}, expected {(dims[n - 1], dims[n])}")
        self.field = field
        self.dims = dims
        self.diffs = tuple(diffs)

    @property
    def length(self) -> int:
        return len(self.dims) - 1

    @property
    def graded(self) -> GradedObject:
        return GradedObject(self.field, self.dims)

    def d(self, n: int) -> Matrix:
        """The differential out of degree n; zero outside the support."""
        if 1 <= n <= self.length:
            return self.diffs[n - 1]
        return Matrix.zeros(self.field, self.dim(n - 1), self.dim(n))

    def dim(self, n: int) -> int:
        return self.dims[n] if 0 <= n <= self.length else 0

    def __eq__(self, other):
        if not isinstance(other, ChainComplex):
            return NotImplemented
        return self.field == other.field and self.dims == other.dims and self.diffs == other.diffs

    def __hash__(self):
        return hash((self.field, self.dims, self.diffs))

    def __repr__(self):
        return f"ChainComplex({self.field!r}, dims={list(self.dims)})"

    def padded(self, length: int) -> ChainComplex:
        """Regard the complex as supported on [0, length] (trailing zeros)."""
        if length < self.length:
            raise DimensionMismatch("cannot pad to a shorter support")
        dims = list(self.dims) + [0] * (length - self.length)
        diffs = list(self.diffs) + [Matrix.zeros(self.field, dims[n - 1], 0)
                                    for n in range(self.length + 1, length + 1)]
        return ChainComplex(self.field, dims, diffs)

    def trimmed(self, min_length: int = 0) -> ChainComplex:
        """Drop trailing zero degrees, keeping support at least [0, min_length]."""
        k = self.length
        while k > min_length and self.dims[k] == 0:
            k -= 1
        return ChainComplex(self.field, self.dims[:k + 1], self.diffs[:k])


def zero_complex(field, length: int = 0) -> ChainComplex:
    return ChainComplex(field, [0] * (length + 1),
                        [Matrix.zeros(field, 0, 0) for _ in range(length)])


def is_complex(c: ChainComplex) -> bool:
    return all((c.diffs[n - 1] @ c.diffs[n]).is_zero() for n in range(1, c.length))


def is_acyclic(c: ChainComplex) -> bool:
    """Exactness everywhere: d^2 = 0 and dim ker d_n = rank d_{n+1} for 0 <= n <= k."""
    if not is_complex(c):
        return False
    ranks = [0] + [rank(d) for d in c.diffs] + [0]
    return all(c.dims[n] - ranks[n] == ranks[n + 1] for n in range(c.length + 1))


@dataclass(frozen=True)
class Factorization:
    """``d_{n+1} = images[n] @ (coordinates)`` with ``d_{n+1} @ sections[n] == images[n]``.

    ``images[n]`` has columns spanning im d_{n+1} inside degree n, for
    n = 0 .. k-1.
    """

    images: tuple[Matrix, ...]
    sections: tuple[Matrix, ...]


def factorize(c: ChainComplex) -> Factorization:
    if not is_acyclic(c):
        raise NotAcyclic("factorize needs an acyclic complex")
    images, sections = [], []
    for n in range(c.length):
        d = c.diffs[n]
        j = column_space_basis(d)
        images.append(j)
        sections.append(solve_any(d, j))
    return Factorization(tuple(images), tuple(sections))


def shift(c: ChainComplex, by: int) -> ChainComplex:
    """Prepend ``by`` zero degrees; differentials keep their sign."""
    if by < 0:
        raise ValueError("shift amount must be non-negative")
    if by == 0:
        return c
    dims = [0] * by + list(c.dims)
    diffs = [Matrix.zeros(c.field, 0, 0) for _ in range(by - 1)]
    diffs.append(Matrix.zeros(c.field, 0, dims[by]))
    diffs.extend(c.diffs)
    return ChainComplex(c.field, dims, diffs)


def unshift(c: ChainComplex, by: int = 1) -> ChainComplex:
    """Inverse of :func:`shift`; the lowest ``by`` degrees must be zero."""
    if any(c.dims[:by]):
        raise DimensionMismatch("cannot desuspend: low degrees are nonzero")
    if by > c.length:
        return zero_complex(c.field)
    return ChainComplex(c.field, c.dims[by:], c.diffs[by:])


def direct_sum(a: ChainComplex, b: ChainComplex) -> ChainComplex:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")
    k = max(a.length, b.length)
    a, b = a.padded(k), b.padded(k)
    dims = [x + y for x, y in zip(a.dims, b.dims)]
    diffs = [Matrix.block_diag(a.field, [da, db]) for da, db in zip(a.diffs, b.diffs)]
    return ChainComplex(a.field, dims, diffs)
