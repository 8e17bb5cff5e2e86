"""Dense matrices over an exact field and the elimination kernel.

Matrices are immutable once built. Empty shapes (0 x n, n x 0) are legal and
stand for maps out of or into the zero space.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DimensionMismatch, FieldMismatch, NonSquare, NotInvertible
from .fields import Scalar


class Matrix:
    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field, rows: Sequence[Sequence], nrows: int | None = None,
                 ncols: int | None = None, *, coerce: bool = True):
        rows = [list(r) for r in rows]
        if nrows is None:
            nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if len(rows) != nrows or any(len(r) != ncols for r in rows):
            raise DimensionMismatch(f"ragged or mis-sized rows for a {nrows}x{ncols} matrix")
        if coerce:
            c = field.coerce
            rows = [[c(x) for x in r] for r in rows]
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows

    # -- constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, field, nrows: int, ncols: int) -> Matrix:
        z = field.zero
        return cls(field, [[z] * ncols for _ in range(nrows)], nrows, ncols, coerce=False)

    @classmethod
    def identity(cls, field, n: int) -> Matrix:
        rows = [[field.zero] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = field.one
        return cls(field, rows, n, n, coerce=False)

    @classmethod
    def diagonal(cls, field, values: Sequence) -> Matrix:
        n = len(values)
        rows = [[field.zero] * n for _ in range(n)]
        for i, v in enumerate(values):
            rows[i][i] = field.coerce(v)
        return cls(field, rows, n, n, coerce=False)

    @classmethod
    def assemble(cls, field, row_dims: Sequence[int], col_dims: Sequence[int],
                 blocks: dict) -> Matrix:
        """Build a block matrix; ``blocks[(i, j)]`` fills row block i, column block j.

        Missing blocks are zero. Each block's shape must match the declared sizes.
        """
        roff = [0]
        for d in row_dims:
            roff.append(roff[-1] + d)
        coff = [0]
        for d in col_dims:
            coff.append(coff[-1] + d)
        out = [[field.zero] * coff[-1] for _ in range(roff[-1])]
        for (i, j), b in blocks.items():
            if b.field != field:
                raise FieldMismatch("block over a different field")
            if b.nrows != row_dims[i] or b.ncols != col_dims[j]:
                raise DimensionMismatch(
                    f"block ({i},{j}) is {b.nrows}x{b.ncols}, expected {row_dims[i]}x{col_dims[j]}")
            r0, c0 = roff[i], coff[j]
            for a, brow in enumerate(b.rows):
                out[r0 + a][c0:c0 + b.ncols] = brow
        return cls(field, out, roff[-1], coff[-1], coerce=False)

    @classmethod
    def block_diag(cls, field, mats: Sequence[Matrix]) -> Matrix:
        return cls.assemble(field, [m.nrows for m in mats], [m.ncols for m in mats],
                            {(i, i): m for i, m in enumerate(mats)})

    @classmethod
    def hstack(cls, field, mats: Sequence[Matrix], nrows: int | None = None) -> Matrix:
        if nrows is None:
            nrows = mats[0].nrows if mats else 0
        if any(m.nrows != nrows for m in mats):
            raise DimensionMismatch("hstack row counts differ")
        rows = [[] for _ in range(nrows)]
        for m in mats:
            for i in range(nrows):
                rows[i].extend(m.rows[i])
        return cls(field, rows, nrows, sum(m.ncols for m in mats), coerce=False)

    @classmethod
    def vstack(cls, field, mats: Sequence[Matrix], ncols: int | None = None) -> Matrix:
        if ncols is None:
            ncols = mats[0].ncols if mats else 0
        if any(m.ncols != ncols for m in mats):
            raise DimensionMismatch("vstack column counts differ")
        rows = [list(r) for m in mats for r in m.rows]
        return cls(field, rows, len(rows), ncols, coerce=False)

    # -- basic protocol -----------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __repr__(self):
        enc = self.field.encode
        return f"Matrix({self.field!r}, {[[enc(x) for x in r] for r in self.rows]}, shape={self.shape})"

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field, self.shape, tuple(tuple(r) for r in self.rows)))

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def to_lists(self) -> list[list]:
        return [list(r) for r in self.rows]

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def is_identity(self) -> bool:
        return self == Matrix.identity(self.field, self.nrows) if self.is_square() else False

    # -- arithmetic ---------------------------------------------------------

    def _same(self, other: Matrix):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        if other.shape != self.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other: Matrix) -> Matrix:
        self._same(other)
        red = self.field.reduce
        rows = [[red(x + y) for x, y in zip(a, b)] for a, b in zip(self.rows, other.rows)]
        return Matrix(self.field, rows, self.nrows, self.ncols, coerce=False)

    def __sub__(self, other: Matrix) -> Matrix:
        self._same(other)
        red = self.field.reduce
        rows = [[red(x - y) for x, y in zip(a, b)] for a, b in zip(self.rows, other.rows)]
        return Matrix(self.field, rows, self.nrows, self.ncols, coerce=False)

    def __neg__(self) -> Matrix:
        red = self.field.reduce
        return Matrix(self.field, [[red(-x) for x in r] for r in self.rows],
                      self.nrows, self.ncols, coerce=False)

    def scale(self, c) -> Matrix:
        c = self.field.coerce(c)
        red = self.field.reduce
        return Matrix(self.field, [[red(c * x) for x in r] for r in self.rows],
                      self.nrows, self.ncols, coerce=False)

    def __matmul__(self, other: Matrix) -> Matrix:
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        red = self.field.reduce
        cols = [[row[j] for row in other.rows] for j in range(other.ncols)]
        out = []
        for r in self.rows:
            nz = [(k, x) for k, x in enumerate(r) if x]
            out.append([red(sum(x * c[k] for k, x in nz)) for c in cols])
        return Matrix(self.field, out, self.nrows, other.ncols, coerce=False)

    @property
    def T(self) -> Matrix:
        rows = [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        return Matrix(self.field, rows, self.ncols, self.nrows, coerce=False)

    def select_columns(self, idx: Iterable[int]) -> Matrix:
        idx = list(idx)
        return Matrix(self.field, [[r[j] for j in idx] for r in self.rows],
                      self.nrows, len(idx), coerce=False)

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> Matrix:
        return Matrix(self.field, [r[c0:c1] for r in self.rows[r0:r1]],
                      r1 - r0, c1 - c0, coerce=False)


# -- elimination kernel -------------------------------------------------------


def rref(m: Matrix) -> tuple[Matrix, list[int], Scalar]:
    """Reduced row echelon form.

    Returns ``(reduced, pivot_columns, row_ops_det)`` where ``row_ops_det`` is
    the product of the determinants of the elementary operations applied, so
    for square full-rank ``m`` we get ``det(m) * row_ops_det == 1``.
    """
    f = m.field
    red, inv = f.reduce, f.inv
    rows = [list(r) for r in m.rows]
    pivots: list[int] = []
    ops_det = f.one
    pr = 0
    for c in range(m.ncols):
        if pr == m.nrows:
            break
        sel = next((r for r in range(pr, m.nrows) if rows[r][c]), None)
        if sel is None:
            continue
        if sel != pr:
            rows[pr], rows[sel] = rows[sel], rows[pr]
            ops_det = red(-ops_det)
        piv = rows[pr][c]
        if piv != f.one:
            s = inv(piv)
            rows[pr] = [red(x * s) for x in rows[pr]]
            ops_det = red(ops_det * s)
        pv = rows[pr]
        for r in range(m.nrows):
            if r != pr:
                fac = rows[r][c]
                if fac:
                    rows[r] = [red(x - fac * y) if y else x for x, y in zip(rows[r], pv)]
        pivots.append(c)
        pr += 1
    return Matrix(f, rows, m.nrows, m.ncols, coerce=False), pivots, Scalar(f, ops_det)


def _echelon_pivots(m: Matrix) -> list[int]:
    """Pivot columns from forward elimination only (no back substitution)."""
    f = m.field
    red, inv = f.reduce, f.inv
    rows = [list(r) for r in m.rows]
    pivots = []
    pr = 0
    for c in range(m.ncols):
        if pr == m.nrows:
            break
        sel = next((r for r in range(pr, m.nrows) if rows[r][c]), None)
        if sel is None:
            continue
        rows[pr], rows[sel] = rows[sel], rows[pr]
        pv = rows[pr]
        s = inv(pv[c])
        for r in range(pr + 1, m.nrows):
            fac = rows[r][c]
            if fac:
                fac = red(fac * s)
                rows[r] = [red(x - fac * y) if y else x for x, y in zip(rows[r], pv)]
        pivots.append(c)
        pr += 1
    return pivots


def rank(m: Matrix) -> int:
    return len(_echelon_pivots(m))


def det(m: Matrix) -> Scalar:
    if not m.is_square():
        raise NonSquare(f"determinant of a {m.nrows}x{m.ncols} matrix")
    f = m.field
    red, inv = f.reduce, f.inv
    n = m.nrows
    rows = [list(r) for r in m.rows]
    acc = f.one
    for c in range(n):
        sel = next((r for r in range(c, n) if rows[r][c]), None)
        if sel is None:
            return Scalar(f, f.zero)
        if sel != c:
            rows[c], rows[sel] = rows[sel], rows[c]
            acc = red(-acc)
        pv = rows[c]
        acc = red(acc * pv[c])
        s = inv(pv[c])
        for r in range(c + 1, n):
            fac = rows[r][c]
            if fac:
                fac = red(fac * s)
                rows[r] = [red(x - fac * y) if y else x for x, y in zip(rows[r], pv)]
    return Scalar(f, acc)


def is_invertible(m: Matrix) -> bool:
    return m.is_square() and rank(m) == m.nrows


def inverse(m: Matrix) -> Matrix:
    if not m.is_square():
        raise NonSquare(f"inverse of a {m.nrows}x{m.ncols} matrix")
    n = m.nrows
    aug = Matrix.hstack(m.field, [m, Matrix.identity(m.field, n)], n)
    reduced, pivots, _ = rref(aug)
    if pivots[:n] != list(range(n)):
        raise NotInvertible("matrix is singular")
    return reduced.submatrix(0, n, n, 2 * n)


def solve_any(a: Matrix, b: Matrix) -> Matrix | None:
    """One solution X of ``a @ X == b``, free variables set to zero.

    Returns None when the system is inconsistent.
    """
    if a.nrows != b.nrows:
        raise DimensionMismatch(f"a has {a.nrows} rows, b has {b.nrows}")
    if a.field != b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")
    f = a.field
    n = a.ncols
    aug = Matrix.hstack(f, [a, b], a.nrows)
    reduced, pivots, _ = rref(aug)
    if pivots and pivots[-1] >= n:
        return None
    out = [[f.zero] * b.ncols for _ in range(n)]
    for r, c in enumerate(pivots):
        out[c] = list(reduced.rows[r][n:])
    return Matrix(f, out, n, b.ncols, coerce=False)


def column_space_basis(m: Matrix) -> Matrix:
    """The pivot columns of ``m`` (original entries): a basis of im(m)."""
    return m.select_columns(_echelon_pivots(m))


def image_basis(m: Matrix) -> Matrix:
    """Canonical basis of im(m): the reduced column echelon form, zero columns dropped.

    Unlike :func:`column_space_basis` this depends only on the subspace, so
    e.g. a surjective ``m`` always yields the identity.
    """
    reduced, pivots, _ = rref(m.T)
    return reduced.submatrix(0, len(pivots), 0, m.nrows).T


def kernel_basis(m: Matrix) -> Matrix:
    """Columns spanning ker(m), one per free variable."""
    f = m.field
    reduced, pivots, _ = rref(m)
    free = [j for j in range(m.ncols) if j not in set(pivots)]
    cols = []
    for j in free:
        v = [f.zero] * m.ncols
        v[j] = f.one
        for r, c in enumerate(pivots):
            v[c] = f.reduce(-reduced.rows[r][j])
        cols.append(v)
    return Matrix(f, cols, len(cols), m.ncols, coerce=False).T


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; row index (i, k) -> i * b.nrows + k."""
    if a.field != b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")
    red = a.field.reduce
    rows = []
    for ar in a.rows:
        for br in b.rows:
            rows.append([red(x * y) for x in ar for y in br])
    return Matrix(a.field, rows, a.nrows * b.nrows, a.ncols * b.ncols, coerce=False)
