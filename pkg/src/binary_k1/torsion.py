"""Torsion of based acyclic complexes and the binary invariant t(P) in F^x.

For an acyclic complex with image bases J_n of d_{n+1} and sections s_n of
d_n (so that d_n s_n = J_{n-1}), each degree gets the square matrix
M_n = [J_n | s_n] and

    torsion(C) = prod_n det(M_n) ** (-1) ** n.

The two-term complex F^n --a--> F^n therefore has torsion det(a). A binary
complex is sent to torsion(top) / torsion(bottom), both computed in the
standard bases of the P_n; this kills diagonal complexes, is multiplicative
on short exact sequences and sends <a|b> to det(a) / det(b).
"""

from __future__ import annotations

from .binary import BinaryComplex, RelationExpr
from .complexes import ChainComplex, factorize
from .fields import QQ, Scalar
from .matrix import Matrix, det


def _rechoose(c: ChainComplex, images, sections, rng):
    # Imported lazily: randgen depends on this module's neighbours, not on torsion.
    from .randgen import random_invertible, random_matrix

    f = c.field
    images = list(images)
    sections = list(sections)
    k = c.length
    for n in range(k):
        a = random_invertible(rng, f, images[n].ncols)
        images[n] = images[n] @ a
        sections[n] = sections[n] @ a
    # ker d_{n+1} = im d_{n+2}: perturb each section by image vectors.
    for n in range(k - 1):
        r = random_matrix(rng, f, images[n + 1].ncols, sections[n].ncols)
        sections[n] = sections[n] + images[n + 1] @ r
    return images, sections


def degree_matrices(c: ChainComplex, rng=None) -> list[Matrix]:
    """The square matrices [J_n | s_n] for n = 0 .. k."""
    fac = factorize(c)
    images, sections = list(fac.images), list(fac.sections)
    if rng is not None:
        images, sections = _rechoose(c, images, sections, rng)
    f = c.field
    out = []
    for n in range(c.length + 1):
        parts = []
        if n < c.length:
            parts.append(images[n])
        if n >= 1:
            parts.append(sections[n - 1])
        out.append(Matrix.hstack(f, parts, c.dims[n]) if parts else Matrix.zeros(f, c.dims[n], 0))
    return out


def chain_torsion(c: ChainComplex, rng=None) -> Scalar:
    """Torsion of ``c`` in its standard bases.

    With ``rng`` (a ``numpy.random.Generator``) the image bases and sections are
    re-chosen at random; the result must not change.
    """
    acc = Scalar.one(c.field)
    for n, m in enumerate(degree_matrices(c, rng)):
        v = det(m)
        acc = acc * v if n % 2 == 0 else acc / v
    return acc


def binary_torsion(p: BinaryComplex, rng=None) -> Scalar:
    return chain_torsion(p.top, rng) / chain_torsion(p.bot, rng)


def eval_torsion(e: RelationExpr, field=None) -> Scalar:
    """prod t(P) ** c over the terms of ``e``; 1 for the empty expression."""
    if field is None:
        field = e.terms[0][1].field if e.terms else QQ
    acc = Scalar.one(field)
    for c, p in e.terms:
        acc = acc * binary_torsion(p) ** c
    return acc
