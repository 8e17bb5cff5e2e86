"""JSON encoding for fields, matrices, complexes, ladders, sequences and diagrams.

Scalars: rationals as ``"num/den"`` strings (``"num"`` when den is 1), prime
field elements as integers. A field descriptor is ``{"field": "Q"}`` or
``{"field": "Fp", "p": 101}``; every top-level object carries one.

    ChainComplex   {"dims": [...], "diff": [D_1, ..., D_k]}
    BinaryComplex  {"field": ..., "dims": [...], "top": [...], "bot": [...]}
    BinaryLadder   {"field": ..., "source": B, "target": B, "sigma": [...], "tau": [...]}
    BinarySES      {"field": ..., "sub": B, "total": B, "quot": B, "incl": [...], "proj": [...]}
    Nenashev       {"field": ..., "M": B, "N": B, "P": B,
                    "f_top": [...], "f_bot": [...], "g_top": [...], "g_bot": [...]}

Matrices are lists of rows. An empty matrix cannot carry its shape that way,
so matrix lists are decoded against the known dims of the enclosing object.
"""

from __future__ import annotations

import json

from .binary import BinaryComplex, BinaryLadder, BinarySES
from .complexes import ChainComplex
from .errors import InvalidInput
from .fields import field_from_json
from .matrix import Matrix
from .totals import NenashevDiagram


def encode_matrix(m: Matrix) -> list:
    return [[m.field.encode(x) for x in row] for row in m.rows]


def decode_matrix(field, data, nrows: int, ncols: int) -> Matrix:
    if not isinstance(data, list) or len(data) != nrows:
        raise InvalidInput(f"expected a {nrows}x{ncols} matrix")
    rows = []
    for row in data:
        if not isinstance(row, list) or len(row) != ncols:
            raise InvalidInput(f"expected a {nrows}x{ncols} matrix")
        rows.append(row)
    try:
        return Matrix(field, rows, nrows, ncols)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise InvalidInput(f"bad matrix entry: {e}") from e


def _dims(data) -> list[int]:
    dims = data.get("dims")
    if not isinstance(dims, list) or not all(isinstance(x, int) and x >= 0 for x in dims) or not dims:
        raise InvalidInput("dims must be a non-empty list of non-negative integers")
    return dims


def _diffs(field, dims, data) -> list[Matrix]:
    if not isinstance(data, list) or len(data) != len(dims) - 1:
        raise InvalidInput("need one differential per degree after 0")
    return [decode_matrix(field, data[n - 1], dims[n - 1], dims[n]) for n in range(1, len(dims))]


def _maps(field, data, rows, cols) -> tuple[Matrix, ...]:
    if not isinstance(data, list) or len(data) != len(rows):
        raise InvalidInput("need one map per degree")
    return tuple(decode_matrix(field, m, r, c) for m, r, c in zip(data, rows, cols))


# -- complexes -----------------------------------------------------------------


def complex_to_json(c: ChainComplex) -> dict:
    return {**c.field.to_json(), "dims": list(c.dims), "diff": [encode_matrix(d) for d in c.diffs]}


def complex_from_json(data, field=None) -> ChainComplex:
    if not isinstance(data, dict):
        raise InvalidInput("complex must be a JSON object")
    field = field or field_from_json(data)
    dims = _dims(data)
    return ChainComplex(field, dims, _diffs(field, dims, data.get("diff")))


def binary_to_json(p: BinaryComplex) -> dict:
    return {
        **p.field.to_json(),
        "dims": list(p.dims),
        "top": [encode_matrix(d) for d in p.top.diffs],
        "bot": [encode_matrix(d) for d in p.bot.diffs],
    }


def binary_from_json(data, field=None) -> BinaryComplex:
    if not isinstance(data, dict):
        raise InvalidInput("binary complex must be a JSON object")
    field = field or field_from_json(data)
    dims = _dims(data)
    return BinaryComplex.from_diffs(field, dims, _diffs(field, dims, data.get("top")),
                                    _diffs(field, dims, data.get("bot")))


# -- ladders, sequences, diagrams -------------------------------------------------


def ladder_to_json(l: BinaryLadder) -> dict:
    return {
        **l.source.field.to_json(),
        "source": binary_to_json(l.source),
        "target": binary_to_json(l.target),
        "sigma": [encode_matrix(m) for m in l.sigma],
        "tau": [encode_matrix(m) for m in l.tau],
    }


def ladder_from_json(data) -> BinaryLadder:
    field = field_from_json(data)
    src = binary_from_json(data.get("source"), field)
    dst = binary_from_json(data.get("target"), field)
    return BinaryLadder(src, dst, _maps(field, data.get("sigma"), dst.dims, src.dims),
                        _maps(field, data.get("tau"), dst.dims, src.dims))


def ses_to_json(s: BinarySES) -> dict:
    return {
        **s.total.field.to_json(),
        "sub": binary_to_json(s.sub),
        "total": binary_to_json(s.total),
        "quot": binary_to_json(s.quot),
        "incl": [encode_matrix(m) for m in s.incl],
        "proj": [encode_matrix(m) for m in s.proj],
    }


def ses_from_json(data) -> BinarySES:
    field = field_from_json(data)
    sub, total, quot = (binary_from_json(data.get(k), field) for k in ("sub", "total", "quot"))
    return BinarySES(sub, total, quot,
                     _maps(field, data.get("incl"), total.dims, sub.dims),
                     _maps(field, data.get("proj"), quot.dims, total.dims))


def diagram_to_json(d: NenashevDiagram) -> dict:
    out = {**d.field.to_json()}
    for k in ("M", "N", "P"):
        out[k] = binary_to_json(getattr(d, k))
    for k in ("f_top", "f_bot", "g_top", "g_bot"):
        out[k] = [encode_matrix(m) for m in getattr(d, k)]
    return out


def diagram_from_json(data) -> NenashevDiagram:
    field = field_from_json(data)
    M, N, P = (binary_from_json(data.get(k), field) for k in ("M", "N", "P"))
    fs = [_maps(field, data.get(k), N.dims, M.dims) for k in ("f_top", "f_bot")]
    gs = [_maps(field, data.get(k), P.dims, N.dims) for k in ("g_top", "g_bot")]
    return NenashevDiagram(M, N, P, fs[0], fs[1], gs[0], gs[1])


# -- dispatch ------------------------------------------------------------------


def detect_kind(data) -> str:
    """Guess the object type from its keys."""
    if not isinstance(data, dict):
        raise InvalidInput("expected a JSON object")
    if "sigma" in data:
        return "ladder"
    if "incl" in data:
        return "ses"
    if "f_top" in data:
        return "nenashev"
    if "top" in data:
        return "binary"
    if "diff" in data:
        return "complex"
    raise InvalidInput("cannot tell what kind of object this is")


_ENCODERS = {
    ChainComplex: complex_to_json,
    BinaryComplex: binary_to_json,
    BinaryLadder: ladder_to_json,
    BinarySES: ses_to_json,
    NenashevDiagram: diagram_to_json,
}

_DECODERS = {
    "complex": complex_from_json,
    "binary": binary_from_json,
    "ladder": ladder_from_json,
    "ses": ses_from_json,
    "nenashev": diagram_from_json,
}


def to_json(obj) -> dict:
    try:
        return _ENCODERS[type(obj)](obj)
    except KeyError:
        raise TypeError(f"cannot encode {type(obj).__name__}") from None


def from_json(data, kind: str | None = None):
    kind = kind or detect_kind(data)
    return _DECODERS[kind](data)


def dumps(obj, **kw) -> str:
    return json.dumps(to_json(obj), **kw)


def loads(text: str, kind: str | None = None):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInput(f"malformed JSON: {e}") from e
    return from_json(data, kind)


def load_fixture(name: str):
    """Load one of the small shipped instances, e.g. ``load_fixture("two_three")``."""
    from importlib.resources import files

    path = files("binary_k1").joinpath("fixtures", name + ".json")
    return loads(path.read_text(encoding="utf-8"))
