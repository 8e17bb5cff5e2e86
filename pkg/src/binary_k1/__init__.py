"""Binary acyclic complexes over Q and F_p, Grayson shortening, and the torsion
invariant used to check K_1 relations exactly."""

from .binary import (BinaryComplex, BinaryLadder, BinarySES, RelationExpr, build_conjugated_ladder,
                     diagonal_of, direct_sum_binary, make_ses, shift_binary, swap_top_bottom,
                     tau_swap, two_term, validate_ladder, validate_ses)
from .complexes import ChainComplex, direct_sum, factorize, is_acyclic, shift
from .errors import (BinaryK1Error, DimensionMismatch, FieldMismatch, InvalidDiagram, InvalidInput,
                     InvalidLadder, InvalidSES, NonSquare, NotAcyclic, NotChainMap, NotInvertible,
                     NotInvolution, ShapeMismatch, TooShort)
from .fields import GF, QQ, PrimeField, Rationals, Scalar, parse_field
from .matrix import Matrix, det, image_basis, inverse, kernel_basis, rank, rref, solve_any
from .randgen import GenConfig, gen_acyclic, gen_binary, gen_ladder, gen_nenashev, gen_ses
from .serialize import dumps, load_fixture, loads
from .shortening import (grayson_shorten, include_ik, ses_shorten, shorten_ladder, shorten_pk,
                         tau_of, truncate_ge1, truncate_le2)
from .torsion import binary_torsion, chain_torsion, eval_torsion
from .totals import NenashevDiagram, ladder_total, nenashev_total, remark_objects, t_prime

__version__ = "0.1.0"

__all__ = [
    "BinaryComplex",
    "BinaryLadder",
    "BinarySES",
    "RelationExpr",
    "build_conjugated_ladder",
    "diagonal_of",
    "direct_sum_binary",
    "make_ses",
    "shift_binary",
    "swap_top_bottom",
    "tau_swap",
    "two_term",
    "validate_ladder",
    "validate_ses",
    "ChainComplex",
    "direct_sum",
    "factorize",
    "is_acyclic",
    "shift",
    "GF",
    "QQ",
    "PrimeField",
    "Rationals",
    "Scalar",
    "parse_field",
    "Matrix",
    "det",
    "image_basis",
    "inverse",
    "kernel_basis",
    "rank",
    "rref",
    "solve_any",
    "GenConfig",
    "gen_acyclic",
    "gen_binary",
    "gen_ladder",
    "gen_nenashev",
    "gen_ses",
    "dumps",
    "load_fixture",
    "loads",
    "grayson_shorten",
    "include_ik",
    "ses_shorten",
    "shorten_ladder",
    "shorten_pk",
    "tau_of",
    "truncate_ge1",
    "truncate_le2",
    "binary_torsion",
    "chain_torsion",
    "eval_torsion",
    "NenashevDiagram",
    "ladder_total",
    "nenashev_total",
    "remark_objects",
    "t_prime",
    "BinaryK1Error",
    "DimensionMismatch",
    "FieldMismatch",
    "InvalidDiagram",
    "InvalidInput",
    "InvalidLadder",
    "InvalidSES",
    "NonSquare",
    "NotAcyclic",
    "NotChainMap",
    "NotInvertible",
    "NotInvolution",
    "ShapeMismatch",
    "TooShort",
]
