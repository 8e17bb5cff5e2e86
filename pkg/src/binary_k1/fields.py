"""Exact scalar fields: the rationals and prime fields.

Matrix entries are stored as plain Python numbers (``Fraction`` over Q,
``int`` residues over F_p); a field object knows how to normalise, invert,
parse and encode them. :class:`Scalar` wraps a single value together with its
field for use as a torsion value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldMismatch, InvalidInput


class Rationals:
    """The field Q, with values held as ``fractions.Fraction``."""

    kind = "Q"
    p = None
    zero = Fraction(0)
    one = Fraction(1)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def reduce(self, x):
        return x

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, bool):
            raise InvalidInput(f"not a scalar: {x!r}")
        if isinstance(x, (int, str)):
            try:
                return Fraction(x)
            except (ValueError, ZeroDivisionError) as exc:
                raise InvalidInput(f"bad rational {x!r}") from exc
        raise InvalidInput(f"not a scalar: {x!r}")

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        return 1 / x

    def encode(self, x):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    def to_json(self):
        return {"field": "Q"}


class PrimeField:
    """The field F_p; values are residues in ``range(p)``."""

    kind = "Fp"

    def __init__(self, p: int):
        from sympy import isprime

        if not isinstance(p, int) or isinstance(p, bool) or not isprime(p):
            raise InvalidInput(f"modulus {p!r} is not prime")
        self.p = p
        self.zero = 0
        self.one = 1

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def reduce(self, x):
        return x % self.p

    def coerce(self, x):
        if isinstance(x, bool):
            raise InvalidInput(f"not a scalar: {x!r}")
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, (Fraction, str)):
            q = Fraction(x)
            if q.denominator % self.p == 0:
                raise InvalidInput(f"{x!r} has no image in GF({self.p})")
            return q.numerator * pow(q.denominator, -1, self.p) % self.p
        raise InvalidInput(f"not a scalar: {x!r}")

    def inv(self, x):
        if x % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def encode(self, x):
        return int(x)

    def to_json(self):
        return {"field": "Fp", "p": self.p}


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_json(obj) -> Rationals | PrimeField:
    """Decode ``{"field": "Q"}`` or ``{"field": "Fp", "p": 101}``."""
    if not isinstance(obj, dict) or "field" not in obj:
        raise InvalidInput("missing field descriptor")
    if obj["field"] == "Q":
        return QQ
    if obj["field"] == "Fp":
        return PrimeField(obj.get("p"))
    raise InvalidInput(f"unknown field {obj['field']!r}")


def parse_field(text: str) -> Rationals | PrimeField:
    """Parse the command-line spelling ``q`` or ``fp:P``."""
    t = text.strip().lower()
    if t in ("q", "qq"):
        return QQ
    if t.startswith("fp:"):
        try:
            p = int(t[3:])
        except ValueError as exc:
            raise InvalidInput(f"bad modulus in {text!r}") from exc
        return PrimeField(p)
    raise InvalidInput(f"unknown field {text!r}")


@dataclass(frozen=True)
class Scalar:
    """A field element paired with its field."""

    field: Rationals | PrimeField
    value: object

    def _check(self, other):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    def __mul__(self, other: Scalar) -> Scalar:
        self._check(other)
        return Scalar(self.field, self.field.reduce(self.value * other.value))

    def __truediv__(self, other: Scalar) -> Scalar:
        self._check(other)
        return Scalar(self.field, self.field.reduce(self.value * self.field.inv(other.value)))

    def __neg__(self) -> Scalar:
        return Scalar(self.field, self.field.reduce(-self.value))

    def __pow__(self, e: int) -> Scalar:
        if e < 0:
            return self.inverse() ** (-e)
        v = self.field.one
        for _ in range(e):
            v = self.field.reduce(v * self.value)
        return Scalar(self.field, v)

    def inverse(self) -> Scalar:
        return Scalar(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return not self.value

    def __str__(self):
        return str(self.field.encode(self.value))

    def encode(self):
        return self.field.encode(self.value)

    @classmethod
    def one(cls, field) -> Scalar:
        return cls(field, field.one)

    @classmethod
    def of(cls, field, x) -> Scalar:
        return cls(field, field.coerce(x))
