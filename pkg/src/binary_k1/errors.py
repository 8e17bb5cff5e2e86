"""Exception hierarchy.

Every error raised on bad input derives from :class:`BinaryK1Error`; the CLI
maps these to exit code 2.
"""


class BinaryK1Error(Exception):
    pass


class InvalidInput(BinaryK1Error, ValueError):
    pass


class FieldMismatch(BinaryK1Error, ValueError):
    pass


class DimensionMismatch(BinaryK1Error, ValueError):
    pass


class NonSquare(DimensionMismatch):
    pass


class ShapeMismatch(DimensionMismatch):
    pass


class NotInvertible(BinaryK1Error, ValueError):
    pass


class NotAcyclic(BinaryK1Error, ValueError):
    pass


class NotInvolution(BinaryK1Error, ValueError):
    pass


class NotChainMap(BinaryK1Error, ValueError):
    pass


class TooShort(BinaryK1Error, ValueError):
    pass


class InvalidLadder(BinaryK1Error, ValueError):
    pass


class InvalidSES(BinaryK1Error, ValueError):
    pass


class InvalidDiagram(BinaryK1Error, ValueError):
    pass
