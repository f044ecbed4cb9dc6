"""Exception hierarchy. Every error the library raises derives from :class:`PolyLRSError`."""


class PolyLRSError(Exception):
    pass


class ZeroRayError(PolyLRSError, ValueError):
    pass


class ZeroInequalityError(PolyLRSError, ValueError):
    pass


class DuplicateVertexError(PolyLRSError, ValueError):
    pass


class DuplicateRayError(PolyLRSError, ValueError):
    pass


class SingularBlockError(PolyLRSError, ValueError):
    """The tight rows handed to the dictionary builder do not form a nonsingular block."""


class ZeroPivotElementError(PolyLRSError, ArithmeticError):
    pass


class NonUniqueLexMinError(PolyLRSError, ArithmeticError):
    """The lexicographic ratio test found a tie; the tableau lost full row rank."""


class InvariantViolation(PolyLRSError, AssertionError):
    pass


class NoVertexError(PolyLRSError):
    """The polyhedron has no vertex (rank of H below the dimension)."""


class EmptyPolyhedronError(PolyLRSError):
    pass


class NotFullDimensionalError(PolyLRSError, ValueError):
    pass


class EmptyInputError(PolyLRSError, ValueError):
    pass


class ParseError(PolyLRSError, ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
