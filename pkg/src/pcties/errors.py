"""Exception types shared across the package.

Validation errors carry the first offending index so callers (and the CLI)
can point at the exact cell or vertex that broke an invariant. Indices are
0-based here; user-facing surfaces render them 1-based.
"""


class PcError(Exception):
    """Base class for all package errors."""


class ValidationError(PcError, ValueError):
    """Input violates a structural invariant."""


class NonSquare(ValidationError):
    def __init__(self, rows: int, cols) -> None:
        self.rows = rows
        self.cols = cols
        super().__init__(f"matrix is not square: {rows} rows, row width {cols}")


class EntryOutOfRange(ValidationError):
    def __init__(self, i: int, j: int, value) -> None:
        self.index = (i, j)
        self.value = value
        super().__init__(f"entry ({i},{j}) is {value!r}, expected -1, 0 or 1")


class DiagonalNonZero(ValidationError):
    def __init__(self, i: int, value) -> None:
        self.index = (i, i)
        self.value = value
        super().__init__(f"diagonal entry ({i},{i}) is {value!r}, expected 0")


class NotSkewSymmetric(ValidationError):
    def __init__(self, i: int, j: int) -> None:
        self.index = (i, j)
        super().__init__(f"entries ({i},{j}) and ({j},{i}) do not sum to 0")


class VertexOutOfRange(ValidationError):
    def __init__(self, vertex, n: int) -> None:
        self.vertex = vertex
        self.n = n
        super().__init__(f"vertex {vertex!r} out of range for {n} vertices")


class DuplicateVertex(ValidationError):
    def __init__(self, triple) -> None:
        self.triple = tuple(triple)
        super().__init__(f"triple {self.triple} has repeated vertices")


class NotATournament(PcError):
    def __init__(self, pair) -> None:
        self.pair = tuple(pair)
        super().__init__(f"graph has an undirected edge {self.pair}; a tournament has none")


class MOutOfRange(ValidationError):
    def __init__(self, n: int, m: int) -> None:
        self.n = n
        self.m = m
        super().__init__(f"m={m} outside [0, C({n},2)]")


class TooSmall(PcError):
    def __init__(self, n: int) -> None:
        self.n = n
        super().__init__(f"indices are undefined for n={n}; need n >= 3 (no triads exist)")


class BudgetExceeded(PcError):
    """Work would exceed the default budget; pass the override to proceed."""


class FormatError(ValidationError):
    """A matrix file could not be parsed; message names the offending location."""
