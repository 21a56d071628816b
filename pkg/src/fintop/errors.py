"""Exception hierarchy.

Every error raised for bad user input derives from :class:`FinTopError`, so
the command line can map the whole family to one exit status.
"""

from __future__ import annotations


class FinTopError(ValueError):
    pass


class TopologyError(FinTopError):
    """The supplied open-set family is not a topology."""


class MissingEmptyOrFull(TopologyError):
    def __init__(self, missing: str):
        self.missing = missing
        super().__init__(f"open family does not contain the {missing} set")


class NotClosedUnderUnion(TopologyError):
    def __init__(self, a: int, b: int):
        self.witness = (a, b)
        super().__init__(f"union of opens {a:#b} and {b:#b} is not open")


class NotClosedUnderIntersection(TopologyError):
    def __init__(self, a: int, b: int):
        self.witness = (a, b)
        super().__init__(f"intersection of opens {a:#b} and {b:#b} is not open")


class OrderError(FinTopError):
    pass


class NotReflexive(OrderError):
    def __init__(self, x: int):
        self.point = x
        super().__init__(f"relation is not reflexive at point {x}")


class NotTransitive(OrderError):
    def __init__(self, z: int, y: int, x: int):
        self.witness = (z, y, x)
        super().__init__(f"relation is not transitive: {z} >= {y} and {y} >= {x} but not {z} >= {x}")


class BaseError(FinTopError):
    pass


class PointNotInOwnNeighborhood(BaseError):
    def __init__(self, x: int):
        self.point = x
        super().__init__(f"point {x} is not in its assigned neighborhood")


class InconsistentBase(BaseError):
    def __init__(self, x: int, y: int):
        self.witness = (x, y)
        super().__init__(f"point {y} lies in U[{x}] but U[{y}] is not contained in U[{x}]")


class NotT0(FinTopError):
    def __init__(self, what: str = "operation"):
        super().__init__(f"{what} requires a T0 space")


class NOutOfRange(FinTopError):
    def __init__(self, n: int, lo: int, hi: int):
        self.n = n
        super().__init__(f"n = {n} outside supported range {lo}..{hi}")


class TargetNotOneDimensionalT0(FinTopError):
    def __init__(self):
        super().__init__("target space must be T0 with inductive dimension <= 1")


class EmptyImage(FinTopError):
    def __init__(self, x: int):
        self.point = x
        super().__init__(f"multifunction value at point {x} is empty")


class InvalidMap(FinTopError):
    pass


class OutOfDomain(FinTopError):
    def __init__(self, x):
        self.value = x
        super().__init__(f"{x} is outside [0, 1]")


class InvalidPiecewiseLinear(FinTopError):
    pass


class ParseError(FinTopError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")


class PathDisagreement(RuntimeError):
    """Two independent computation routes produced different answers.

    This is never a user error; it signals a bug in one of the routes.
    """

    def __init__(self, what: str, first, second):
        self.what = what
        self.values = (first, second)
        super().__init__(f"{what}: routes disagree ({first!r} vs {second!r})")
