"""
Exceptions raised by cnorm.

Input problems (malformed files, invalid tables, bad family parameters) derive
from GroupInputError, which the command runner maps to exit status 2. Claim
failures are never exceptions; they are reported as ClaimResult data.
"""


class CnormError(Exception):
    """Base class for every cnorm exception."""


class GroupInputError(CnormError, ValueError):
    """A group, file, or parameter supplied by the caller is unusable."""


class ParseError(GroupInputError):
    """A group file could not be parsed."""

    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class GroupValidationError(GroupInputError):
    """A Cayley table does not describe a group."""


class NotLatinSquare(GroupValidationError):
    def __init__(self, axis: str, position: int, value: int):
        self.axis = axis
        self.position = position
        self.value = value
        super().__init__(f"{axis} {position} repeats entry {value}")


class NotAssociative(GroupValidationError):
    def __init__(self, triple: tuple[int, int, int]):
        self.triple = triple
        i, j, k = triple
        super().__init__(f"({i}*{j})*{k} != {i}*({j}*{k})")


class NoIdentity(GroupValidationError):
    def __init__(self):
        super().__init__("no two-sided identity element")


class NoInverse(GroupValidationError):
    def __init__(self, element: int):
        self.element = element
        super().__init__(f"element {element} has no two-sided inverse")


class NotAPermutation(GroupInputError):
    def __init__(self, generator, degree: int):
        self.generator = generator
        self.degree = degree
        super().__init__(f"{generator} is not a permutation of [0, {degree})")


class OrderCapExceeded(GroupInputError):
    def __init__(self, order: int, cap: int):
        self.order = order
        self.cap = cap
        super().__init__(f"group order {order} exceeds the order cap {cap}")


class BadParameter(GroupInputError):
    """A family parameter is outside its valid range."""


class BadFamily(GroupInputError):
    def __init__(self, family: str):
        self.family = family
        super().__init__(f"unknown group family {family!r}")


class NotNormal(GroupInputError):
    def __init__(self, witness: tuple[int, int]):
        self.witness = witness
        h, t = witness
        super().__init__(f"conjugate of {h} by {t} leaves the subgroup")


class NotASubgroup(GroupInputError):
    """A membership set is not closed under the parent's product."""


class NotContained(GroupInputError):
    """A subgroup is not contained in the ambient subgroup it was paired with."""


class ParentMismatch(GroupInputError):
    def __init__(self, first: int, second: int):
        super().__init__(f"subgroups of groups of order {first} and {second}")


class IOFailure(CnormError):
    """Reading or writing a group or report file failed."""


class InternalInvariantViolated(CnormError, AssertionError):
    """An engine invariant failed; this is a bug, not bad input."""
