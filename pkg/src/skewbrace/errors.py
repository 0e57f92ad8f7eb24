"""Exception hierarchy for the skewbrace package.

Structural validation errors carry the first witness that breaks the axiom,
so CLI diagnostics can name the offending triple.
"""


class SkewBraceError(Exception):
    """Base class for all errors raised by this package."""


# --- group table validation ------------------------------------------------

class GroupValidationError(SkewBraceError):
    pass


class NotClosed(GroupValidationError):
    def __init__(self, row, col, value):
        self.witness = (row, col, value)
        super().__init__(f"entry op[{row}][{col}] = {value} is out of range")


class NotAssociative(GroupValidationError):
    def __init__(self, a, b, c):
        self.witness = (a, b, c)
        super().__init__(f"(a*b)*c != a*(b*c) at (a, b, c) = ({a}, {b}, {c})")


class NoIdentity(GroupValidationError):
    def __init__(self):
        super().__init__("table has no two-sided identity element")


class NoInverse(GroupValidationError):
    def __init__(self, a):
        self.witness = a
        super().__init__(f"element {a} has no two-sided inverse")


class NotNormal(SkewBraceError):
    def __init__(self, g, s):
        self.witness = (g, s)
        super().__init__(f"subgroup is not normal: conjugate of {s} by {g} escapes")


class NotASubgroup(SkewBraceError):
    pass


# --- brace validation ------------------------------------------------------

class BraceValidationError(SkewBraceError):
    pass


class DotInvalid(BraceValidationError):
    pass


class CircInvalid(BraceValidationError):
    pass


class IdentityMismatch(BraceValidationError):
    def __init__(self, dot_identity, circ_identity):
        super().__init__(
            f"dot identity {dot_identity} differs from circ identity {circ_identity}"
        )


class BraceRelationFails(BraceValidationError):
    def __init__(self, a, b, c):
        self.witness = (a, b, c)
        super().__init__(
            f"a o (b.c) != (a o b).a^-1.(a o c) at (a, b, c) = ({a}, {b}, {c})"
        )


class LambdaNotAutomorphism(BraceValidationError):
    def __init__(self, a):
        self.witness = a
        super().__init__(f"lambda_{a} is not an automorphism of the dot group")


class LambdaNotHomomorphism(BraceValidationError):
    def __init__(self, a, b):
        self.witness = (a, b)
        super().__init__(f"lambda_(a o b) != lambda_a lambda_b at (a, b) = ({a}, {b})")


class NotAnIdeal(SkewBraceError):
    pass


class DescriptionsDisagree(SkewBraceError):
    """The two defining descriptions of the annihilator produced different sets.

    This signals an implementation bug; it is never expected for a valid brace.
    """


# --- words -----------------------------------------------------------------

class WordError(SkewBraceError):
    pass


class WordSyntaxError(WordError):
    def __init__(self, position, message):
        self.position = position
        super().__init__(f"syntax error at position {position}: {message}")


class ZeroVariableIndex(WordError):
    def __init__(self, position):
        self.position = position
        super().__init__(f"variable index must be >= 1 (at position {position})")


class MissingAssignment(WordError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"no value assigned to variable x{index}")


class WordUsesCircOnGroup(WordError):
    def __init__(self):
        super().__init__("word uses circ multiplication or circ inversion on a plain group")


class UnknownFamily(WordError):
    def __init__(self, name):
        super().__init__(f"unknown word family {name!r}")


class SeedArityNotTwo(WordError):
    def __init__(self, arity):
        super().__init__(f"seed words must have arity 2, got {arity}")


# --- isoclinism ------------------------------------------------------------

class ShapeMismatch(SkewBraceError):
    pass


class LeftNormedNotWellDefinedModAnnihilator(SkewBraceError):
    def __init__(self):
        super().__init__(
            "the left-normed star product is not well-defined modulo Ann_n(A); "
            "use the core-of-marginal quotient for left-normed families"
        )


# --- catalog / enumeration -------------------------------------------------

class NotOddPrime(SkewBraceError):
    def __init__(self, p):
        super().__init__(f"{p} is not an odd prime")


class OrderExceedsCap(SkewBraceError):
    def __init__(self, order, cap):
        super().__init__(f"group order {order} exceeds enumeration cap {cap}")


class UnknownCatalogName(SkewBraceError):
    def __init__(self, name):
        super().__init__(f"unknown catalog entry {name!r}")


# --- file I/O --------------------------------------------------------------

class FileFormatError(SkewBraceError):
    pass
