"""Exception types for hullforge.

Grouped by how the CLI maps them to exit codes: validation problems
(exit 2), honest negative outcomes of the constructions (exit 1), and
work-budget refusals (exit 3).
"""


class HullforgeError(Exception):
    """Base class for all library-specific errors."""


# -- validation / input errors (CLI exit 2) ---------------------------------

class SpecMismatch(HullforgeError):
    """Operands belong to different field specs."""


class DivisionByZero(HullforgeError, ZeroDivisionError):
    """Multiplicative inverse of zero requested."""


class NotASquare(HullforgeError):
    """Square root of a non-square field element requested."""


class NotSquareMatrix(HullforgeError):
    """Operation requires a square matrix."""


class DimensionMismatch(HullforgeError):
    """Matrix/vector shapes are not conformable."""


class IndexOutOfRange(HullforgeError):
    """Row/column index set outside the matrix."""


class ZeroCode(HullforgeError):
    """The code in question is the zero code and cannot be represented."""


class ZeroScale(HullforgeError):
    """A scaling vector contains a zero coordinate."""


class ParseError(HullforgeError):
    """A text input (code file or witness file) failed to parse."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" at line {line}"
            if column is not None:
                where += f", column {column}"
        super().__init__(f"{message}{where}")


# -- negative outcomes (CLI exit 1) ------------------------------------------

class NoWitness(HullforgeError):
    """No index/support satisfies the construction's hypothesis."""


class SearchExhausted(HullforgeError):
    """Randomized draws and the deterministic sweep all failed."""


class AlreadyLcd(HullforgeError):
    """Hull reduction requested on a code that already has hull dimension 0."""


class NotLcd(HullforgeError):
    """Operation requires an LCD input code."""


class SmallFieldUnsupported(HullforgeError):
    """LCD-scaling constructions need q > 3."""


class WrongCharacteristic(HullforgeError):
    """Operation restricted to odd or to even characteristic."""


class HullTooSmall(HullforgeError):
    """Requested hull usage l exceeds the hull dimension."""


class MinusOneIsSquare(HullforgeError):
    """The pure-LCD family needs -1 to be a non-square."""


# -- resource refusals (CLI exit 3) ------------------------------------------

class BudgetExceeded(HullforgeError):
    """An exhaustive enumeration would exceed the allowed work budget."""

    def __init__(self, what, required, budget):
        self.what = what
        self.required = required
        self.budget = budget
        super().__init__(
            f"{what} needs {required} work units, budget is {budget}"
        )


class NonPowerCount(HullforgeError):
    """Internal consistency failure: an orthogonality count that should be
    a power of q is not one."""
