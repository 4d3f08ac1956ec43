"""
Plucker - Error Types
Every failure the library raises derives from PluckerError
"""


class PluckerError(Exception):
    """Base class for all library errors"""


class TreeSyntaxError(PluckerError, ValueError):
    """Malformed tree notation; `offset` is the byte offset of the problem"""

    def __init__(self, message, offset):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


class ZeroDelayError(PluckerError, ValueError):
    """A delay value below 1"""


class InvalidLeafError(PluckerError, IndexError):
    """A LeafRef that does not name a leaf of the tree"""


class LengthMismatchError(PluckerError, ValueError):
    """Delay assignment length differs from the tree's leaf count"""


class NotDivisibleError(PluckerError, ArithmeticError):
    """Exact polynomial division left a remainder"""


class DivideByZeroError(PluckerError, ZeroDivisionError):
    """Division by the zero polynomial"""


class ZeroPolynomialError(PluckerError, ValueError):
    """Operation undefined on the zero polynomial"""


class NotAntiUnimodalError(PluckerError, ValueError):
    """Delay sequence does not weakly decrease then weakly increase"""


class BudgetExceededError(PluckerError):
    """A scan would emit more records than the configured limit"""


class FormulaMismatchError(PluckerError):
    """Closed form and recursion disagree on an input"""

    def __init__(self, descriptor, expected, actual):
        super().__init__(f"{descriptor}: recursion gives {expected}, formula gives {actual}")
        self.descriptor = descriptor


class CounterexampleFoundError(PluckerError):
    """An exhaustive check found an input violating the asserted property"""

    def __init__(self, check, descriptor, detail=''):
        message = f"{check} fails on {descriptor}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)
        self.check = check
        self.descriptor = descriptor
