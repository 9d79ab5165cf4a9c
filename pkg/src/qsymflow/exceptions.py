from typing import Optional, Tuple


class QSymError(Exception):
    """Base class for every error raised by qsymflow."""


class CompositionError(QSymError, ValueError):
    pass


class DegenerateIntervalError(CompositionError):
    """z_A is undefined when A or its complement is empty."""


class PoleError(QSymError, ZeroDivisionError):
    def __init__(self, expression: str, point: Tuple[str, str]):
        self.expression = expression
        self.point = point
        super().__init__(f"pole of {expression} at q={point[0]}, t={point[1]}")


class ParseError(QSymError, ValueError):
    def __init__(self, message: str, text: str, column: Optional[int] = None):
        self.text = text
        self.column = column
        where = f" at column {column}" if column is not None else ""
        super().__init__(f"{message}{where}: {text!r}")


class BasisMismatchError(QSymError, ValueError):
    pass


class NotQuasisymmetricError(QSymError):
    pass


class UnknownBasisError(QSymError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown basis"


class UnknownSuiteError(QSymError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown suite"


class CoefficientError(QSymError, ValueError):
    """A coefficient operation that sympy cannot carry out, or a non-constant where a number is needed."""
