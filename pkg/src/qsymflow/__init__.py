from .BaseBasis import BaseBasis
from .BaseSuite import BaseSuite
from .exceptions import (
    BasisMismatchError,
    CoefficientError,
    CompositionError,
    DegenerateIntervalError,
    NotQuasisymmetricError,
    ParseError,
    PoleError,
    QSymError,
    UnknownBasisError,
    UnknownSuiteError,
)
from .load_basis import load_basis
from .load_suite import load_suite
from .qsym import BasisTag, QSymElement, TensorElement, antipode, comul, convert, mul, specialize, to_M
from .schemas import ElementModel, QSymConfig, SuiteResult, TensorModel
from .syntax import parse_element

__version__ = "0.1.0"

__all__ = [
    "BaseBasis",
    "BaseSuite",
    "BasisMismatchError",
    "BasisTag",
    "CoefficientError",
    "CompositionError",
    "DegenerateIntervalError",
    "ElementModel",
    "NotQuasisymmetricError",
    "ParseError",
    "PoleError",
    "QSymConfig",
    "QSymElement",
    "QSymError",
    "SuiteResult",
    "TensorElement",
    "TensorModel",
    "UnknownBasisError",
    "UnknownSuiteError",
    "antipode",
    "comul",
    "convert",
    "load_basis",
    "load_suite",
    "mul",
    "parse_element",
    "specialize",
    "to_M",
]
