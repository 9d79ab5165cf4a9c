from .Elements import (
    ClassFunctionModel,
    DiffEntry,
    ElementModel,
    ProductCheck,
    SubsetModel,
    TensorModel,
    TermModel,
)
from .QSymConfig import QSymConfig
from .SuiteResults import CaseResult, SuiteResult
from .Tables import TableModel

__all__ = [
    "CaseResult",
    "ClassFunctionModel",
    "DiffEntry",
    "ElementModel",
    "ProductCheck",
    "QSymConfig",
    "SubsetModel",
    "SuiteResult",
    "TableModel",
    "TensorModel",
    "TermModel",
]
