import logging
import sys
from abc import ABC, abstractmethod
from typing import Dict, Optional, Tuple, final

from qsymflow.coeff import RatFunc, accumulate
from qsymflow.combinat import Composition
from qsymflow.exceptions import BasisMismatchError
from qsymflow.qsym import BasisTag, QSymElement, TensorElement

_LEVEL_COLORS = {
    "DEBUG": "\033[36m",
    "INFO": "\033[32m",
    "WARNING": "\033[33m",
    "ERROR": "\033[31m",
    "CRITICAL": "\033[1;31m",
}
_RESET = "\033[0m"
_LEVEL = logging.INFO
_CONFIGURED = set()


class ColoredFormatter(logging.Formatter):
    def __init__(self, colored: bool = True):
        super().__init__(
            fmt='%(colored_level)s: -- %(name)s -- %(message)s',
            datefmt='%H:%M:%S'
        )
        self.colored = colored

    def format(self, record):
        record.msg = " ".join(str(record.msg).strip().splitlines())
        level = record.levelname
        record.colored_level = f"{_LEVEL_COLORS.get(level, '')}{level}{_RESET}" if self.colored else level
        return super().format(record).strip()


def setup_logger(name: str, log_file: Optional[str] = None) -> logging.Logger:
    logger = logging.getLogger(name)

    if not logger.handlers:
        logger.setLevel(_LEVEL)
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(ColoredFormatter(colored=sys.stderr.isatty()))
        logger.addHandler(console_handler)

        if log_file:
            file_handler = logging.FileHandler(log_file)
            file_handler.setFormatter(ColoredFormatter(colored=False))
            logger.addHandler(file_handler)

    _CONFIGURED.add(name)
    return logger


def set_log_level(level: int) -> None:
    """Apply a level to the package logger and every logger built by setup_logger."""
    global _LEVEL
    _LEVEL = level
    for name in _CONFIGURED | {"qsymflow"}:
        logging.getLogger(name).setLevel(level)


Terms = Dict[Composition, RatFunc]
TensorTerms = Dict[Tuple[Composition, Composition], RatFunc]


class BaseBasis(ABC):
    """
    Base class for every basis of QSym.
    A basis converts through a route basis (`via`, either "M" or "L") and supplies
    four single-term rules:
    ```
    - expand_term: one basis element in the route basis
    - collect_term: one route-basis element in this basis
    - product_term: the product of two basis elements
    - coproduct_term: the coproduct of one basis element
    ```
    Linear extension, the unit shortcut and basis conversion are handled here.
    """
    name: str = ""
    via: str = "M"

    def __init__(self, nu: Optional[int] = None):
        self.nu = nu
        self.tag = BasisTag(name=self.name, nu=nu)
        self.logger = setup_logger(self.__class__.__name__)
        self._cache: Dict[tuple, object] = {}

    def element(self, alpha, coeff=1) -> QSymElement:
        return QSymElement.basis_element(self.tag, alpha, coeff)

    @final
    def _memo(self, kind: str, *args):
        key = (kind, *args)
        if key not in self._cache:
            rule = getattr(self, f"{kind}_term")
            self._cache[key] = rule(*args)
        return self._cache[key]

    @final
    def _check(self, x: QSymElement) -> None:
        if x.basis != self.tag:
            raise BasisMismatchError(f"{self.tag} rule applied to an element of {x.basis}")

    @final
    def to_via(self, x: QSymElement) -> QSymElement:
        self._check(x)
        out: Terms = {}
        for alpha, c in x.terms.items():
            for beta, d in self._memo("expand", alpha).items():
                accumulate(out, beta, c * d)
        return QSymElement(BasisTag(name=self.via), out)

    @final
    def from_via(self, x: QSymElement) -> QSymElement:
        if x.basis != BasisTag(name=self.via):
            raise BasisMismatchError(f"{self.tag} collects from {self.via}, got {x.basis}")
        out: Terms = {}
        for alpha, c in x.terms.items():
            for beta, d in self._memo("collect", alpha).items():
                accumulate(out, beta, c * d)
        return QSymElement(self.tag, out)

    @final
    def to_M(self, x: QSymElement) -> QSymElement:
        routed = self.to_via(x)
        if self.via == "M":
            return routed
        from qsymflow.load_basis import load_basis

        return load_basis(routed.basis).to_M(routed)

    @final
    def from_M(self, x: QSymElement) -> QSymElement:
        if self.via != "M":
            from qsymflow.load_basis import load_basis

            x = load_basis(BasisTag(name=self.via)).from_M(x)
        return self.from_via(x)

    @final
    def product(self, x: QSymElement, y: QSymElement) -> QSymElement:
        self._check(x)
        self._check(y)
        out: Terms = {}
        for alpha, a in x.terms.items():
            for beta, b in y.terms.items():
                if not alpha:
                    accumulate(out, beta, a * b)
                elif not beta:
                    accumulate(out, alpha, a * b)
                else:
                    for gamma, c in self._memo("product", alpha, beta).items():
                        accumulate(out, gamma, a * b * c)
        return QSymElement(self.tag, out)

    @final
    def coproduct(self, x: QSymElement) -> TensorElement:
        self._check(x)
        out: TensorTerms = {}
        for gamma, c in x.terms.items():
            if not gamma:
                accumulate(out, ((), ()), c)
                continue
            for pair, d in self._memo("coproduct", gamma).items():
                accumulate(out, pair, c * d)
        return TensorElement(self.tag, self.tag, out)

    @abstractmethod
    def expand_term(self, alpha: Composition) -> Terms:
        """
        The basis element indexed by alpha written in the route basis.
        """
        pass

    @abstractmethod
    def collect_term(self, alpha: Composition) -> Terms:
        """
        The route-basis element indexed by alpha written in this basis.
        """
        pass

    @abstractmethod
    def product_term(self, alpha: Composition, beta: Composition) -> Terms:
        """
        Structure constants for two nonempty indices.
        """
        pass

    @abstractmethod
    def coproduct_term(self, gamma: Composition) -> TensorTerms:
        """
        Coproduct of one basis element with a nonempty index.
        """
        pass