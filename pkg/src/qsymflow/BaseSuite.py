from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, Iterable, List, Tuple, final

from pydantic import ValidationError

from qsymflow.BaseBasis import setup_logger
from qsymflow.combinat import Composition, all_compositions
from qsymflow.qsym import BASIS_NAMES, BasisTag
from qsymflow.schemas import CaseResult, QSymConfig, SuiteResult

Case = Tuple[str, Any]


def product_pairs(max_total: int, min_total: int = 2) -> List[Tuple[Composition, Composition]]:
    """Pairs of nonempty compositions with min_total <= |α| + |β| <= max_total."""
    nonempty = all_compositions(max_total, min_size=1)
    return [
        (a, b)
        for a in nonempty
        for b in nonempty
        if min_total <= sum(a) + sum(b) <= max_total
    ]


def basis_tags(nus: Iterable[int], names: Iterable[str] = BASIS_NAMES) -> List[BasisTag]:
    """One tag per basis name, K expanded over the given ν."""
    tags = []
    for name in names:
        if name == "K":
            tags.extend(BasisTag(name="K", nu=nu) for nu in nus)
        else:
            tags.append(BasisTag(name=name))
    return tags


def outcome(ok: bool, **log) -> Dict[str, Any]:
    return {"passed": bool(ok), "log": {k: str(v) for k, v in log.items()}, "metrics": {}}


class BaseSuite(ABC):
    """
    Base class for all verification suites.
    A suite enumerates independent cases and checks each one:
    ```
    - get_cases
    - check_case
    ```
    Cases fan out on a thread pool; results come back in enumeration order.
    """
    name: str = ""
    description: str = ""

    def __init__(self):
        self.logger = setup_logger(self.__class__.__name__)

    @final
    def run_suite(self, config: QSymConfig) -> SuiteResult:
        cases = list(self.get_cases(config))
        self.logger.info(f"{self.name}: {len(cases)} cases on {config.workers} workers")
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(lambda case: self._run_case(case, config), cases))
        result = SuiteResult(suite=self.name, cases=results)
        if result.passed:
            self.logger.info(f"{self.name}: all {result.total} cases passed")
        else:
            self.logger.error(f"{self.name}: {result.failed} of {result.total} cases failed")
        return result

    @final
    def _run_case(self, case: Case, config: QSymConfig) -> CaseResult:
        case_id, payload = case
        try:
            result = self.check_case(payload, config)
            if isinstance(result, CaseResult):
                return result
            return CaseResult(case_id=case_id, **result)
        except ValidationError as e:
            return CaseResult(case_id=case_id, passed=False, log={"error": "Case result is invalid", "result": str(e)}, metrics={})
        except Exception as e:
            self.logger.exception(f"Error in case {case_id}:")
            return CaseResult(case_id=case_id, passed=False, log={"error": f"{type(e).__name__}: {e}"}, metrics={})

    @abstractmethod
    def get_cases(self, config: QSymConfig) -> Iterable[Case]:
        """
        Enumerate (case_id, payload) pairs. Enumeration must be deterministic for a given config.
        """
        pass

    @abstractmethod
    def check_case(self, payload: Any, config: QSymConfig) -> Dict[str, Any]:
        """
        Check one case and return {"passed": bool, "log": {...}, "metrics": {...}}.
        """
        pass
