from typing import Any, Dict, List, Union

from pydantic import BaseModel, ConfigDict, computed_field

MetricValue = Union[bool, int, float, str]


class CaseResult(BaseModel):
    case_id: str
    passed: bool
    log: Dict[str, Any]
    metrics: Dict[str, MetricValue]

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "case_id": "D:(2, 1)*(2)",
                "passed": True,
                "log": {"detail": "rule and oracle agree"},
                "metrics": {"terms": 8},
            }
        }
    )


class SuiteResult(BaseModel):
    suite: str
    cases: List[CaseResult]

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "suite": "oracle-products",
                "cases": [],
                "total": 0,
                "failed": 0,
                "passed": True,
            }
        }
    )

    @computed_field
    @property
    def total(self) -> int:
        return len(self.cases)

    @computed_field
    @property
    def failed(self) -> int:
        return sum(1 for case in self.cases if not case.passed)

    @computed_field
    @property
    def passed(self) -> bool:
        return self.failed == 0

    def failures(self) -> List[CaseResult]:
        return [case for case in self.cases if not case.passed]
