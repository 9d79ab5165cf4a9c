import pytest

from qsymflow import BaseSuite, QSymConfig, load_suite
from qsymflow.BaseSuite import basis_tags, outcome, product_pairs
from qsymflow.exceptions import UnknownSuiteError
from qsymflow.load_suite import suite_names

SUITE_NAMES = [
    "hopf-axioms",
    "specializations",
    "oracle-products",
    "scf-morphism",
    "kappa-rules",
    "psi-phi",
    "g-representative-independence",
    "positivity",
    "transitions",
]

SMALL = QSymConfig({"max_grade": 3, "nus": [2, 3], "cases": 3, "workers": 2})


def test_registry():
    assert suite_names() == sorted(SUITE_NAMES)
    with pytest.raises(UnknownSuiteError):
        load_suite("no-such-suite")


@pytest.mark.parametrize("name", SUITE_NAMES)
def test_suite_passes_at_small_grades(name):
    result = load_suite(name).run_suite(SMALL)
    assert result.total > 0
    assert result.passed, [case.model_dump() for case in result.failures()]


def test_helpers():
    assert product_pairs(2) == [((1,), (1,))]
    assert [str(tag) for tag in basis_tags([2, 5], ["M", "K"])] == ["M", "K(nu=2)", "K(nu=5)"]
    assert outcome(True, x=1) == {"passed": True, "log": {"x": "1"}, "metrics": {}}


class Exploding(BaseSuite):
    name = "exploding"

    def get_cases(self, config):
        yield "fine", 1
        yield "boom", 0
        yield "malformed", -1

    def check_case(self, payload, config):
        if payload < 0:
            return {"passed": "not a bool", "log": {}, "metrics": {}}
        return outcome(1 / payload == 1)


def test_case_errors_become_failures():
    result = Exploding().run_suite(QSymConfig({"workers": 1}))
    assert [case.case_id for case in result.cases] == ["fine", "boom", "malformed"]
    assert result.failed == 2 and not result.passed
    assert "ZeroDivisionError" in result.cases[1].log["error"]
    assert result.cases[2].log["error"] == "Case result is invalid"
