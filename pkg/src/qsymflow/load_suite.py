from .BaseSuite import BaseSuite
from .exceptions import UnknownSuiteError
from .suites import SUITES


def suite_names():
    return sorted(SUITES)


def load_suite(name: str) -> BaseSuite:
    """
    Load a verification suite by name.
    For example:
    ```
    from qsymflow import QSymConfig, load_suite
    result = load_suite("positivity").run_suite(QSymConfig({"max_grade": 4}))
    ```
    """
    if name not in SUITES:
        raise UnknownSuiteError(f"unknown suite {name!r}, expected one of {suite_names()}")
    return SUITES[name]()
