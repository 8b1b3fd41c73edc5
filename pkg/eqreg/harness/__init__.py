from .fixtures import FIXTURES, ExampleFixture, fixture_names, run_example
from .generators import CLASSES, random_bifunction, random_row
from .report import CheckResult, SuiteReport, emit_report, to_csv, to_json
from .suites import SUITES, run_suite, suite_names

__all__ = [
    "CLASSES",
    "CheckResult",
    "ExampleFixture",
    "FIXTURES",
    "SUITES",
    "SuiteReport",
    "emit_report",
    "fixture_names",
    "random_bifunction",
    "random_row",
    "run_example",
    "run_suite",
    "suite_names",
    "to_csv",
    "to_json",
]
