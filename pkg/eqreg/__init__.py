from . import bifunction, domain, envelope, harness, properties, solvers
from .__about__ import __version__
from ._exceptions import (
    ConfigurationError,
    DomainError,
    EqregError,
    EvaluationError,
    GenerationError,
    SpecSyntaxError,
    UsageError,
)
from .bifunction import (
    BifunctionSpec,
    ValueTable,
    builtin_spec,
    classify_families,
    load_spec,
    parse_spec,
    regularize,
    sample_matrix,
)
from .domain import Grid, TruncationSchedule, make_grid, truncation_grid
from .envelope import EnvelopeKind, SampledFunction, shape_check
from .harness import emit_report, random_bifunction, run_example, run_suite
from .helpers import Tolerances
from .properties import (
    check_monotonicity,
    check_properly_quasimonotone,
    check_segment_condition,
    check_upper_sign,
)
from .solvers import (
    check_coercivity,
    existence_pipeline,
    ky_fan_point,
    solve_cfp,
    solve_ep,
)

__all__ = [
    "bifunction",
    "domain",
    "envelope",
    "harness",
    "properties",
    "solvers",
    "BifunctionSpec",
    "EnvelopeKind",
    "Grid",
    "SampledFunction",
    "Tolerances",
    "TruncationSchedule",
    "ValueTable",
    "builtin_spec",
    "check_coercivity",
    "check_monotonicity",
    "check_properly_quasimonotone",
    "check_segment_condition",
    "check_upper_sign",
    "classify_families",
    "emit_report",
    "existence_pipeline",
    "ky_fan_point",
    "load_spec",
    "make_grid",
    "parse_spec",
    "random_bifunction",
    "regularize",
    "run_example",
    "run_suite",
    "sample_matrix",
    "shape_check",
    "solve_cfp",
    "solve_ep",
    "truncation_grid",
    "ConfigurationError",
    "DomainError",
    "EqregError",
    "EvaluationError",
    "GenerationError",
    "SpecSyntaxError",
    "UsageError",
    "__version__",
]
