from .coercivity import CoercivityReport, DirectionVerdict, check_coercivity
from .pipeline import LevelRecord, PipelineResult, existence_pipeline
from .problems import (
    KyFanPoint,
    extend_from_truncation,
    ky_fan_point,
    solve_cfp,
    solve_ep,
)
from .solution_set import SolutionSet

__all__ = [
    "CoercivityReport",
    "DirectionVerdict",
    "KyFanPoint",
    "LevelRecord",
    "PipelineResult",
    "SolutionSet",
    "check_coercivity",
    "existence_pipeline",
    "extend_from_truncation",
    "ky_fan_point",
    "solve_cfp",
    "solve_ep",
]
