from .diagonal import DiagonalCriterion, check_semistrict_diagonal
from .monotonicity import check_monotonicity, check_properly_quasimonotone
from .segment import check_segment_condition
from .upper_sign import check_upper_sign
from .verdict import Verdict, Witness, reverify

__all__ = [
    "DiagonalCriterion",
    "Verdict",
    "Witness",
    "check_monotonicity",
    "check_properly_quasimonotone",
    "check_segment_condition",
    "check_semistrict_diagonal",
    "check_upper_sign",
    "reverify",
]
