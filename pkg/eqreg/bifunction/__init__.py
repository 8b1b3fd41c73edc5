from .dsl import parse_program, tokenize
from .families import FAMILIES, FamilyReport, FamilyVerdict, classify_families
from .spec import (
    BUILTINS,
    BifunctionSpec,
    builtin_spec,
    builtin_specs,
    evaluate,
    load_spec,
    loads_spec,
    parse_spec,
    resolve_spec,
)
from .table import ValueTable, regularize, sample_matrix

__all__ = [
    "BUILTINS",
    "BifunctionSpec",
    "FAMILIES",
    "FamilyReport",
    "FamilyVerdict",
    "ValueTable",
    "builtin_spec",
    "builtin_specs",
    "classify_families",
    "evaluate",
    "load_spec",
    "loads_spec",
    "parse_program",
    "parse_spec",
    "regularize",
    "resolve_spec",
    "sample_matrix",
    "tokenize",
]
