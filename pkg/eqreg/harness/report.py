import csv
import datetime
import io
import json
import logging
import math
import pathlib
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy

from ..__about__ import __version__
from .._exceptions import EqregError, UsageError
from ..bifunction import ValueTable
from ..envelope import SampledFunction
from ..solvers import SolutionSet

logger = logging.getLogger(__name__)


@dataclass
class CheckResult:
    """Outcome of one fixture expectation or one randomized suite."""

    name: str
    passed: bool
    instances: int = 1
    premise_hits: Optional[int] = None
    seeds: List[int] = field(default_factory=list)
    failures: List[dict] = field(default_factory=list)
    expected: object = None
    observed: object = None
    provenance: str = ""
    wall_time: Optional[float] = None

    @property
    def status(self):
        return "pass" if self.passed else "fail"

    def as_dict(self, timing=False):
        out = {
            "name": self.name,
            "status": self.status,
            "instances": self.instances,
            "premise_hits": self.premise_hits,
            "seeds": self.seeds,
            "failures": self.failures,
            "expected": self.expected,
            "observed": self.observed,
            "provenance": self.provenance,
        }
        if timing:
            out["wall_time"] = self.wall_time
        return out


class SuiteReport:
    """Everything a command produced: checks, solution sets, verdicts and tables.

    Parameters
    ----------
    command : str
    inputs : dict, optional
        Flags and arguments the command ran with.
    seeds : list of int, optional
    """

    def __init__(self, command, inputs=None, seeds=None):
        self.command = command
        self.inputs = dict(inputs or {})
        self.seeds = list(seeds or [])
        self.checks: List[CheckResult] = []
        self.solution_sets: Dict[str, SolutionSet] = {}
        self.verdicts: Dict[str, object] = {}
        self.tables: Dict[str, object] = {}
        self.wall_time = None

    def __repr__(self):
        return (
            f"<eqreg SuiteReport object, {self.command!r}, "
            f"{sum(c.passed for c in self.checks)}/{len(self.checks)} checks pass>"
        )

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if not c.passed]

    def add(self, check):
        self.checks.append(check)
        return check

    def expect(self, name, expected, observed, provenance="", tol=None):
        """Record an expectation; index sets compare exactly, values within tol."""
        if tol is None:
            passed = _plain(expected) == _plain(observed)
        else:
            passed = bool(
                numpy.allclose(
                    numpy.asarray(expected, dtype=float),
                    numpy.asarray(observed, dtype=float),
                    rtol=0.0,
                    atol=tol,
                )
            )
        return self.add(
            CheckResult(
                name,
                passed,
                expected=_plain(expected),
                observed=_plain(observed),
                provenance=provenance,
            )
        )

    def as_dict(self, timing=False):
        results = {
            "checks": [c.as_dict(timing) for c in self.checks],
            "solution_sets": {k: v.as_dict() for k, v in self.solution_sets.items()},
            "verdicts": {k: _as_dict(v) for k, v in self.verdicts.items()},
        }
        if self.tables:
            results["tables"] = {k: _table_dict(v) for k, v in self.tables.items()}
        out = {
            "tool_version": __version__,
            "command": self.command,
            "inputs": _plain(self.inputs),
            "results": results,
            "seeds": self.seeds,
            "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        }
        if timing:
            out["wall_time"] = self.wall_time
        return _plain(out)


def _as_dict(v):
    return v.as_dict() if hasattr(v, "as_dict") else v


def _table_dict(t):
    if isinstance(t, ValueTable):
        return {"x": t.grid.points.tolist(), "values": t.values.tolist()}
    if isinstance(t, SampledFunction):
        return {"x": t.grid.points.tolist(), "values": t.values.tolist()}
    return _plain(t)


def _plain(obj):
    """Convert to JSON-safe builtins; non-finite floats become strings."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, numpy.ndarray):
        return _plain(obj.tolist())
    if isinstance(obj, (bool, numpy.bool_)):
        return bool(obj)
    if isinstance(obj, (int, numpy.integer)):
        return int(obj)
    if isinstance(obj, (float, numpy.floating)):
        obj = float(obj)
        if math.isfinite(obj):
            return obj
        return "nan" if math.isnan(obj) else ("inf" if obj > 0 else "-inf")
    if isinstance(obj, SolutionSet):
        return obj.as_dict()
    return obj


def to_json(report, timing=False):
    if isinstance(report, SuiteReport):
        data = report.as_dict(timing)
    else:
        wrapper = SuiteReport(type(report).__name__)
        _attach(wrapper, "result", report)
        data = wrapper.as_dict(timing)
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _attach(report, name, obj):
    if isinstance(obj, SolutionSet):
        report.solution_sets[name] = obj
    elif isinstance(obj, (ValueTable, SampledFunction)):
        report.tables[name] = obj
    else:
        report.verdicts[name] = obj


def to_csv(obj):
    """Long-form CSV of a sampled function, table or solution set."""
    if isinstance(obj, SuiteReport):
        tabular = {**obj.tables, **obj.solution_sets}
        if len(tabular) != 1:
            raise UsageError(
                f"csv output needs exactly one table or solution set, report has "
                f"{sorted(tabular)}"
            )
        (obj,) = tabular.values()
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if isinstance(obj, SampledFunction):
        writer.writerow(["y", "value"])
        for y, v in zip(obj.grid.points, obj.values):
            writer.writerow([repr(float(y)), repr(float(v))])
    elif isinstance(obj, ValueTable):
        writer.writerow(["x", "y", "value"])
        x = obj.grid.points
        for i in range(len(x)):
            for j in range(len(x)):
                value = float(obj.values[i, j])
                writer.writerow([repr(float(x[i])), repr(float(x[j])), repr(value)])
    elif isinstance(obj, SolutionSet):
        writer.writerow(["x"])
        for p in obj.points:
            writer.writerow([repr(float(p))])
    else:
        raise UsageError(f"cannot write {type(obj).__name__} as csv")
    return buf.getvalue()


def emit_report(report, fmt="json", out=None, timing=False):
    """Serialize a report or a computation result as JSON or CSV.

    Writes to ``out`` when given and returns the text.
    """
    if fmt == "json":
        text = to_json(report, timing)
    elif fmt == "csv":
        text = to_csv(report)
    else:
        raise UsageError(f"unknown format {fmt!r}; choose json or csv")
    if out is not None:
        path = pathlib.Path(out)
        try:
            path.write_text(text, encoding="utf-8")
        except OSError as e:
            raise EqregError(f"cannot write report to {path}: {e.strerror}") from e
        logger.info("wrote %s", path)
    return text
