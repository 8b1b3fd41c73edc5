import configparser
import logging
import math
import pathlib

import numpy

from .._exceptions import ConfigurationError, DomainError, EvaluationError, UsageError
from .dsl import parse_program

logger = logging.getLogger(__name__)


class BifunctionSpec:
    """Bifunction f: K x K -> R given by a piecewise expression.

    Parameters
    ----------
    expression : str
        DSL text, see :mod:`eqreg.bifunction.dsl`.
    domain : tuple of float
        Bounds of the interval K; either may be infinite.
    name : str, optional
    provenance : str, optional
        Where the bifunction comes from, carried into reports.
    """

    def __init__(
        self, expression, domain=(-math.inf, math.inf), name=None, provenance=""
    ):
        lower, upper = (float(d) for d in domain)
        if math.isnan(lower) or math.isnan(upper) or lower > upper:
            raise ConfigurationError(f"invalid domain [{lower}, {upper}]")
        self.expression = expression
        self.program = parse_program(expression)
        self.domain = (lower, upper)
        self.name = name or expression
        self.provenance = provenance

    def __repr__(self):
        return (
            f"<eqreg BifunctionSpec object, {self.name!r}, "
            f"K=[{self.domain[0]}, {self.domain[1]}]>"
        )

    def with_domain(self, domain):
        return BifunctionSpec(self.expression, domain, self.name, self.provenance)

    @property
    def is_bounded(self):
        return all(math.isfinite(d) for d in self.domain)

    def _check_domain(self, v, what):
        lower, upper = self.domain
        eps = 1.0e-12 * max(1.0, abs(lower) if math.isfinite(lower) else 1.0)
        bad = numpy.flatnonzero(((v < lower - eps) | (v > upper + eps)).ravel())
        if len(bad) > 0:
            raise DomainError(
                f"{what} = {v.ravel()[bad[0]]} outside K = [{lower}, {upper}]"
            )

    def values(self, x, y):
        """Vectorized evaluation; ``x`` and ``y`` broadcast against each other."""
        x = numpy.asarray(x, dtype=float)
        y = numpy.asarray(y, dtype=float)
        self._check_domain(x, "x")
        self._check_domain(y, "y")
        out = self.program.evaluate(x, y)
        bad = numpy.argwhere(~numpy.isfinite(out))
        if len(bad) > 0:
            loc = tuple(int(i) for i in bad[0])
            xb, yb = numpy.broadcast_arrays(x, y)
            raise EvaluationError(
                f"{self.name} evaluates to {out[loc]}",
                x=float(xb[loc]),
                y=float(yb[loc]),
                location=loc if len(loc) == 2 else None,
            )
        return out

    def eval(self, x, y):
        return float(self.values(x, y))

    def row(self, x):
        """The slice y -> f(x, y) as a vectorized callable."""
        return lambda y: self.values(x, y)


def parse_spec(text, domain=(-math.inf, math.inf), name=None):
    return BifunctionSpec(text, domain, name)


def evaluate(spec, x, y):
    return spec.eval(x, y)


def _parse_bound(token):
    token = token.strip().lower()
    if token in ("inf", "+inf"):
        return math.inf
    if token == "-inf":
        return -math.inf
    try:
        return float(token)
    except ValueError:
        raise ConfigurationError(f"invalid domain bound {token!r}") from None


def loads_spec(text, source="<string>"):
    """Read a spec from INI text with a ``[bifunction]`` section."""
    parser = configparser.ConfigParser(interpolation=None)
    try:
        parser.read_string(text, source=source)
    except configparser.Error as e:
        raise ConfigurationError(f"{source}: {e}") from None
    if not parser.has_section("bifunction"):
        raise ConfigurationError(f"{source}: missing [bifunction] section")
    section = parser["bifunction"]
    for key in ("expression", "domain"):
        if key not in section:
            raise ConfigurationError(f"{source}: missing key {key!r}")
    bounds = section["domain"].split()
    if len(bounds) != 2:
        raise ConfigurationError(f"{source}: domain needs two bounds, got {bounds}")
    domain = tuple(_parse_bound(b) for b in bounds)
    return BifunctionSpec(
        section["expression"],
        domain,
        name=section.get("name"),
        provenance=section.get("provenance", source),
    )


def load_spec(path):
    path = pathlib.Path(path)
    logger.debug("reading spec file %s", path)
    return loads_spec(path.read_text(encoding="utf-8"), source=str(path))


BUILTINS = {
    "linear-ascent": ("y - x", (0.0, math.inf), "f(x,y) = y - x"),
    "linear-descent": (
        "x - y",
        (0.0, math.inf),
        "f(x,y) = x - y, empty EP on [0, inf)",
    ),
    "spike": (
        "if x == 1 and y == 0: 1; if x == 0 and y == 1: 1; else: 0",
        (0.0, 1.0),
        "remark after the monotonicity preservation theorem",
    ),
    "cfp-endpoints": (
        "if y < 1: y; else: 0",
        (0.0, 1.0),
        "convex feasibility example with CFP = {0, 1}",
    ),
    "sq-example": (
        "if y == 1: 0; else: y - 2",
        (0.0, 2.0),
        "semistrictly quasiconvex regularization example",
    ),
    "example-1-f1": ("y^3 - x", (-math.inf, math.inf), "f_1 in Q(K) minus C(K)"),
    "example-1-f2": (
        "if y == 0: 0; else: -ln(abs(y))",
        (-math.inf, math.inf),
        "f_2 in S(K) minus closed Q(K)",
    ),
    "one-over-y": ("if y == 0: 0; else: 1 / y", (0.0, math.inf), "f_q = 0 example"),
    "r1-quasiconvex": (
        "if y < x: 0; if x < 1 or x > 1: x - y; if y > 1: y - 1; else: 1",
        (0.0, 2.0),
        "compact existence via the quasiconvex regularization",
    ),
}


def builtin_specs():
    return sorted(BUILTINS)


def builtin_spec(name):
    if name not in BUILTINS:
        raise UsageError(f"unknown builtin {name!r}; choose from {builtin_specs()}")
    expression, domain, provenance = BUILTINS[name]
    return BifunctionSpec(expression, domain, name=name, provenance=provenance)


def resolve_spec(name_or_path):
    """A builtin name, or the path of a spec file."""
    if name_or_path in BUILTINS:
        return builtin_spec(name_or_path)
    path = pathlib.Path(name_or_path)
    if not path.is_file():
        raise UsageError(
            f"{name_or_path!r} is neither a spec file nor a builtin {builtin_specs()}"
        )
    return load_spec(path)
