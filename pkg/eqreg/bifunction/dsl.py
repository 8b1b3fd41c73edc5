"""Piecewise expression language for bifunctions.

::

    spec    := branch (";" branch)* ";"?
    branch  := "if" cond ":" expr | "else" ":" expr | expr
    cond    := comparison (("and" | "or") comparison)*
    comparison := expr ("<" | "<=" | "==" | ">=" | ">") expr
    expr    := arithmetic over x, y and numeric literals with + - * / ^,
               unary -, abs(), ln(), min(,), max(,)

``and`` binds tighter than ``or``; ``^`` is right associative and binds tighter
than unary minus. Branches are tried in order and the first matching one wins.
Expressions evaluate on numpy arrays, so a whole table is sampled in one call.
"""
import re
from typing import NamedTuple

import numpy

from .._exceptions import SpecSyntaxError

KEYWORDS = {"if", "else", "and", "or"}
VARIABLES = {"x", "y"}
FUNCTIONS = {
    "abs": (1, numpy.abs),
    "ln": (1, numpy.log),
    "min": (2, numpy.minimum),
    "max": (2, numpy.maximum),
}
COMPARISONS = {
    "<": numpy.less,
    "<=": numpy.less_equal,
    "==": numpy.equal,
    ">=": numpy.greater_equal,
    ">": numpy.greater,
}

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op><=|>=|==|[-+*/^(),;:<>])
""",
    re.VERBOSE,
)


class Token(NamedTuple):
    type: str
    value: str
    where: int


def tokenize(text):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise SpecSyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if kind == "name" and m.group() in KEYWORDS:
            kind = "keyword"
        if kind != "ws":
            tokens.append(Token(kind, m.group(), pos))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class Number:
    def __init__(self, value):
        self.value = value

    def evaluate(self, x, y):
        return numpy.full(numpy.broadcast(x, y).shape, self.value)

    def __repr__(self):
        return repr(self.value)


class Variable:
    def __init__(self, name):
        self.name = name

    def evaluate(self, x, y):
        v = x if self.name == "x" else y
        return numpy.broadcast_to(v, numpy.broadcast(x, y).shape).astype(float)

    def __repr__(self):
        return self.name


class BinaryOp:
    _ops = {
        "+": numpy.add,
        "-": numpy.subtract,
        "*": numpy.multiply,
        "/": numpy.divide,
        "^": numpy.power,
    }

    def __init__(self, op, left, right):
        self.op = op
        self.left = left
        self.right = right

    def evaluate(self, x, y):
        return self._ops[self.op](self.left.evaluate(x, y), self.right.evaluate(x, y))

    def __repr__(self):
        return f"({self.left!r} {self.op} {self.right!r})"


class Negate:
    def __init__(self, operand):
        self.operand = operand

    def evaluate(self, x, y):
        return -self.operand.evaluate(x, y)

    def __repr__(self):
        return f"-{self.operand!r}"


class Call:
    def __init__(self, name, args):
        self.name = name
        self.args = args

    def evaluate(self, x, y):
        _, fun = FUNCTIONS[self.name]
        return fun(*[a.evaluate(x, y) for a in self.args])

    def __repr__(self):
        return f"{self.name}({', '.join(repr(a) for a in self.args)})"


class Comparison:
    def __init__(self, op, left, right):
        self.op = op
        self.left = left
        self.right = right

    def evaluate(self, x, y):
        return COMPARISONS[self.op](self.left.evaluate(x, y), self.right.evaluate(x, y))

    def __repr__(self):
        return f"{self.left!r} {self.op} {self.right!r}"


class BoolOp:
    def __init__(self, op, operands):
        self.op = op
        self.operands = operands

    def evaluate(self, x, y):
        fun = numpy.logical_and if self.op == "and" else numpy.logical_or
        out = self.operands[0].evaluate(x, y)
        for c in self.operands[1:]:
            out = fun(out, c.evaluate(x, y))
        return out

    def __repr__(self):
        return f" {self.op} ".join(repr(c) for c in self.operands)


class Branch:
    def __init__(self, condition, expression):
        self.condition = condition
        self.expression = expression

    def __repr__(self):
        if self.condition is None:
            return f"else: {self.expression!r}"
        return f"if {self.condition!r}: {self.expression!r}"


class Program:
    """Ordered branches; the last one is unconditional."""

    def __init__(self, branches):
        assert branches and branches[-1].condition is None
        self.branches = branches

    def evaluate(self, x, y):
        x = numpy.asarray(x, dtype=float)
        y = numpy.asarray(y, dtype=float)
        shape = numpy.broadcast(x, y).shape
        out = numpy.full(shape, numpy.nan)
        open_ = numpy.ones(shape, dtype=bool)
        with numpy.errstate(all="ignore"):
            for branch in self.branches:
                if branch.condition is None:
                    take = open_
                else:
                    take = open_ & branch.condition.evaluate(x, y)
                if numpy.any(take):
                    out = numpy.where(take, branch.expression.evaluate(x, y), out)
                open_ = open_ & ~take
        return out

    def __repr__(self):
        return "; ".join(repr(b) for b in self.branches)


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def current(self):
        return self.tokens[self.pos]

    def error(self, message, token=None):
        token = token or self.current
        return SpecSyntaxError(message, token.where, self.text)

    def advance(self):
        token = self.current
        self.pos += 1
        return token

    def accept(self, value):
        if self.current.value == value and self.current.type in ("op", "keyword"):
            return self.advance()
        return None

    def expect(self, value):
        token = self.accept(value)
        if token is None:
            found = self.current.value or "end of input"
            raise self.error(f"expected {value!r}, found {found!r}")
        return token

    def parse(self):
        branches = []
        while True:
            start = self.current
            branch = self.branch()
            if branches and branches[-1].condition is None:
                raise self.error("unreachable branch after an unconditional one", start)
            branches.append(branch)
            if self.accept(";") is None or self.current.type == "end":
                break
        if self.current.type != "end":
            raise self.error(f"unexpected {self.current.value!r}")
        if branches[-1].condition is not None:
            raise self.error(
                "the last branch must be unconditional (else or bare expression)"
            )
        return Program(branches)

    def branch(self):
        if self.accept("if"):
            cond = self.condition()
            self.expect(":")
            return Branch(cond, self.expression())
        if self.accept("else"):
            self.expect(":")
            return Branch(None, self.expression())
        return Branch(None, self.expression())

    def condition(self):
        operands = [self.conjunction()]
        while self.accept("or"):
            operands.append(self.conjunction())
        return operands[0] if len(operands) == 1 else BoolOp("or", operands)

    def conjunction(self):
        operands = [self.comparison()]
        while self.accept("and"):
            operands.append(self.comparison())
        return operands[0] if len(operands) == 1 else BoolOp("and", operands)

    def comparison(self):
        left = self.expression()
        token = self.current
        if token.type != "op" or token.value not in COMPARISONS:
            raise self.error("expected a comparison operator")
        self.advance()
        return Comparison(token.value, left, self.expression())

    def expression(self):
        node = self.term()
        while self.current.value in ("+", "-") and self.current.type == "op":
            op = self.advance().value
            node = BinaryOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.current.value in ("*", "/") and self.current.type == "op":
            op = self.advance().value
            node = BinaryOp(op, node, self.unary())
        return node

    def unary(self):
        if self.accept("-"):
            return Negate(self.unary())
        return self.power()

    def power(self):
        base = self.atom()
        if self.accept("^"):
            return BinaryOp("^", base, self.unary())
        return base

    def atom(self):
        token = self.current
        if token.type == "number":
            self.advance()
            return Number(float(token.value))
        if token.type == "name":
            self.advance()
            if token.value in VARIABLES:
                return Variable(token.value)
            if token.value in FUNCTIONS:
                arity, _ = FUNCTIONS[token.value]
                self.expect("(")
                args = [self.expression()]
                while self.accept(","):
                    args.append(self.expression())
                self.expect(")")
                if len(args) != arity:
                    raise self.error(
                        f"{token.value}() takes {arity} argument(s), got {len(args)}",
                        token,
                    )
                return Call(token.value, args)
            raise self.error(f"unknown name {token.value!r}", token)
        if self.accept("("):
            node = self.expression()
            self.expect(")")
            return node
        found = token.value or "end of input"
        raise self.error(f"unexpected {found!r}")


def parse_program(text):
    """Parse DSL text into a :class:`Program`."""
    return _Parser(text).parse()
