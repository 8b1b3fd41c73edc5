class EqregError(Exception):
    """Base class of every error raised by eqreg."""


class ConfigurationError(EqregError, ValueError):
    pass


class DomainError(EqregError, ValueError):
    pass


class UsageError(EqregError):
    pass


class EvaluationError(EqregError, ArithmeticError):
    """Raised when a bifunction cannot be evaluated to a finite value.

    Parameters
    ----------
    message : str
    x, y : float, optional
        The offending arguments.
    location : tuple of int, optional
        Table location ``(i, j)`` when raised while sampling.
    """

    def __init__(self, message, x=None, y=None, location=None):
        self.x = x
        self.y = y
        self.location = location
        parts = [message]
        if x is not None:
            parts.append(f"at (x, y) = ({x!r}, {y!r})")
        elif y is not None:
            parts.append(f"at {y!r}")
        if location is not None:
            parts.append(f"table entry {location}")
        super().__init__(" ".join(parts))


class SpecSyntaxError(EqregError, ValueError):
    def __init__(self, message, position, text=""):
        self.position = position
        self.text = text
        self.message = message
        super().__init__(f"{message} (position {position})")

    def pretty(self):
        if not self.text:
            return str(self)
        return f"{self.text}\n{' ' * self.position}^\n{self}"


class GenerationError(EqregError):
    def __init__(self, message, seed):
        self.seed = seed
        super().__init__(f"{message} (seed {seed})")
