import enum

from .._exceptions import UsageError


class EnvelopeKind(enum.Enum):
    LSC = "lsc"
    CONVEX = "convex"
    QUASICONVEX = "quasiconvex"
    CONVEX_CLOSED = "convex_closed"
    QUASICONVEX_CLOSED = "quasiconvex_closed"

    @classmethod
    def parse(cls, value):
        """Accept an EnvelopeKind, its value or a short alias (s, c, q, cbar, qbar)."""
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        if key in _ALIASES:
            return _ALIASES[key]
        try:
            return cls(key)
        except ValueError:
            raise UsageError(
                f"unknown envelope kind {value!r}; "
                f"choose from {sorted(set(_ALIASES) | {k.value for k in cls})}"
            ) from None

    @property
    def alias(self):
        return _SHORT[self]

    @property
    def is_convex(self):
        return self in (EnvelopeKind.CONVEX, EnvelopeKind.CONVEX_CLOSED)

    @property
    def is_quasiconvex(self):
        return self in (EnvelopeKind.QUASICONVEX, EnvelopeKind.QUASICONVEX_CLOSED)


_SHORT = {
    EnvelopeKind.LSC: "s",
    EnvelopeKind.CONVEX: "c",
    EnvelopeKind.QUASICONVEX: "q",
    EnvelopeKind.CONVEX_CLOSED: "cbar",
    EnvelopeKind.QUASICONVEX_CLOSED: "qbar",
}
_ALIASES = {v: k for k, v in _SHORT.items()}
