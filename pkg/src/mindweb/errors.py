"""Exception types shared across the package."""

from __future__ import annotations


class MindwebError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(MindwebError, ValueError):
    """An object violates its structural invariants.

    Carries the full list of findings so callers can report every
    violation at once instead of failing on the first one.
    """

    def __init__(self, findings: list[str] | tuple[str, ...]):
        self.findings = tuple(findings)
        super().__init__("; ".join(self.findings) or "invalid value")


class UnknownIdError(MindwebError, KeyError):
    """A lookup referenced ids that are not part of the domain."""

    def __init__(self, ids, kind: str = "id"):
        self.ids = tuple(sorted(ids))
        self.kind = kind
        super().__init__(f"unknown {kind}{'s' if len(self.ids) != 1 else ''}: "
                         + ", ".join(self.ids))

    def __str__(self) -> str:  # KeyError quotes its payload by default
        return self.args[0]


class SizeLimitError(MindwebError, ValueError):
    """An exhaustive computation was requested above its instance cap."""


class DocumentError(MindwebError, ValueError):
    """A document cannot be parsed into its domain value."""
