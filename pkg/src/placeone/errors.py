"""Exception types shared across the engine.

The CLI maps these onto exit codes: rejected input gives 2, a violated
theorem check gives 3, a blown resource cap gives 4.  InternalCheckError
signals a bug in the engine itself and is deliberately left unmapped.
"""


class PlaceoneError(Exception):
    pass


class InputError(PlaceoneError):
    """The input is outside the engine's domain (parse error, non-reduced
    curve, violated precondition)."""


class ParseError(InputError):
    def __init__(self, message, text=None, pos=None):
        if text is not None and pos is not None:
            message = f"{message} (at position {pos}: {text[pos:pos + 12]!r})"
        super().__init__(message)
        self.pos = pos


class CapExceeded(PlaceoneError):
    """A configured resource bound (tower depth, extension degree,
    truncation order) was exceeded."""


class TheoremViolation(PlaceoneError):
    """A mechanically checked theorem failed on a concrete input."""


class InternalCheckError(PlaceoneError):
    """An internal consistency invariant failed; this is a bug."""
