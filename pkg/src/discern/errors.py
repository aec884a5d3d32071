"""Exception types shared across the package."""


class InputError(ValueError):
    """Supplied data cannot be used: bad file contents, unknown rater,
    mismatched object sets, and similar caller-fixable problems."""


class RankingParseError(InputError):
    """A ranking expression could not be parsed.

    `position` is the 1-based column of the offending token, when known.
    """

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"column {position}: {message}"
        super().__init__(message)
        self.position = position
