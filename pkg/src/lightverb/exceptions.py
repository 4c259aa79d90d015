class LightVerbError(Exception):
    """Base class for errors raised by this package."""


class MalformedTokenError(LightVerbError, ValueError):
    """A corpus token lacks a ``surface/TAG`` separator or one of its halves."""

    def __init__(self, token, line_number=None, token_index=None):
        self.token = token
        self.line_number = line_number
        self.token_index = token_index
        where = []
        if line_number is not None:
            where.append(f"line {line_number}")
        if token_index is not None:
            where.append(f"token {token_index}")
        loc = f" ({', '.join(where)})" if where else ""
        super().__init__(f"malformed token {token!r}{loc}")


class UndefinedDensityError(LightVerbError, ValueError):
    """Lexical density was requested for text with no non-punctuation tokens."""


class ConfigurationError(LightVerbError, ValueError):
    """Incompatible or incomplete options."""


class InputFormatError(LightVerbError, ValueError):
    """A TSV input file has a malformed row."""

    def __init__(self, path, line_number, message):
        self.path = path
        self.line_number = line_number
        super().__init__(f"{path}:{line_number}: {message}")
