"""Exception hierarchy shared across the package."""


class GraphZipError(Exception):
    """Base class for every error raised by graphzip."""


class GraphError(GraphZipError, ValueError):
    pass


class LabelConflictError(GraphError):
    pass


class DanglingEdgeError(GraphError):
    pass


class SelfLoopError(GraphError):
    pass


class UnknownVertexError(GraphError, KeyError):
    pass


class EmptyPatternError(GraphError):
    pass


class OracleSizeError(GraphError):
    pass


class InvalidPatternError(GraphError):
    pass


class EmbeddingMismatchError(GraphError):
    pass


class OversizeBatchError(GraphZipError, ValueError):
    pass


class ParseError(GraphZipError, ValueError):
    """Malformed input line. ``lineno`` is 1-based; ``source`` names the file."""

    def __init__(self, message, lineno=None, source=None):
        self.lineno = lineno
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if lineno is not None:
            where += f"{lineno}:"
        super().__init__(f"{where} {message}" if where else message)


class FormatError(ParseError):
    pass


class SpecError(GraphZipError, ValueError):
    pass


class FeasibilityError(GraphZipError, ValueError):
    pass


class TruthSetError(GraphZipError, ValueError):
    pass
