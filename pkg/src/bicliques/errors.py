"""Exception taxonomy shared by the whole package.

Every error carries its identifying data as attributes so callers (and the
CLI) can report a machine-readable category without parsing messages.
"""


class BicliquesError(Exception):
    """Base class for all package errors."""

    @property
    def category(self) -> str:
        return type(self).__name__


class SelfLoop(BicliquesError):
    def __init__(self, u: int):
        self.u = u
        super().__init__(f"self-loop at vertex {u}")


class DuplicateEdge(BicliquesError):
    def __init__(self, u: int, v: int):
        self.u, self.v = u, v
        super().__init__(f"duplicate edge ({u}, {v})")


class VertexOutOfRange(BicliquesError):
    def __init__(self, u: int, n: int):
        self.u, self.n = u, n
        super().__init__(f"vertex {u} out of range [0, {n})")


class EmptyQuerySet(BicliquesError):
    def __init__(self):
        super().__init__("common-neighbor query over an empty vertex set")


class MissingEdge(BicliquesError):
    def __init__(self, u: int, v: int):
        self.u, self.v = u, v
        super().__init__(f"edge ({u}, {v}) not present")


class ParseError(BicliquesError):
    def __init__(self, line: int, reason: str):
        self.line, self.reason = line, reason
        super().__init__(f"line {line}: {reason}")


class InvalidCounts(BicliquesError):
    pass


class EmptyGraph(BicliquesError):
    def __init__(self):
        super().__init__("graph has no edges")


class TooLarge(BicliquesError):
    def __init__(self, n: int, limit: int):
        self.n, self.limit = n, limit
        super().__init__(f"graph has {n} vertices; exhaustive search is capped at {limit}")


class InternalInconsistency(BicliquesError):
    pass
