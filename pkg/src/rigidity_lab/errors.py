"""Exception hierarchy shared by every module of the package."""


class RigidityLabError(Exception):
    """Base class for all errors raised by rigidity_lab."""


class InvalidInput(RigidityLabError, ValueError):
    pass


class ValidationError(RigidityLabError, ValueError):
    """A complex was rejected as the dual of a simple polytope."""


class NotPure(ValidationError):
    pass


class NotPseudomanifold(ValidationError):
    pass


class TooFewVertices(ValidationError):
    pass


class NonCycleLink(ValidationError):
    pass


class WrongDimension(RigidityLabError, ValueError):
    pass


class CapExceeded(RigidityLabError):
    def __init__(self, size: int, cap: int):
        super().__init__(f"size {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class NotReversible(RigidityLabError, ValueError):
    pass


class ConePoint(RigidityLabError, ValueError):
    def __init__(self, vertex: int):
        super().__init__(f"vertex {vertex} lies in every facet")
        self.vertex = vertex


class ParseError(RigidityLabError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownName(RigidityLabError, KeyError):
    def __str__(self):
        return f"unknown polytope name {self.args[0]!r}"
