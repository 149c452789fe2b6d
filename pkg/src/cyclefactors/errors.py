"""Exception hierarchy shared by every module of the package."""


class CycleFactorError(ValueError):
    """Base class for all errors raised by :mod:`cyclefactors`."""


class SelfLoop(CycleFactorError):
    pass


class VertexOutOfRange(CycleFactorError):
    pass


class InstanceSyntaxError(CycleFactorError):
    """Malformed instance or solution text; ``lineno`` is 1-based."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class DanglingReference(CycleFactorError):
    pass


class NotBipartition(CycleFactorError):
    pass


class NotDirected(CycleFactorError):
    pass


class NotUndirected(CycleFactorError):
    pass


class TooLarge(CycleFactorError):
    """Exhaustive search gave up: node budget or size bound exceeded."""

    def __init__(self, message, nodes=None):
        self.nodes = nodes
        super().__init__(message)


class MissingEndpoint(CycleFactorError):
    pass


class NotCubic(CycleFactorError):
    pass


class EndpointsNotDistinct(CycleFactorError):
    pass


class IndexOutOfRange(CycleFactorError):
    pass


class TerminalNotVertex(CycleFactorError):
    pass


class NotAFactor(CycleFactorError):
    pass


class ParityViolated(CycleFactorError):
    pass


class InfeasibleParameters(CycleFactorError):
    pass
