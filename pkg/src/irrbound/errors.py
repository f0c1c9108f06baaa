"""Exception hierarchy.

Errors fall into three families that the CLI maps onto exit codes:
``ParseError`` (2), ``GraphValidationError`` (3) and ``ParameterError`` (4).
Numerical failures derive from ``ComputationError``.
"""


class IrrboundError(Exception):
    """Base class for every error raised by this package."""


class ParseError(IrrboundError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GraphValidationError(IrrboundError, ValueError):
    pass


class SelfLoopError(GraphValidationError):
    def __init__(self, u):
        self.u = u
        super().__init__(f"self-loop at vertex {u}")


class DuplicateEdgeError(GraphValidationError):
    def __init__(self, u, v):
        self.u, self.v = u, v
        super().__init__(f"duplicate edge ({u}, {v})")


class VertexOutOfRangeError(GraphValidationError):
    def __init__(self, u, n):
        self.u, self.n = u, n
        super().__init__(f"vertex {u} out of range for n={n}")


class EdgeNotPresentError(GraphValidationError, KeyError):
    def __init__(self, u, v):
        self.u, self.v = u, v
        super().__init__(f"edge ({u}, {v}) not in graph")

    def __str__(self):
        return self.args[0]


class NotATreeError(GraphValidationError):
    pass


class ParameterError(IrrboundError, ValueError):
    """Bad argument to a generator, bound formula or study."""


class CycleTooShortError(ParameterError):
    pass


class SizeTooSmallError(ParameterError):
    pass


class SizeOutOfRangeError(ParameterError):
    pass


class EntryOutOfRangeError(ParameterError):
    pass


class NegativeInputError(ParameterError):
    pass


class LambdaOutOfRangeError(ParameterError):
    pass


class DimensionMismatchError(ParameterError):
    pass


class ConstantVectorError(ParameterError):
    pass


class EmptyGraphDimensionError(ParameterError):
    pass


class ComputationError(IrrboundError, ArithmeticError):
    pass


class NegativeRadicandError(ComputationError):
    pass


class NotConvergedError(ComputationError):
    pass
