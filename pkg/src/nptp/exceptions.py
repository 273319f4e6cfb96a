"""Exception hierarchy shared by every nptp module."""


class NptpError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(NptpError, ValueError):
    """An argument is outside its admissible range."""


class DomainError(NptpError, ValueError):
    """A point lies outside the domain of a map, weight or approximant."""


class BadEvaluationError(NptpError, ValueError):
    """A target function returned a non-finite value."""


class NumericalFailure(NptpError, ArithmeticError):
    """An iterative numerical procedure failed to converge."""


class OptimizationFailure(NumericalFailure):
    """The parameter search found no finite objective value."""


class AnalysisFailure(NumericalFailure):
    """A coefficient row never settles into a monotone tail."""


class ExpressionError(NptpError, ValueError):
    """Base class for expression parsing errors."""


class ExpressionSyntaxError(ExpressionError):
    def __init__(self, message, column):
        self.column = column
        super().__init__(f"{message} at column {column}")


class UnknownIdentifierError(ExpressionError):
    def __init__(self, name, column):
        self.name = name
        self.column = column
        super().__init__(f"unknown identifier {name!r} at column {column}")


class FunctionNotFoundError(NptpError, KeyError):
    def __str__(self):
        return f"no builtin function named {self.args[0]!r}"
