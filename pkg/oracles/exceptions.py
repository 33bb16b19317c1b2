"""Exceptions raised by the oracle compiler and simulator."""


class OracleError(Exception):
    """Root of every error raised by the ``oracles`` app."""


class TruthTableError(OracleError, ValueError):
    pass


class AnfError(OracleError, ValueError):
    pass


class CircuitError(OracleError, ValueError):
    pass


class CircuitSyntaxError(CircuitError):

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f'line {line}: {message}'
        super().__init__(message)


class ConstructionError(OracleError):
    pass


class SimulationError(OracleError):
    pass


class PromiseViolation(OracleError):
    """The function is neither constant nor balanced."""
