"""Exception types shared across the engine.

The CLI maps these onto process exit codes: scenario and validation
problems exit with 3, infeasible calibrations with 4.
"""


class QeaError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(QeaError, ValueError):
    """An argument violated a documented precondition."""


class UnknownMethodError(QeaError, LookupError):
    """An algorithm name that is not in the catalog and not an alias."""


class ThresholdError(QeaError):
    """Physical error rate at or above the code threshold; the surface
    code cannot suppress errors there."""


class ScenarioError(QeaError):
    """A scenario file failed validation (unknown key, bad value, ...)."""


class CalibrationError(QeaError):
    """No parameter setting within bounds reproduces a calibration anchor."""

    def __init__(self, anchor: str, message: str = ""):
        self.anchor = anchor
        super().__init__(message or f"infeasible calibration anchor: {anchor}")
