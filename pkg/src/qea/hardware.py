"""Hardware capability curves for both sides of the comparison.

Everything extrapolates as a plain exponential: a quantity has a base
year, a base value, and a multiplicative annual factor.  The classical
side is a single curve, flops per second at a $1/s spend rate
(defaults: 1e18 at 2025, growing 1.4x per year).  The quantum side has
two operating modes:

* "simple" (default): logical T-gate throughput at $1/s is itself an
  exponential trend (1e5 at 2025), and the physical-to-logical qubit
  ratio is a trend (flat 1e3 by default).  The 2025 defaults make the
  classical/quantum throughput ratio exactly 1e13.

* "surface-code": throughput and qubit ratio are derived from a code
  distance d chosen per workload.  The logical failure model is the
  standard suppression law

      p_logical ~ A * (p_phys / p_th) ** ((d + 1) / 2)

  and d is the smallest odd integer keeping the whole T-count within a
  failure budget.  A logical T gate then takes d * cycle_time *
  cycles_per_t seconds, the qubit ratio is 2 d^2, and the dollar factor
  for parallel distillation factories is fixed once so the 2025
  throughput at the reference T-count matches the simple-mode base.

Surface-code numbers (A = 0.1, p_th = 1e-2, 1 us cycles, 10 cycles per
T gate, 1e-3 physical error improving 0.9x/yr) are standard literature
values, not sourced from the trend data behind the defaults.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, ThresholdError

__all__ = [
    "ExponentialTrend",
    "ClassicalPlatform",
    "SurfaceCodeParams",
    "QuantumPlatform",
    "trend_value",
    "classical_throughput",
    "required_code_distance",
    "quantum_logical_throughput",
    "available_logical_qubits",
    "REFERENCE_TCOUNT",
    "SC_CALIBRATION_YEAR",
]

# T-count at which the classical/quantum overhead ratio is quoted and at
# which the surface-code factory factor is calibrated.
REFERENCE_TCOUNT = 1e10
SC_CALIBRATION_YEAR = 2025.0

# Slack applied to log-space boundary comparisons so that analytically
# exact cases (e.g. a budget that is exactly a power of the suppression
# ratio) do not flip on the last float ulp.
_LOG_SLACK = 1e-9


@dataclass(frozen=True)
class ExponentialTrend:
    """base_value * annual_factor ** (year - base_year)."""

    base_year: float
    base_value: float
    annual_factor: float

    def __post_init__(self):
        if not self.base_value > 0:
            raise DomainError(f"base_value must be > 0, got {self.base_value}")
        if not self.annual_factor > 0:
            raise DomainError(f"annual_factor must be > 0, got {self.annual_factor}")

    def value(self, year: float) -> float:
        return self.base_value * self.annual_factor ** (year - self.base_year)


def trend_value(trend: ExponentialTrend, year: float) -> float:
    """Trend value at any real year; years before base_year extrapolate
    backward along the same curve."""
    return trend.value(year)


@dataclass(frozen=True)
class ClassicalPlatform:
    flops_per_dollar_second: ExponentialTrend


def classical_throughput(platform: ClassicalPlatform, year: float) -> float:
    """Flops per second at a $1/s spend rate."""
    return platform.flops_per_dollar_second.value(year)


@dataclass(frozen=True)
class SurfaceCodeParams:
    prefactor_a: float = 0.1
    threshold_error: float = 1e-2
    cycle_time_s: float = 1e-6
    cycles_per_t_gate: float = 10.0
    failure_budget: float = 1e-2

    def __post_init__(self):
        if not 0 < self.threshold_error < 1:
            raise DomainError("threshold_error must be in (0, 1)")
        if not 0 < self.failure_budget < 1:
            raise DomainError("failure_budget must be in (0, 1)")
        for field in ("prefactor_a", "cycle_time_s", "cycles_per_t_gate"):
            if not getattr(self, field) > 0:
                raise DomainError(f"{field} must be > 0")


@dataclass(frozen=True)
class QuantumPlatform:
    """Quantum capability curves; which ones apply depends on mode."""

    mode: str  # "simple" | "surface-code"
    logical_tgates_per_dollar_second: ExponentialTrend
    physical_qubits: ExponentialTrend
    physical_to_logical_ratio: ExponentialTrend
    physical_error_rate: ExponentialTrend
    sc_params: SurfaceCodeParams

    def __post_init__(self):
        if self.mode not in ("simple", "surface-code"):
            raise DomainError(f"mode must be simple or surface-code, got {self.mode!r}")


def _code_distance_from_log(log_t_count: float, p_phys: float, params: SurfaceCodeParams) -> int:
    if not 0 < p_phys < 1:
        raise DomainError(f"p_phys must be in (0, 1), got {p_phys}")
    if p_phys >= params.threshold_error:
        raise ThresholdError(
            f"physical error rate {p_phys:g} is not below the code threshold "
            f"{params.threshold_error:g}"
        )
    log_ratio = math.log(p_phys / params.threshold_error)  # < 0
    # Smallest m >= 1 with  log(A) + log_t + m * log_ratio <= log(budget),
    # then d = 2m - 1 (odd by construction).
    rhs = math.log(params.failure_budget) - math.log(params.prefactor_a) - log_t_count

    def ok(m: int) -> bool:
        return m * log_ratio <= rhs + _LOG_SLACK

    m = max(1, math.ceil(rhs / log_ratio - _LOG_SLACK))
    while not ok(m):
        m += 1
    while m > 1 and ok(m - 1):
        m -= 1
    return 2 * m - 1


def required_code_distance(p_phys: float, t_count: float, params: SurfaceCodeParams) -> int:
    """Smallest odd code distance keeping t_count logical T gates within
    the failure budget.  Raises ThresholdError if p_phys >= p_th."""
    if not t_count > 0:
        raise DomainError(f"t_count must be > 0, got {t_count}")
    return _code_distance_from_log(math.log(t_count), p_phys, params)


def _sc_tgate_seconds_from_log(platform: QuantumPlatform, year: float, log_t_count: float) -> float:
    """Seconds per logical T gate in surface-code mode."""
    p_now = platform.physical_error_rate.value(year)
    d = _code_distance_from_log(log_t_count, p_now, platform.sc_params)
    return d * platform.sc_params.cycle_time_s * platform.sc_params.cycles_per_t_gate


def _factory_dollar_factor(platform: QuantumPlatform) -> float:
    """Parallel-factory factor, fixed so the calibration-year throughput
    at the reference T-count equals the trend's calibration-year value."""
    anchor_rate = platform.logical_tgates_per_dollar_second.value(SC_CALIBRATION_YEAR)
    anchor_seconds = _sc_tgate_seconds_from_log(
        platform, SC_CALIBRATION_YEAR, math.log(REFERENCE_TCOUNT)
    )
    return anchor_rate * anchor_seconds


def quantum_logical_throughput(platform: QuantumPlatform, year: float, t_count: float) -> float:
    """Logical T gates per second at $1/s spend.

    Simple mode reads the trend and ignores t_count.  Surface-code mode
    derives the distance for this workload's T-count at this year's
    physical error rate; larger workloads need more suppression and so
    run slower.
    """
    if platform.mode == "simple":
        return platform.logical_tgates_per_dollar_second.value(year)
    if not t_count > 0:
        raise DomainError(f"t_count must be > 0, got {t_count}")
    seconds = _sc_tgate_seconds_from_log(platform, year, math.log(t_count))
    return _factory_dollar_factor(platform) / seconds


def _log_quantum_throughput(platform: QuantumPlatform, year: float, log_t_count: float) -> float:
    if platform.mode == "simple":
        return math.log(platform.logical_tgates_per_dollar_second.value(year))
    seconds = _sc_tgate_seconds_from_log(platform, year, log_t_count)
    return math.log(_factory_dollar_factor(platform)) - math.log(seconds)


def available_logical_qubits(platform: QuantumPlatform, year: float, t_count: float) -> float:
    """Physical qubit supply divided by the physical-per-logical ratio.

    The ratio is the configured trend in simple mode and 2 d^2 in
    surface-code mode, with d matched to this workload's T-count.
    """
    physical = platform.physical_qubits.value(year)
    if platform.mode == "simple":
        ratio = platform.physical_to_logical_ratio.value(year)
    else:
        if not t_count > 0:
            raise DomainError(f"t_count must be > 0, got {t_count}")
        p_now = platform.physical_error_rate.value(year)
        d = _code_distance_from_log(math.log(t_count), p_now, platform.sc_params)
        ratio = 2.0 * d * d
    return physical / ratio
