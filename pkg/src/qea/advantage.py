"""Crossover thresholds, feasibility envelopes, and disruption years.

For a (classical, quantum) method pair in a given year, the engine
answers three questions:

1. Above what problem size N is the quantum run cheaper at equal dollar
   spend (the advantage threshold)?  Ties count as quantum advantage.
2. What is the largest N that is feasible at all, limited by the
   logical-qubit supply and by a wall-clock deadline?
3. In which year does the advantage region (threshold <= feasible size)
   first become nonempty?

All comparisons run on log-runtimes so exponential classical laws never
overflow.  Thresholds solve in closed form when both laws are
polynomial on simple-mode hardware, and by bisection in log N
otherwise; the continuous answer is then snapped so that its ceiling is
exactly the smallest advantageous integer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .catalog import AlgorithmSpec
from .cost import log_classical_seconds, log_quantum_seconds
from .errors import DomainError
from .hardware import available_logical_qubits
from .scenario import Scenario

__all__ = [
    "BEYOND_HORIZON",
    "NEVER",
    "FeasibilityEnvelope",
    "AdvantageRegion",
    "DisruptionResult",
    "qea_threshold",
    "deadline_limited_size",
    "qubit_limited_size",
    "feasibility_envelope",
    "advantage_region",
    "first_advantage_year",
    "verdict_key",
]

BEYOND_HORIZON = "beyond-horizon"
NEVER = "never"

# Largest problem size any search will report; beyond this the model has
# no physical meaning anyway.
SIZE_CAP = 10**15

# Bisection tolerance on ln N.  The contract asks for 1e-6 relative on
# N; solving tighter keeps thresholds stable under common rescalings of
# both throughput curves to well below 1e-9.
_LOG_TOL = 1e-12

# Expansion cap for bracket search in ln N (N ~ 1e111).
_LOG_N_MAX = 256.0

# Integer snapping is only meaningful (and affordable) while one unit of
# N still moves the log-runtime gap by more than float resolution.
_SNAP_LIMIT = 1e9


@dataclass(frozen=True)
class FeasibilityEnvelope:
    """Per-year size limits for one quantum method."""

    year: float
    qubit_limited_n: int
    deadline_limited_n: int
    max_feasible_n: int


@dataclass(frozen=True)
class AdvantageRegion:
    """Threshold and envelope for one pair in one year.

    nonempty iff the threshold exists and its ceiling fits under the
    envelope; min_advantageous_n is ceil(threshold_n) when finite.
    """

    year: float
    threshold_n: float | None
    min_advantageous_n: int | None
    max_feasible_n: int
    nonempty: bool


@dataclass(frozen=True)
class DisruptionResult:
    """First-advantage verdict: a year, "beyond-horizon", or "never",
    plus which constraint blocked advantage in the last blocked year
    ("qea" | "qubits" | "deadline" | "none")."""

    verdict: int | str
    binding_constraint: str


def verdict_key(result: DisruptionResult, horizon: int) -> float:
    """Numeric order: years ascending, beyond-horizon after all years,
    never last."""
    if result.verdict == NEVER:
        return math.inf
    if result.verdict == BEYOND_HORIZON:
        return float(horizon) + 1.0
    return float(result.verdict)


def _check_pair(classical: AlgorithmSpec, quantum: AlgorithmSpec) -> None:
    if classical.kind != "classical":
        raise DomainError(f"{classical.name!r} is not a classical method")
    if quantum.kind != "quantum":
        raise DomainError(f"{quantum.name!r} is not a quantum method")


def qea_threshold(
    classical: AlgorithmSpec, quantum: AlgorithmSpec, year: float, scenario: Scenario
) -> float | None:
    """Smallest real N >= 1 with quantum runtime <= classical runtime,
    or None when no such size exists (the quantum law grows at least as
    fast and is costlier per-operation already at N = 1)."""
    _check_pair(classical, quantum)

    def gap(n: float) -> float:
        return log_quantum_seconds(quantum, n, year, scenario) - log_classical_seconds(
            classical, n, year, scenario
        )

    gap1 = gap(1.0)
    if gap1 <= 0:
        return 1.0

    growth_q = math.log(quantum.cost_law.exp_base)
    growth_c = math.log(classical.cost_law.exp_base)
    a_q = quantum.cost_law.size_exponent
    a_c = classical.cost_law.size_exponent
    if growth_q > growth_c or (growth_q == growth_c and a_q >= a_c):
        return None  # quantum never catches up

    simple_poly = (
        scenario.quantum.mode == "simple" and growth_q == 0.0 and growth_c == 0.0
    )
    if simple_poly:
        # gap(N) = gap(1) + (a_q - a_c) ln N, so the root is direct.
        root_u = gap1 / (a_c - a_q)
    else:
        # The gap can rise before it falls (a_q > a_c under an
        # exponential classical law); bracket from beyond the peak.
        u_lo = 0.0
        if a_q > a_c and growth_c > growth_q:
            u_lo = max(0.0, math.log((a_q - a_c) / (growth_c - growth_q)))
        u_hi = max(1.0, u_lo + 1.0)
        while gap(math.exp(u_hi)) > 0:
            u_lo = u_hi
            u_hi *= 2.0
            if u_hi > _LOG_N_MAX:
                # A crossing exists structurally but sits beyond any
                # meaningful size; keep it finite so the verdict reads
                # beyond-horizon rather than never.
                return math.exp(_LOG_N_MAX)
        while u_hi - u_lo > _LOG_TOL:
            mid = 0.5 * (u_lo + u_hi)
            if gap(math.exp(mid)) <= 0:
                u_hi = mid
            else:
                u_lo = mid
        root_u = u_hi

    threshold = max(1.0, math.exp(root_u))
    if threshold > _SNAP_LIMIT:
        return threshold

    # Snap so ceil(threshold) is exactly the smallest advantageous
    # integer, immune to the last float ulp of the root.
    k = max(1, math.ceil(threshold - 1e-9))
    while gap(float(k)) > 0:
        k += 1
    while k > 1 and gap(float(k - 1)) <= 0:
        k -= 1
    if math.ceil(threshold) != k:
        threshold = float(k)
    return threshold


def _largest_true(predicate, cap: int = SIZE_CAP) -> int:
    """Largest integer N in [1, cap] satisfying a monotone predicate,
    0 if even N = 1 fails."""
    if not predicate(1):
        return 0
    lo, hi = 1, 2
    while hi <= cap and predicate(hi):
        lo, hi = hi, hi * 2
    if hi > cap:
        if predicate(cap):
            return cap
        hi = cap
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if predicate(mid):
            lo = mid
        else:
            hi = mid
    return lo


def deadline_limited_size(
    quantum: AlgorithmSpec, year: float, deadline_s: float, scenario: Scenario
) -> int:
    """Largest N whose quantum runtime fits within the deadline; 0 if
    none does."""
    if quantum.kind != "quantum":
        raise DomainError(f"{quantum.name!r} is not a quantum method")
    if not deadline_s > 0:
        raise DomainError("deadline_s must be > 0")
    log_deadline = math.log(deadline_s)

    def fits(n: int) -> bool:
        return log_quantum_seconds(quantum, float(n), year, scenario) <= log_deadline

    return _largest_true(fits)


def qubit_limited_size(quantum: AlgorithmSpec, year: float, scenario: Scenario) -> int:
    """Largest N whose logical-qubit demand fits the year's supply.

    Self-consistent in surface-code mode: the supply is evaluated at the
    T-count of the same N being tested (bigger workloads push the code
    distance, and with it the physical-per-logical ratio, up).
    """
    if quantum.kind != "quantum":
        raise DomainError(f"{quantum.name!r} is not a quantum method")

    def fits(n: int) -> bool:
        need = quantum.qubit_law.value(n, 1.0)
        t_count = quantum.cost_law.value(n, scenario.epsilon)
        return need <= available_logical_qubits(scenario.quantum, year, t_count)

    return _largest_true(fits)


def feasibility_envelope(quantum: AlgorithmSpec, year: float, scenario: Scenario) -> FeasibilityEnvelope:
    qubit_n = qubit_limited_size(quantum, year, scenario)
    deadline_n = deadline_limited_size(quantum, year, scenario.deadline_s, scenario)
    return FeasibilityEnvelope(
        year=year,
        qubit_limited_n=qubit_n,
        deadline_limited_n=deadline_n,
        max_feasible_n=min(qubit_n, deadline_n),
    )


def advantage_region(
    classical: AlgorithmSpec, quantum: AlgorithmSpec, year: float, scenario: Scenario
) -> AdvantageRegion:
    threshold = qea_threshold(classical, quantum, year, scenario)
    envelope = feasibility_envelope(quantum, year, scenario)
    min_adv = None if threshold is None else math.ceil(threshold)
    nonempty = min_adv is not None and min_adv <= envelope.max_feasible_n
    return AdvantageRegion(
        year=year,
        threshold_n=threshold,
        min_advantageous_n=min_adv,
        max_feasible_n=envelope.max_feasible_n,
        nonempty=nonempty,
    )


def _blocking_constraint(threshold, envelope: FeasibilityEnvelope) -> str:
    if threshold is None:
        return "qea"
    if envelope.qubit_limited_n <= envelope.deadline_limited_n:
        return "qubits"
    return "deadline"


def first_advantage_year(
    classical: AlgorithmSpec, quantum: AlgorithmSpec, scenario: Scenario
) -> DisruptionResult:
    """Scan integer years from start_year to horizon for the first
    nonempty advantage region.

    Returns beyond-horizon when a finite threshold exists somewhere in
    the window but never fits the envelope, and never when the
    threshold is absent in every scanned year.  binding_constraint
    reports what blocked the last infeasible year ("none" when the very
    first year is already feasible).
    """
    _check_pair(classical, quantum)
    last_block = None
    any_threshold = False
    for year in scenario.years():
        threshold = qea_threshold(classical, quantum, year, scenario)
        envelope = feasibility_envelope(quantum, year, scenario)
        if threshold is not None:
            any_threshold = True
            if math.ceil(threshold) <= envelope.max_feasible_n:
                constraint = "none" if last_block is None else _blocking_constraint(*last_block)
                return DisruptionResult(verdict=year, binding_constraint=constraint)
        last_block = (threshold, envelope)
    if any_threshold:
        return DisruptionResult(
            verdict=BEYOND_HORIZON, binding_constraint=_blocking_constraint(*last_block)
        )
    return DisruptionResult(verdict=NEVER, binding_constraint="qea")
