"""Shared scenario builders for the test suite."""

from __future__ import annotations

import dataclasses

from qea import (
    ClassicalPlatform,
    ExponentialTrend,
    QuantumPlatform,
    Scenario,
    SurfaceCodeParams,
)


def make_scenario(
    classical=(2025, 1.0e18, 1.4),
    tgate=(2025, 1.0e5, 1.0),
    physical=(2024, 1.1e3, 1.0),
    ratio=(2025, 1.0e3, 1.0),
    error=(2025, 1.0e-3, 0.9),
    mode="simple",
    epsilon=1e-3,
    deadline_s=2_592_000.0,
    start_year=2025,
    horizon=2050,
    sc_params=None,
    **scenario_fields,
):
    """A scenario with explicit trend tuples (base_year, base_value, factor)."""
    s = Scenario(
        epsilon=epsilon,
        deadline_s=deadline_s,
        start_year=start_year,
        horizon=horizon,
        classical=ClassicalPlatform(ExponentialTrend(*classical)),
        quantum=QuantumPlatform(
            mode=mode,
            logical_tgates_per_dollar_second=ExponentialTrend(*tgate),
            physical_qubits=ExponentialTrend(*physical),
            physical_to_logical_ratio=ExponentialTrend(*ratio),
            physical_error_rate=ExponentialTrend(*error),
            sc_params=sc_params or SurfaceCodeParams(),
        ),
    )
    if scenario_fields:
        s = dataclasses.replace(s, **scenario_fields)
    return s


def with_tuning(scenario, name, **fields):
    """Scenario with one algorithm's tuning fields replaced."""
    from qea.catalog import canonical_name

    key = canonical_name(name)
    algorithms = dict(scenario.algorithms)
    algorithms[key] = dataclasses.replace(algorithms[key], **fields)
    return dataclasses.replace(scenario, algorithms=algorithms)
