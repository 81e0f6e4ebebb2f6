"""Tables and curve series rendered from engine outputs.

Two shapes of output:

* disruption / robustness tables: one verdict per (classical, quantum)
  cell, rendered as a year, ">HORIZON" when advantage arrives only
  after the scan window, or "N/A" when no threshold exists at all.
* curve series: per-year threshold and feasibility-envelope rows for
  one method pair, for external plotting.

Machine output is RFC-4180 CSV (CRLF line ends, header row, full float
precision); human output is a fixed-width text grid with 6 significant
figures.  Both start with a comment line carrying the scenario digest
so every artifact is traceable to its exact parameter set.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

from .advantage import (
    BEYOND_HORIZON,
    NEVER,
    DisruptionResult,
    deadline_limited_size,
    first_advantage_year,
    qea_threshold,
    qubit_limited_size,
)
from .catalog import canonical_name
from .errors import DomainError
from .scenario import Scenario, Variation, apply_variation, scenario_digest

__all__ = [
    "DisruptionTable",
    "RobustnessTable",
    "CurvePoint",
    "disruption_table",
    "robustness_table",
    "qea_curve_series",
    "verdict_text",
    "render_csv",
    "render_text",
]

BASELINE_COLUMN = "baseline"


@dataclass(frozen=True)
class DisruptionTable:
    classical_methods: tuple[str, ...]
    quantum_methods: tuple[str, ...]
    cells: dict[tuple[str, str], DisruptionResult]
    scenario: Scenario


@dataclass(frozen=True)
class RobustnessTable:
    quantum: str
    classical_methods: tuple[str, ...]
    columns: tuple[str, ...]  # baseline first, then one per variation
    cells: dict[tuple[str, str], DisruptionResult]  # (classical, column)
    scenario: Scenario


@dataclass(frozen=True)
class CurvePoint:
    year: float
    threshold_n: float | None
    qubit_limited_n: int
    deadline_limited_n: int
    max_feasible_n: int
    region_nonempty: bool


def verdict_text(result: DisruptionResult, horizon: int) -> str:
    if result.verdict == NEVER:
        return "N/A"
    if result.verdict == BEYOND_HORIZON:
        return f">{horizon}"
    return str(result.verdict)


def disruption_table(
    scenario: Scenario, quantum_methods: list[str], classical_methods: list[str]
) -> DisruptionTable:
    """First-advantage verdicts for every (classical, quantum) pair."""
    if not quantum_methods or not classical_methods:
        raise DomainError("method lists must be nonempty")
    q_names = tuple(canonical_name(q) for q in quantum_methods)
    c_names = tuple(canonical_name(c) for c in classical_methods)
    cells = {}
    for c in c_names:
        for q in q_names:
            cells[(c, q)] = first_advantage_year(scenario.algorithm(c), scenario.algorithm(q), scenario)
    return DisruptionTable(c_names, q_names, cells, scenario)


def robustness_table(
    scenario: Scenario,
    variations: list[Variation],
    quantum: str,
    classical_methods: list[str],
) -> RobustnessTable:
    """Baseline verdicts plus one column per variation, for one quantum
    method against each classical method."""
    if not classical_methods:
        raise DomainError("method lists must be nonempty")
    q_name = canonical_name(quantum)
    c_names = tuple(canonical_name(c) for c in classical_methods)
    columns = (BASELINE_COLUMN,) + tuple(v.name for v in variations)
    scenarios = [scenario] + [apply_variation(scenario, v) for v in variations]
    cells = {}
    for c in c_names:
        for column, s in zip(columns, scenarios):
            cells[(c, column)] = first_advantage_year(s.algorithm(c), s.algorithm(q_name), s)
    return RobustnessTable(q_name, c_names, columns, cells, scenario)


def qea_curve_series(
    scenario: Scenario,
    classical: str,
    quantum: str,
    year_from: float,
    year_to: float,
    step: float = 1.0,
) -> list[CurvePoint]:
    """Threshold and envelope sampled over a year range (inclusive); a
    zero-length range yields the single starting row."""
    if year_from > year_to:
        raise DomainError("year_from must be <= year_to")
    if not step > 0:
        raise DomainError("step must be > 0")
    c_spec = scenario.algorithm(classical)
    q_spec = scenario.algorithm(quantum)
    points = []
    steps = int(math.floor((year_to - year_from) / step + 1e-9))
    for i in range(steps + 1):
        year = year_from + i * step
        threshold = qea_threshold(c_spec, q_spec, year, scenario)
        qubit_n = qubit_limited_size(q_spec, year, scenario)
        deadline_n = deadline_limited_size(q_spec, year, scenario.deadline_s, scenario)
        max_n = min(qubit_n, deadline_n)
        nonempty = threshold is not None and math.ceil(threshold) <= max_n
        points.append(
            CurvePoint(
                year=year,
                threshold_n=threshold,
                qubit_limited_n=qubit_n,
                deadline_limited_n=deadline_n,
                max_feasible_n=max_n,
                region_nonempty=nonempty,
            )
        )
    return points


# ---------------------------------------------------------------------------
# Rendering

def _digest_line(scenario: Scenario, eol: str) -> str:
    return f"# scenario sha256={scenario_digest(scenario)}{eol}"


def _csv_number(value: float) -> str:
    # repr round-trips doubles exactly; integers render bare.
    if isinstance(value, bool):  # guard: bools are ints
        return "true" if value else "false"
    if float(value).is_integer() and abs(value) < 1e16:
        return str(int(value))
    return repr(float(value))


def _text_number(value: float) -> str:
    return format(value, ".6g")


def _csv_rows(header: list[str], rows: list[list[str]], scenario: Scenario) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(header)
    writer.writerows(rows)
    return _digest_line(scenario, "\r\n") + buf.getvalue()


def _grid(headers: list[str], rows: list[list[str]], scenario: Scenario) -> str:
    widths = [max(len(h), *(len(r[i]) for r in rows)) for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return _digest_line(scenario, "\n") + "\n".join(lines) + "\n"


def render_csv(table) -> str:
    """CSV for a DisruptionTable, RobustnessTable, or curve series."""
    if isinstance(table, DisruptionTable):
        horizon = table.scenario.horizon
        rows = [
            [c, q, verdict_text(table.cells[(c, q)], horizon), table.cells[(c, q)].binding_constraint]
            for c in table.classical_methods
            for q in table.quantum_methods
        ]
        return _csv_rows(["classical", "quantum", "verdict", "binding_constraint"], rows, table.scenario)
    if isinstance(table, RobustnessTable):
        horizon = table.scenario.horizon
        rows = [
            [
                c,
                table.quantum,
                column,
                verdict_text(table.cells[(c, column)], horizon),
                table.cells[(c, column)].binding_constraint,
            ]
            for c in table.classical_methods
            for column in table.columns
        ]
        return _csv_rows(
            ["classical", "quantum", "variation", "verdict", "binding_constraint"], rows, table.scenario
        )
    raise DomainError(f"cannot render {type(table).__name__} as CSV")


def curve_csv(points: list[CurvePoint], scenario: Scenario) -> str:
    rows = []
    for p in points:
        rows.append(
            [
                _csv_number(p.year),
                "" if p.threshold_n is None else _csv_number(p.threshold_n),
                str(p.qubit_limited_n),
                str(p.deadline_limited_n),
                str(p.max_feasible_n),
                "true" if p.region_nonempty else "false",
            ]
        )
    return _csv_rows(
        ["year", "threshold_n", "qubit_limited_n", "deadline_limited_n", "max_feasible_n", "region_nonempty"],
        rows,
        scenario,
    )


def render_text(table) -> str:
    """Fixed-width grid for human eyes."""
    if isinstance(table, DisruptionTable):
        horizon = table.scenario.horizon
        headers = ["classical"] + list(table.quantum_methods)
        rows = [
            [c] + [verdict_text(table.cells[(c, q)], horizon) for q in table.quantum_methods]
            for c in table.classical_methods
        ]
        return _grid(headers, rows, table.scenario)
    if isinstance(table, RobustnessTable):
        horizon = table.scenario.horizon
        headers = ["classical"] + list(table.columns)
        rows = [
            [c] + [verdict_text(table.cells[(c, col)], horizon) for col in table.columns]
            for c in table.classical_methods
        ]
        return _grid(headers, rows, table.scenario)
    raise DomainError(f"cannot render {type(table).__name__} as text")


def curve_text(points: list[CurvePoint], scenario: Scenario) -> str:
    headers = ["year", "threshold_n", "qubit_limited_n", "deadline_limited_n", "max_feasible_n", "region_nonempty"]
    rows = []
    for p in points:
        rows.append(
            [
                _text_number(p.year),
                "-" if p.threshold_n is None else _text_number(p.threshold_n),
                str(p.qubit_limited_n),
                str(p.deadline_limited_n),
                str(p.max_feasible_n),
                "true" if p.region_nonempty else "false",
            ]
        )
    return _grid(headers, rows, scenario)
