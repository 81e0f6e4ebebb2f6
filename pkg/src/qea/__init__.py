"""qea: when does a quantum computer beat a classical one on chemistry?

A deterministic forecasting engine comparing classical electronic-
structure methods against fault-tolerant phase-estimation variants at
equal dollar spend.  For any method pair it computes the problem-size
threshold for quantum advantage in a given year, the feasibility
envelope set by qubit supply and a wall-clock deadline, and the first
year the two overlap.  Every model constant lives in a Scenario and can
be swept.
"""

from .advantage import (
    BEYOND_HORIZON,
    NEVER,
    AdvantageRegion,
    DisruptionResult,
    FeasibilityEnvelope,
    advantage_region,
    deadline_limited_size,
    feasibility_envelope,
    first_advantage_year,
    qea_threshold,
    qubit_limited_size,
    verdict_key,
)
from .catalog import (
    AlgorithmSpec,
    ComplexityModel,
    builtin_catalog,
    canonical_name,
    eval_complexity,
    fci_dimension,
    lookup,
)
from .chem import (
    BasisHeuristic,
    MoleculeSpec,
    atoms_from_basis_functions,
    builtin_heuristics,
    orbital_count,
    orbital_to_atom_ratio,
    parse_molecule,
)
from .cost import (
    RuntimeQuote,
    classical_runtime,
    flop_adjusted_constant,
    naive_t_gate_estimate,
    overhead_ratio,
    quantum_runtime,
)
from .errors import (
    CalibrationError,
    DomainError,
    QeaError,
    ScenarioError,
    ThresholdError,
    UnknownMethodError,
)
from .hardware import (
    ClassicalPlatform,
    ExponentialTrend,
    QuantumPlatform,
    SurfaceCodeParams,
    available_logical_qubits,
    classical_throughput,
    quantum_logical_throughput,
    required_code_distance,
    trend_value,
)
from .report import (
    CurvePoint,
    DisruptionTable,
    RobustnessTable,
    curve_csv,
    curve_text,
    disruption_table,
    qea_curve_series,
    render_csv,
    render_text,
    robustness_table,
    verdict_text,
)
from .scenario import (
    AlgorithmTuning,
    Scenario,
    Variation,
    apply_variation,
    calibrate,
    default_scenario,
    dump_scenario,
    load_scenario,
    scenario_digest,
    scenario_from_dict,
    scenario_to_dict,
    standard_variations,
)

__version__ = "0.1.0"
