"""Table assembly, curve series, and deterministic rendering."""

import math

import pytest

from qea import (
    DomainError,
    UnknownMethodError,
    Variation,
    advantage_region,
    curve_csv,
    curve_text,
    default_scenario,
    disruption_table,
    qea_curve_series,
    render_csv,
    render_text,
    robustness_table,
    verdict_key,
    verdict_text,
)


class TestDisruptionTable:
    def test_default_grid(self):
        s = default_scenario()
        tbl = disruption_table(s, ["qpe-n3", "qpe-n2"], ["DFT", "HF", "MP2", "CCSD", "CCSDT", "FCI"])
        assert tbl.cells[("FCI", "qpe-n3")].verdict == 2032
        fci_n2 = tbl.cells[("FCI", "qpe-n2")]
        assert verdict_key(fci_n2, s.horizon) <= 2032
        assert verdict_text(tbl.cells[("DFT", "qpe-n3")], s.horizon) == "N/A"
        assert verdict_text(tbl.cells[("HF", "qpe-n3")], s.horizon) == ">2050"

    def test_one_by_one(self):
        s = default_scenario()
        tbl = disruption_table(s, ["qpe-n3"], ["FCI"])
        assert list(tbl.cells) == [("FCI", "qpe-n3")]

    def test_empty_lists_rejected(self):
        with pytest.raises(DomainError):
            disruption_table(default_scenario(), [], ["FCI"])

    def test_unknown_method(self):
        with pytest.raises(UnknownMethodError):
            disruption_table(default_scenario(), ["qpe-n3"], ["HF3"])

    def test_rendering_is_deterministic(self):
        s = default_scenario()
        tbl = disruption_table(s, ["qpe-n3", "qpe-n2"], ["CCSD", "FCI"])
        assert render_csv(tbl) == render_csv(disruption_table(s, ["qpe-n3", "qpe-n2"], ["CCSD", "FCI"]))
        assert render_text(tbl) == render_text(tbl)

    def test_each_rendered_year_cross_checks(self):
        s = default_scenario()
        tbl = disruption_table(s, ["qpe-n3", "qpe-n2"], ["CCSD", "CCSDT", "FCI"])
        for (c, q), result in tbl.cells.items():
            if not isinstance(result.verdict, int):
                continue
            year = result.verdict
            assert advantage_region(s.algorithm(c), s.algorithm(q), year, s).nonempty
            if year > s.start_year:
                assert not advantage_region(s.algorithm(c), s.algorithm(q), year - 1, s).nonempty

    def test_csv_shape(self):
        s = default_scenario()
        out = render_csv(disruption_table(s, ["qpe-n3"], ["FCI"]))
        lines = out.split("\r\n")
        assert lines[0].startswith("# scenario sha256=")
        assert lines[1] == "classical,quantum,verdict,binding_constraint"
        assert lines[2].startswith("FCI,qpe-n3,2032,")


class TestRobustnessTable:
    def test_columns_and_directions(self):
        s = default_scenario()
        variations = [
            Variation(name="logical=0.1", logical_qubits=0.1),
            Variation(name="quantum_time=10", quantum_time=10.0),
            Variation(name="classical_time=0.001", classical_time=1e-3),
        ]
        tbl = robustness_table(s, variations, "qpe-n3", ["HF", "MP2", "CCSD", "CCSDT", "FCI"])
        assert tbl.columns == ("baseline", "logical=0.1", "quantum_time=10", "classical_time=0.001")
        for c in tbl.classical_methods:
            base = verdict_key(tbl.cells[(c, "baseline")], s.horizon)
            assert verdict_key(tbl.cells[(c, "logical=0.1")], s.horizon) <= base
            assert verdict_key(tbl.cells[(c, "quantum_time=10")], s.horizon) >= base
            assert verdict_key(tbl.cells[(c, "classical_time=0.001")], s.horizon) >= base

    def test_fci_fewer_qubits_moves_earlier(self):
        s = default_scenario()
        tbl = robustness_table(s, [Variation(name="logical=0.1", logical_qubits=0.1)], "qpe-n3", ["FCI"])
        assert tbl.cells[("FCI", "logical=0.1")].verdict <= tbl.cells[("FCI", "baseline")].verdict

    def test_identity_column_equals_baseline(self):
        s = default_scenario()
        tbl = robustness_table(s, [Variation(name="id")], "qpe-n3", ["CCSD", "FCI"])
        for c in tbl.classical_methods:
            assert tbl.cells[(c, "id")] == tbl.cells[(c, "baseline")]

    def test_csv_has_variation_column(self):
        s = default_scenario()
        out = render_csv(robustness_table(s, [Variation(name="id")], "qpe-n3", ["FCI"]))
        header = out.split("\r\n")[1]
        assert header == "classical,quantum,variation,verdict,binding_constraint"


class TestCurveSeries:
    def test_threshold_monotone_down_with_faster_quantum(self):
        s = default_scenario()  # quantum factor 2.59 > classical 1.4
        points = qea_curve_series(s, "CCSD", "qpe-n3", 2025, 2050, 1)
        thresholds = [p.threshold_n for p in points]
        assert all(b <= a for a, b in zip(thresholds, thresholds[1:]))

    def test_single_transition(self):
        s = default_scenario()
        points = qea_curve_series(s, "FCI", "qpe-n3", 2025, 2050, 1)
        flags = [p.region_nonempty for p in points]
        transitions = sum(1 for a, b in zip(flags, flags[1:]) if (a, b) == (False, True))
        assert transitions <= 1
        first_true = next(p.year for p in points if p.region_nonempty)
        assert first_true == 2032

    def test_zero_length_range(self):
        s = default_scenario()
        points = qea_curve_series(s, "CCSD", "qpe-n3", 2030, 2030, 1)
        assert len(points) == 1
        assert points[0].year == 2030

    def test_fractional_step(self):
        s = default_scenario()
        points = qea_curve_series(s, "CCSD", "qpe-n3", 2025, 2027, 0.5)
        assert [p.year for p in points] == [2025.0, 2025.5, 2026.0, 2026.5, 2027.0]

    def test_envelope_fields_consistent(self):
        s = default_scenario()
        for p in qea_curve_series(s, "CCSD", "qpe-n3", 2025, 2045, 5):
            assert p.max_feasible_n == min(p.qubit_limited_n, p.deadline_limited_n)
            if p.threshold_n is not None:
                assert p.region_nonempty == (math.ceil(p.threshold_n) <= p.max_feasible_n)

    def test_never_threshold_renders_empty_csv_field(self):
        s = default_scenario()
        points = qea_curve_series(s, "DFT", "qpe-n3", 2025, 2026, 1)
        body = curve_csv(points, s).split("\r\n")
        assert body[1] == "year,threshold_n,qubit_limited_n,deadline_limited_n,max_feasible_n,region_nonempty"
        assert body[2].split(",")[1] == ""
        text = curve_text(points, s)
        assert "-" in text.split("\n")[2]

    def test_bad_ranges(self):
        s = default_scenario()
        with pytest.raises(DomainError):
            qea_curve_series(s, "CCSD", "qpe-n3", 2030, 2025, 1)
        with pytest.raises(DomainError):
            qea_curve_series(s, "CCSD", "qpe-n3", 2025, 2030, 0)
