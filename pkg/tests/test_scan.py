"""Sweep driver, resonance finder, CSV emission, config parsing."""

import math
import pathlib

import pytest

from kgbarrier import (
    ConfigError,
    DomainError,
    ScanError,
    ScanRow,
    ScanSpec,
    emit_csv,
    find_resonances,
    format_csv,
    read_config,
    read_csv_rows,
    run_scan,
)

FIXED = {"E": 2.0, "a": 0.5, "x0": -1.0}


def spec(**overrides):
    base = dict(
        sweep_variable="V0", start=0.0, stop=10.0, step=0.01, fixed=FIXED, engine="matcher"
    )
    base.update(overrides)
    return ScanSpec(**base)


class TestSpec:
    def test_grid_is_inclusive(self):
        assert len(spec().grid()) == 1001
        assert spec().grid()[-1] == pytest.approx(10.0, abs=1e-12)

    def test_degenerate_range_single_row(self):
        s = spec(start=1.0, stop=1.004, step=0.01)
        assert s.grid() == [1.0]

    def test_validation(self):
        with pytest.raises(DomainError):
            spec(sweep_variable="mass")
        with pytest.raises(DomainError):
            spec(engine="guess")
        with pytest.raises(DomainError):
            spec(start=2.0, stop=1.0)
        with pytest.raises(DomainError):
            spec(step=-0.1)
        with pytest.raises(DomainError):
            spec(fixed={"E": 2.0, "a": 0.5})
        with pytest.raises(DomainError):
            spec(fixed={"E": 2.0, "a": 0.5, "x0": -1.0, "V0": 3.0})


class TestRunScan:
    def test_figure_sweep_shape(self):
        result = run_scan(spec())
        # 1001 grid points; V0 = 1 and 3 are q = 0 degeneracies at E = 2.
        assert len(result.rows) == 999
        assert len(result.skipped) == 2
        assert [v for v, _ in result.skipped] == [1.0, 3.0]
        assert result.rows[0].swept_value == 0.0
        assert result.rows[0].T == pytest.approx(1.0, abs=1e-12)
        values = [row.swept_value for row in result.rows]
        assert values == sorted(values)

    def test_errors_aggregate_below_threshold(self):
        # Sweeping E across the sub-threshold region: points with E <= 1
        # are invalid-parameter errors, not silent drops.
        s = spec(sweep_variable="E", start=0.95, stop=2.0, step=0.05,
                 fixed={"V0": 0.4, "a": 0.5, "x0": -1.0})
        result = run_scan(s)
        assert len(result.errors) == 2  # E = 0.95, 1.0
        assert len(result.rows) + len(result.skipped) == 20

    def test_too_many_errors_fails(self):
        s = spec(sweep_variable="E", start=0.05, stop=0.95, step=0.05,
                 fixed={"V0": 0.4, "a": 0.5, "x0": -1.0})
        with pytest.raises(ScanError):
            run_scan(s)

    def test_both_engine_reports_crosscheck(self):
        s = spec(start=0.3, stop=0.7, step=0.2, engine="both")
        result = run_scan(s)
        assert result.crosscheck_max_delta_r is not None
        assert result.crosscheck_max_delta_r <= 1e-6
        assert all(row.engine == "both" for row in result.rows)

    def test_analytic_engines_skip_their_degeneracies(self):
        s = spec(
            start=0.0, stop=6.0, step=0.05, engine="analytic_kg",
            fixed={"E": 3.0, "a": 1e-3, "x0": -3.0},
        )
        result = run_scan(s)
        assert [v for v, _ in result.skipped] == [2.0, 4.0]


class TestFindResonances:
    def test_monotone_rows_no_peaks(self):
        rows = [ScanRow(i * 0.1, 0.0, 1.0 - 0.01 * i, 0.0, "matcher") for i in range(20)]
        assert find_resonances(rows) == []

    def test_parabolic_refinement(self):
        # Samples of a parabola peaking at 1.55 with T_max = 1.
        def t_of(v):
            return 1.0 - 0.1 * (v - 1.55) ** 2

        rows = [ScanRow(v, 1 - t_of(v), t_of(v), 0.0, "x") for v in
                [1.0 + 0.1 * i for i in range(11)]]
        peaks = find_resonances(rows)
        assert len(peaks) == 1
        assert peaks[0][0] == pytest.approx(1.55, abs=1e-12)
        assert peaks[0][1] == pytest.approx(1.0, abs=1e-12)

    def test_threshold_excludes_low_peaks(self):
        def t_of(v):
            return 0.9 - (v - 1.0) ** 2

        rows = [ScanRow(v, 0, t_of(v), 0.0, "x") for v in [0.5 + 0.1 * i for i in range(11)]]
        assert find_resonances(rows) == []
        assert len(find_resonances(rows, eps=0.2)) == 1

    def test_wider_top_has_at_least_as_many_peaks(self):
        def count(x0):
            fixed = {"E": 2.0, "a": 0.5, "x0": x0}
            return len(find_resonances(run_scan(spec(fixed=fixed)).rows))

        narrow, wide = count(-1.0), count(-2.0)
        assert narrow >= 1
        assert wide >= narrow

    def test_kg_square_barrier_root_found(self):
        s = spec(
            start=0.0, stop=6.0, step=0.01, engine="analytic_kg",
            fixed={"E": 3.0, "a": 1e-3, "x0": -3.0},
        )
        peaks = find_resonances(run_scan(s).rows)
        target = 3.0 - math.sqrt(1.0 + math.pi**2 / 9.0)
        assert any(abs(v - target) <= 1e-3 for v, _ in peaks)


class TestCsv:
    def test_header_only_for_empty_rows(self, tmp_path):
        path = tmp_path / "empty.csv"
        emit_csv([], path)
        assert path.read_text() == "swept_value,R,T,unitarity_residual,engine\n"

    def test_round_trip_preserves_12_digits(self, tmp_path):
        result = run_scan(spec(start=0.2, stop=0.8, step=0.2))
        path = tmp_path / "roundtrip.csv"
        emit_csv(result, path)
        back = read_csv_rows(path)
        assert len(back) == len(result.rows)
        for row, orig in zip(back, result.rows):
            assert row.swept_value == pytest.approx(orig.swept_value, rel=1e-11)
            assert row.R == pytest.approx(orig.R, rel=1e-11, abs=1e-12)
            assert row.T == pytest.approx(orig.T, rel=1e-11)
            assert row.engine == orig.engine

    def test_determinism(self):
        s = spec(start=0.0, stop=1.5, step=0.05)
        assert format_csv(run_scan(s)) == format_csv(run_scan(s))

    def test_newlines_and_format(self, tmp_path):
        result = run_scan(spec(start=0.2, stop=0.4, step=0.1))
        path = tmp_path / "fmt.csv"
        emit_csv(result, path)
        raw = path.read_bytes()
        assert b"\r" not in raw
        lines = raw.decode().splitlines()
        assert lines[0] == "swept_value,R,T,unitarity_residual,engine"
        assert lines[1].split(",")[4] == "matcher"


class TestConfig:
    def _write(self, tmp_path, text):
        path = tmp_path / "sweep.conf"
        path.write_text(text)
        return path

    GOOD = """
# comment line
sweep = V0
start = 0.0
stop = 2.0          # inline comment
step = 0.5
engine = matcher
E = 2.0
a = 0.5
x0 = -1.0
"""

    def test_parses_valid_config(self, tmp_path):
        s = read_config(self._write(tmp_path, self.GOOD))
        assert s.sweep_variable == "V0"
        assert s.fixed == {"E": 2.0, "a": 0.5, "x0": -1.0}
        assert s.engine == "matcher"

    def test_unknown_key_names_line(self, tmp_path):
        path = self._write(tmp_path, self.GOOD + "mass = 1.0\n")
        with pytest.raises(ConfigError, match=r":11:.*mass"):
            read_config(path)

    def test_malformed_line_names_line(self, tmp_path):
        path = self._write(tmp_path, "sweep V0\n")
        with pytest.raises(ConfigError, match=r":1:"):
            read_config(path)

    def test_non_numeric_value(self, tmp_path):
        path = self._write(tmp_path, self.GOOD.replace("step = 0.5", "step = fast"))
        with pytest.raises(ConfigError, match="step"):
            read_config(path)

    def test_swept_variable_must_not_be_fixed(self, tmp_path):
        path = self._write(tmp_path, self.GOOD + "V0 = 3.0\n")
        with pytest.raises(ConfigError, match="V0"):
            read_config(path)

    def test_missing_key(self, tmp_path):
        path = self._write(tmp_path, self.GOOD.replace("x0 = -1.0", ""))
        with pytest.raises(ConfigError, match="x0"):
            read_config(path)

    def test_duplicate_key(self, tmp_path):
        path = self._write(tmp_path, self.GOOD + "E = 3.0\n")
        with pytest.raises(ConfigError, match="duplicate"):
            read_config(path)

    def test_shipped_configs_parse(self):
        configs = pathlib.Path(__file__).resolve().parents[1] / "configs"
        parsed = [read_config(p) for p in sorted(configs.glob("*.conf"))]
        assert len(parsed) == 4
