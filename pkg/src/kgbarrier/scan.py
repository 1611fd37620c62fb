"""Parameter sweeps over the scattering coefficients, with CSV output.

A sweep varies exactly one of (V0, E, a, x0) over an inclusive uniform
grid while the other three stay fixed, evaluating one of the engines:

    matcher               matched Whittaker solutions (the default)
    oracle                direct ODE integration (slow, ground truth)
    analytic_kg           square-barrier closed form, relativistic
    analytic_schrodinger  square-barrier closed form, non-relativistic
    both                  matcher rows cross-checked against the oracle

Grid points where the interior basis degenerates (q ~ 0 for the smooth
barrier, k2 ~ 0 for the analytic forms) are skipped and logged, never
fabricated; points with invalid parameters are collected as errors and
the sweep fails only if more than 10% of its points error out.  Grid
points are independent, so evaluation could run concurrently; rows are
always assembled in ascending swept order, and two runs of the same
spec produce identical bytes.

CSV format: header ``swept_value,R,T,unitarity_residual,engine``,
decimal-point floats at 12 significant digits, ``\\n`` newlines.
Skipped points appear as ``# skipped swept_value=... reason=...``
comment lines.  Config files are plain ``key = value`` lines with
``#`` comments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Sequence

from .analytic import Dispersion, square_barrier_rt
from .barrier import ScatterParams, potential_value
from .errors import ConfigError, DegenerateError, DomainError, KGBarrierError, ScanError
from .matcher import Coefficients, coefficients
from .oracle import OracleConfig, integrate_rt

SWEEPABLE = ("V0", "E", "a", "x0")
ENGINES = ("matcher", "oracle", "analytic_kg", "analytic_schrodinger", "both")
CSV_HEADER = "swept_value,R,T,unitarity_residual,engine"

PARAM_KEYS = ("E", "V0", "a", "x0")
ERROR_FRACTION_LIMIT = 0.10


@dataclass(frozen=True)
class ScanSpec:
    """One sweep: variable, inclusive grid, fixed parameters, engine.

    ``fixed`` maps the three non-swept parameter names to their values.
    """

    sweep_variable: str
    start: float
    stop: float
    step: float
    fixed: Mapping[str, float]
    engine: str

    def __post_init__(self) -> None:
        if self.sweep_variable not in SWEEPABLE:
            raise DomainError(f"sweep variable must be one of {SWEEPABLE}, got {self.sweep_variable!r}")
        if self.engine not in ENGINES:
            raise DomainError(f"engine must be one of {ENGINES}, got {self.engine!r}")
        if not (math.isfinite(self.start) and math.isfinite(self.stop) and math.isfinite(self.step)):
            raise DomainError("start/stop/step must be finite")
        if not self.start < self.stop:
            raise DomainError(f"need start < stop, got {self.start!r} >= {self.stop!r}")
        if self.step <= 0.0:
            raise DomainError(f"step must be positive, got {self.step!r}")
        expected = {k for k in PARAM_KEYS if k != self.sweep_variable}
        if set(self.fixed) != expected:
            raise DomainError(f"fixed parameters must be exactly {sorted(expected)}, got {sorted(self.fixed)}")
        object.__setattr__(self, "fixed", dict(self.fixed))

    def grid(self) -> list[float]:
        """start, start+step, ... up to and including stop (fp tolerant)."""
        n = int(math.floor((self.stop - self.start) / self.step + 1e-9))
        return [self.start + i * self.step for i in range(n + 1)]

    def params_at(self, value: float) -> ScatterParams:
        kwargs = dict(self.fixed)
        kwargs[self.sweep_variable] = value
        return ScatterParams(**kwargs)


@dataclass(frozen=True)
class ScanRow:
    swept_value: float
    R: float
    T: float
    unitarity_residual: float
    engine: str


@dataclass
class ScanResult:
    """Rows in ascending swept order plus skip/error bookkeeping."""

    spec: ScanSpec
    rows: list[ScanRow] = field(default_factory=list)
    skipped: list[tuple[float, str]] = field(default_factory=list)
    errors: list[tuple[float, str]] = field(default_factory=list)
    crosscheck_max_delta_r: float | None = None


def _evaluate_point(spec: ScanSpec, value: float) -> tuple[Coefficients, float | None]:
    """Coefficients at one grid point, plus |dR| when cross-checking."""
    p = spec.params_at(value)
    if spec.engine == "matcher":
        return coefficients(p), None
    if spec.engine == "oracle":
        return integrate_rt(lambda x: potential_value(x, p), p.E, OracleConfig.for_barrier(p)), None
    if spec.engine == "analytic_kg":
        return square_barrier_rt(p.E, p.V0, p.x0, Dispersion.KLEIN_GORDON), None
    if spec.engine == "analytic_schrodinger":
        return square_barrier_rt(p.E, p.V0, p.x0, Dispersion.SCHRODINGER), None
    matched = coefficients(p)
    probed = integrate_rt(lambda x: potential_value(x, p), p.E, OracleConfig.for_barrier(p))
    return matched, abs(matched.R - probed.R)


def run_scan(spec: ScanSpec) -> ScanResult:
    """Evaluate the sweep; one row per non-degenerate, valid grid point.

    Raises ScanError when more than 10% of the grid points fail with a
    genuine error (degenerate skips do not count as failures).
    """
    result = ScanResult(spec=spec)
    grid = spec.grid()
    max_delta: float | None = None
    for value in grid:
        try:
            coeff, delta = _evaluate_point(spec, value)
        except DegenerateError as exc:
            result.skipped.append((value, str(exc)))
            continue
        except KGBarrierError as exc:
            result.errors.append((value, f"{type(exc).__name__}: {exc}"))
            continue
        result.rows.append(
            ScanRow(
                swept_value=value,
                R=coeff.R,
                T=coeff.T,
                unitarity_residual=coeff.unitarity_residual,
                engine=spec.engine,
            )
        )
        if delta is not None:
            max_delta = delta if max_delta is None else max(max_delta, delta)
    result.crosscheck_max_delta_r = max_delta
    if len(result.errors) > ERROR_FRACTION_LIMIT * len(grid):
        raise ScanError(
            f"{len(result.errors)} of {len(grid)} sweep points failed "
            f"(first: swept_value={result.errors[0][0]!r}, {result.errors[0][1]})"
        )
    return result


def find_resonances(
    rows: Sequence[ScanRow], eps: float = 1e-3
) -> list[tuple[float, float]]:
    """Transmission peaks with T >= 1 - eps, in ascending swept order.

    A peak is an interior sample that strictly rises from its left
    neighbour and does not fall to its right; its position and height
    are refined by the parabola through the three surrounding samples.
    """
    peaks: list[tuple[float, float]] = []
    for i in range(1, len(rows) - 1):
        t_prev, t_here, t_next = rows[i - 1].T, rows[i].T, rows[i + 1].T
        if not (t_prev < t_here and t_next <= t_here):
            continue
        if t_here < 1.0 - eps:
            continue
        x1, x2, x3 = rows[i - 1].swept_value, rows[i].swept_value, rows[i + 1].swept_value
        denom = (x1 - x2) * (x1 - x3) * (x2 - x3)
        a_coef = (x3 * (t_here - t_prev) + x2 * (t_prev - t_next) + x1 * (t_next - t_here)) / denom
        b_coef = (
            x3 * x3 * (t_prev - t_here)
            + x2 * x2 * (t_next - t_prev)
            + x1 * x1 * (t_here - t_next)
        ) / denom
        if a_coef >= 0.0:
            peaks.append((x2, t_here))
            continue
        xv = -b_coef / (2.0 * a_coef)
        c_coef = t_here - a_coef * x2 * x2 - b_coef * x2
        peaks.append((xv, a_coef * xv * xv + b_coef * xv + c_coef))
    return peaks


def _fmt(value: float) -> str:
    return format(value, ".12g")


def format_csv(result: ScanResult | Sequence[ScanRow]) -> str:
    """CSV text for rows (and skip comments, when available)."""
    if isinstance(result, ScanResult):
        rows = result.rows
        skipped = result.skipped
        crosscheck = result.crosscheck_max_delta_r
    else:
        rows = list(result)
        skipped = []
        crosscheck = None

    events: list[tuple[float, int, str]] = []
    for row in rows:
        line = f"{_fmt(row.swept_value)},{_fmt(row.R)},{_fmt(row.T)},{_fmt(row.unitarity_residual)},{row.engine}"
        events.append((row.swept_value, 0, line))
    for value, reason in skipped:
        events.append((value, 1, f"# skipped swept_value={_fmt(value)} reason={reason}"))
    events.sort(key=lambda item: (item[0], item[1]))

    lines = [CSV_HEADER, *(line for _, _, line in events)]
    if crosscheck is not None:
        lines.append(f"# crosscheck_max_abs_delta_R={_fmt(crosscheck)}")
    return "\n".join(lines) + "\n"


def emit_csv(result: ScanResult | Sequence[ScanRow], path: str | Path) -> None:
    """Write rows (and skip comments, when available) to ``path``."""
    Path(path).write_text(format_csv(result), encoding="utf-8")


def read_csv_rows(path: str | Path) -> list[ScanRow]:
    """Read back a CSV written by ``emit_csv`` (comments dropped)."""
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines or lines[0] != CSV_HEADER:
        raise ConfigError(f"{path}: expected header {CSV_HEADER!r}")
    rows = []
    for line in lines[1:]:
        if not line or line.startswith("#"):
            continue
        v, r, t, res, engine = line.split(",")
        rows.append(ScanRow(float(v), float(r), float(t), float(res), engine))
    return rows


_NUMERIC_KEYS = ("start", "stop", "step", "E", "V0", "a", "x0")
_STRING_KEYS = ("sweep", "engine")


def read_config(path: str | Path) -> ScanSpec:
    """Parse a ``key = value`` sweep configuration file.

    Recognized keys: sweep, engine, start, stop, step plus the three
    parameter names not being swept.  Unknown, duplicate, malformed or
    missing keys raise ConfigError naming the offending line.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"{path}: {exc}") from None
    entries: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in _NUMERIC_KEYS and key not in _STRING_KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        if key in entries:
            raise ConfigError(f"{path}:{lineno}: duplicate key {key!r}")
        if not value:
            raise ConfigError(f"{path}:{lineno}: empty value for {key!r}")
        if key in _NUMERIC_KEYS:
            try:
                float(value)
            except ValueError:
                raise ConfigError(f"{path}:{lineno}: {key!r} needs a number, got {value!r}") from None
        entries[key] = value

    for required in ("sweep", "engine", "start", "stop", "step"):
        if required not in entries:
            raise ConfigError(f"{path}: missing required key {required!r}")
    sweep = entries["sweep"]
    if sweep not in SWEEPABLE:
        raise ConfigError(f"{path}: sweep must be one of {SWEEPABLE}, got {sweep!r}")
    engine = entries["engine"]
    if engine not in ENGINES:
        raise ConfigError(f"{path}: engine must be one of {ENGINES}, got {engine!r}")
    if sweep in entries:
        raise ConfigError(f"{path}: {sweep!r} is the sweep variable and must not be fixed")
    fixed = {}
    for key in PARAM_KEYS:
        if key == sweep:
            continue
        if key not in entries:
            raise ConfigError(f"{path}: missing fixed parameter {key!r}")
        fixed[key] = float(entries[key])
    try:
        return ScanSpec(
            sweep_variable=sweep,
            start=float(entries["start"]),
            stop=float(entries["stop"]),
            step=float(entries["step"]),
            fixed=fixed,
            engine=engine,
        )
    except DomainError as exc:
        raise ConfigError(f"{path}: {exc}") from None
