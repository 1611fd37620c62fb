"""Transmission and reflection of a relativistic spin-0 particle on a
flat-top barrier with exponential edges.

The stationary wave equation is solved exactly in the edge regions in
terms of Whittaker M functions, matched across the barrier, and
cross-validated by a direct ODE-integration oracle and square-barrier
closed forms.
"""

from .analytic import Dispersion, square_barrier_rt, wavenumbers_squared
from .barrier import Kinematics, ScatterParams, kinematics, potential_value, whittaker_index
from .errors import (
    BranchError,
    ConfigError,
    ConvergenceError,
    DegenerateError,
    DomainError,
    KGBarrierError,
    ScanError,
    SingularSystemError,
    StepError,
)
from .matcher import (
    Amplitudes,
    Coefficients,
    coefficients,
    region1_wave,
    region2_wave,
    region3_wave,
    solve_matching,
)
from .oracle import OracleConfig, convergence_check, integrate_rt, load_fixtures, save_fixtures
from .scan import (
    ScanRow,
    ScanSpec,
    emit_csv,
    find_resonances,
    format_csv,
    read_config,
    read_csv_rows,
    run_scan,
)
from .specfun import WhittakerIndex, kummer_m, whittaker_m, whittaker_m_deriv

__version__ = "0.1.0"

__all__ = [
    "Amplitudes",
    "BranchError",
    "Coefficients",
    "ConfigError",
    "ConvergenceError",
    "DegenerateError",
    "Dispersion",
    "DomainError",
    "KGBarrierError",
    "Kinematics",
    "OracleConfig",
    "ScanError",
    "ScanRow",
    "ScanSpec",
    "ScatterParams",
    "SingularSystemError",
    "StepError",
    "WhittakerIndex",
    "coefficients",
    "convergence_check",
    "emit_csv",
    "find_resonances",
    "format_csv",
    "integrate_rt",
    "kinematics",
    "kummer_m",
    "load_fixtures",
    "potential_value",
    "read_config",
    "read_csv_rows",
    "region1_wave",
    "region2_wave",
    "region3_wave",
    "run_scan",
    "save_fixtures",
    "solve_matching",
    "square_barrier_rt",
    "wavenumbers_squared",
    "whittaker_index",
    "whittaker_m",
    "whittaker_m_deriv",
]
