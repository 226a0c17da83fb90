"""PAD placement for UAV-charged wireless sensor networks."""

from ._core import (
    BsNotRemovable,
    Circle,
    CollinearPoints,
    ConfigError,
    Deployment,
    EmptyInput,
    Error,
    InfeasibleParams,
    IoError,
    ParseError,
    Point,
    Scenario,
    UavParams,
    cdc_solve,
    check_connectivity,
    check_coverage,
    d_cover,
    d_max,
    dc_solve,
    dsc_optimize,
    generate,
    is_feasible,
    min_enclosing_circle,
    run_sweep,
    solve,
)

__version__ = "0.1.0"
