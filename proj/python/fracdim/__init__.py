"""Box-counting dimension estimation on exact planar sets.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from fracdim._core import (  # noqa: F401
    CountRecord,
    FitResult,
    GeoSet,
    __version__,
    bradley_stage_set,
    compare,
    construction_decomposition_set,
    converge_ratio,
    count_square_mesh,
    count_triangle_mesh,
    cover_count_formula,
    fit_loglog,
    generate,
    make_schedule,
    ratio_estimate,
    read_fracgeo,
    sampling_oracle_count,
    stage_trace_report,
    write_fracgeo,
)

__all__ = [
    "CountRecord",
    "FitResult",
    "GeoSet",
    "__version__",
    "bradley_stage_set",
    "compare",
    "construction_decomposition_set",
    "converge_ratio",
    "count_square_mesh",
    "count_triangle_mesh",
    "cover_count_formula",
    "fit_loglog",
    "generate",
    "make_schedule",
    "ratio_estimate",
    "read_fracgeo",
    "sampling_oracle_count",
    "stage_trace_report",
    "write_fracgeo",
]
