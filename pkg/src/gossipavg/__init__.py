"""Exact simulator and spectral analyzer for synchronous neighbor-averaging
(gossip) dynamics on graphs.

Each round, every node's amount is split equally among its neighbors.
The dynamics, the update matrix and all predicted limits are handled in
exact rational arithmetic; only spectra use floating point.
"""

from .analysis import (
    AsymptoticReport,
    Classification,
    ConvergenceReport,
    CubeContractionLog,
    Trajectory,
    classify,
    cube_elementary_check,
    max_norm_gap,
    predict_limit,
    simulate,
    verify_convergence,
)
from .graphs import (
    EdgeListError,
    Graph,
    build_cube,
    build_cycle,
    from_edge_list,
    is_bipartite,
    is_connected,
    to_edge_list,
    two_coloring,
)
from .mixing import (
    DegenerateGraphError,
    apply,
    as_amounts,
    column_sums,
    identity_matrix,
    matmul,
    matrix_power,
    mixing_matrix,
)
from .rationals import format_rational, parse_amounts, parse_rational
from .spectral import (
    CubeDecomposition,
    InvariantViolation,
    Spectrum,
    SpectrumEntry,
    cube_spectrum_closed_form,
    cycle_spectrum_closed_form,
    decompose_cube_state,
    jacobi_eigenvalues,
    largest_magnitude_below_one,
    slem,
    spectrum_numeric,
    verify_scalar_action,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticReport",
    "Classification",
    "ConvergenceReport",
    "CubeContractionLog",
    "CubeDecomposition",
    "DegenerateGraphError",
    "EdgeListError",
    "Graph",
    "InvariantViolation",
    "Spectrum",
    "SpectrumEntry",
    "Trajectory",
    "apply",
    "as_amounts",
    "build_cube",
    "build_cycle",
    "classify",
    "column_sums",
    "cube_elementary_check",
    "cube_spectrum_closed_form",
    "cycle_spectrum_closed_form",
    "decompose_cube_state",
    "format_rational",
    "from_edge_list",
    "identity_matrix",
    "is_bipartite",
    "is_connected",
    "jacobi_eigenvalues",
    "largest_magnitude_below_one",
    "matmul",
    "matrix_power",
    "max_norm_gap",
    "mixing_matrix",
    "parse_amounts",
    "parse_rational",
    "predict_limit",
    "simulate",
    "slem",
    "spectrum_numeric",
    "to_edge_list",
    "two_coloring",
    "verify_convergence",
    "verify_scalar_action",
]
