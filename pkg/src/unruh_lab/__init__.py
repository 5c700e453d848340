"""Fermionic communication channels between an inertial sender and an accelerated receiver.

The package builds the shared quantum, classical, and Werner channel states
beyond the single-mode approximation, reduces them to either Rindler wedge,
and evaluates mutual information, conditional entropy, and the
strong-additivity combination over parameter sweeps.
"""

from .errors import (
    ConvergenceError,
    DomainError,
    LayoutError,
    NormalizationError,
    ShapeError,
    SpectrumError,
    SweepPointError,
    SymmetryError,
    UnruhLabError,
)
from .fock import (
    DensityMatrix,
    Isometry,
    StateVector,
    Subsystem,
    SubsystemLayout,
    apply_isometry,
    basis_state,
    eigvals_hermitian,
    outer_product,
    partial_trace,
    tensor_product,
)
from .measures import (
    JOINT_TRIPARTITE,
    BipartiteSplit,
    TripartiteSplit,
    conditional_entropy,
    entropy_from_eigenvalues,
    mutual_information,
    region_split,
    strong_additivity,
    strong_additivity_swapped,
    subsystem_entropies,
    von_neumann_entropy,
)
from .output import CSV_COLUMNS, OutputFormat, render_csv, write_figure_files
from .states import (
    BELL_ALPHA,
    GAMMA_MAX,
    INERTIAL_LAYOUT,
    JOINT_LAYOUT,
    RINDLER_LAYOUT,
    AccelerationParams,
    BobRegion,
    ChannelFamily,
    ChannelSpec,
    Encoding,
    bob_isometry,
    build_inertial,
    build_joint,
    gamma_from_acceleration,
    reduce_to_region,
    unruh_antiparticle,
    unruh_particle,
    unruh_vacuum,
)
from .sweep import (
    FigurePreset,
    Measure,
    SweepRecord,
    SweepSpec,
    default_gamma_grid,
    evaluate_point,
    figure_preset,
    resolve_threads,
    run_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "AccelerationParams",
    "BELL_ALPHA",
    "BipartiteSplit",
    "BobRegion",
    "CSV_COLUMNS",
    "ChannelFamily",
    "ChannelSpec",
    "ConvergenceError",
    "DensityMatrix",
    "DomainError",
    "Encoding",
    "FigurePreset",
    "GAMMA_MAX",
    "INERTIAL_LAYOUT",
    "Isometry",
    "JOINT_LAYOUT",
    "JOINT_TRIPARTITE",
    "LayoutError",
    "Measure",
    "NormalizationError",
    "OutputFormat",
    "RINDLER_LAYOUT",
    "ShapeError",
    "SpectrumError",
    "StateVector",
    "Subsystem",
    "SubsystemLayout",
    "SweepPointError",
    "SweepRecord",
    "SweepSpec",
    "SymmetryError",
    "TripartiteSplit",
    "UnruhLabError",
    "apply_isometry",
    "basis_state",
    "bob_isometry",
    "build_inertial",
    "build_joint",
    "conditional_entropy",
    "default_gamma_grid",
    "eigvals_hermitian",
    "entropy_from_eigenvalues",
    "evaluate_point",
    "figure_preset",
    "gamma_from_acceleration",
    "mutual_information",
    "outer_product",
    "partial_trace",
    "reduce_to_region",
    "region_split",
    "render_csv",
    "resolve_threads",
    "run_sweep",
    "strong_additivity",
    "strong_additivity_swapped",
    "subsystem_entropies",
    "tensor_product",
    "unruh_antiparticle",
    "unruh_particle",
    "unruh_vacuum",
    "von_neumann_entropy",
    "write_figure_files",
]
