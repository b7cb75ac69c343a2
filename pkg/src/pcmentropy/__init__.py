"""Inconsistency analysis of pairwise comparison matrices.

Every comparison matrix, complete or not, induces a family of random walks
over the alternatives; the entropy-production rate of that walk is zero
exactly on consistent matrices and serves as an inconsistency index that
needs no fill-in of missing entries. The package also ships the classical
eigenvalue and harmonic indices, geometric path-averaging completion, a
connectivity-corrected preference scale for incomplete matrices, random
ensembles for index comparison, a CLI, and a session HTTP service.
"""

from .completion import (
    PATH_BUDGET,
    PathSet,
    enumerate_paths,
    harker_fill,
    incomplete_preference_scale,
)
from .errors import (
    ConvergenceError,
    DisconnectedError,
    IncompleteMatrixError,
    MissingEdgeError,
    PathBudgetError,
    PcmError,
    PcmValidationError,
)
from .experiments import (
    GeneratorSpec,
    RequirementCheck,
    StudyResult,
    StudyRow,
    axiom_suite,
    conjecture_check,
    correlation_study,
    generate_random_pcm,
)
from .indices import InconsistencyReport, hci, report, saaty_ci
from .merw import (
    EdgeContribution,
    FluxPoint,
    MerwModel,
    decompose,
    entropy_production,
    flux_curve,
    flux_matrix,
    induce,
    path_log_ratio,
)
from .pcm import (
    AdjacencyGraph,
    Pcm,
    Violation,
    adjacency_of,
    connected_components,
    default_labels,
    is_connected,
    make_pcm,
    parse_pcm,
    validate,
)
from .spectral import SpectralPair, elementwise_pow, perron

__version__ = "0.1.0"

__all__ = [
    "AdjacencyGraph",
    "ConvergenceError",
    "DisconnectedError",
    "EdgeContribution",
    "FluxPoint",
    "GeneratorSpec",
    "IncompleteMatrixError",
    "InconsistencyReport",
    "MerwModel",
    "MissingEdgeError",
    "PATH_BUDGET",
    "PathBudgetError",
    "PathSet",
    "Pcm",
    "PcmError",
    "PcmValidationError",
    "RequirementCheck",
    "SpectralPair",
    "StudyResult",
    "StudyRow",
    "Violation",
    "adjacency_of",
    "axiom_suite",
    "conjecture_check",
    "connected_components",
    "correlation_study",
    "decompose",
    "default_labels",
    "elementwise_pow",
    "entropy_production",
    "enumerate_paths",
    "flux_curve",
    "flux_matrix",
    "generate_random_pcm",
    "harker_fill",
    "hci",
    "incomplete_preference_scale",
    "induce",
    "is_connected",
    "make_pcm",
    "parse_pcm",
    "path_log_ratio",
    "perron",
    "report",
    "saaty_ci",
    "validate",
]
