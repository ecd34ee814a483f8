"""Identification colorings and mirror symmetry of red-white cycle colorings."""

from .analysis import (
    IdVerdict,
    SymmetryReport,
    central_by_code,
    duplicate_pairs,
    is_id_coloring,
    is_symmetric_about,
    symmetry_report,
)
from .constructions import (
    Factorization,
    factorization,
    least_factor,
    multi_central_coloring,
    sa_coloring,
    single_red_coloring,
)
from .core import (
    Code,
    CycleColoring,
    DomainError,
    PairContext,
    UnsupportedError,
    all_codes,
    central_vertex_of,
    code_of,
    cycle_dist,
    is_prime,
    iter_colorings,
    partner,
)
from .paths import (
    PathColoring,
    is_path_id,
    is_symmetric_path,
    path_code,
    path_id_by_criterion,
    red_leaf_subpath,
)
from .reconstruction import (
    ReconstructionError,
    ReconstructionTrace,
    StepRecord,
    ds_closed_form,
    no_early_stop_bound,
    reconstruct,
)

__version__ = "0.1.0"
