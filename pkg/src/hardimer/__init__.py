"""Exact enumeration and generating functions for coloured hard-dimer
configurations on two-colour vertex sequences."""

from .chdc import (
    BLUE,
    RED,
    Configuration,
    Dimer,
    TreeNode,
    TypeTriple,
    candidate_dimers,
    census,
    config_type,
    enumerate_configs,
    from_tree,
    is_valid,
    swap_word,
    to_tree,
    words_of_length,
)
from .derive import DerivationError, derive_blue_rep
from .growth import (
    LyapunovEstimate,
    SpectralReport,
    count_chdc,
    lyapunov_estimate,
    mean_growth,
    mean_letter_matrix,
    spectrum,
    subadditivity_check,
)
from .linrep import LinRep, blue_start_rep, census_rep, red_start_rep, rep_diff
from .poly import B3, ONE, R3, Y, ZERO, Poly
from .series import (
    SeriesSystem,
    TruncatedSeries,
    block_series,
    distance,
    solve_rational,
    solve_recursive,
)
from .transfer import (
    LevelEntry,
    SingularWordError,
    SumReport,
    TransferParams,
    config_sum,
    damped_partial_sums,
    level_sum,
    swap_eval_check,
)

__version__ = "0.1.0"

__all__ = [
    "BLUE",
    "RED",
    "B3",
    "R3",
    "Y",
    "ZERO",
    "ONE",
    "Poly",
    "Configuration",
    "Dimer",
    "TreeNode",
    "TypeTriple",
    "candidate_dimers",
    "census",
    "config_type",
    "enumerate_configs",
    "from_tree",
    "is_valid",
    "swap_word",
    "to_tree",
    "words_of_length",
    "TruncatedSeries",
    "SeriesSystem",
    "block_series",
    "distance",
    "solve_recursive",
    "solve_rational",
    "LinRep",
    "blue_start_rep",
    "red_start_rep",
    "census_rep",
    "rep_diff",
    "DerivationError",
    "derive_blue_rep",
    "config_sum",
    "swap_eval_check",
    "level_sum",
    "damped_partial_sums",
    "TransferParams",
    "SumReport",
    "LevelEntry",
    "SingularWordError",
    "count_chdc",
    "mean_letter_matrix",
    "mean_growth",
    "spectrum",
    "lyapunov_estimate",
    "subadditivity_check",
    "LyapunovEstimate",
    "SpectralReport",
]
