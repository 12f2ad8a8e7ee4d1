"""Exact generating functions for walks on the linear simplex and the
two-type ring ASEP, with brute-force oracles to check them."""

from .algebra import (
    GapPolynomial,
    MarkedSeries,
    StepSeries,
    series_add,
    series_div,
    series_mul,
    series_shift_down,
    series_sqrt,
)
from .asep import (
    Lambda,
    chain_walk_correspondence,
    gap_projection,
    state_space,
    stationary,
    transition_matrix,
)
from .closed_form import (
    LatticeWalkSpec,
    TwoTypeSpec,
    crossing_gf,
    kernel_gf,
    p_series,
    return_gf,
    return_gf_recursive,
    two_type_gf,
)
from .oracle import endpoint_filtered_counts, two_type_counts, walk_counts

__version__ = "0.1.0"
