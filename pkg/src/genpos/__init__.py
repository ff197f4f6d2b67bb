"""Exact-arithmetic toolkit for points in general position and independent
hyperplane sets: rational geometric predicates, censuses of cohyperplanar
tuples and rich flats, arrangement cell enumeration, hypergraph
independent-set extraction and coloring, and grid/combinatorial-line
constructions."""

from .arrangement import (
    Arrangement,
    Cell,
    arrangement_vertices,
    cell_hypergraph,
    enumerate_cells,
    is_independent_set,
    is_simple_arrangement,
    simplicial_cells,
)
from .census import (
    CensusProfile,
    TupleCounts,
    classify_tuples,
    count_cohyperplanar_tuples,
    degeneracy_ratio,
    max_hyperplane_richness,
    naive_cohyperplanar_count,
    pencil_profile,
    rich_flat_profile,
    spanned_flats,
    spanned_hyperplanes,
)
from .geometry import (
    Flat,
    Hyperplane,
    Point,
    PointSet,
    affine_rank,
    dualize,
    generic_projection,
    hyperplane_through,
    is_general_position,
    orientation,
)
from .halesjewett import (
    LineFreeResult,
    SubspaceTemplate,
    Word,
    build_projected_grid,
    contains_line,
    enumerate_lines,
    expand_template,
    grid_point_set,
    max_linefree_subset,
)
from .hypergraphs import (
    Hypergraph,
    SpencerRetriesExhausted,
    exact_max_independent,
    extend_to_maximal,
    greedy_max_independent,
    is_linear,
    is_trianglefree,
    make_linear_trianglefree,
    deletion_target,
    spencer_bound,
    spencer_bound_ceil,
    spencer_deletion,
)
from .independence import (
    BetaRunReport,
    ColoringInfeasibleError,
    coloring_is_proper,
    greedy_coloring,
    randomized_beta_procedure,
    simplicial_cell_hypergraph,
)
from .perturb import PerturbationError, concurrent_tuples, perturb_arrangement
from .pipelines import (
    DichotomyWitness,
    cohyperplanar_hypergraph,
    exact_alpha,
    genpos_or_hyperplane,
    large_genpos_subset,
    validate_witness,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
