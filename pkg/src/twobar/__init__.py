"""Packing two-bar charts into a unit-height strip."""

from .algorithms import (
    algorithm_a1,
    algorithm_a2,
    baseline_no_union,
    dummy_chart,
    gamma_transform,
    matching_packing,
    run_algorithm,
)
from .atsp import (
    ENGINES,
    AtspSolver,
    SizeLimitError,
    get_engine,
    improve_local_search,
    max_cycle_cover,
    solve_cycle_cover,
    solve_exact,
)
from .graphs import (
    HamCycle,
    UnionDigraph,
    UnionGraph,
    build_g1,
    build_g2,
    cycle_of_packing,
    packing_of_cycle,
)
from .matching import max_cardinality_matching, packing_of_matching
from .model import (
    CellPacking,
    Chart,
    ChartClass,
    Instance,
    InvalidPackingError,
    SequencePacking,
    ValidationResult,
    cell_loads,
    check,
    classify,
    count_unions,
    normalize,
    packing_length,
    union_level,
    validate,
)
from .oracles import (
    OracleResult,
    oracle_bcpp1,
    oracle_bcpp1_bruteforce,
    oracle_general,
    oracle_sequence,
)

__version__ = "0.1.0"
