"""Exact solvers for two-person zero-sum vertex-removal games on graphs:
stacks, two-ended stacks, unbroached paths and cycles ("pizzas"), their
equivalence-class algebra, and 0-1 game machinery.
"""

from .backend import BACKEND
from .board import (
    Board,
    BoardError,
    IllegalMove,
    affine,
    board_stats,
    build_board,
    concat,
    cyc,
    make_board,
    menu,
    parse_shorthand,
    path,
    st,
    tes,
)
from .oracle import (
    best_move,
    outcome_per_move,
    s_value_menu,
    value_auto,
    value_exhaustive,
)
from .intervals import NonIntervalBoard, SizeCapExceeded, value_interval_dp
from .slices import (
    asc_holds,
    classify,
    compose_weights,
    partition_stack,
    partition_tes,
)
from .reduction import (
    ReducedForm,
    optimal_move_concat,
    reduce_concat,
    reduce_stack,
    reduce_tes,
    value_of_reduced,
)
from .cyclepath import (
    cycle_value_via_rotations,
    cycles_equivalent,
    delete_even_plateaus,
    four_ninths_margin,
    gen_extremal,
    mu_bound,
    plateau_points,
    solve_cycle,
    solve_unbroached_path,
)
from .classalg import (
    G0Class,
    canonical_class,
    c_of_g,
    class_distance,
    class_leq,
    class_value,
    independent,
    is_invertible,
    metric_dominates,
    theta,
)
from .zeroone import (
    is_simplistic,
    reduce_e_game,
    safe_moves,
    simplistic_class,
    simplistic_strategy_move,
    simplistic_value,
)

__version__ = "0.1.0"
