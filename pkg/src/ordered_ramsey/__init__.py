"""Workbench for the online ordered Ramsey game.

Builder and Painter strategies on a dense ordered board, an exact minimax
solver for the restricted game, closed-form bound calculators, and a
compiler that turns dense-order builder strategies into equivalent
strategies on a fixed integer board.
"""

from .graphs import (
    DegreeProfile,
    Embedding,
    GraphSpecError,
    OrderedGraph,
    biclique,
    clique,
    contains,
    cover_inequality_check,
    cstar_cycle,
    cycle,
    degree_profile,
    edgeless,
    from_family,
    interval_chromatic_number,
    parse_graph_spec,
    path,
    reverse,
    two_sided_star,
    vertex_cover_number,
)
from .board import (
    BLUE,
    RED,
    GameError,
    GameState,
    MatchUnfinished,
    Transcript,
    TranscriptError,
    export_transcript,
    import_transcript,
    realized_pattern,
    replay_transcript,
    run_match,
)
from .strategies import (
    BUILDER_TOKENS,
    PAINTER_TOKENS,
    StrategyError,
    leaf_elimination_order,
    make_builder,
    make_painter,
    probe_natural_cycle,
)
from .solver import (
    BudgetExceeded,
    INFINITE,
    RamseyNotFound,
    SolveResult,
    ordered_ramsey_number,
    solve_restricted,
    stabilization_scan,
)
from .bounds import (
    BoundReport,
    applicable_bounds,
    erdos_szekeres,
    leaf_recurrence_upper,
    sym_star_reference,
    thm_cycle_biclique_upper,
    thm_degree_lower,
    verify_bounds,
)
from .compiler import (
    DecisionTree,
    compile_to_integer_strategy,
    compute_restriction_bound,
    enumerate_game_tree,
    replay_compiled,
)

__version__ = "0.1.0"
