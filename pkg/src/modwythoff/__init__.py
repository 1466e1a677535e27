"""modwythoff: exact solver and optimal strategy for modular Wythoff's game.

Two piles of tokens; a move removes any positive amount from one pile,
or positive amounts congruent modulo m from both piles; whoever cannot
move loses.  The P-positions form a finite set of 2*floor(m/phi) + 1
classic Wythoff pairs, enabling O(1) classification and a constructive
winning move.  An independent retrograde oracle validates the closed
form on bounded boards.  Everything is exact integer arithmetic; no
floats anywhere.
"""

from .beatty import (
    INDEX_CAP,
    floor_div_phi,
    isqrt,
    lower_wythoff,
    lower_wythoff_inverse,
    upper_wythoff,
    upper_wythoff_inverse,
)
from .modular import (
    Move,
    MoveKind,
    classify,
    compose_type2,
    is_legal,
    legal_moves,
    modular_p_set,
    winning_move,
)
from .oracle import (
    BoardLabels,
    classic_wythoff_labels,
    p_positions_of,
    solve_fast,
    solve_naive,
)
from .verify import (
    VerificationReport,
    all_pass,
    p_position_table,
    reports_to_csv,
    verify_m,
    verify_range,
)
from .wythoff import (
    Position,
    PPositionSet,
    is_wythoff_p,
    wythoff_p_set,
    wythoff_recursive_p_set,
)

__version__ = "0.1.0"

__all__ = [
    "INDEX_CAP",
    "BoardLabels",
    "Move",
    "MoveKind",
    "PPositionSet",
    "Position",
    "VerificationReport",
    "all_pass",
    "classic_wythoff_labels",
    "classify",
    "compose_type2",
    "floor_div_phi",
    "is_legal",
    "is_wythoff_p",
    "isqrt",
    "legal_moves",
    "lower_wythoff",
    "lower_wythoff_inverse",
    "modular_p_set",
    "p_position_table",
    "p_positions_of",
    "reports_to_csv",
    "solve_fast",
    "solve_naive",
    "upper_wythoff",
    "upper_wythoff_inverse",
    "verify_m",
    "verify_range",
    "winning_move",
    "wythoff_p_set",
    "wythoff_recursive_p_set",
]
