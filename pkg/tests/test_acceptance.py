"""Acceptance suite: one test and one printed pass/fail line per criterion.

Everything is exact (integer equality / set equality); the only
tolerances are the two wall-clock targets stated inline.  Run with
`pytest tests/test_acceptance.py -s` to see the per-criterion lines.
"""

import random
import time

import numpy as np

from modwythoff.beatty import floor_div_phi, lower_wythoff
from modwythoff.modular import (
    is_legal,
    legal_moves,
    modular_p_set,
    winning_move,
)
from modwythoff.oracle import (
    BoardLabels,
    classic_wythoff_labels,
    p_positions_of,
    solve_fast,
    solve_naive,
)
from modwythoff.service import engine_reply
from modwythoff.wythoff import wythoff_p_set

SMALL_M_TABLES = {
    2: {(0, 0), (1, 2), (2, 1)},
    3: {(0, 0), (1, 2), (2, 1)},
    4: {(0, 0), (1, 2), (2, 1), (3, 5), (5, 3)},
    5: {(0, 0), (1, 2), (2, 1), (3, 5), (5, 3), (4, 7), (7, 4)},
}

FLOOR_DIV_PHI_1_TO_20 = [0, 1, 1, 2, 3, 3, 4, 4, 5, 6, 6, 7, 8, 8, 9, 9, 10, 11, 11, 12]

# One solve_fast(m, 3m) board per m, shared by the two [1, 200] sweeps.
_boards: dict[int, BoardLabels] = {}


def _board(m: int) -> BoardLabels:
    if m not in _boards:
        _boards[m] = solve_fast(m, 3 * m)
    return _boards[m]


def _report(name: str, ok: bool, detail: str = "") -> None:
    tag = "PASS" if ok else "FAIL"
    print(f"{tag}  {name}" + (f"  [{detail}]" if detail else ""))
    assert ok, f"{name}: {detail}"


def test_small_m_p_position_tables():
    t0 = time.perf_counter()
    ok = True
    for m, expected in SMALL_M_TABLES.items():
        closed = modular_p_set(m).position_set()
        oracle = set(p_positions_of(solve_fast(m, 3 * m)))
        ok = ok and closed == expected and oracle == expected
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 1.0
    _report("known P tables for m=2..5, closed form and oracle", ok,
            f"{elapsed * 1000:.0f} ms")


def test_p_sets_are_classic_prefixes():
    ok = all(
        modular_p_set(m).entries == wythoff_p_set(a).entries
        for m, a in ((2, 1), (3, 1), (4, 2), (5, 3))
    )
    _report("P set equals the classic prefix (m,a) in (2,1),(3,1),(4,2),(5,3)", ok)


def test_p_count_formula_sweep():
    t0 = time.perf_counter()
    ok = True
    for m in range(1, 201):
        board = solve_fast(m, 3 * m)
        _boards[m] = board
        ok = ok and board.p_count() == 2 * floor_div_phi(m) + 1
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 60.0
    _report("oracle P count = 2*floor(m/phi)+1 for m in [1,200]", ok,
            f"{elapsed:.1f} s")


def test_closed_form_matches_oracle_sweep():
    ok = True
    for m in range(1, 201):
        oracle = p_positions_of(_board(m))
        closed = sorted(modular_p_set(m).positions())
        # exact list equality: same P set, and every other box cell is N
        ok = ok and oracle == closed
    _report("oracle P set = closed-form set (all else N) for m in [1,200]", ok)


def test_floor_div_phi_sequence():
    got = [floor_div_phi(m) for m in range(1, 21)]
    _report("floor(m/phi) for m=1..20 matches the known sequence",
            got == FLOOR_DIV_PHI_1_TO_20)


def test_classic_wythoff_limit():
    labels = classic_wythoff_labels(500)
    expected = set()
    i = 0
    while lower_wythoff(i) <= 500:
        a, b = lower_wythoff(i), lower_wythoff(i) + i
        if b <= 500:
            expected.add((a, b))
            expected.add((b, a))
        i += 1
    _report("classic-game labels on [0,500]^2 match the closed-form pairs",
            set(p_positions_of(labels)) == expected)


def test_oracle_tier_equivalence():
    ok = True
    for m in range(1, 13):
        for n in range(0, 41):
            if not np.array_equal(solve_naive(m, n).grid, solve_fast(m, n).grid):
                ok = False
    _report("solve_fast = solve_naive label-for-label (m<=12, n<=40)", ok)


def test_strategy_soundness_sweep():
    ok = True
    for m in range(1, 31):
        labels = _board(m)
        for x in range(3 * m + 1):
            for y in range(3 * m + 1):
                mv = winning_move((x, y), m)
                if labels.is_p(x, y):
                    ok = ok and mv is None
                else:
                    ok = ok and (
                        mv is not None
                        and is_legal((x, y), mv, m)
                        and labels.is_p(x - mv.k1, y - mv.k2)
                    )
    _report("winning_move sound vs oracle on [0,3m]^2 for m<=30", ok)


def test_p_set_coordinate_bounds():
    ok = True
    for m in range(1, 501):
        cap_b = lower_wythoff(m)
        cap_d = floor_div_phi(m)
        for a, b in modular_p_set(m).positions():
            if a < b:
                ok = ok and a <= m - 1 and b <= cap_b and b - a <= cap_d
    _report("P coordinates bounded: a<=m-1, b<=floor(m*phi), b-a<=floor(m/phi) for m<=500", ok)


def _play_engine_first(pos, m, rng) -> str:
    """Engine (optimal) vs a random-legal-move opponent; returns the winner."""
    mover = "engine"
    while True:
        if mover == "engine":
            mv = engine_reply(pos, m)
            if mv is None:
                return "opponent"  # engine faces (0,0): cannot move
            mover = "opponent"
        else:
            moves = legal_moves(pos, m)
            if not moves:
                return "engine"
            mv = rng.choice(moves)
            mover = "engine"
        pos = mv.apply(pos)


def test_engine_invincibility():
    rng = random.Random(0x1B1)
    ok = True
    for m in range(1, 11):
        played = 0
        while played < 500:
            pos = (rng.randrange(0, 3 * m + 1), rng.randrange(0, 3 * m + 1))
            if winning_move(pos, m) is None:
                continue  # need an N start
            played += 1
            ok = ok and _play_engine_first(pos, m, rng) == "engine"
    _report("engine first from N starts beats a random opponent (500 games x m=1..10)", ok)
