"""Brute-force retrograde oracle: exact P/N labels on a bounded board.

This module is the independent ground truth used to validate the closed
form.  It knows nothing about the golden ratio: it never imports the
Beatty machinery or the closed-form P sets, only the raw move rules.
Because every move strictly decreases at least one pile and increases
none, a box [0, n_max]^2 is closed under play and the labels computed
on it are exact, not truncation artifacts.

Two tiers:

* `solve_naive` - literal backward induction by full move enumeration.
  Trusted by inspection; reference scale only (n_max <= 60).
* `solve_fast`  - same labels via row/column flags plus a residue-class
  dominance test (a position is Type II-reachable from another iff it
  strictly dominates it in both coordinates and the coordinate
  differences are congruent mod m).  Scales to n_max <= 5000.

A completed BoardLabels is immutable and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .modular import check_modulus, iter_move_amounts

NAIVE_CAP = 60
FAST_CAP = 5000


@dataclass(frozen=True, eq=False)
class BoardLabels:
    """P/N labels for every position (x, y) with 0 <= x, y <= n_max.

    grid[x, y] is True for P, False for N.  grid[0, 0] is always True.
    """

    m: int
    n_max: int
    grid: np.ndarray = field(repr=False)

    def is_p(self, x: int, y: int) -> bool:
        return bool(self.grid[x, y])

    def label(self, x: int, y: int) -> str:
        return "P" if self.grid[x, y] else "N"

    def p_count(self) -> int:
        return int(self.grid.sum())


def _check_bounds(m: int, n_max: int, cap: int, tier: str, hint: str = "") -> None:
    check_modulus(m)
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    if n_max > cap:
        raise ValueError(
            f"n_max={n_max} beyond the {tier} tier (cap {cap}){hint}"
        )


def solve_naive(m: int, n_max: int) -> BoardLabels:
    """Backward induction by full move enumeration at every position.

    A position is N iff some legal move reaches a P position, else P.
    Scan order is x then y ascending; moves only point to
    already-labeled cells because they only decrease coordinates.
    """
    _check_bounds(m, n_max, NAIVE_CAP, "naive", "; use solve_fast")
    size = n_max + 1
    rows = [bytearray(size) for _ in range(size)]
    for x in range(size):
        row = rows[x]
        for y in range(size):
            reaches_p = any(
                rows[x - k1][y - k2] for k1, k2 in iter_move_amounts(x, y, m)
            )
            row[y] = 0 if reaches_p else 1
    grid = np.frombuffer(b"".join(rows), dtype=np.uint8).reshape(size, size)
    return BoardLabels(m, n_max, grid.astype(bool))


def solve_fast(m: int, n_max: int) -> BoardLabels:
    """Same labels as `solve_naive`, at desk scale.

    (x, y) is N iff row x already holds a P with smaller y (a Type I
    move on pile 2 reaches it), or column y holds a P with smaller x
    (Type I on pile 1), or some discovered P (u, v) has u < x, v < y
    and (u - v) = (x - y) (mod m) (Type II reachability).  Otherwise it
    is P and is recorded immediately: a per-row flag, per-column flags,
    and a residue-class bucket list sorted by u (appends arrive in
    ascending x, so no sorting is needed).
    """
    _check_bounds(m, n_max, FAST_CAP, "fast")
    size = n_max + 1
    grid = bytearray(size * size)
    col_has_p = bytearray(size)
    buckets: list[list[tuple[int, int]]] = [[] for _ in range(m)]
    for x in range(size):
        row_has_p = False
        base = x * size
        for y in range(size):
            if row_has_p or col_has_p[y]:
                continue  # N via a Type I move.
            dominated = False
            for u, v in buckets[(x - y) % m]:
                if u < x and v < y:
                    dominated = True  # N via a Type II move.
                    break
            if dominated:
                continue
            grid[base + y] = 1
            row_has_p = True
            col_has_p[y] = 1
            buckets[(x - y) % m].append((x, y))
    arr = np.frombuffer(bytes(grid), dtype=np.uint8).reshape(size, size)
    return BoardLabels(m, n_max, arr.astype(bool))


def classic_wythoff_labels(n_max: int) -> BoardLabels:
    """Labels of classic Wythoff's game on the box.

    Realized as `solve_fast` with m = n_max + 1: within the box, the
    only amounts congruent mod m are equal amounts, so Type II collapses
    to the classic equal-removal move.
    """
    return solve_fast(n_max + 1, n_max)


def p_positions_of(labels: BoardLabels) -> list[tuple[int, int]]:
    """All P positions of the board, in lexicographic order."""
    return [(int(x), int(y)) for x, y in np.argwhere(labels.grid)]
