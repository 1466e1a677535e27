"""Modular Wythoff: move rules, the finite P-position set, and strategy.

The game: two piles of tokens, a fixed modulus m >= 1.  A move either
removes any positive number of tokens from a single pile (Type I), or
removes positive amounts k1, k2 from both piles with k1 = k2 (mod m)
(Type II).  The player who cannot move loses; (0, 0) is the only
terminal position.

The P-positions form the finite set of the first 2*floor(m/phi) + 1
classic Wythoff P-positions, which yields O(1) classification
(`classify`) and a constructive optimal move (`winning_move`) built by
case analysis rather than search.  All functions here are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .beatty import (
    INDEX_CAP,
    floor_div_phi,
    lower_wythoff,
    lower_wythoff_inverse,
    upper_wythoff,
    upper_wythoff_inverse,
)
from .wythoff import Position, PPositionSet, check_position, wythoff_p_set


class MoveKind(Enum):
    TYPE1_PILE1 = "type1_pile1"
    TYPE1_PILE2 = "type1_pile2"
    TYPE2 = "type2"


@dataclass(frozen=True)
class Move:
    """Token removal: k1 from pile 1, k2 from pile 2.

    Structural invariants per kind (checked by `is_legal`, not at
    construction, so that untrusted input can be represented and then
    rejected): TYPE1_PILE1 needs k1 >= 1 and k2 == 0; TYPE1_PILE2 the
    mirror; TYPE2 needs k1, k2 >= 1 and k1 = k2 (mod m).
    """

    kind: MoveKind
    k1: int
    k2: int

    def apply(self, pos: Position) -> Position:
        return (pos[0] - self.k1, pos[1] - self.k2)


def check_modulus(m: int) -> None:
    if m < 1:
        raise ValueError(f"modulus m must be >= 1, got {m}")
    if m > INDEX_CAP:
        raise ValueError(f"modulus m={m} exceeds the supported cap 2**40")


def is_legal(pos: Position, move: Move, m: int) -> bool:
    """True iff `move` satisfies its kind's invariant and fits within `pos`.

    Total: malformed amounts (zero, negative, non-congruent, exceeding a
    pile) yield False rather than an exception.
    """
    check_modulus(m)
    check_position(pos)
    x, y = pos
    k1, k2 = move.k1, move.k2
    if move.kind is MoveKind.TYPE1_PILE1:
        return k1 >= 1 and k2 == 0 and k1 <= x
    if move.kind is MoveKind.TYPE1_PILE2:
        return k2 >= 1 and k1 == 0 and k2 <= y
    return k1 >= 1 and k2 >= 1 and (k1 - k2) % m == 0 and k1 <= x and k2 <= y


def iter_move_amounts(x: int, y: int, m: int) -> Iterator[tuple[int, int]]:
    """Yield (k1, k2) for every legal move from (x, y), exactly once.

    Order (deterministic, relied on by golden tests and the naive
    solver): Type I pile-1 amounts ascending, then Type I pile-2
    ascending, then Type II in lexicographic (k1, k2) order.
    """
    for k1 in range(1, x + 1):
        yield k1, 0
    for k2 in range(1, y + 1):
        yield 0, k2
    for k1 in range(1, x + 1):
        first = k1 % m
        if first == 0:
            first = m
        for k2 in range(first, y + 1, m):
            yield k1, k2


def legal_moves(pos: Position, m: int) -> list[Move]:
    """Every legal move from `pos`, in `iter_move_amounts` order.

    Empty exactly at the terminal position (0, 0).
    """
    check_modulus(m)
    check_position(pos)
    x, y = pos
    moves = []
    for k1, k2 in iter_move_amounts(x, y, m):
        if k2 == 0:
            moves.append(Move(MoveKind.TYPE1_PILE1, k1, 0))
        elif k1 == 0:
            moves.append(Move(MoveKind.TYPE1_PILE2, 0, k2))
        else:
            moves.append(Move(MoveKind.TYPE2, k1, k2))
    return moves


def modular_p_set(m: int) -> PPositionSet:
    """The complete (finite) P-position set for modulus m.

    This is the first 2*floor(m/phi) + 1 classic Wythoff P-positions;
    every other position, inside or outside any bounded board, is an
    N-position.
    """
    check_modulus(m)
    return wythoff_p_set(floor_div_phi(m))


def classify(pos: Position, m: int) -> str:
    """Label `pos` as "P" or "N" in O(1).

    P iff the sorted coordinates (a, b) satisfy b - a <= floor(m/phi)
    and a == floor((b - a) * phi), i.e. the position is a Wythoff
    P-position whose coordinate difference is within the modulus cutoff.
    """
    check_modulus(m)
    check_position(pos)
    x, y = pos
    a, b = (x, y) if x <= y else (y, x)
    d = b - a
    return "P" if d <= floor_div_phi(m) and lower_wythoff(d) == a else "N"


def _sorted_view(pos: Position) -> tuple[int, int, bool]:
    """(q1, q2, swapped) with q1 <= q2; swapped records pile order."""
    x, y = pos
    if x <= y:
        return x, y, False
    return y, x, True


def _type1_on_larger(amount: int, swapped: bool) -> Move:
    # Removes from the q2 pile of the sorted view.
    if swapped:
        return Move(MoveKind.TYPE1_PILE1, amount, 0)
    return Move(MoveKind.TYPE1_PILE2, 0, amount)


def _type2(from_q1: int, from_q2: int, swapped: bool) -> Move:
    if swapped:
        return Move(MoveKind.TYPE2, from_q2, from_q1)
    return Move(MoveKind.TYPE2, from_q1, from_q2)


def winning_move(pos: Position, m: int) -> Move | None:
    """A legal move from `pos` into a P-position, or None iff `pos` is P.

    Deterministic constructive case analysis on the sorted view
    (q1, q2), q1 <= q2, mapped back to the original pile order:

    1. q1 == 0: empty the other pile (Type I).
    2. q1 < m and q1 is an upper Wythoff number u(i): Type I, reduce the
       larger pile to l(i), reaching (u(i), l(i)).
    3. q1 < m, q1 == l(i), q2 > u(i): Type I, reduce the larger pile to
       u(i), reaching (l(i), u(i)).
    4. q1 < m, q1 == l(i), q2 < u(i): equal Type II removal down to
       (l(d), u(d)) where d = q2 - q1 < i (d == 0 reaches (0, 0)).
    5. q1 >= m, r = (q2 - q1) % m <= floor(m/phi): Type II down to
       (l(r), u(r)).
    6. q1 >= m, r > floor(m/phi): Type II down to (u(m-r), l(m-r)),
       the orientation whose difference is -(m-r) = r (mod m).

    Here l(k) = floor(k*phi) and u(k) = l(k) + k.  Every case lands in
    the P set and removes at least one token from each pile it touches;
    irrationality of phi makes each threshold an exact integer test.
    """
    check_modulus(m)
    check_position(pos)
    q1, q2, swapped = _sorted_view(pos)
    am = floor_div_phi(m)
    d = q2 - q1
    if d <= am and lower_wythoff(d) == q1:
        return None  # P-position: every move concedes.

    if q1 == 0:
        return _type1_on_larger(q2, swapped)

    if q1 < m:
        i = lower_wythoff_inverse(q1)
        if i is None:
            j = upper_wythoff_inverse(q1)
            assert j is not None and j >= 1
            return _type1_on_larger(q2 - lower_wythoff(j), swapped)
        ui = upper_wythoff(i)
        if q2 > ui:
            return _type1_on_larger(q2 - ui, swapped)
        # q2 == ui would be a P-position, handled above; here q2 < ui,
        # hence d < i and the equal removal stays positive.
        k = q1 - lower_wythoff(d)
        return _type2(k, k, swapped)

    r = d % m
    if r <= am:
        return _type2(q1 - lower_wythoff(r), q2 - upper_wythoff(r), swapped)
    s = m - r
    return _type2(q1 - upper_wythoff(s), q2 - lower_wythoff(s), swapped)


def compose_type2(mv1: Move, mv2: Move, m: int) -> Move:
    """Combine two consecutive Type II moves into the single equivalent one.

    Sums of congruent amounts are congruent, so (k1+k3, k2+k4) is again
    a Type II move.  Raises ValueError if either input is not a valid
    Type II move for modulus m.
    """
    check_modulus(m)
    for mv in (mv1, mv2):
        if mv.kind is not MoveKind.TYPE2:
            raise ValueError(f"compose_type2 requires Type II moves, got {mv.kind}")
        if mv.k1 < 1 or mv.k2 < 1 or (mv.k1 - mv.k2) % m != 0:
            raise ValueError(f"not a valid Type II move for m={m}: {mv}")
    return Move(MoveKind.TYPE2, mv1.k1 + mv2.k1, mv1.k2 + mv2.k2)
