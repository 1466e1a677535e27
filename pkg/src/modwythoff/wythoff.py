"""Classic Wythoff's game: P-position construction and O(1) classification.

A position is a pair of nonnegative pile sizes.  The P-positions of the
classic game are (0, 0) together with both orientations of the pairs
(floor(i*phi), floor(i*phi) + i) for i >= 1.  `wythoff_p_set` builds a
finite prefix of that family by the closed form; `wythoff_recursive_p_set`
builds the same prefix by the literal smallest-unused-integer recursion and
exists purely as an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .beatty import INDEX_CAP, lower_wythoff

# An ordered pair of nonnegative pile sizes (pile 1, pile 2).
Position = tuple[int, int]

RECURSION_CAP = 100_000


def check_position(pos: Position) -> None:
    """Validate a position: two nonnegative ints within the index cap."""
    x, y = pos
    if x < 0 or y < 0:
        raise ValueError(f"pile sizes must be nonnegative, got {pos}")
    if x > INDEX_CAP or y > INDEX_CAP:
        raise ValueError(f"pile sizes exceed the supported cap 2**40: {pos}")


@dataclass(frozen=True)
class PPositionSet:
    """A finite prefix of the Wythoff P-position family.

    `entries` holds (index, position) pairs: (0, (0, 0)) once, then for
    each index i in 1..cutoff the orientation (lower, upper) followed by
    (upper, lower).  len(entries) == 2 * cutoff + 1.  Immutable; safe to
    share across threads.
    """

    cutoff: int
    entries: tuple[tuple[int, Position], ...]

    def positions(self) -> list[Position]:
        """Positions in entry order."""
        return [pos for _, pos in self.entries]

    def position_set(self) -> frozenset[Position]:
        return frozenset(pos for _, pos in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, pos: Position) -> bool:
        return pos in self.position_set()


def wythoff_p_set(cutoff: int) -> PPositionSet:
    """First 2*cutoff + 1 Wythoff P-positions, by the closed form."""
    if cutoff < 0:
        raise ValueError(f"cutoff must be nonnegative, got {cutoff}")
    if cutoff > INDEX_CAP:
        raise ValueError(f"cutoff={cutoff} exceeds the supported cap 2**40")
    entries: list[tuple[int, Position]] = [(0, (0, 0))]
    for i in range(1, cutoff + 1):
        a = lower_wythoff(i)
        entries.append((i, (a, a + i)))
        entries.append((i, (a + i, a)))
    return PPositionSet(cutoff, tuple(entries))


def wythoff_recursive_p_set(cutoff: int) -> PPositionSet:
    """Same set as `wythoff_p_set`, by the literal recursion.

    Stage i adds (a, a+i) and (a+i, a) where a is the smallest positive
    integer not appearing in any earlier pair.  Quadratic bookkeeping is
    avoided with a moving scan pointer (the used-coordinate set only
    grows, so the smallest unused value never decreases).  Desk-scale
    only; used as an independent check on the closed form.
    """
    if cutoff < 0:
        raise ValueError(f"cutoff must be nonnegative, got {cutoff}")
    if cutoff > RECURSION_CAP:
        raise ValueError(
            f"cutoff={cutoff} beyond the recursion tier ({RECURSION_CAP}); "
            "use wythoff_p_set"
        )
    entries: list[tuple[int, Position]] = [(0, (0, 0))]
    used: set[int] = {0}
    smallest_unused = 1
    for i in range(1, cutoff + 1):
        while smallest_unused in used:
            smallest_unused += 1
        a = smallest_unused
        used.add(a)
        used.add(a + i)
        entries.append((i, (a, a + i)))
        entries.append((i, (a + i, a)))
    return PPositionSet(cutoff, tuple(entries))


def is_wythoff_p(pos: Position) -> bool:
    """O(1) membership test for the infinite Wythoff P-position family.

    With (a, b) the sorted coordinates and d = b - a, the position is a
    P-position iff a == floor(d * phi).
    """
    check_position(pos)
    x, y = pos
    a, b = (x, y) if x <= y else (y, x)
    return lower_wythoff(b - a) == a
