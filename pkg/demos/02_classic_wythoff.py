"""Classic Wythoff's game: two ways to the same P-positions.

The P-positions can be built by the smallest-unused-integer recursion
or read off directly as (floor(i*phi), floor(i*phi^2)).  We build both,
confirm they agree, and draw the familiar pair of "beams" of slope phi
and 1/phi on an ASCII board.
"""

from modwythoff import is_wythoff_p, wythoff_p_set, wythoff_recursive_p_set

closed = wythoff_p_set(8)
recursive = wythoff_recursive_p_set(8)
assert closed.entries == recursive.entries

print("first P-position pairs (index: lower, upper):")
for i, (x, y) in closed.entries:
    if x <= y:
        print(f"  {i:2d}: ({x}, {y})")

size = 21
print(f"\nP (marked *) on the [0,{size - 1}]^2 board, O(1) membership test:")
for y in range(size - 1, -1, -1):
    row = "".join(" *" if is_wythoff_p((x, y)) else " ." for x in range(size))
    print(f"{y:3d} |{row}")
print("     " + "".join(f"{x:2d}" for x in range(size)))
