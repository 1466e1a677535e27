"""The whole point of the modular game: its P-position set is finite.

Adding congruent-removal moves to Wythoff's game collapses the infinite
P-position family down to its first 2*floor(m/phi) + 1 members.  This
script prints the sets for small m and shows the count growing linearly
with the modulus.
"""

from modwythoff import floor_div_phi, modular_p_set, p_position_table

print(p_position_table([1, 2, 3, 4, 5, 6, 7, 8, 9, 10]).to_text())

print("\ncount check (2 * floor(m/phi) + 1):")
for m in (1, 10, 100, 1000, 10**6):
    s = modular_p_set(m)
    assert len(s) == 2 * floor_div_phi(m) + 1
    print(f"  m = {m:>8}: {len(s):>8} P-positions")

# Every member is a classic Wythoff P-position whose smaller coordinate
# stays below m: the Type I moves alone already rule everything else out.
m = 12
print(f"\nm = {m}: the set is the classic family cut off at difference {floor_div_phi(m)}:")
print(" ", sorted(modular_p_set(m).positions()))
