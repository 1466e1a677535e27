"""Golden-ratio arithmetic without floating point.

Everything downstream (P sets, classification, strategy) rests on four
integer functions: floor(k*phi), floor(k*phi^2), floor(m/phi), and the
inverse lookups.  This script shows them side by side and checks the
Beatty partition property on a small range.
"""

from modwythoff import (
    floor_div_phi,
    lower_wythoff,
    lower_wythoff_inverse,
    upper_wythoff,
    upper_wythoff_inverse,
)

print("k                :", *[f"{k:3d}" for k in range(1, 16)])
print("floor(k*phi)     :", *[f"{lower_wythoff(k):3d}" for k in range(1, 16)])
print("floor(k*phi^2)   :", *[f"{upper_wythoff(k):3d}" for k in range(1, 16)])
print()
print("m                :", *[f"{m:3d}" for m in range(1, 16)])
print("floor(m/phi)     :", *[f"{floor_div_phi(m):3d}" for m in range(1, 16)])
print()

# The two sequences partition the positive integers: every n is exactly
# one of floor(k*phi) or floor(k*phi^2).
rows = []
for n in range(1, 26):
    lo = lower_wythoff_inverse(n)
    up = upper_wythoff_inverse(n)
    assert (lo is None) != (up is None)
    side = f"lower[{lo}]" if lo is not None else f"upper[{up}]"
    rows.append(f"{n:3d} = {side}")
print("Beatty partition of 1..25:")
for i in range(0, len(rows), 5):
    print("   ", "   ".join(rows[i : i + 5]))

# Exactness scales: no float could do this at 10^12.
k = 10**12
v = lower_wythoff(k)
print(f"\nfloor({k} * phi) = {v}")
assert lower_wythoff_inverse(v) == k
print("inverse lookup round-trips at that scale; all integer arithmetic.")
