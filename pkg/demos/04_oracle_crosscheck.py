"""Trust, but verify: brute force against the closed form.

The retrograde oracle knows only the move rules; it labels every cell
of a bounded board by backward induction.  The harness compares its P
set against the closed form, the count formula, the subset-of-Wythoff
property, and spot-checks every winning move it can see.
"""

from modwythoff import p_positions_of, reports_to_csv, solve_fast, verify_range
from modwythoff.verify import all_pass

reports = verify_range(1, 20, box_factor=3.0)
for r in reports:
    print(r.to_text())
print("all pass:", all_pass(reports))

print("\nthe same table as CSV:")
print(reports_to_csv(reports[:6]))

# What the oracle actually sees for m=4: a tiny island of P cells
# surrounded by N in every direction.
m, n = 4, 12
labels = solve_fast(m, n)
print(f"oracle board for m={m} on [0,{n}]^2 (P marked *):")
for y in range(n, -1, -1):
    print(f"{y:3d} |" + "".join(" *" if labels.is_p(x, y) else " ." for x in range(n + 1)))
print("     " + "".join(f"{x:2d}" for x in range(n + 1)))
print("P cells:", p_positions_of(labels))
