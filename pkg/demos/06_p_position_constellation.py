"""Plot the P-position constellations for a range of moduli.

Each modulus contributes a finite prefix of the two Wythoff beams; as m
grows, the prefix extends.  Saves p_position_constellation.png next to
this script.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from modwythoff import lower_wythoff, modular_p_set

fig, ax = plt.subplots(figsize=(7, 7))
for m, color in ((60, "#c6dbef"), (30, "#6baed6"), (12, "#2171b5"), (5, "#08306b")):
    pts = modular_p_set(m).positions()
    ax.scatter(*zip(*pts), s=30, color=color, label=f"m = {m} ({len(pts)} points)")

bound = lower_wythoff(60) + 2
ax.plot([0, bound], [0, bound], lw=0.5, color="gray", zorder=0)
ax.set_xlim(-1, bound)
ax.set_ylim(-1, bound)
ax.set_xlabel("pile 1")
ax.set_ylabel("pile 2")
ax.set_title("P-positions of the modular game, nested by modulus")
ax.legend()
ax.set_aspect("equal")

out = Path(__file__).with_name("p_position_constellation.png")
fig.savefig(out, dpi=120, bbox_inches="tight")
print(f"wrote {out}")
