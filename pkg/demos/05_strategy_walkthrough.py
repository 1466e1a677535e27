"""Watching the constructive strategy play itself.

From any N position the engine computes one optimal move by case
analysis (no search).  Here it plays both sides of a game: the
"opponent" picks a random legal move, the engine answers into the
P set every time, and the opponent eventually faces (0, 0).
"""

import random

from modwythoff import classify, legal_moves, winning_move
from modwythoff.cli import _describe_move

rng = random.Random(7)
m = 6
pos = (23, 14)
print(f"m = {m}, starting position {pos} is an {classify(pos, m)}-position\n")

mover = "engine"
while True:
    if mover == "engine":
        mv = winning_move(pos, m)
        assert mv is not None, "engine never faces an N position in this game"
        label = "engine  "
    else:
        options = legal_moves(pos, m)
        if not options:
            print("opponent has no move left: engine wins.")
            break
        mv = rng.choice(options)
        label = "opponent"
    pos = mv.apply(pos)
    print(f"{label}: {_describe_move(mv):>45}  ->  {pos}  ({classify(pos, m)})")
    mover = "opponent" if mover == "engine" else "engine"
