# %% [markdown]
# # Walking through the cone
#
# Start from a chamber whose quotient is a product of projective planes and
# walk in a straight line to the target, correcting the Poincaré polynomial
# at each wall met.

# %%
import random

import numpy as np

from p2betti import DegeneratePathError, chamber_poincare, crossing_delta, find_crossings, reference
from p2betti.crossing import delta_from_reduced
from p2betti.stability import gamma_c_all

start, p0 = reference(7)
target = (12, 9, 7, 5, 4, 3, 1)
print("reference", start, "->", p0)
try:
    find_crossings(start, target)
except DegeneratePathError as exc:
    print("straight segment is degenerate:", exc)

# %% [markdown]
# The symmetric reference makes many walls meet at one point of the segment.
# Scaling both ends by 101 and nudging each weight by a little keeps both
# endpoints in their chambers but separates the walls.

# %%
def nudge(v, rng):
    signs = np.sign(gamma_c_all(v))
    while True:
        w = tuple(101 * x + rng.randint(-2, 2) for x in v)
        if (np.sign(gamma_c_all(w)) == signs).all():
            return w


rng = random.Random(1)
while True:
    a, b = nudge(start.as_ints(), rng), nudge(target, rng)
    try:
        plan = find_crossings(a, b)
        break
    except DegeneratePathError:
        continue

poly = p0
for c in plan.crossings:
    reduced = [w for i, w in enumerate(c.wall_point.integers(), 1) if i not in c.subset]
    step = c.direction * delta_from_reduced(7, c.subset, reduced)
    poly = poly + step
    if step:
        print(f"s={float(c.s):.4f}  K={str(c.subset):12} {c.direction:+d}  change {step}")
print("accumulated      :", poly)
print("chamber_poincare :", chamber_poincare(target))

# %% [markdown]
# Crossing the single wall {1,7} between two neighbouring chambers changes
# the polynomial by `eps * Q * IP(Z)`:

# %%
hi = chamber_poincare((8, 4, 4, 4, 4, 4, 1))
lo = chamber_poincare((9, 4, 4, 4, 4, 3, 1))
print("difference       :", hi - lo)
print("predicted change :", crossing_delta((9, 4, 4, 4, 4, 4, 1), [1, 7]))
