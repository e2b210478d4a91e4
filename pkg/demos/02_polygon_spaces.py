# %% [markdown]
# # Points on the projective line
#
# The strictly semistable locus over a wall is itself a quotient of points on
# P^1. Its Poincaré polynomial comes from a sum over "short" index sets.

# %%
from p2betti import hk_poincare, p1_ip, short_subsets

fam = short_subsets((4, 4, 4, 4, 4))
print("short sets:", [str(J) for J in fam.members])
print("P =", hk_poincare((4, 4, 4, 4, 4)))

# %% [markdown]
# Five equal points give the plane blown up in four points: 1 + 5t^2 + t^4.
# Four equal points sit on a wall of the P^1 problem; the value reported
# there is taken from the neighbouring chamber with the smallest fibres.

# %%
for w in [(1, 1, 1), (2, 1, 1, 1), (1, 1, 1, 1), (3, 1, 1, 1), (5, 1, 1), (3, 3, 2, 2, 2)]:
    print(f"{str(w):18} -> {p1_ip(w)}")
