# %% [markdown]
# # Quotients on walls
#
# A quotient on a wall is singular. A nearby chamber whose map down to it has
# small fibres computes its intersection cohomology.

# %%
from p2betti import chamber_poincare, find_small_resolution, ip, is_small

m = (9, 4, 4, 4, 4, 4, 1)
for cand in [(9, 4, 4, 4, 4, 3, 1), (8, 4, 4, 4, 4, 4, 1)]:
    rep = is_small(m, cand)
    (c,) = rep.per_wall
    print(f"{cand}: fibre P^{c.fiber_dim} over K={c.subset}, small={rep.verdict}")

# %% [markdown]
# A point on three walls at once, and the search that finds a candidate:

# %%
m = (19, 16, 7, 7, 6, 2, 2, 1)
cand = find_small_resolution(m)
rep = is_small(m, cand)
print("candidate", cand)
for c in rep.per_wall:
    print(f"  K={c.subset}  side {c.side:+d}  fibre P^{c.fiber_dim}  allowed {list(c.required_dims)}")
print("IP(m) =", ip(m))
print("same as the candidate's P:", ip(m) == chamber_poincare(cand))
