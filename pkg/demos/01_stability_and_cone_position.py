# %% [markdown]
# # Where does a weight vector sit?
#
# A weight vector `m` on n points of the plane decides which configurations
# are (semi)stable. Everything is governed by two linear functions of `m`
# per subset: one for points coinciding, one for points lying on a line.

# %%
from p2betti import cone_position, gamma_c, gamma_l, subset_state, z_strata

m = (9, 4, 4, 4, 4, 4, 1)
print("gamma_c(m, {1,7})       =", gamma_c(m, [1, 7]))
print("gamma_l(m, {2,3,4,5,6}) =", gamma_l(m, [2, 3, 4, 5, 6]))

# %% [markdown]
# Both vanish, so points 1 and 7 may collide exactly when the other five are
# collinear. `m` therefore lies on a wall.

# %%
print(cone_position(m))
for z in z_strata(m):
    print(f"K={z.coincident}  K'={z.collinear}  dim={z.dim}  reduced weights {z.reduced_weights}")

# %% [markdown]
# A chamber has no strictly semistable points; a few degenerate shapes of the
# cone are reported separately.

# %%
for w in [(5, 5, 5, 5, 1, 1), (1, 1, 1, 1, 1, 1), (4, 3, 3, 2), (2, 2, 1, 1), (10, 1, 1, 1)]:
    print(f"{str(w):22} -> {cone_position(w)}")

print(subset_state((5, 5, 5, 5, 1, 1), "collinearity", [1, 2, 3]))
