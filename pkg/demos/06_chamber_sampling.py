# %% [markdown]
# # How many chambers for six points?
#
# Sorted integral weight vectors are drawn at random and grouped by the sign
# pattern of the wall functions. The count should never exceed 38.

# %%
from p2betti.sampling import count_chambers

for samples in (1_000, 10_000, 100_000, 1_000_000):
    res = count_chambers(6, samples, max_weight=60, seed=3)
    print(f"{samples:>9} samples: {res.distinct:2d} chambers ({res.in_chambers} draws inside a chamber)")
