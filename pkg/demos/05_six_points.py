# %% [markdown]
# # Six points: a closed form to check against
#
# For six points the answer is P^2 x P^2 blown up in 4 - k points, where k
# counts light triples. The general wall-crossing pipeline must agree.

# %%
import random

from p2betti import count_excluded_collinear_triples, ip, ip_closed_form, singularity_report
from p2betti.six import closed_form_case

for m in [(1, 1, 1, 1, 1, 1), (6, 6, 6, 6, 2, 1), (5, 5, 5, 5, 1, 1), (7, 5, 4, 3, 2, 1)]:
    print(f"{str(m):20} case {closed_form_case(m)}  k={count_excluded_collinear_triples(m)}  "
          f"{ip_closed_form(m)}  pipeline agrees: {ip(m) == ip_closed_form(m)}")

# %% [markdown]
# A small random cross-check (the `verify` command runs this at scale).

# %%
rng = random.Random(0)
checked = 0
while checked < 500:
    m = [rng.randint(1, 30) for _ in range(6)]
    if 3 * max(m) >= sum(m):
        continue
    assert ip(m) == ip_closed_form(m), m
    checked += 1
print(f"{checked} random weight vectors agree")

# %% [markdown]
# Special points of the quotient when 3 divides |m|:

# %%
rep = singularity_report((6, 6, 6, 6, 2, 1))
print("smooth points:", rep.smooth_points, "curves:", rep.curves)
rep = singularity_report((1, 1, 1, 1, 1, 1))
print(len(rep.curves), "curves,", len(rep.triple_points), "triple points")
