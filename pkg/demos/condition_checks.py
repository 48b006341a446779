# %% [markdown]
# When does an ordering reach the lower bound?
#
# The canonical labeling of an ordering attains the bound exactly when the
# main conditions hold.  Swapping two positions usually breaks that.

# %%
import numpy as np

from radiolab.construction import build_ordering
from radiolab.labeling import (
    canonical_labeling,
    check_main_conditions,
    check_sufficient_conditions,
    lower_bound,
    validate,
)

plan = build_ordering(6)
inst = plan.instance
lb = lower_bound(inst.petersen, inst.metrics)
print(check_main_conditions(plan.ordering, inst).render())

# %%
rng = np.random.default_rng(1)
for _ in range(8):
    i, j = (int(v) for v in rng.choice(70, size=2, replace=False))
    o = plan.ordering.swapped(i, j, inst)
    lab = canonical_labeling(o, inst)
    verdict = validate(inst.graph, inst.dist, lab.labels)
    main = check_main_conditions(o, inst).holds
    print(f"swap {i:2d}<->{j:2d}  main={main!s:5}  valid={verdict.valid!s:5}  span-lb={verdict.span - lb}")

# %%
# the (e) route of the sufficient conditions can pass on an ordering whose
# canonical labeling is invalid
o = plan.ordering.swapped(41, 56, inst)
print(check_sufficient_conditions(o, inst, which="e").render())
print("valid:", validate(inst.graph, inst.dist, canonical_labeling(o, inst).labels).valid)
