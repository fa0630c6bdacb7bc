# %% [markdown]
# # A tour of Schur rings over small abelian groups
#
# Elements are integers; `G.coords(x)` gives the mixed-radix coordinates.

# %%
from schurlab.groups import make_group, all_subgroups
from schurlab.srings import (brute_force_srings, complete_traces, enumerate_srings,
                             is_schurian, validate_partition)

G = make_group([2, 2])
print(G, [G.coords(x) for x in G.elements])
print("subgroups:", [H.members for H in all_subgroups(G)])

# %% [markdown]
# Enumeration by refinement, checked against a naive filter over all partitions.

# %%
for factors in ([4], [5], [2, 2], [6]):
    G = make_group(factors)
    fast = enumerate_srings(G)
    slow = brute_force_srings(G)
    print(G.name, len(fast), len(slow))

# %%
for A in enumerate_srings(make_group([2, 2])):
    print(A.rank, A.classes, "schurian" if is_schurian(A) else "non-schurian")

# %% [markdown]
# A partition that breaks inverse closure is rejected with a typed error.

# %%
try:
    validate_partition(make_group([4]), [[0], [1, 2], [3]])
except Exception as exc:
    print(type(exc).__name__, exc)

# %% [markdown]
# The trace S-ring W(G) of C2^2 x C3^2 has rank (2+2)(3+2).

# %%
W = complete_traces(make_group([6, 6]))
print(W.rank, W.sizes)
