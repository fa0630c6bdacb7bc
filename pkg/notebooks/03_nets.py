# %% [markdown]
# # Translation nets from partial congruence partitions
#
# Three cyclic subgroups of order 6 in C6 x C6 with pairwise trivial
# intersection give a (6,3)-net whose collinearity graph is strongly regular.

# %%
import numpy as np

from schurlab.groups import make_group
from schurlab.nets import (build_net, collinearity_graph, eigenvalues, find_pcps,
                           line_clique_check, srg_formula, srg_parameters,
                           weak_automorphism_group)

G = make_group([6, 6])
pcps = find_pcps(G, 3, up_to_aut=True)
print(len(pcps), pcps[0].to_json())

# %%
net = build_net(pcps[0])
adj = collinearity_graph(net)
print(srg_parameters(adj), srg_formula(6, 3))
A = np.array(adj)
print((A @ A == 9 * np.eye(36) + 6 * np.ones((36, 36))).all())
print(eigenvalues(adj))

# %%
# the 18 lines are the only 6-cliques
print(line_clique_check(net))
print(weak_automorphism_group(net).order())
