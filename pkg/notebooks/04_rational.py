# %% [markdown]
# # Rational S-rings over C_p^2 x C_q^2
#
# Rational S-rings are unions of the (p+2)(q+2) trace cells. A candidate is
# written as a letter matrix; each letter is a union of cells.

# %%
from schurlab.rational import (analyze_matrix, matrix_to_partition, named_matrix,
                               primitive_rational_search)

M2 = named_matrix("M2", 3, 5)
for row in M2:
    print(" ".join(row))

# %% [markdown]
# M2 and M5 fail the product axiom: two elements of the same class receive
# different coefficients in Y^2. The gap is checked by raw convolution.

# %%
for which in ("M2", "M5"):
    r = analyze_matrix(which, 3, 5)
    print(which, r["c_h"], r["c_h_prime"], r["gap"])

# %%
# the other four carry a basic set with a nontrivial radical
for which in ("M1", "M3", "M4", "M6"):
    r = analyze_matrix(which, 3, 5)
    print(which, r["kind"], r["witness_order"])

# %% [markdown]
# Exhaustive search over dominance matrices at (3,5), about a minute.
# Every primitive survivor contains a union of order-15 subgroups.

# %%
res = primitive_rational_search(3, 5)
print(res["examined"], len(res["survivors"]), res["all_have_pcp_set"])
for s in res["survivors"]:
    A = matrix_to_partition(s["matrix"], 3, 5)
    print(A.rank, A.sizes, s["pcp_letters"])
