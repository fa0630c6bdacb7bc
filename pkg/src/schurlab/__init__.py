"""schurlab: Schur rings over small abelian groups.

Exact, desk-scale computation of S-rings, their automorphism groups, CI tests
for Cayley digraphs, translation nets and rational S-rings over C_p^2 x C_q^2.

Submodules
----------
groups    finite abelian groups, subgroups, sections, group-ring arithmetic
srings    S-ring partitions, enumeration, isomorphisms, traces
perms     permutation groups, transitivity modules, Sup^min
search    individualisation-refinement search on coloured digraphs
products  tensor, star and generalised wreath products
ci        Cayley digraphs, CI tests and DCI scans
nets      partial congruence partitions and translation nets
rational  rational S-rings over C_p^2 x C_q^2
lemmas    instance checks of structural statements
store     result cache
cli       command-line front end
"""

__version__ = "0.1.0"

from .groups import GroupSpec, Subgroup, make_group, parse_group
from .srings import SchurPartition, enumerate_srings, validate_partition
from .perms import PermGroup, transitivity_module

__all__ = ["GroupSpec", "Subgroup", "make_group", "parse_group", "SchurPartition",
           "enumerate_srings", "validate_partition", "PermGroup", "transitivity_module",
           "__version__"]
