import itertools

import pytest

from schurlab import ci
from schurlab.errors import CapExceeded, IdentityInConnectionSet
from schurlab.groups import make_group
from schurlab.search import find_isomorphism
from schurlab.srings import enumerate_srings, group_ring, rank_two, validate_partition

Z4 = make_group([4])
Z8 = make_group([8])


def test_cayley_construction():
    g = ci.cayley(Z4, [1])
    assert g.arcs() == [(0, 1), (1, 2), (2, 3), (3, 0)]
    assert ci.cayley(Z4, []).arcs() == []
    full = ci.cayley(Z4, [1, 2, 3]).adjacency()
    assert all(full[i][j] == (i != j) for i in range(4) for j in range(4))
    with pytest.raises(IdentityInConnectionSet):
        ci.cayley(Z4, [0, 1])


def test_translations_are_automorphisms():
    G = make_group([2, 4])
    g = ci.cayley(G, [1, 3, 5])
    A = g.adjacency()
    for t in G.elements:
        assert all(A[x][y] == A[G.add(x, t)][G.add(y, t)] for x in G.elements for y in G.elements)


def test_digraph_automorphisms():
    assert ci.digraph_automorphisms(ci.cayley(Z4, [1])).order() == 4
    assert ci.digraph_automorphisms(ci.cayley(make_group([5]), [1, 4])).order() == 10


def test_digraph_isomorphism_negation():
    g1, g2 = ci.cayley(Z4, [1]), ci.cayley(Z4, [3])
    phi = ci.digraph_isomorphism(g1, g2)
    assert phi is not None
    assert ci.digraph_isomorphism(g1, ci.cayley(Z4, [2])) is None


def test_is_ci_subset_trivial_cases():
    for G in (Z4, make_group([2, 2]), make_group([6])):
        assert ci.is_ci_subset(G, [])
        assert ci.is_ci_subset(G, [x for x in G.elements if x])
    assert ci.is_ci_subset(Z4, [1])


def test_z8_non_ci_witness_is_genuine():
    v = ci.is_ci_subset(Z8, [1, 2, 5])
    assert not v.ci
    T = v.witness["T"]
    assert T == (1, 5, 6)
    # T is outside the Aut(Z8)-orbit of S ...
    assert T not in ci.aut_orbit(Z8, (1, 2, 5))
    # ... yet the digraphs are isomorphic
    assert find_isomorphism(ci.cayley(Z8, [1, 2, 5]).adjacency(),
                            ci.cayley(Z8, T).adjacency()) is not None


def test_witness_is_computed_for_the_given_set():
    # {1,2,5} and its image under x -> 3x share an orbit; each gets its own witness
    S2 = tuple(sorted(3 * x % 8 for x in (1, 2, 5)))
    for S in ((1, 2, 5), S2):
        v = ci.is_ci_subset(Z8, S)
        assert v.witness["T"] not in ci.aut_orbit(Z8, S)


@pytest.mark.parametrize("factors", [[4], [2, 2], [6], [5]])
def test_babai_matches_oracle_small(factors):
    G = make_group(factors)
    rest = [x for x in G.elements if x]
    for k in range(len(rest) + 1):
        for S in itertools.combinations(rest, k):
            assert ci.is_ci_subset(G, S).ci == ci.is_ci_subset_oracle(G, S)


def test_dci_verdicts():
    assert ci.is_dci_group(make_group([6]))[0]
    ok, w = ci.is_dci_group(Z8)
    assert not ok and w["T"] is not None
    assert not ci.is_dci_group(make_group([9]))[0]


def test_scan_parallel_matches_serial():
    G = make_group([2, 4])
    reps = ci.scan_representatives(G)
    serial = [v.ci for v in ci.scan(G, reps)]
    ci._VERDICTS.clear()
    par = [v.ci for v in ci.scan(G, reps, jobs=2)]
    assert serial == par
    assert serial.count(False) > 0


def test_caps():
    with pytest.raises(CapExceeded):
        ci.is_ci_subset(make_group([13]), [1])
    with pytest.raises(CapExceeded):
        ci.is_ci_subset_oracle(make_group([11]), [1])


def test_is_ci_sring_examples():
    for G in (Z4, make_group([2, 2]), make_group([6])):
        assert ci.is_ci_sring(group_ring(G))
        assert ci.is_ci_sring(rank_two(G))
    assert ci.is_ci_sring(validate_partition(Z4, [[0], [2], [1, 3]]))


def test_non_ci_sring_exists_over_z8():
    assert not all(ci.is_ci_sring(A) for A in enumerate_srings(Z8))
