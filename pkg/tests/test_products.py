import pytest

from schurlab.errors import NotASubgroup, NotAutomorphisms, NotGeneralizedWreath, NotNested
from schurlab.groups import Subgroup, automorphism_group, make_group, power_automorphisms
from schurlab.perms import PermGroup
from schurlab.products import (cayley_equivalent, decompositions, generalized_wreath_check,
                               is_cayley_minimal, is_p_sring, kr_condition, kr_details,
                               star_check, tensor, tensor_in, wreath)
from schurlab.srings import (a_subgroups, enumerate_srings, group_ring, is_cyclotomic,
                             rank_two, subgroups_of, validate_partition)

Z4 = make_group([4])
Z6 = make_group([6])


def sub(*xs):
    return Subgroup(tuple(sorted(xs)))


def test_tensor_of_group_rings():
    T = tensor(group_ring(make_group([2])), group_ring(make_group([3])))
    assert T == group_ring(Z6)


def test_tensor_in_z6():
    # Z6 = {0,3} x {0,2,4}
    A = tensor_in(Z6, [[0], [3]], [[0], [2, 4]])
    assert sorted(A.classes) == [(0,), (1, 5), (2, 4), (3,)]


def test_tensor_rank_multiplies():
    for A1 in enumerate_srings(make_group([4])):
        T = tensor(A1, rank_two(make_group([3])))
        assert T.rank == 2 * A1.rank


def test_star_check():
    A = validate_partition(Z6, [[0], [3], [1, 4], [2, 5]])
    rep = star_check(A, sub(0, 3), Subgroup(Z6.elements))
    assert rep.holds and rep.kind == "star"
    T = tensor_in(Z6, [[0], [3]], [[0], [2, 4]])
    rep = star_check(T, sub(0, 3), sub(0, 2, 4))
    assert rep.kind == "tensor"
    with pytest.raises(NotASubgroup):
        star_check(rank_two(Z6), sub(0, 3), Subgroup(Z6.elements))


def test_star_check_failure_reports_condition():
    # Z4 wreath: V = W = {0,2} fails star-3 for the class {1,3} outside both
    A = validate_partition(Z4, [[0], [2], [1, 3]])
    rep = star_check(A, sub(0, 2), sub(0, 2))
    assert not rep.holds and rep.condition == "star-3" and rep.witness == (1, 3)


def test_generalized_wreath_examples():
    A = validate_partition(Z4, [[0], [2], [1, 3]])
    rep = generalized_wreath_check(A, sub(0, 2), sub(0, 2))
    assert rep.holds and rep.kind == "wreath" and rep.nontrivial
    for B in enumerate_srings(make_group([2, 4])):
        rep = generalized_wreath_check(B, Subgroup(B.group.elements), Subgroup((0,)))
        assert rep.holds and not rep.nontrivial
    T = tensor_in(Z6, [[0], [3]], [[0], [2, 4]])
    rep = generalized_wreath_check(T, sub(0, 3), sub(0, 3))
    # first class in class order outside U that is not a union of L-cosets
    assert not rep.holds and rep.condition == "gw-2" and rep.witness == (1, 5)
    with pytest.raises(NotNested):
        generalized_wreath_check(T, sub(0, 3), sub(0, 2, 4))


def test_wreath_constructor_matches_z4_example():
    W = wreath(group_ring(make_group([2])), group_ring(make_group([2])))
    assert W.group == make_group([2, 2])
    assert W.sizes == (1, 1, 2)


def test_decompositions_are_wreath_checks():
    G = make_group([8])
    subs = subgroups_of(G)
    for A in enumerate_srings(G):
        for U, L in decompositions(A, subs):
            assert generalized_wreath_check(A, U, L).holds
            assert L.order > 1 and U.order < G.order


def test_is_p_sring():
    assert is_p_sring(group_ring(make_group([3, 3])), 3)
    assert is_p_sring(validate_partition(Z4, [[0], [2], [1, 3]]), 2)
    assert not is_p_sring(rank_two(make_group([3, 3])), 3)


def test_cayley_equivalence():
    G = make_group([2, 2])
    neg = tuple(G.neg[x] for x in G.elements)
    K1 = PermGroup(4, [neg])
    K2 = PermGroup(4, [])
    assert cayley_equivalent(G, K1, K2)
    assert cayley_equivalent(G, K1, K1)
    with pytest.raises(NotAutomorphisms):
        cayley_equivalent(G, PermGroup(4, [(1, 0, 2, 3)]), K2)


def test_cayley_minimal_regular_on_generator_class():
    # cyc(<x -> 2x>, Z5) is rank 2 with K regular on {1,2,3,4}
    G = make_group([5])
    A = validate_partition(G, [[0], [1, 2, 3, 4]])
    assert is_cyclotomic(A) and is_cayley_minimal(A)
    # no proper subgroup of the units of Z8 is transitive on {1,3,5,7}
    B = validate_partition(make_group([8]), [[0], [4], [2, 6], [1, 3, 5, 7]])
    assert is_cyclotomic(B) and is_cayley_minimal(B)
    # Aut(C2^2) = S3, but its subgroup of order 3 already has the same orbits
    C = rank_two(make_group([2, 2]))
    assert is_cyclotomic(C) and not is_cayley_minimal(C)


def test_kr_condition_trivial_cases():
    G = make_group([2, 2, 3])
    subs = subgroups_of(G)
    for A in enumerate_srings(G):
        for U, L in decompositions(A, subs):
            d = kr_details(A, U, L)
            if U == L:
                assert kr_condition(A, U, L)
            if d["A_S_is_group_ring"]:
                assert kr_condition(A, U, L)


def test_kr_requires_wreath():
    T = tensor_in(Z6, [[0], [3]], [[0], [2, 4]])
    with pytest.raises(NotGeneralizedWreath):
        kr_details(T, sub(0, 3), sub(0, 3))
