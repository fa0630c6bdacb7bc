import itertools
import math

import pytest

from schurlab.errors import GroupMismatch, InvalidGroup, NotNested
from schurlab.groups import (Subgroup, abelian_groups, all_subgroups, automorphism_group,
                             generated_subgroup, is_group_automorphism, make_group,
                             parse_group, power_automorphisms, power_multipliers,
                             ring_multiply, section, simple)


def test_make_group_basic_invariants():
    G = make_group([2, 2, 3, 3])
    assert (G.order, G.exponent, G.omega) == (36, 6, 4)
    G = make_group([4])
    assert (G.order, G.exponent, G.omega) == (4, 4, 2)


def test_canonical_form_crt():
    assert make_group([6]) == make_group([2, 3])
    assert make_group([2, 2, 3, 3]) == make_group([6, 6]) == parse_group("C2xC2xC3xC3")
    assert parse_group("Z8") == parse_group("C8") == make_group([8])
    assert parse_group({"factors": [3, 3]}) == parse_group("C3^2")


@pytest.mark.parametrize("bad", ["Q8", "C0", "", "C2xD4"])
def test_parse_group_rejects_garbage(bad):
    with pytest.raises(InvalidGroup):
        parse_group(bad)


def test_make_group_rejects_trivial():
    with pytest.raises(InvalidGroup):
        make_group([1])


def test_element_order_is_lexicographic():
    G = make_group([3, 3])
    coords = [G.coords(i) for i in G.elements]
    assert coords == sorted(coords)
    assert all(G.index(G.coords(i)) == i for i in G.elements)


def test_add_table_is_componentwise():
    G = make_group([2, 6])
    for a, b in itertools.product(G.elements, repeat=2):
        expect = tuple((x + y) % f for x, y, f in zip(G.coords(a), G.coords(b), G.factors))
        assert G.coords(G.add(a, b)) == expect


@pytest.mark.parametrize("factors,count", [([3, 3], 6), ([6], 4), ([2, 2], 5), ([8], 4),
                                           ([2, 4], 8), ([2, 2, 2], 16)])
def test_subgroup_counts(factors, count):
    assert len(all_subgroups(make_group(factors))) == count


def test_subgroups_of_c3xc3_by_order():
    orders = sorted(H.order for H in all_subgroups(make_group([3, 3])))
    assert orders == [1, 3, 3, 3, 3, 9]


def test_subgroups_closed():
    G = make_group([2, 6])
    for H in all_subgroups(G):
        assert 0 in H.member_set
        assert all(G.add(a, b) in H.member_set for a in H.members for b in H.members)
        assert G.order % H.order == 0


@pytest.mark.parametrize("factors,order", [([3, 3], 48), ([8], 4), ([2, 2, 3, 3], 288),
                                           ([2, 2], 6), ([9], 6)])
def test_automorphism_group_order(factors, order):
    assert automorphism_group(make_group(factors)).order() == order


def test_aut_c3xc3_matches_generating_pairs():
    # independent count: ordered pairs (x, y) generating the group
    G = make_group([3, 3])
    pairs = sum(1 for x, y in itertools.product(G.elements, repeat=2)
                if generated_subgroup(G, [x, y]).order == 9)
    assert pairs == (9 - 1) * (9 - 3) == automorphism_group(G).order()


def test_automorphisms_are_homomorphisms():
    G = make_group([2, 4])
    for g in automorphism_group(G).elements():
        assert is_group_automorphism(G, g)


def test_power_automorphisms():
    assert power_automorphisms(make_group([6])).order() == 2
    assert power_multipliers(make_group([6])) == [1, 5]
    G = make_group([2, 2, 3, 3])
    assert power_multipliers(G, 3) == [1, 5]
    assert power_automorphisms(make_group([2, 2])).order() == 1


def test_ring_multiply_examples():
    G = make_group([2, 2])
    e, a, b, ab = G.index((0, 0)), G.index((0, 1)), G.index((1, 0)), G.index((1, 1))
    s = simple(G, [a, b])
    sq = ring_multiply(s, s)
    assert sq[e] == 2 and sq[ab] == 2 and sq[a] == 0 and sq[b] == 0
    Z4 = make_group([4])
    assert ring_multiply(simple(Z4, [1]), simple(Z4, [1])) == simple(Z4, [2])


def test_subgroup_idempotent_up_to_order():
    G = make_group([2, 6])
    for H in all_subgroups(G):
        s = simple(G, H.members)
        assert s * s == H.order * s


def test_group_mismatch():
    with pytest.raises(GroupMismatch):
        simple(make_group([4]), [1]) * simple(make_group([2, 2]), [1])


def test_sections():
    G = make_group([6])
    sec = section(G, Subgroup(G.elements), Subgroup((0, 3)))
    assert sec.quotient == make_group([3])
    G = make_group([2, 2, 3, 3])
    sec = section(G, Subgroup(G.elements), G.sylow(3))
    assert sec.quotient == make_group([2, 2])
    H = G.sylow(2)
    sec = section(G, H, H)
    assert sec.quotient.order == 1


def test_section_projection_is_homomorphism_with_kernel_l():
    G = make_group([2, 6])
    U = Subgroup(G.elements)
    L = generated_subgroup(G, [G.index((0, 3))])
    sec = section(G, U, L)
    Q = sec.quotient
    assert Q.order == G.order // L.order
    assert {x for x in G.elements if sec.projection[x] == 0} == L.member_set
    for a, b in itertools.product(G.elements, repeat=2):
        assert sec.projection[G.add(a, b)] == Q.add(sec.projection[a], sec.projection[b])


def test_section_requires_nesting():
    G = make_group([6])
    with pytest.raises(NotNested):
        section(G, Subgroup((0, 3)), Subgroup((0, 2, 4)))


def test_abelian_groups_enumeration():
    # number of abelian groups of order n = prod over p^e || n of partitions(e)
    assert [len(abelian_groups(n)) for n in (8, 16, 36, 12)] == [3, 5, 4, 2]
    assert all(G.order == 16 for G in abelian_groups(16))
