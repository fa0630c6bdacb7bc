"""Property tests over random small groups, elements and subsets."""
import json

from hypothesis import given, settings
from hypothesis import strategies as st

from schurlab.groups import GroupRingVector, make_group, parse_group, ring_multiply, simple
from schurlab.perms import inv, mul, regular_representation
from schurlab.srings import (SchurPartition, enumerate_srings, is_sring, stabilize,
                             validate_partition)

FACTORS = st.sampled_from([[2], [3], [4], [6], [8], [2, 2], [2, 4], [3, 3], [2, 6], [12]])


@st.composite
def group_and_elements(draw, k=3):
    G = make_group(draw(FACTORS))
    xs = [draw(st.integers(0, G.order - 1)) for _ in range(k)]
    return G, xs


@given(group_and_elements())
def test_group_axioms(data):
    G, (a, b, c) = data
    assert G.add(a, G.identity) == a
    assert G.add(a, b) == G.add(b, a)
    assert G.add(G.add(a, b), c) == G.add(a, G.add(b, c))
    assert G.add(a, G.neg[a]) == G.identity
    assert G.index(G.coords(a)) == a


@given(FACTORS)
def test_group_json_round_trip(factors):
    G = make_group(factors)
    assert parse_group(G.to_json()) == G


@st.composite
def group_ring_triple(draw):
    G = make_group(draw(FACTORS))
    vec = st.lists(st.integers(-3, 3), min_size=G.order, max_size=G.order)
    return G, [GroupRingVector(G, tuple(draw(vec))) for _ in range(3)]


@settings(max_examples=40)
@given(group_ring_triple())
def test_ring_multiply_associative_and_commutative(data):
    G, (a, b, c) = data
    assert ring_multiply(ring_multiply(a, b), c) == ring_multiply(a, ring_multiply(b, c))
    assert ring_multiply(a, b) == ring_multiply(b, a)


@settings(max_examples=40)
@given(FACTORS, st.data())
def test_simple_quantity_product_counts(factors, data):
    G = make_group(factors)
    X = data.draw(st.sets(st.integers(0, G.order - 1), min_size=1))
    Y = data.draw(st.sets(st.integers(0, G.order - 1), min_size=1))
    prod = ring_multiply(simple(G, X), simple(G, Y))
    assert sum(prod[g] for g in G.elements) == len(X) * len(Y)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([[4], [6], [2, 2], [8], [2, 4], [9], [3, 3]]), st.data())
def test_enumerated_srings_validate_and_round_trip(factors, data):
    G = make_group(factors)
    srings = enumerate_srings(G)
    A = data.draw(st.sampled_from(srings))
    assert is_sring(G, A.classes)
    B = SchurPartition.from_json(json.loads(json.dumps(A.to_json())))
    assert B == A


@settings(max_examples=30, deadline=None)
@given(FACTORS, st.data())
def test_stabilize_returns_srings_refining_input(factors, data):
    G = make_group(factors)
    colors = data.draw(st.lists(st.integers(0, 2), min_size=G.order, max_size=G.order))
    A = stabilize(G, colors)
    validate_partition(G, A.classes)
    # every class lies in one colour class of the starting colouring (identity aside)
    for c in A.classes:
        if c != (0,):
            assert len({colors[x] for x in c}) == 1


@given(group_and_elements(2))
def test_translations_compose(data):
    G, (a, b) = data
    R = regular_representation(G)
    assert R.order() == G.order
    ta = tuple(G.add(x, a) for x in G.elements)
    tb = tuple(G.add(x, b) for x in G.elements)
    assert mul(ta, tb) == tuple(G.add(x, G.add(a, b)) for x in G.elements)
    assert mul(ta, inv(ta)) == tuple(G.elements)
    assert R.contains(ta)
