import pytest

from schurlab.errors import CapExceeded, DominanceViolation, EmptyProfile
from schurlab.groups import Subgroup, ring_multiply, simple
from schurlab.rational import (RatProfile, analyze_matrix, check_dominance,
                               coefficient_oracle, decode_profile, fiber, fiber_shape_ok,
                               is_primitive_matrix, is_valid_matrix, letter_profiles,
                               matrices_equivalent, matrix_to_partition, model, named_matrix,
                               pcp_shape, primitive_rational_search, profile_size,
                               two_letter_obstructions)
from schurlab.srings import is_schurian, is_sring, radical, validate_partition


def test_model_cells_partition_group():
    m = model(3, 5)
    seen = sorted(x for xs in m.cells.values() for x in xs)
    assert seen == list(m.group.elements)
    assert len(m.cells) == (3 + 2) * (5 + 2)
    assert all(H.order == 3 for H in m.L[0]) and len(m.L[0]) == 4
    assert all(H.order == 5 for H in m.L[1]) and len(m.L[1]) == 6


def test_decode_profile_sizes():
    assert decode_profile(RatProfile(3, 5, frozenset({(0, 0)}))) == (0,)
    assert len(decode_profile(RatProfile(3, 5, frozenset({(1, 0)})))) == 2
    assert len(decode_profile(RatProfile(3, 5, frozenset({(1, 1)})))) == 8
    assert profile_size(3, 5, {(1, 1), (0, 2)}) == 8 + 4
    with pytest.raises(EmptyProfile):
        decode_profile(RatProfile(3, 5, frozenset()))


def test_fiber_examples():
    assert fiber({(1, 0), (1, 3)}, 2, 1) == {0, 3}
    assert fiber({(0, 0)}, 1, 0) == {0}
    assert fiber({(0, 0)}, 1, 2) == set()


def test_fiber_shapes_of_m1_y_letter():
    p, q = 3, 5
    Y = letter_profiles(named_matrix("M1", p, q))["Y"]
    for a in range(1, p + 1):
        assert fiber(Y, 2, a) == {0, q + 1}
    for a in range(0, p + 2):
        assert fiber_shape_ok(fiber(Y, 2, a), q + 1)


def test_dominance_rejects_two_exceptions():
    with pytest.raises(DominanceViolation):
        check_dominance([["X", "Y", "Y", "X"], ["X"] * 4, ["X"] * 4])


def test_single_letter_is_rank_two():
    A = matrix_to_partition([["X"] * 4 for _ in range(3)], 2, 3)
    assert A.rank == 2
    assert is_valid_matrix([["X"] * 4 for _ in range(3)], 2, 3)


def test_m6_class_matches_construction():
    p, q = 3, 5
    m = model(p, q)
    G = m.group
    A = matrix_to_partition(named_matrix("M6", p, q), p, q)
    Qs = set(m.Q.members) - {0}
    L11 = set(m.Lsub(1, 1).members) - {0}
    L2q = set(m.Lsub(2, q + 1).members)
    L1p = set(m.Lsub(1, p + 1).members) - {0}
    Y = Qs | set(G.set_add(L11, L2q)) | set(G.set_add(L1p, set(m.Q.members) - L2q))
    assert tuple(sorted(Y)) in A.classes


def test_coefficient_formulas_by_convolution():
    p, q = 3, 5
    r2 = analyze_matrix("M2", p, q)
    assert (r2["c_h"], r2["c_h_prime"], r2["gap"]) == (39, 13, 26)
    assert r2["c_h"] == p * (q - 2) ** 2 + 2 * (p - 1) * (q - 2)
    assert r2["c_h_prime"] == (p - 2) ** 2 * q + 2 * (p - 2) * (q - 1)
    assert r2["gap"] == (q - p) * (p * q - 2)
    r5 = analyze_matrix("M5", p, q)
    assert (r5["c_h"], r5["c_h_prime"], r5["gap"]) == (45, 15, 30)
    assert r5["c_h"] - r2["c_h"] == 2 * (q - 2)
    assert r5["c_h_prime"] - r2["c_h_prime"] == 2 * (p - 2)
    assert r5["gap"] == (q - p) * p * q


def test_coefficient_oracle_is_raw_convolution():
    m = model(3, 5)
    G = m.group
    A = matrix_to_partition(named_matrix("M2", 3, 5), 3, 5)
    Y = A.classes[2]
    sq = ring_multiply(simple(G, Y), simple(G, Y))
    for g in (1, 7, 30):
        assert coefficient_oracle(G, Y, g) == sq[g]


@pytest.mark.parametrize("which,order", [("M1", 15), ("M3", 3), ("M4", 15), ("M6", 5)])
def test_radical_witnesses(which, order):
    r = analyze_matrix(which, 3, 5)
    assert r["kind"] == "NontrivialRadical"
    assert r["witness_verified"] and r["radical_contains_witness"] and r["nontrivial"]
    assert r["witness_order"] == order
    m = model(3, 5)
    G = m.group
    W = [G.index(tuple(c)) for c in r["witness"]]
    A = matrix_to_partition(named_matrix(which, 3, 5), 3, 5)
    # independent check: some nontrivial class is stable under the witness subgroup
    assert any(set(W) <= set(radical(G, X).members) for X in A.classes[1:])


@pytest.mark.parametrize("which", ["M1", "M2", "M3", "M4", "M5", "M6"])
def test_named_matrices_are_primitive_but_not_srings(which):
    r = analyze_matrix(which, 3, 5)
    assert r["primitive"] and not r["valid_sring"]
    A = matrix_to_partition(named_matrix(which, 3, 5), 3, 5)
    assert not is_sring(A.group, A.classes)


def test_pcp_shape():
    assert pcp_shape({(1, 1), (1, 0), (0, 1)}) == [(1, 1)]
    assert pcp_shape({(1, 1), (2, 2), (1, 0), (0, 1), (2, 0), (0, 2)}) == [(1, 1), (2, 2)]
    assert pcp_shape({(1, 1), (1, 2), (1, 0), (0, 1), (0, 2)}) is None
    assert pcp_shape({(1, 0)}) is None


def test_search_2_3_survivors_are_srings():
    r = primitive_rational_search(2, 3)
    assert len(r["survivors"]) == 3
    for s in r["survivors"]:
        A = matrix_to_partition(s["matrix"], 2, 3)
        # independent validation from the S-ring axioms
        B = validate_partition(A.group, A.classes)
        assert B.rank == s["rank"] >= 3
        assert is_primitive_matrix(s["matrix"], 2, 3)


def test_two_letter_obstructions_at_p2_are_non_schurian():
    # p = 2 lies outside the odd-prime case; a PCP-free two-letter S-ring does
    # exist at (2,3), but only the schurian case is claimed there
    obs = two_letter_obstructions(2, 3)
    assert obs
    valid = [M for M in obs if is_valid_matrix(M, 2, 3)]
    assert len(valid) == 1
    A = matrix_to_partition(valid[0], 2, 3)
    assert sorted(A.sizes) == [1, 14, 21]
    assert not is_schurian(validate_partition(A.group, A.classes))


def test_caps_and_primes():
    with pytest.raises(ValueError):
        model(4, 5)
    with pytest.raises(CapExceeded):
        model(5, 11)


def test_two_letter_obstructions_at_3_5():
    obs = two_letter_obstructions(3, 5)
    assert len(obs) == 8
    assert not any(is_valid_matrix(M, 3, 5) for M in obs)
    for which in ("M1", "M2", "M3", "M4", "M5", "M6"):
        assert any(matrices_equivalent(M, named_matrix(which, 3, 5)) for M in obs)
