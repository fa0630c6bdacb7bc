import numpy as np
import pytest

from schurlab.errors import (AxiomViolation, NoPcpSetFound, NotApplicable, NotSquareOrder,
                             NotWeakAutomorphism)
from schurlab.groups import Subgroup, generated_subgroup, make_group
from schurlab.nets import (PCP, build_net, collinearity_graph, eigenvalues, find_pcps,
                           lemma_pcp_pipeline, line_clique_check, maximal_cliques, net_sring,
                           srg_formula, srg_parameters, strong_automorphism_check,
                           validate_pcp, weak_automorphism_group)
from schurlab.perms import PermGroup, regular_representation
from schurlab.srings import group_ring, rank_two

C66 = make_group([6, 6])
C33 = make_group([3, 3])


def diag_pcp(G=C66, k=3):
    gens = [(0, 1), (1, 0), (1, 1)][:k]
    return PCP(G, tuple(generated_subgroup(G, [G.index(g)]) for g in gens))


def test_find_pcps_contains_diagonal():
    pcps = find_pcps(C66, 3)
    target = {H.members for H in diag_pcp().subgroups}
    assert any({H.members for H in p.subgroups} == target for p in pcps)
    assert len(find_pcps(C66, 3, up_to_aut=True)) == 1


def test_find_pcps_k1_and_spread():
    assert len(find_pcps(C33, 4)) == 1
    assert len(find_pcps(C33, 1)) == 4
    with pytest.raises(NotSquareOrder):
        find_pcps(make_group([8]), 2)


def test_validate_pcp_rejects_overlap():
    H = generated_subgroup(C66, [C66.index((0, 1))])
    K = generated_subgroup(C66, [C66.index((0, 2)), C66.index((3, 0))])
    with pytest.raises(AxiomViolation):
        validate_pcp(PCP(C66, (H, K)))
    with pytest.raises(AxiomViolation):
        validate_pcp(PCP(C66, (generated_subgroup(C66, [C66.index((0, 2))]),)))


def test_net_structure_6_3():
    net = build_net(diag_pcp())
    assert len(net.lines) == 18
    assert [len(c) for c in net.parallel_classes] == [6, 6, 6]


def test_collinearity_3_4_is_complete():
    net = build_net(find_pcps(C33, 4)[0])
    adj = collinearity_graph(net)
    assert all(adj[i][j] == (i != j) for i in range(9) for j in range(9))
    with pytest.raises(NotApplicable):
        srg_parameters(adj)


def test_k1_is_disjoint_cliques():
    net = build_net(diag_pcp(k=1))
    cliques = maximal_cliques(collinearity_graph(net))
    assert len(cliques) == 6 and all(len(c) == 6 for c in cliques)
    assert set(cliques) == set(net.lines)


@pytest.mark.parametrize("k,params", [(3, (36, 15, 6, 6)), (2, (36, 10, 4, 2))])
def test_srg_parameters(k, params):
    adj = collinearity_graph(build_net(diag_pcp(k=k)))
    assert srg_parameters(adj) == params == srg_formula(6, k)


def test_srg_matrix_identity_and_eigenvalues():
    adj = np.array(collinearity_graph(build_net(diag_pcp())))
    I, J = np.eye(36, dtype=int), np.ones((36, 36), dtype=int)
    assert (adj @ adj == 9 * I + 6 * J).all()
    assert eigenvalues(adj.tolist()) == [-3, 3, 15]


def test_line_cliques():
    ok, bad = line_clique_check(build_net(diag_pcp()))
    assert ok and not bad
    cl = maximal_cliques(collinearity_graph(build_net(diag_pcp())), min_size=6)
    assert len(cl) == 18
    ok, _ = line_clique_check(build_net(diag_pcp(k=2)))
    assert ok
    with pytest.raises(NotApplicable):
        line_clique_check(build_net(find_pcps(C33, 4)[0]))


def test_strong_automorphism_check():
    net = build_net(diag_pcp())
    assert strong_automorphism_check(net, regular_representation(C66))
    swap = tuple(C66.index((b, a)) for a, b in (C66.coords(x) for x in C66.elements))
    with pytest.raises(NotApplicable):
        strong_automorphism_check(net, PermGroup(36, [swap]))
    bad = tuple([1, 0] + list(range(2, 36)))
    with pytest.raises(NotWeakAutomorphism):
        strong_automorphism_check(net, PermGroup(36, [bad]))


def test_weak_automorphism_group_order():
    assert weak_automorphism_group(build_net(diag_pcp())).order() == 432


def test_pcp_pipeline_on_strong_module():
    A, _ = net_sring(build_net(diag_pcp()), strong=True)
    hits = lemma_pcp_pipeline(A, 3)
    assert hits and all(h["all_a_subgroups"] for h in hits)


def test_pcp_pipeline_degenerate_and_missing():
    hits = lemma_pcp_pipeline(group_ring(C33), 1)
    assert all(h["all_a_subgroups"] for h in hits)
    with pytest.raises(NoPcpSetFound):
        lemma_pcp_pipeline(rank_two(C66), 3)


def test_pcp_json_round_trip():
    p = diag_pcp()
    assert PCP.from_json(p.to_json()) == p
    assert p.to_json()["subgroups"] == [[[0, 1]], [[1, 0]], [[1, 1]]]
