"""Partial congruence partitions, translation nets and their collinearity graphs."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property

import networkx as nx
import numpy as np

from .errors import (AxiomViolation, NoPcpSetFound, NotApplicable, NotSquareOrder,
                     NotStronglyRegular, NotWeakAutomorphism)
from .groups import Subgroup, all_subgroups, generated_subgroup
from .perms import PermGroup, mul, transitivity_module


def _side(G):
    n = math.isqrt(G.order)
    if n * n != G.order:
        raise NotSquareOrder(f"|G| = {G.order} is not a square")
    return n


def _generators(G, H):
    """Greedy generating set of H: largest order first, then least index."""
    order = G.element_orders
    gens, span = [], {0}
    for x in sorted(H.members, key=lambda x: (-order[x], x)):
        if x not in span:
            gens.append(x)
            span = set(generated_subgroup(G, gens).members)
    return gens


@dataclass(frozen=True)
class PCP:
    group: object
    subgroups: tuple

    @property
    def n(self):
        return math.isqrt(self.group.order)

    @property
    def k(self):
        return len(self.subgroups)

    def union(self):
        """D = union of the H_i minus the identity."""
        return tuple(sorted({x for H in self.subgroups for x in H.members if x != 0}))

    def to_json(self):
        G = self.group
        return {"group": G.name, "k": self.k,
                "subgroups": [[list(G.coords(x)) for x in _generators(G, H)]
                              for H in self.subgroups]}

    @classmethod
    def from_json(cls, obj):
        from .groups import parse_group
        G = parse_group(obj["group"])
        subs = tuple(generated_subgroup(G, [G.index(tuple(c)) for c in H])
                     for H in obj["subgroups"])
        pcp = cls(G, subs)
        validate_pcp(pcp)
        return pcp


def validate_pcp(pcp):
    n = _side(pcp.group)
    if pcp.k < 1:
        raise AxiomViolation("pcp-k")
    for H in pcp.subgroups:
        if H.order != n:
            raise AxiomViolation("pcp-order")
    for H, K in itertools.combinations(pcp.subgroups, 2):
        if H.member_set & K.member_set != {0}:
            raise AxiomViolation("pcp-intersection")
    return True


def find_pcps(G, k, up_to_aut=False):
    """All sets of k subgroups of order n with pairwise trivial intersection."""
    n = _side(G)
    cands = [H for H in all_subgroups(G, cap=max(64, G.order)) if H.order == n]
    out = []

    def rec(start, chosen):
        if len(chosen) == k:
            out.append(PCP(G, tuple(chosen)))
            return
        for i in range(start, len(cands)):
            H = cands[i]
            if all(H.member_set & K.member_set == {0} for K in chosen):
                rec(i + 1, chosen + [H])

    rec(0, [])
    if up_to_aut and out:
        from .ci import group_automorphisms
        auts = group_automorphisms(G)
        seen = set()
        reps = []
        for p in out:
            key = frozenset(H.members for H in p.subgroups)
            if key in seen:
                continue
            reps.append(p)
            for a in auts:
                seen.add(frozenset(tuple(sorted(a[x] for x in H.members)) for H in p.subgroups))
        out = reps
    return out


@dataclass(frozen=True)
class TranslationNet:
    pcp: PCP

    @property
    def points(self):
        return self.pcp.group.elements

    @cached_property
    def parallel_classes(self):
        G = self.pcp.group
        out = []
        for H in self.pcp.subgroups:
            cosets = sorted({tuple(sorted(G.add(h, x) for h in H.members)) for x in G.elements})
            out.append(cosets)
        return out

    @cached_property
    def lines(self):
        return [L for cls in self.parallel_classes for L in cls]

    @cached_property
    def line_class(self):
        return {L: i for i, cls in enumerate(self.parallel_classes) for L in cls}


def check_net_axioms(net):
    n, k = net.pcp.n, net.pcp.k
    lines = net.lines
    if any(len(L) != n for L in lines):
        raise AxiomViolation("net-1")
    if len(lines) != k * n or len(set(lines)) != k * n:
        raise AxiomViolation("line-count")
    # (2) every point on exactly one line of each class
    for cls in net.parallel_classes:
        if sorted(x for L in cls for x in L) != list(net.points):
            raise AxiomViolation("net-2")
    # (3) lines of distinct classes meet in exactly one point
    for i, j in itertools.combinations(range(k), 2):
        for L in net.parallel_classes[i]:
            for M in net.parallel_classes[j]:
                if len(set(L) & set(M)) != 1:
                    raise AxiomViolation("net-3")
    return True


def build_net(pcp):
    validate_pcp(pcp)
    net = TranslationNet(pcp)
    check_net_axioms(net)
    return net


def collinearity_graph(net):
    """Adjacency matrix: distinct points on a common line."""
    n2 = len(net.points)
    A = [[0] * n2 for _ in range(n2)]
    for L in net.lines:
        for x in L:
            for y in L:
                if x != y:
                    A[x][y] = 1
    return A


def srg_formula(n, k):
    return (n * n, k * (n - 1), n - 2 + (k - 1) * (k - 2), k * (k - 1))


def srg_parameters(adj):
    """Measured (v, deg, lambda, mu); raises on irregularity or for complete graphs."""
    M = np.array(adj, dtype=np.int64)
    v = M.shape[0]
    if not (M == M.T).all() or M.diagonal().any():
        raise NotStronglyRegular(None)
    degs = M.sum(axis=1)
    if len(set(degs.tolist())) != 1:
        raise NotStronglyRegular((0, int(np.argmax(degs != degs[0]))))
    deg = int(degs[0])
    if deg == v - 1:
        raise NotApplicable("complete graph: mu is undefined")
    common = M @ M
    lam = mu = None
    for x in range(v):
        for y in range(x + 1, v):
            c = int(common[x, y])
            if M[x, y]:
                if lam is None:
                    lam = c
                elif c != lam:
                    raise NotStronglyRegular((x, y))
            else:
                if mu is None:
                    mu = c
                elif c != mu:
                    raise NotStronglyRegular((x, y))
    lam = 0 if lam is None else lam
    I = np.eye(v, dtype=np.int64)
    J = np.ones((v, v), dtype=np.int64)
    if not (common == (lam - mu) * M + (deg - mu) * I + mu * J).all():
        raise NotStronglyRegular(None)
    return v, deg, lam, mu


def eigenvalues(adj):
    """Distinct eigenvalues rounded to integers (they are integral for nets)."""
    ev = np.linalg.eigvalsh(np.array(adj, dtype=float))
    return sorted({int(round(x)) for x in ev})


def maximal_cliques(adj, min_size=1):
    n = len(adj)
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from((x, y) for x in range(n) for y in range(x + 1, n) if adj[x][y])
    return sorted(tuple(sorted(c)) for c in nx.find_cliques(g) if len(c) >= min_size)


def line_clique_check(net):
    """(ok, exceptional cliques): lines are the only n-cliques and none is larger."""
    n, k = net.pcp.n, net.pcp.k
    if not n > (k - 1) ** 2:
        raise NotApplicable(f"n = {n} is not greater than (k-1)^2 = {(k - 1) ** 2}")
    cliques = maximal_cliques(collinearity_graph(net), min_size=n)
    lines = set(net.lines)
    bad = [c for c in cliques if len(c) > n or c not in lines]
    n_cliques = [c for c in cliques if len(c) == n]
    return not bad and len(n_cliques) == len(lines), bad


# --------------------------------------------------------------------- automorphisms

def _line_image(g, L):
    return tuple(sorted(g[x] for x in L))


def is_weak_automorphism(net, g):
    lines = set(net.lines)
    return all(_line_image(g, L) in lines for L in net.lines)


def _incidence_automorphisms(net, strong):
    from .search import colored_automorphisms

    pts = len(net.points)
    lines = net.lines
    N = pts + len(lines)
    C = [[0] * N for _ in range(N)]
    for j, L in enumerate(lines):
        for x in L:
            C[x][pts + j] = 1
            C[pts + j][x] = 1
    cls = net.line_class
    vcol = [0] * pts + [1 + (cls[L] if strong else 0) for L in lines]
    full = colored_automorphisms(C, vcol)
    gens = [tuple(g[:pts]) for g in full.generators]
    return PermGroup(pts, gens)


def weak_automorphism_group(net):
    """Permutations of points mapping lines to lines (via the incidence graph)."""
    return _incidence_automorphisms(net, strong=False)


def strong_automorphism_group(net):
    """Weak automorphisms fixing every parallel class."""
    return _incidence_automorphisms(net, strong=True)


def strong_automorphism_check(net, H):
    """Every element of an abelian regular group of weak automorphisms fixes each class."""
    for g in H.generators:
        if not is_weak_automorphism(net, g):
            raise NotWeakAutomorphism("generator does not preserve the line set")
    if any(mul(a, b) != mul(b, a) for a in H.generators for b in H.generators):
        raise NotApplicable("H is not abelian")
    if not H.is_regular():
        raise NotApplicable("H is not regular")
    if not net.pcp.k < net.pcp.n:
        raise NotApplicable("k < n fails")
    cls = net.line_class
    return all(cls[_line_image(g, L)] == cls[L] for g in H.generators for L in net.lines)


def abelian_regular_subgroups(net, W=None, limit=50):
    """Abelian regular subgroups of the weak automorphism group, found by a bounded search.

    Regular abelian groups are generated by commuting fixed-point-free
    elements; we search generating pairs among the elements moving 0 to a
    basis-like set of points, which suffices for rank <= 2 groups.
    """
    if W is None:
        W = weak_automorphism_group(net)
    n2 = len(net.points)
    found = {}
    elems = [g for g in W.elements() if g[0] != 0 and all(g[x] != x for x in range(n2))]
    for a in elems:
        for b in elems:
            if mul(a, b) != mul(b, a):
                continue
            H = PermGroup(n2, [a, b])
            if H.order() != n2 or not H.is_transitive():
                continue
            key = tuple(sorted(H.elements()))
            if key not in found:
                found[key] = H
                if len(found) >= limit:
                    return list(found.values())
    return list(found.values())


# --------------------------------------------------------------------- PCP pipeline

def lemma_pcp_pipeline(A, k=None):
    """Search for a PCP whose union D is an A-set; check every H_i is an A-subgroup."""
    G = A.group
    _side(G)
    ks = [k] if k is not None else range(1, math.isqrt(G.order) + 2)
    hits = []
    for kk in ks:
        for pcp in find_pcps(G, kk):
            if A.is_a_set(pcp.union()):
                ok = all(A.is_a_set(H.members) for H in pcp.subgroups)
                hits.append({"pcp": pcp, "k": kk, "all_a_subgroups": ok})
    if not hits:
        raise NoPcpSetFound("no A-set is the punctured union of a PCP")
    return hits


def net_sring(net, strong=False):
    """Transitivity module of the weak (or strong) automorphism group of a translation net."""
    W = strong_automorphism_group(net) if strong else weak_automorphism_group(net)
    return transitivity_module(net.pcp.group, W), W
