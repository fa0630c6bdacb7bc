"""Tensor, star, wreath and generalised wreath products of S-rings."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import (NotASubgroup, NotAutomorphisms, NotGeneralizedWreath, NotNested)
from .groups import (GroupSpec, Subgroup, automorphism_group, is_group_automorphism,
                     meet, prime_factors, section)
from .perms import PermGroup, mul
from .srings import (SchurPartition, aut_G, group_ring, is_cyclotomic, radical,
                     restriction, section_sring, validate_partition)


@dataclass
class DecompositionReport:
    kind: str                      # tensor | star | wreath | generalized_wreath | none
    first: Subgroup                # V (star) or U (wreath)
    second: Subgroup               # W (star) or L (wreath)
    nontrivial: bool = False
    condition: str | None = None   # failing condition id, e.g. "star-2", "gw-2"
    witness: tuple | None = None   # offending basic set

    @property
    def holds(self):
        return self.kind != "none"

    def to_json(self, G=None):
        def enc(xs):
            return [list(G.coords(x)) for x in xs] if G is not None else list(xs)
        return {"kind": self.kind, "first": enc(self.first.members),
                "second": enc(self.second.members), "nontrivial": self.nontrivial,
                "condition": self.condition,
                "witness": enc(self.witness) if self.witness is not None else None}


def _require_a_subgroup(A, H, name):
    if not A.is_a_set(H.members) or 0 not in H.member_set:
        raise NotASubgroup(f"{name} is not an A-subgroup")


def _is_coset_union(G, X, H):
    Xs = set(X)
    return all(G.add(x, h) in Xs for x in X for h in H.members)


# --------------------------------------------------------------------- tensor

def direct_product_group(G1, G2):
    """Canonical group isomorphic to G1 x G2 with the embedding of coordinate pairs."""
    raw = GroupSpec(tuple(G1.factors) + tuple(G2.factors))
    full = Subgroup(raw.elements)
    sec = section(raw, full, Subgroup((0,)))
    k = len(G1.factors)

    def embed(a, b):
        return sec.projection[raw.index(G1.coords(a) + G2.coords(b))]

    return sec.quotient, embed


def tensor(A1, A2):
    """A1 (x) A2 over the direct product; classes are the products X x Y."""
    G, embed = direct_product_group(A1.group, A2.group)
    parts = [[embed(a, b) for a in X for b in Y] for X in A1.classes for Y in A2.classes]
    return validate_partition(G, parts)


def tensor_in(G, classes_V, classes_W):
    """Internal tensor product from basic sets of subgroups V, W of G with V & W = {e}."""
    parts = [G.set_add(X, Y) for X in classes_V for Y in classes_W]
    return validate_partition(G, parts)


# --------------------------------------------------------------------- star

def star_check(A, V, W, within=None):
    """Is A (or A restricted to ``within``) the star product A_V * A_W?  (star-1..star-3)"""
    G = A.group
    _require_a_subgroup(A, V, "V")
    _require_a_subgroup(A, W, "W")
    VW = meet(V, W)
    trivial_meet = VW.order == 1
    top = G.order if within is None else within.order
    nontrivial = V.order not in (1, top)
    classes = A.classes if within is None else [X for X in A.classes
                                                 if set(X) <= within.member_set]
    # star-1: V & W normal in W holds in abelian groups
    for X in classes:
        Xs = set(X)
        if Xs <= W.member_set and not Xs & V.member_set:
            if not _is_coset_union(G, X, VW):
                return DecompositionReport("none", V, W, nontrivial, "star-2", X)
    inV = [Y for Y in A.classes if set(Y) <= V.member_set]
    inW = [Z for Z in A.classes if set(Z) <= W.member_set]
    products = {G.set_add(Y, Z) for Y in inV for Z in inW}
    for X in classes:
        Xs = set(X)
        if not Xs & V.member_set and not Xs & W.member_set:
            if X not in products:
                return DecompositionReport("none", V, W, nontrivial, "star-3", X)
    return DecompositionReport("tensor" if trivial_meet else "star", V, W, nontrivial)


# --------------------------------------------------------------------- generalised wreath

def generalized_wreath_check(A, U, L):
    """Is A the U/L-wreath product?  (gw-1 automatic; gw-2: classes outside U are L-coset unions)"""
    G = A.group
    if not L.issubset(U):
        raise NotNested("L is not contained in U")
    _require_a_subgroup(A, U, "U")
    _require_a_subgroup(A, L, "L")
    nontrivial = L.order > 1 and U.order < G.order
    kind = "wreath" if U == L else "generalized_wreath"
    for X in A.classes:
        if set(X) & U.member_set:
            continue
        if not L.member_set <= set(radical(G, X).members):
            return DecompositionReport("none", U, L, nontrivial, "gw-2", X)
    return DecompositionReport(kind, U, L, nontrivial)


def wreath_in(G, U, classes_U, classes_Q):
    """A_U wr A_{G/U} inside G: classes_U partition U, classes_Q are U-coset unions covering G."""
    parts = [tuple(c) for c in classes_U]
    for Y in classes_Q:
        if set(Y) & U.member_set:
            continue
        parts.append(tuple(Y))
    return validate_partition(G, parts)


def wreath(Au, Aq):
    """External wreath product A_U wr A_Q over U x Q."""
    G, embed = direct_product_group(Au.group, Aq.group)
    U = Subgroup(tuple(sorted(embed(a, 0) for a in Au.group.elements)))
    classes_U = [[embed(a, 0) for a in X] for X in Au.classes]
    classes_Q = [[embed(a, b) for a in Au.group.elements for b in Y] for Y in Aq.classes]
    return wreath_in(G, U, classes_U, classes_Q)


def decompositions(A, subgroups=None):
    """All non-trivial generalised wreath decompositions (U, L) of A."""
    from .srings import a_subgroups
    subs = a_subgroups(A, subgroups)
    G = A.group
    out = []
    for L in subs:
        if L.order == 1:
            continue
        for U in subs:
            if U.order == G.order or not L.issubset(U):
                continue
            if generalized_wreath_check(A, U, L).holds:
                out.append((U, L))
    return out


def is_decomposable(A, subgroups=None):
    return bool(decompositions(A, subgroups))


# --------------------------------------------------------------------- p-S-rings

def is_p_sring(A, p):
    def ppow(m):
        while m % p == 0:
            m //= p
        return m == 1
    return ppow(A.group.order) and all(ppow(len(X)) for X in A.classes)


# --------------------------------------------------------------------- Cayley equivalence

def _check_automorphisms(G, K):
    for g in K.generators:
        if not is_group_automorphism(G, g):
            raise NotAutomorphisms("generator is not a group automorphism")


def cayley_equivalent(G, K1, K2):
    """Orbit partitions of two automorphism groups coincide."""
    _check_automorphisms(G, K1)
    _check_automorphisms(G, K2)
    return sorted(K1.orbits()) == sorted(K2.orbits())


def _perm_subgroups(elements, n):
    """All subgroups of a small permutation group given by its element list."""
    ident = tuple(range(n))

    def closure(gens):
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    found = {closure([g]) for g in elements}
    frontier = list(found)
    while frontier:
        nxt = []
        cur = list(found)
        for H in frontier:
            for K in cur:
                J = closure(list(H | K))
                if J not in found:
                    found.add(J)
                    nxt.append(J)
        frontier = nxt
    return found


def is_cayley_minimal(A):
    """No proper subgroup of aut_G(A) has the same orbits (A must be cyclotomic)."""
    G = A.group
    K, elems = aut_G(A)
    if sorted(K.orbits()) != sorted(A.classes):
        raise ValueError("S-ring is not cyclotomic")
    target = sorted(A.classes)
    for H in _perm_subgroups(elems, G.order):
        if len(H) == len(elems):
            continue
        if sorted(PermGroup(G.order, H).orbits()) == target:
            return False
    return True


# --------------------------------------------------------------------- KR condition

def _class_preserving_automorphisms(A):
    return aut_G(A)[1]


def _induced_on_section(perms, proj_from, proj_S, U_members):
    """Permutations of a group Q (with projection proj_from: G -> Q) induced on S."""
    # choose a lift in U for every element of S, and a lift for every element of Q
    lift_S = {}
    for x in U_members:
        lift_S.setdefault(proj_S[x], x)
    lift_Q = {}
    for x, q in proj_from.items():
        lift_Q.setdefault(q, x)
    out = set()
    for a in perms:
        img = []
        for s in sorted(lift_S):
            x = lift_S[s]
            y = lift_Q[a[proj_from[x]]]
            img.append(proj_S[y])
        out.add(tuple(img))
    return out


def kr_details(A, U, L):
    """Both sides of aut_S(A_S) = aut_U(A_U)^S aut_{G/L}(A_{G/L})^S."""
    G = A.group
    rep = generalized_wreath_check(A, U, L)
    if not rep.holds:
        raise NotGeneralizedWreath(f"A is not the U/L-wreath product ({rep.condition})")
    full = Subgroup(G.elements)
    triv = Subgroup((0,))
    secS = section(G, U, L)
    A_S = section_sring(A, U, L)
    lhs = set(map(tuple, _class_preserving_automorphisms(A_S)))
    secU = section(G, U, triv)
    A_U = section_sring(A, U, triv)
    secGL = section(G, full, L)
    A_GL = section_sring(A, full, L)
    fromU = _induced_on_section(_class_preserving_automorphisms(A_U), secU.projection,
                                secS.projection, U.members)
    fromGL = _induced_on_section(_class_preserving_automorphisms(A_GL), secGL.projection,
                                 secS.projection, U.members)
    rhs = {mul(a, b) for a in fromU for b in fromGL}
    return {"aut_S": lhs, "from_U": fromU, "from_G/L": fromGL, "product": rhs,
            "A_S_is_group_ring": A_S.rank == A_S.group.order}


def kr_condition(A, U, L):
    d = kr_details(A, U, L)
    if d["A_S_is_group_ring"]:
        return True
    return d["aut_S"] == d["product"]
