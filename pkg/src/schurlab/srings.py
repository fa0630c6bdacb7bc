"""S-rings over finite abelian groups, represented by their basic-set partitions."""

from __future__ import annotations

import itertools
import math
from functools import cached_property, lru_cache

from .errors import (CapExceeded, IdentityNotSingleton, NotABasicSet, NotAnASet,
                     NotAPartition, NotASection, NotClosedUnderProduct, NotCoprime,
                     NotInverseClosed)
from .groups import (DEFAULT_CAP, GroupSpec, Subgroup, all_subgroups, automorphism_group,
                     generated_subgroup, power_multipliers, prime_factors, section,
                     set_product_coefficients)

ENUMERATION_CAP = 16
ISO_CAP = 12


class SchurPartition:
    """The basic sets of an S-ring, ordered by least element."""

    def __init__(self, group, classes):
        self.group = group
        self.classes = tuple(sorted((tuple(sorted(c)) for c in classes), key=lambda c: c[0]))
        col = [0] * group.order
        for i, c in enumerate(self.classes):
            for x in c:
                col[x] = i
        self.color_of = tuple(col)

    @property
    def rank(self):
        return len(self.classes)

    def __eq__(self, other):
        return (isinstance(other, SchurPartition) and self.group == other.group
                and self.classes == other.classes)

    def __hash__(self):
        return hash((self.group, self.classes))

    def __repr__(self):
        return f"SchurPartition({self.group.name}, rank={self.rank}, classes={list(self.classes)})"

    def class_of(self, x):
        return self.classes[self.color_of[x]]

    def is_a_set(self, X):
        X = set(X)
        return all(set(self.class_of(x)) <= X for x in X)

    @cached_property
    def structure_constants(self):
        """c[i][j][k]: coefficient of any element of class k in X_i X_j."""
        G = self.group
        r = self.rank
        c = [[[0] * r for _ in range(r)] for _ in range(r)]
        for i, Xi in enumerate(self.classes):
            for j, Xj in enumerate(self.classes):
                coeffs = set_product_coefficients(G, Xi, Xj)
                for k, Xk in enumerate(self.classes):
                    c[i][j][k] = coeffs[Xk[0]]
        return c

    @cached_property
    def inverse_class(self):
        neg = self.group.neg
        return tuple(self.color_of[neg[c[0]]] for c in self.classes)

    @property
    def sizes(self):
        return tuple(len(c) for c in self.classes)

    def cayley_colors(self):
        """Colour matrix of the coloured Cayley digraph: arc (g, h) gets the class of h - g."""
        G = self.group
        col = self.color_of
        n = G.order
        return [[col[G.sub(h, g)] for h in range(n)] for g in range(n)]

    def to_json(self):
        G = self.group
        return {"group": G.to_json(),
                "classes": [[list(G.coords(x)) for x in c] for c in self.classes]}

    @classmethod
    def from_json(cls, obj):
        from .groups import parse_group
        G = parse_group(obj["group"])
        return validate_partition(G, [[G.index(tuple(x)) for x in c] for c in obj["classes"]])


def validate_partition(G, parts):
    """Check the three S-ring axioms and return the validated partition."""
    parts = [tuple(sorted(set(p))) for p in parts if len(p)]
    seen = [x for p in parts for x in p]
    if len(seen) != len(set(seen)) or set(seen) != set(G.elements):
        raise NotAPartition("parts do not cover the group exactly once")
    A = SchurPartition(G, parts)
    if A.classes[0] != (0,):
        raise IdentityNotSingleton(f"class of the identity is {A.classes[0]}")
    neg = G.neg
    for c in A.classes:
        inv = tuple(sorted(neg[x] for x in c))
        if A.class_of(inv[0]) != inv:
            raise NotInverseClosed(f"inverse of {c} is {inv}, not a class")
    for i, Xi in enumerate(A.classes):
        for j, Xj in enumerate(A.classes):
            coeffs = set_product_coefficients(G, Xi, Xj)
            for Xk in A.classes:
                v = coeffs[Xk[0]]
                for h in Xk[1:]:
                    if coeffs[h] != v:
                        raise NotClosedUnderProduct(i, j, Xk[0], h)
    return A


def is_sring(G, parts):
    try:
        validate_partition(G, parts)
        return True
    except (NotAPartition, IdentityNotSingleton, NotInverseClosed, NotClosedUnderProduct):
        return False


def group_ring(G):
    return SchurPartition(G, [(x,) for x in G.elements])


def rank_two(G):
    return SchurPartition(G, [(0,), tuple(range(1, G.order))])


def stabilize(G, colors):
    """Coarsest S-ring whose partition refines the colouring ``colors``.

    Colour refinement in the group ring: classes are split by inverse class and
    by the coefficient vectors of all pairwise products until stable.
    """
    n = G.order
    t = G.add_table
    neg = G.neg
    col = list(colors)
    # identity always alone
    m = max(col) + 1
    col[0] = m
    col = _relabel(col)
    ncol = len(set(col))
    while True:
        cnt = [dict() for _ in range(n)]
        for x in range(n):
            cx = col[x]
            row = t[x]
            for y in range(n):
                d = cnt[row[y]]
                key = (cx, col[y])
                d[key] = d.get(key, 0) + 1
        sig = [(col[g], col[neg[g]], tuple(sorted(cnt[g].items()))) for g in range(n)]
        keys = {s: i for i, s in enumerate(sorted(set(sig)))}
        col = [keys[s] for s in sig]
        if len(keys) == ncol:
            break
        ncol = len(keys)
    classes = {}
    for x, c in enumerate(col):
        classes.setdefault(c, []).append(x)
    return SchurPartition(G, classes.values())


def _relabel(col):
    ids = {}
    out = []
    for c in col:
        if c not in ids:
            ids[c] = len(ids)
        out.append(ids[c])
    return out


def subgroups_of(G):
    return all_subgroups(G, cap=max(DEFAULT_CAP, G.order))


def a_subgroups(A, subgroups=None):
    """All subgroups H whose simple quantity lies in A (H is a union of basic sets)."""
    subs = subgroups if subgroups is not None else subgroups_of(A.group)
    return [H for H in subs if A.is_a_set(H.members)]


def is_primitive(A, subgroups=None):
    return len(a_subgroups(A, subgroups)) == 2 or A.group.order == 1


def radical(G, X):
    """rad(X) = {g : g + X = X}; rad of the empty set is G."""
    X = tuple(sorted(set(X)))
    if not X:
        return Subgroup(G.elements)
    Xs = set(X)
    return Subgroup(tuple(g for g in G.elements if all(G.add(g, x) in Xs for x in X)))


def power_set(G, X, m):
    return tuple(sorted({G.mul(x, m) for x in X}))


def power_map(A, X, m):
    """X^(m) for a basic set X; must again be a basic set."""
    G = A.group
    if math.gcd(m, G.order) != 1:
        raise NotCoprime(f"{m} is not coprime to {G.order}")
    X = tuple(sorted(X))
    if A.class_of(X[0]) != X:
        raise NotABasicSet(f"{X} is not a basic set")
    Y = power_set(G, X, m)
    if A.class_of(Y[0]) != Y:
        raise NotABasicSet(f"image {Y} of {X} under x -> x^{m} is not a basic set")
    return Y


def sw_layer(A, X, p, k=None):
    """X^[p,k] (or X^[p] when k is None); checked to be an A-set."""
    G = A.group
    if G.order % p:
        raise ValueError(f"{p} does not divide |G|")
    Xs = set(X)
    Gp = G.omega_p(p).members
    out = set()
    for x in Xs:
        c = sum(1 for h in Gp if G.add(x, h) in Xs) % p
        if (k is None and c != 0) or (k is not None and c == k % p):
            out.add(G.mul(x, p))
    out = tuple(sorted(out))
    if not A.is_a_set(out):
        raise NotAnASet(f"{out} is not an A-set")
    return out


def trace_set(G, X):
    return tuple(sorted({G.mul(x, m) for x in X for m in power_multipliers(G)}))


def cyclotomic(G, K):
    """cyc(K, G) for a permutation group K of automorphisms."""
    return validate_partition(G, K.orbits())


def cyclotomic_from_multipliers(G, ms):
    seen = set()
    parts = []
    for x in G.elements:
        if x in seen:
            continue
        orb = {G.mul(x, m) for m in ms}
        # close under products of multipliers
        frontier = list(orb)
        while frontier:
            y = frontier.pop()
            for m in ms:
                z = G.mul(y, m)
                if z not in orb:
                    orb.add(z)
                    frontier.append(z)
        seen |= orb
        parts.append(orb)
    return validate_partition(G, parts)


def complete_traces(G):
    """W(G): orbits of all power automorphisms."""
    return cyclotomic_from_multipliers(G, power_multipliers(G))


def join_partitions(G, P1, P2):
    """Finest common coarsening of two partitions."""
    parent = list(range(G.order))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for P in (P1, P2):
        for c in P:
            r = find(c[0])
            for x in c[1:]:
                s = find(x)
                if s != r:
                    parent[s] = r
    groups = {}
    for x in G.elements:
        groups.setdefault(find(x), []).append(x)
    return list(groups.values())


def rational_closure(A):
    """A intersected with W(G), computed as the join of the two partitions."""
    G = A.group
    W = complete_traces(G)
    return validate_partition(G, join_partitions(G, A.classes, W.classes))


def is_rational(A):
    return rational_closure(A).rank == A.rank


def refines(B, A):
    """True when every basic set of B lies inside a basic set of A."""
    return all(len({A.color_of[x] for x in c}) == 1 for c in B.classes)


# --------------------------------------------------------------------- sections

def _check_a_subgroup(A, H):
    if not A.is_a_set(H.members):
        raise NotASection(f"subgroup of order {H.order} is not an A-subgroup")


def quotient(A, S):
    """A_S over S = U/L for an A-section S (a SectionRef)."""
    _check_a_subgroup(A, S.U)
    _check_a_subgroup(A, S.L)
    parts = {}
    for c in A.classes:
        if set(c) <= S.U.member_set:
            img = S.project(c)
            parts[img] = img
    classes = list(parts.values())
    covered = sorted(x for c in classes for x in c)
    if covered != list(S.quotient.elements):
        raise NotASection("projected classes do not partition the quotient")
    return validate_partition(S.quotient, classes)


def restriction(A, U):
    """A_U as an S-ring over U (identified with its canonical group)."""
    trivial = Subgroup((0,))
    return quotient(A, section(A.group, U, trivial))


def section_sring(A, U, L):
    return quotient(A, section(A.group, U, L))


# --------------------------------------------------------------------- automorphisms

def automorphisms(A, cap=DEFAULT_CAP):
    """aut(A): automorphisms of the coloured Cayley digraph of A; contains G_R."""
    from .search import colored_automorphisms

    if A.group.order > cap:
        raise CapExceeded("automorphisms", A.group.order, cap)
    return colored_automorphisms(A.cayley_colors())


def is_schurian(A, cap=DEFAULT_CAP):
    from .perms import transitivity_module

    return transitivity_module(A.group, automorphisms(A, cap)).classes == A.classes


def aut_G(A):
    """aut(A) intersected with Aut(G): group automorphisms fixing every basic set."""
    from .perms import PermGroup

    G = A.group
    col = A.color_of
    keep = [g for g in automorphism_group(G, cap=max(DEFAULT_CAP, G.order)).elements()
            if all(col[g[x]] == col[x] for x in G.elements)]
    return PermGroup(G.order, keep), keep


def is_cyclotomic(A):
    """A = cyc(K, G) for K = aut_G(A)."""
    K, _ = aut_G(A)
    return sorted(K.orbits()) == sorted(A.classes)


# --------------------------------------------------------------------- isomorphisms

def algebraic_isomorphisms(A, B):
    """Class bijections fixing {e} that preserve sizes, inverses and structure constants."""
    if A.group.order != B.group.order or A.rank != B.rank or sorted(A.sizes) != sorted(B.sizes):
        return []
    r = A.rank
    cA, cB = A.structure_constants, B.structure_constants
    invA, invB = A.inverse_class, B.inverse_class
    sA, sB = A.sizes, B.sizes
    out = []
    sigma = [None] * r
    used = [False] * r
    sigma[0] = 0
    used[0] = True

    def consistent(i):
        for j in range(i + 1):
            for k in range(i + 1):
                if cA[i][j][k] != cB[sigma[i]][sigma[j]][sigma[k]]:
                    return False
                if cA[j][i][k] != cB[sigma[j]][sigma[i]][sigma[k]]:
                    return False
                if cA[j][k][i] != cB[sigma[j]][sigma[k]][sigma[i]]:
                    return False
        j = invA[i]
        if j <= i and sigma[j] != invB[sigma[i]]:
            return False
        return True

    def rec(i):
        if i == r:
            out.append(tuple(sigma))
            return
        for b in range(1, r):
            if used[b] or sB[b] != sA[i]:
                continue
            sigma[i] = b
            used[b] = True
            if consistent(i):
                rec(i + 1)
            used[b] = False
            sigma[i] = None

    if r == 1:
        return [(0,)]
    rec(1)
    return out


def realize(A, B, sigma):
    """A normalised isomorphism inducing the class bijection ``sigma``, or None."""
    from .search import find_isomorphism

    G, H = A.group, B.group
    n = G.order
    colA = [sigma[c] for c in A.color_of]
    C1 = [[colA[G.sub(y, x)] for y in range(n)] for x in range(n)]
    C2 = B.cayley_colors()
    return find_isomorphism(C1, C2, fixed=[(0, 0)])


def isomorphisms_e(A, B, cap=ISO_CAP, limit=1_000_000):
    """All normalised isomorphisms from A to B (tiny groups only)."""
    from .perms import mul

    if A.group.order > cap:
        raise CapExceeded("isomorphisms_e", A.group.order, cap)
    stab = automorphisms(A).stabilizer(0)
    if stab.order() * max(1, len(algebraic_isomorphisms(A, B))) > limit:
        raise CapExceeded("isomorphisms_e count", stab.order(), limit)
    out = []
    for sigma in algebraic_isomorphisms(A, B):
        phi = realize(A, B, sigma)
        if phi is None:
            continue
        for a in stab.elements():
            out.append(mul(a, phi))
    return sorted(out)


def is_isomorphic(A, B):
    return any(realize(A, B, s) is not None for s in algebraic_isomorphisms(A, B))


def iso_cosets(A, srings=None):
    """Realised pairs (target S-ring, class bijection) of normalised isomorphisms from A.

    iso_e(A) is the disjoint union of the cosets aut(A)_e * phi, one per pair.
    """
    G = A.group
    if srings is None:
        srings = enumerate_srings(G)
    out = set()
    for B in srings:
        for sigma in algebraic_isomorphisms(A, B):
            if realize(A, B, sigma) is not None:
                out.add((B.classes, sigma))
    return out


def _merge_image(B, A, D, tau):
    """Image of A's partition under an isomorphism B -> D with class bijection tau."""
    # every A-class is a union of B-classes; map each through tau
    parts = {}
    for bi, c in enumerate(B.classes):
        parts.setdefault(A.color_of[c[0]], []).extend(D.classes[tau[bi]])
    C = SchurPartition(A.group, parts.values())
    sigma = [None] * A.rank
    for ai, members in parts.items():
        sigma[ai] = C.color_of[members[0]]
    return C.classes, tuple(sigma)


def complete_below(B, A, srings=None):
    """aut(B) <=_G aut(A) for S-rings B refining A.

    A regular copy of G inside aut(A) corresponds to a coset of normalised
    isomorphisms from A; it is conjugate into aut(B) iff that coset contains
    an isomorphism that also maps B onto an S-ring.
    """
    G = A.group
    if srings is None:
        srings = enumerate_srings(G)
    needed = iso_cosets(A, srings)
    reach = set()
    for D in srings:
        for tau in algebraic_isomorphisms(B, D):
            if realize(B, D, tau) is not None:
                reach.add(_merge_image(B, A, D, tau))
    return needed <= reach


def automorphism_images(A):
    """Pairs (A^alpha, induced class bijection) for alpha in Aut(G)."""
    G = A.group
    out = set()
    for alpha in automorphism_group(G, cap=max(DEFAULT_CAP, G.order)).elements():
        img = SchurPartition(G, [[alpha[x] for x in c] for c in A.classes])
        sigma = tuple(img.color_of[alpha[c[0]]] for c in A.classes)
        out.add((img.classes, sigma))
    return out


# --------------------------------------------------------------------- enumeration

def _units(G, C):
    neg = G.neg
    seen = set()
    out = []
    for x in C:
        if x in seen:
            continue
        u = tuple(sorted({x, neg[x]}))
        seen |= set(u)
        out.append(u)
    return out


def _splits(G, C):
    """Candidate 2-part splits of a class C (each containing min(C) on one side)."""
    units = _units(G, C)
    first, rest = units[0], units[1:]
    for mask in range(1 << len(rest)):
        K = list(first)
        for i, u in enumerate(rest):
            if mask >> i & 1:
                K.extend(u)
        if len(K) < len(C):
            yield K
    # halves separating each inverse pair
    pairs = [u for u in units if len(u) == 2]
    if len(pairs) == len(units) and pairs:
        x0 = pairs[0][0]
        for mask in range(1 << (len(pairs) - 1)):
            K = [x0]
            for i, u in enumerate(pairs[1:]):
                K.append(u[mask >> i & 1])
            yield K


@lru_cache(maxsize=None)
def enumerate_srings(G, cap=ENUMERATION_CAP):
    """All S-rings over G, sorted by (rank, classes).

    Depth-first over class splits followed by stabilisation; every S-ring is
    reached because any strictly finer S-ring induces a split of some class.
    """
    if G.order > cap:
        raise CapExceeded("enumerate_srings", G.order, cap)
    start = rank_two(G)
    seen = {start.classes: start}
    stack = [start]
    while stack:
        A = stack.pop()
        for ci, C in enumerate(A.classes):
            if len(C) < 2:
                continue
            for K in _splits(G, C):
                col = list(A.color_of)
                for x in K:
                    col[x] = A.rank
                B = stabilize(G, col)
                if B.classes not in seen:
                    seen[B.classes] = B
                    stack.append(B)
    return tuple(sorted(seen.values(), key=lambda A: (A.rank, A.classes)))


def brute_force_srings(G):
    """Independent oracle: filter every set partition of G# through the axioms."""
    rest = list(G.elements[1:])
    out = []
    for parts in _set_partitions(rest):
        if is_sring(G, [(0,)] + parts):
            out.append(SchurPartition(G, [(0,)] + parts))
    return sorted(out, key=lambda A: (A.rank, A.classes))


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for p in _set_partitions(rest):
        for i in range(len(p)):
            yield p[:i] + [[first] + p[i]] + p[i + 1:]
        yield [[first]] + p
