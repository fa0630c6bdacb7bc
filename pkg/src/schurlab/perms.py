"""Permutation groups on the point set of a group G.

Permutations are tuples of images, ``p[i]`` is the image of point ``i``.
Products act left to right: ``mul(p, q)`` applies ``p`` first.
"""

from __future__ import annotations

import math
from functools import cached_property

from .errors import CapExceeded, NotOvergroup, NotSubgroup


def identity(n):
    return tuple(range(n))


def mul(p, q):
    return tuple(q[i] for i in p)


def inv(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def is_identity(p):
    return all(i == j for i, j in enumerate(p))


def perm_order(p):
    seen = set()
    o = 1
    for i in range(len(p)):
        if i in seen:
            continue
        j, c = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            c += 1
        o = o * c // math.gcd(o, c)
    return o


def cycle_type(p):
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen:
            continue
        j, c = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            c += 1
        out.append(c)
    return sorted(out)


def orbit(point, gens):
    seen = {point}
    stack = [point]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


class PermGroup:
    """A permutation group with a lazily built deterministic stabilizer chain.

    Base points are chosen as the least moved point, so the base is in
    lexicographic element order.
    """

    def __init__(self, degree, gens=(), base_prefix=(), sgs=None):
        self.degree = degree
        self._base_prefix = list(base_prefix)
        self._sgs = sgs
        gens = [tuple(g) for g in gens]
        self.generators = sorted({g for g in gens if not is_identity(g)})

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order()}, ngens={len(self.generators)})"

    # -- stabilizer chain ------------------------------------------------------
    @cached_property
    def _chain(self):
        n = self.degree
        base = list(self._base_prefix)
        strong = []  # list of (perm, level at which it was added)
        if self._sgs is not None:
            # a known strong generating set: (base, [(perm, level)])
            base = list(self._sgs[0])
            strong = [(tuple(g), lv) for g, lv in self._sgs[1]]

        def level_gens(i):
            return [g for g, lv in strong if lv >= i]  # these fix base[:i]

        def add_base_for(h):
            for x in range(n):
                if h[x] != x:
                    if x not in base:
                        base.append(x)
                    return
            raise AssertionError("identity has no moved point")

        for g in self.generators if self._sgs is None else ():
            if all(g[b] == b for b in base):
                add_base_for(g)
            strong.append((g, 0))

        transversals = []

        def transversal(i):
            gs = level_gens(i)
            b = base[i]
            tr = {b: identity(n)}
            stack = [b]
            while stack:
                x = stack.pop()
                for g in gs:
                    y = g[x]
                    if y not in tr:
                        tr[y] = mul(tr[x], g)
                        stack.append(y)
            return tr

        def sift(h, start, trs):
            for j in range(start, len(base)):
                beta = h[base[j]]
                tr = trs[j]
                if beta not in tr:
                    return h, j
                h = mul(h, inv(tr[beta]))
            return h, len(base)

        # Schreier-Sims, processing levels from the bottom up
        trs = [transversal(i) for i in range(len(base))]
        i = len(base) - 1 if self._sgs is None else -1
        while i >= 0:
            restart = False
            trs[i] = transversal(i)
            gs = level_gens(i)
            tr = trs[i]
            for beta in sorted(tr):
                u = tr[beta]
                for s in gs:
                    us = mul(u, s)
                    img = us[base[i]]
                    schreier = mul(us, inv(tr[img]))
                    if is_identity(schreier):
                        continue
                    h, j = sift(schreier, i + 1, trs)
                    if j < len(base) or not is_identity(h):
                        if j == len(base):
                            add_base_for(h)
                            trs.append(None)
                        strong.append((h, j))
                        for lv in range(i + 1, j + 1):
                            trs[lv] = transversal(lv)
                        i = j
                        restart = True
                        break
                if restart:
                    break
            if not restart:
                i -= 1
        trs = [transversal(i) for i in range(len(base))]
        self._strong = strong
        return base, trs, [g for g, _ in strong]

    def level_group(self, i):
        """Pointwise stabilizer of base[:i], read off the strong generating set."""
        self._chain
        return PermGroup(self.degree, [g for g, lv in self._strong if lv >= i])

    @property
    def base(self):
        return list(self._chain[0])

    def order(self):
        return math.prod(len(t) for t in self._chain[1])

    def contains(self, p):
        p = tuple(p)
        base, trs, _ = self._chain
        h = p
        for b, tr in zip(base, trs):
            beta = h[b]
            if beta not in tr:
                return False
            h = mul(h, inv(tr[beta]))
        return is_identity(h)

    __contains__ = contains

    def elements(self):
        """Iterate over all elements (product of transversals)."""
        base, trs, _ = self._chain
        n = self.degree
        levels = [list(t.values()) for t in trs]

        # every element is u_{k-1} ... u_1 u_0 (leftmost applied first)
        def rec(i, acc):
            if i == len(levels):
                yield acc
                return
            for u in levels[i]:
                yield from rec(i + 1, mul(u, acc))

        yield from rec(0, identity(n))

    def orbit(self, point):
        return orbit(point, self.generators)

    def orbits(self):
        seen = set()
        out = []
        for x in range(self.degree):
            if x not in seen:
                o = self.orbit(x)
                seen |= o
                out.append(tuple(sorted(o)))
        return out

    def is_transitive(self):
        return len(self.orbit(0)) == self.degree

    def is_regular(self):
        return self.is_transitive() and self.order() == self.degree

    def stabilizer(self, point):
        """Point stabilizer via Schreier generators (exact)."""
        tr = {point: identity(self.degree)}
        stack = [point]
        while stack:
            x = stack.pop()
            for g in self.generators:
                y = g[x]
                if y not in tr:
                    tr[y] = mul(tr[x], g)
                    stack.append(y)
        gens = set()
        for x, u in tr.items():
            for g in self.generators:
                s = mul(mul(u, g), inv(tr[g[x]]))
                if not is_identity(s):
                    gens.add(s)
        return PermGroup(self.degree, gens)

    def is_subgroup_of(self, other):
        return all(other.contains(g) for g in self.generators)

    def same_group(self, other):
        return (self.degree == other.degree and self.order() == other.order()
                and self.is_subgroup_of(other))

    def conjugate(self, c):
        ci = inv(c)
        return PermGroup(self.degree, [mul(mul(ci, g), c) for g in self.generators])

    def centralizes(self, perms):
        return all(mul(g, p) == mul(p, g) for g in self.generators for p in perms)

    def to_json(self):
        return {"degree": self.degree, "order": self.order(),
                "generators": [list(g) for g in self.generators]}


def build_group(n, base, candidates, extend):
    """Build a group from a search oracle, level by level from the bottom.

    ``extend(level, gamma)`` must return an element fixing ``base[:level]``
    pointwise and mapping ``base[level]`` to ``gamma``, or ``None``.  The
    pointwise stabilizer of the whole base must be trivial.
    """
    gens = []
    levels = []
    for level in range(len(base) - 1, -1, -1):
        b = base[level]
        orb = orbit(b, gens)
        for gamma in candidates(level):
            if gamma in orb:
                continue
            g = extend(level, gamma)
            if g is not None:
                gens.append(tuple(g))
                levels.append((tuple(g), level))
                orb = orbit(b, gens)
    return PermGroup(n, gens, sgs=(list(base), levels))


# --------------------------------------------------------------------- G-specific

def translation(G, g):
    return G.add_table[g]


def regular_representation(G):
    """G_R: right translations x -> x + g."""
    gens = [translation(G, b) for b in G.basis()]
    return PermGroup(G.order, gens)


def symmetric_group(n):
    if n <= 1:
        return PermGroup(max(n, 1), [])
    gens = [tuple([1, 0] + list(range(2, n))), tuple(list(range(1, n)) + [0])]
    return PermGroup(n, gens)


def contains_regular(G, A):
    return all(A.contains(translation(G, b)) for b in G.basis())


def transitivity_module(G, A):
    """V(G, A_e): the partition of G into orbits of the stabilizer of the identity."""
    from .srings import validate_partition

    if A.degree != G.order or not contains_regular(G, A):
        raise NotOvergroup("A does not contain the right regular representation")
    orbs = A.stabilizer(0).orbits()
    return validate_partition(G, orbs)


def orbitals(A):
    """Colour matrix of the orbits of A on ordered pairs."""
    n = A.degree
    col = [[-1] * n for _ in range(n)]
    c = 0
    for x in range(n):
        for y in range(n):
            if col[x][y] >= 0:
                continue
            stack = [(x, y)]
            col[x][y] = c
            while stack:
                a, b = stack.pop()
                for g in A.generators:
                    a2, b2 = g[a], g[b]
                    if col[a2][b2] < 0:
                        col[a2][b2] = c
                        stack.append((a2, b2))
            c += 1
    return col


def two_closure(A, cap=64):
    """A^(2): automorphism group of the orbital colouring of G x G."""
    from .search import colored_automorphisms

    if A.degree > cap:
        raise CapExceeded("two_closure", A.degree, cap)
    return colored_automorphisms(orbitals(A))


# --------------------------------------------------------------------- regular subgroups

def _semiregular_of_order(elements, n, d):
    """Elements all of whose cycles have length d."""
    out = []
    for p in elements:
        if p[0] == 0:
            continue
        ct = cycle_type(p)
        if ct[0] == d and ct[-1] == d:
            out.append(p)
    return out


def regular_subgroups(A, G_type, cap=12, max_order=2_000_000):
    """All regular subgroups of A isomorphic to G_type, as sorted element tuples.

    Backtracks over images of the standard generators of G_type among the
    semiregular elements of A of the right order; deduplicates by element set.
    """
    n = A.degree
    if n > cap:
        raise CapExceeded("regular_subgroups", n, cap)
    if G_type.order != n:
        return []
    if A.order() > max_order:
        raise CapExceeded("regular_subgroups group order", A.order(), max_order)
    elems = list(A.elements())
    orders = G_type.factors
    pools = {d: _semiregular_of_order(elems, n, d) for d in set(orders)}
    if n == 1:
        return [(identity(1),)]
    found = {}

    def closure(gens):
        seen = {identity(n)}
        frontier = [identity(n)]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def semiregular(S):
        # a group is semiregular iff no non-identity element fixes a point
        return all(p[i] != i for p in S if not is_identity(p) for i in range(n))

    def rec(i, chosen, current):
        if i == len(orders):
            key = tuple(sorted(current))
            found.setdefault(key, key)
            return
        need = math.prod(orders[: i + 1])
        for x in pools[orders[i]]:
            if x in current:
                continue
            if any(mul(x, c) != mul(c, x) for c in chosen):
                continue
            S = closure(chosen + [x])
            if len(S) != need or not semiregular(S):
                continue
            rec(i + 1, chosen + [x], S)

    rec(0, [], {identity(n)})
    return sorted(found)


def _subgroup_key(elems):
    return tuple(sorted(elems))


def conjugacy_classes_regular(A, G_type, cap=12):
    """Partition the regular subgroups of A of type G_type into A-conjugacy classes."""
    subs = regular_subgroups(A, G_type, cap=cap)
    index = {s: i for i, s in enumerate(subs)}
    cls = [-1] * len(subs)
    classes = []
    for i, s in enumerate(subs):
        if cls[i] >= 0:
            continue
        cid = len(classes)
        members = [s]
        cls[i] = cid
        stack = [s]
        while stack:
            cur = stack.pop()
            for g in A.generators:
                gi = inv(g)
                conj = _subgroup_key(mul(mul(gi, x), g) for x in cur)
                j = index[conj]
                if cls[j] < 0:
                    cls[j] = cid
                    members.append(conj)
                    stack.append(conj)
        classes.append(sorted(members))
    return classes


def is_complete_sub(Asub, B, G_type, cap=12):
    """Asub <=_G B: every regular G_type-subgroup of B has a B-conjugate inside Asub."""
    if not Asub.is_subgroup_of(B):
        raise NotSubgroup("Asub is not a subgroup of B")
    for cls in conjugacy_classes_regular(B, G_type, cap=cap):
        if not any(all(Asub.contains(x) for x in R) for R in cls):
            return False
    return True


def sup_min(G, cap=12):
    """Minimal 2-closed overgroups of G_R under <=_G, one per schurian S-ring.

    Returns a list of (S-ring, aut group) pairs.  The <=_G comparisons are
    evaluated through normalised S-ring isomorphisms (see ``srings.complete_below``).
    """
    from .srings import automorphisms, enumerate_srings, is_schurian, complete_below, refines

    if G.order > cap:
        raise CapExceeded("sup_min", G.order, cap)
    schurian = [A for A in enumerate_srings(G) if is_schurian(A)]
    out = []
    for A in schurian:
        minimal = True
        for B in schurian:
            if B is A or B.rank <= A.rank or not refines(B, A):
                continue
            if complete_below(B, A):
                minimal = False
                break
        if minimal:
            out.append((A, automorphisms(A)))
    return out
