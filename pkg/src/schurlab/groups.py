"""Finite abelian groups, their subgroups, sections and the integer group ring.

Elements are stored as integer indices ``0..n-1``; index ``i`` corresponds to the
mixed-radix coordinate tuple over the invariant factors, first coordinate most
significant.  Index order is therefore lexicographic coordinate order and is the
single tie-breaker used everywhere in the package.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from functools import cached_property, reduce

from .errors import CapExceeded, GroupMismatch, InvalidGroup, NotNested

DEFAULT_CAP = 64


def prime_factors(n):
    """Prime factorisation as a dict ``{p: e}``."""
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _lcm(a, b):
    return a * b // math.gcd(a, b)


def invariant_factors(factors):
    """Canonical invariant factors d_1 | d_2 | ... | d_k of a product of cyclic groups."""
    powers = {}
    for f in factors:
        for p, e in prime_factors(f).items():
            powers.setdefault(p, []).append(p ** e)
    if not powers:
        return ()
    k = max(len(v) for v in powers.values())
    out = [1] * k
    for p, v in powers.items():
        v = sorted(v, reverse=True)
        for i, q in enumerate(v):
            out[k - 1 - i] *= q
    return tuple(out)


@dataclass(frozen=True)
class GroupSpec:
    """A finite abelian group in invariant-factor form."""

    factors: tuple

    @property
    def invariant_factors(self):
        return self.factors

    @cached_property
    def order(self):
        return math.prod(self.factors)

    @cached_property
    def exponent(self):
        return reduce(_lcm, self.factors, 1)

    @cached_property
    def omega(self):
        return sum(prime_factors(self.order).values())

    @property
    def name(self):
        return "x".join(f"C{d}" for d in self.factors)

    def __repr__(self):
        return f"GroupSpec({self.name})"

    def __len__(self):
        return self.order

    @property
    def identity(self):
        return 0

    @cached_property
    def _radix(self):
        r = [1] * len(self.factors)
        for i in range(len(self.factors) - 2, -1, -1):
            r[i] = r[i + 1] * self.factors[i + 1]
        return tuple(r)

    def coords(self, i):
        return tuple((i // r) % d for r, d in zip(self._radix, self.factors))

    def index(self, coords):
        if len(coords) != len(self.factors):
            raise ValueError(f"expected {len(self.factors)} coordinates, got {coords!r}")
        return sum((c % d) * r for c, d, r in zip(coords, self.factors, self._radix))

    @cached_property
    def elements(self):
        return tuple(range(self.order))

    @cached_property
    def _coord_table(self):
        return tuple(self.coords(i) for i in range(self.order))

    @cached_property
    def add_table(self):
        n = self.order
        ct = self._coord_table
        return tuple(
            tuple(self.index(tuple(a + b for a, b in zip(ct[i], ct[j]))) for j in range(n))
            for i in range(n)
        )

    @cached_property
    def neg(self):
        return tuple(self.index(tuple(-c for c in self._coord_table[i])) for i in range(self.order))

    def add(self, a, b):
        return self.add_table[a][b]

    def sub(self, a, b):
        return self.add_table[a][self.neg[b]]

    def mul(self, i, m):
        """The power ``m*i`` (additively written)."""
        return self.index(tuple(m * c for c in self._coord_table[i]))

    @cached_property
    def element_orders(self):
        out = []
        for i in range(self.order):
            out.append(reduce(_lcm, (d // math.gcd(c, d) for c, d in zip(self._coord_table[i], self.factors)), 1))
        return tuple(out)

    def basis(self):
        """Standard generators, one per invariant factor."""
        k = len(self.factors)
        return [self.index(tuple(1 if j == i else 0 for j in range(k))) for i in range(k)]

    def set_add(self, X, Y):
        """Minkowski sum ``XY`` as a sorted tuple."""
        t = self.add_table
        return tuple(sorted({t[x][y] for x in X for y in Y}))

    def translate(self, X, g):
        t = self.add_table[g]
        return tuple(sorted(t[x] for x in X))

    def omega_p(self, p):
        """G[p] = {g : g^p = e}."""
        return Subgroup(tuple(i for i in self.elements if self.mul(i, p) == 0))

    def sylow(self, p):
        return Subgroup(tuple(i for i in self.elements if _is_power_of(self.element_orders[i], p)))

    def hall(self, primes):
        primes = set(primes)
        return Subgroup(tuple(i for i in self.elements
                              if set(prime_factors(self.element_orders[i])) <= primes))

    def to_json(self):
        return {"factors": list(self.factors)}


def _is_power_of(m, p):
    while m % p == 0:
        m //= p
    return m == 1


def make_group(factors):
    """Build a group from any list of cyclic orders, canonicalising to invariant factors."""
    factors = [int(f) for f in factors]
    if any(f < 1 for f in factors):
        raise InvalidGroup(f"factors must be positive, got {factors}")
    inv = invariant_factors([f for f in factors if f > 1])
    if not inv:
        raise InvalidGroup("group must have at least one factor >= 2")
    return GroupSpec(inv)


_LITERAL = re.compile(r"^\s*[CZ](\d+)(?:\^(\d+))?\s*$", re.IGNORECASE)


def parse_group(text):
    """Parse ``"C2xC2xC3xC3"``, ``"Z8"``, ``"C3^2"`` or a JSON object with ``factors``."""
    if isinstance(text, GroupSpec):
        return text
    if isinstance(text, dict):
        return make_group(text["factors"])
    if isinstance(text, (list, tuple)):
        return make_group(text)
    factors = []
    for part in str(text).split("x"):
        m = _LITERAL.match(part)
        if not m:
            raise InvalidGroup(f"cannot parse group literal {text!r}")
        factors += [int(m.group(1))] * int(m.group(2) or 1)
    return make_group(factors)


@dataclass(frozen=True, order=True)
class Subgroup:
    """A subgroup given by its sorted member indices."""

    members: tuple

    @property
    def order(self):
        return len(self.members)

    def __contains__(self, x):
        return x in self.member_set

    @cached_property
    def member_set(self):
        return frozenset(self.members)

    def __len__(self):
        return len(self.members)

    def issubset(self, other):
        return self.member_set <= other.member_set

    def sort_key(self):
        return (self.order, self.members)


def generated_subgroup(G, gens):
    """Closure of ``gens`` under addition."""
    seen = {0}
    frontier = [0]
    gens = [g for g in set(gens) if g != 0]
    t = G.add_table
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = t[x][g]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return Subgroup(tuple(sorted(seen)))


def join(G, H, K):
    return Subgroup(G.set_add(H.members, K.members))


def meet(H, K):
    return Subgroup(tuple(sorted(H.member_set & K.member_set)))


def all_subgroups(G, cap=DEFAULT_CAP):
    """Every subgroup, sorted by (order, members).

    Breadth-first: start from cyclic subgroups, close under pairwise joins.
    """
    if G.order > cap:
        raise CapExceeded("all_subgroups", G.order, cap)
    found = {}
    for g in G.elements:
        H = generated_subgroup(G, [g])
        found[H.members] = H
    frontier = list(found.values())
    while frontier:
        nxt = []
        current = list(found.values())
        for H in frontier:
            for K in current:
                J = join(G, H, K)
                if J.members not in found:
                    found[J.members] = J
                    nxt.append(J)
        frontier = nxt
    return sorted(found.values(), key=Subgroup.sort_key)


def subgroups_of_order(G, m):
    """Subgroups of a given order; uses the cap-free cyclic/join search restricted to order m."""
    if G.order <= DEFAULT_CAP:
        return [H for H in all_subgroups(G) if H.order == m]
    # larger groups: build from cyclic subgroups whose order divides m
    cyc = {}
    for g in G.elements:
        if m % G.element_orders[g] == 0:
            H = generated_subgroup(G, [g])
            cyc[H.members] = H
    found = dict(cyc)
    frontier = list(found.values())
    while frontier:
        nxt = []
        for H in frontier:
            for K in list(cyc.values()):
                if K.issubset(H):
                    continue
                J = join(G, H, K)
                if m % J.order == 0 and J.members not in found:
                    found[J.members] = J
                    nxt.append(J)
        frontier = nxt
    return sorted((H for H in found.values() if H.order == m), key=Subgroup.sort_key)


def _abelian_type(elems, add, zero):
    """Invariant factors of a finite abelian group given by an addition function."""
    n = len(elems)

    def times(x, k):
        y = zero
        for _ in range(k):
            y = add(y, x)
        return y

    factors = []
    for p, e in prime_factors(n).items():
        counts = [1]
        k = 1
        while counts[-1] < p ** e:
            c = sum(1 for x in elems if times(x, p ** k) == zero)
            counts.append(c)
            k += 1
        ranks = [round(math.log(c, p)) for c in counts]
        # number of cyclic factors of order >= p^j is ranks[j] - ranks[j-1]
        ge = [ranks[j] - ranks[j - 1] for j in range(1, len(ranks))]
        for j in range(len(ge)):
            exact = ge[j] - (ge[j + 1] if j + 1 < len(ge) else 0)
            factors += [p ** (j + 1)] * exact
    return invariant_factors(factors) if factors else ()


@dataclass(frozen=True)
class SectionRef:
    """A section U/L together with the projection onto a canonical quotient group."""

    group: GroupSpec
    U: Subgroup
    L: Subgroup
    quotient: GroupSpec
    projection: dict = field(compare=False, hash=False)

    def project(self, X):
        return tuple(sorted({self.projection[x] for x in X}))

    def coset_of(self, q):
        return tuple(sorted(x for x, y in self.projection.items() if y == q))


def _trivial_group():
    return GroupSpec((1,))


def section(G, U, L):
    """Materialise U/L with an explicit isomorphism onto canonical invariant-factor form."""
    if not L.issubset(U):
        raise NotNested("L is not contained in U")
    t = G.add_table
    cid = {}
    for x in U.members:
        cid[x] = min(t[x][l] for l in L.members)
    reps = sorted(set(cid.values()))
    if len(reps) == 1:
        return SectionRef(G, U, L, _trivial_group(), {x: 0 for x in U.members})

    def qadd(a, b):
        return cid[t[a][b]]

    inv = _abelian_type(reps, qadd, 0)
    Q = GroupSpec(inv)
    iso = _find_isomorphism(Q, reps, qadd)
    projection = {x: iso[cid[x]] for x in U.members}
    return SectionRef(G, U, L, Q, projection)


def _find_isomorphism(Q, reps, qadd):
    """Map coset representatives to elements of Q by choosing images of Q's basis."""

    def times(x, k):
        y = 0
        for _ in range(k):
            y = qadd(y, x)
        return y

    basis_orders = Q.factors
    by_order = {}
    for r in reps:
        o = 1
        y = r
        while y != 0:
            y = qadd(y, r)
            o += 1
        by_order.setdefault(o, []).append(r)

    def span(gens):
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = qadd(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def rec(i, chosen):
        if i == len(basis_orders):
            return chosen
        need = math.prod(basis_orders[: i + 1])
        for r in by_order.get(basis_orders[i], []):
            if len(span(chosen + [r])) == need:
                res = rec(i + 1, chosen + [r])
                if res is not None:
                    return res
        return None

    gens = rec(0, [])
    iso = {}
    for coords in itertools.product(*(range(d) for d in basis_orders)):
        x = 0
        for c, g in zip(coords, gens):
            x = qadd(x, times(g, c))
        iso[x] = Q.index(coords)
    return iso


# --------------------------------------------------------------------- group ring

@dataclass(frozen=True)
class GroupRingVector:
    """An element sum_g c_g g of the integer group ring."""

    group: GroupSpec
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.group.order:
            raise ValueError("coefficient vector has wrong length")

    def __getitem__(self, g):
        return self.coeffs[g]

    def __add__(self, other):
        _same(self, other)
        return GroupRingVector(self.group, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        _same(self, other)
        return GroupRingVector(self.group, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingVector(self.group, tuple(other * a for a in self.coeffs))
        return ring_multiply(self, other)

    __rmul__ = __mul__

    def power_map(self, m):
        """eta^(m) = sum c_g g^m."""
        G = self.group
        out = [0] * G.order
        for g, c in enumerate(self.coeffs):
            if c:
                out[G.mul(g, m)] += c
        return GroupRingVector(G, tuple(out))

    def support(self):
        return tuple(g for g, c in enumerate(self.coeffs) if c)


def _same(a, b):
    if a.group != b.group:
        raise GroupMismatch(f"{a.group.name} vs {b.group.name}")


def simple(G, X):
    """The simple quantity of a subset X."""
    c = [0] * G.order
    for x in X:
        c[x] = 1
    return GroupRingVector(G, tuple(c))


def ring_multiply(a, b):
    _same(a, b)
    G = a.group
    t = G.add_table
    out = [0] * G.order
    bs = [(h, c) for h, c in enumerate(b.coeffs) if c]
    for g, ca in enumerate(a.coeffs):
        if ca:
            row = t[g]
            for h, cb in bs:
                out[row[h]] += ca * cb
    return GroupRingVector(G, tuple(out))


def set_product_coefficients(G, X, Y):
    """Coefficient list of simple(X)*simple(Y), without building vectors."""
    t = G.add_table
    out = [0] * G.order
    for x in X:
        row = t[x]
        for y in Y:
            out[row[y]] += 1
    return out


# --------------------------------------------------------------------- automorphisms

def is_group_automorphism(G, perm):
    t = G.add_table
    if perm[0] != 0:
        return False
    n = G.order
    return all(perm[t[a][b]] == t[perm[a]][perm[b]] for a in range(n) for b in range(a, n))


def _hom_from_basis(G, images):
    """The endomorphism sending the standard basis to ``images`` as an image array."""
    out = [0] * G.order
    for i in G.elements:
        x = 0
        for c, y in zip(G.coords(i), images):
            x = G.add(x, G.mul(y, c))
        out[i] = x
    return tuple(out)


def automorphism_group(G, cap=DEFAULT_CAP):
    """Aut(G) acting on G, built by base search over images of the standard basis."""
    from .perms import PermGroup, build_group

    if G.order > cap:
        raise CapExceeded("automorphism_group", G.order, cap)
    basis = G.basis()
    orders = G.factors
    k = len(basis)
    cand = [[y for y in G.elements if orders[i] % G.element_orders[y] == 0 and
             G.element_orders[y] == orders[i]] for i in range(k)]

    def extend(level, gamma):
        # automorphism fixing basis[:level], mapping basis[level] -> gamma
        fixed = basis[:level]

        def rec(i, imgs):
            need = math.prod(orders[: i])
            if len(generated_subgroup(G, imgs).members) != need:
                return None
            if i == k:
                return _hom_from_basis(G, imgs)
            options = [gamma] if i == level else cand[i]
            for y in options:
                r = rec(i + 1, imgs + [y])
                if r is not None:
                    return r
            return None

        if G.element_orders[gamma] != orders[level]:
            return None
        return rec(level, list(fixed))

    return build_group(G.order, basis, lambda lvl: cand[lvl], extend)


def power_multipliers(G, restrict_prime=None):
    """Multipliers m in [1, exp(G)] coprime to exp(G), optionally m = 1 mod exp(G)_{p'}."""
    e = G.exponent
    ms = [m for m in range(1, e + 1) if math.gcd(m, e) == 1]
    if restrict_prime is not None:
        p = restrict_prime
        if G.order % p:
            raise ValueError(f"{p} does not divide |G|")
        ep = e
        while ep % p == 0:
            ep //= p
        ms = [m for m in ms if (m - 1) % ep == 0]
    return ms


def power_automorphisms(G, restrict_prime=None):
    """P(G), or P_p(G) when ``restrict_prime`` is given, as a permutation group on G."""
    from .perms import PermGroup

    gens = sorted({tuple(G.mul(x, m) for x in G.elements)
                   for m in power_multipliers(G, restrict_prime)})
    return PermGroup(G.order, gens)


def _partitions(n, largest=None):
    if n == 0:
        yield ()
        return
    largest = n if largest is None else largest
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def abelian_groups(n):
    """All abelian groups of order n, one per isomorphism type."""
    if n == 1:
        return [GroupSpec((1,))]
    per_prime = []
    for p, e in prime_factors(n).items():
        per_prime.append([[p ** k for k in part] for part in _partitions(e)])
    out = []
    for combo in itertools.product(*per_prime):
        out.append(make_group([f for part in combo for f in part]))
    return sorted(out, key=lambda G: G.factors)


def abelian_groups_up_to(m, start=2):
    return [G for n in range(start, m + 1) for G in abelian_groups(n)]
