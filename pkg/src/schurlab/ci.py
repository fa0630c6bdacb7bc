"""Cayley digraphs, CI tests and DCI scans."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CapExceeded, IdentityInConnectionSet
from .groups import automorphism_group
from .perms import PermGroup, conjugacy_classes_regular
from .search import canonical_form, colored_automorphisms, find_isomorphism

CI_CAP = 12
ORACLE_CAP = 10
SCAN_CAP = 10


@dataclass(frozen=True)
class CayleyDigraph:
    group: object
    connection: tuple

    @property
    def order(self):
        return self.group.order

    def arcs(self):
        G = self.group
        return [(g, G.add(s, g)) for g in G.elements for s in self.connection]

    def adjacency(self):
        G = self.group
        S = set(self.connection)
        n = G.order
        return [[1 if G.sub(h, g) in S else 0 for h in range(n)] for g in range(n)]

    def out_degree(self, g):
        return len(self.connection)

    def to_json(self):
        G = self.group
        return {"group": G.name, "connection": [list(G.coords(s)) for s in self.connection]}


def cayley(G, S):
    S = tuple(sorted(set(S)))
    if 0 in S:
        raise IdentityInConnectionSet("identity in connection set")
    for s in S:
        if not 0 <= s < G.order:
            raise ValueError(f"element {s} out of range")
    return CayleyDigraph(G, S)


def _check_cap(G, cap, what):
    if G.order > cap:
        raise CapExceeded(what, G.order, cap)


def digraph_automorphisms(gamma, cap=CI_CAP):
    _check_cap(gamma.group, cap, "digraph_automorphisms")
    return colored_automorphisms(gamma.adjacency())


def digraph_isomorphism(g1, g2, cap=CI_CAP):
    """An explicit bijection g1 -> g2, or None."""
    _check_cap(g1.group, cap, "digraph_isomorphism")
    if g1.order != g2.order or len(g1.connection) != len(g2.connection):
        return None
    C1, C2 = g1.adjacency(), g2.adjacency()
    if canonical_form(C1) != canonical_form(C2):
        return None
    phi = find_isomorphism(C1, C2)
    if phi is None:  # pragma: no cover - canonical forms are complete invariants
        raise RuntimeError("canonical forms agree but no isomorphism found")
    return phi


# --------------------------------------------------------------------- CI tests

_AUT_CACHE = {}


def group_automorphisms(G):
    key = G.factors
    if key not in _AUT_CACHE:
        _AUT_CACHE[key] = list(automorphism_group(G, cap=max(64, G.order)).elements())
    return _AUT_CACHE[key]


def aut_orbit(G, S):
    return {tuple(sorted(a[s] for s in S)) for a in group_automorphisms(G)}


def orbit_representative(G, S):
    return min(aut_orbit(G, S))


@dataclass
class CIVerdict:
    ci: bool
    witness: dict | None = None

    def __bool__(self):
        return self.ci


def _witness_set(G, S):
    """A connection set T with Cay(G,S) = Cay(G,T) not in the Aut(G)-orbit of S."""
    orb = aut_orbit(G, S)
    C = cayley(G, S).adjacency()
    rest = [x for x in G.elements if x != 0]
    for T in itertools.combinations(rest, len(S)):
        if T in orb:
            continue
        if find_isomorphism(C, cayley(G, T).adjacency()) is not None:
            return T
    return None


_VERDICTS = {}


def is_ci_subset(G, S, cap=CI_CAP):
    """Babai's criterion: all regular G-subgroups of Aut(Cay(G,S)) are conjugate.

    A non-CI verdict carries a witness T: Cay(G,S) = Cay(G,T) with T outside S^Aut(G).
    """
    _check_cap(G, cap, "is_ci_subset")
    S = cayley(G, S).connection
    key = (G.factors, orbit_representative(G, S))
    if key not in _VERDICTS:
        # the CI property is constant on Aut(G)-orbits, witnesses are not
        _VERDICTS[key] = _babai(G, S, cap)
    if _VERDICTS[key]:
        return CIVerdict(True)
    return CIVerdict(False, {"T": _witness_set(G, S)})


def _babai(G, S, cap):
    A = digraph_automorphisms(cayley(G, S), cap=cap)
    if A.order() == _factorial(G.order):
        return True
    return len(conjugacy_classes_regular(A, G, cap=cap)) <= 1


def _factorial(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def is_ci_subset_oracle(G, S, cap=ORACLE_CAP):
    """Ground truth from the definition, by pairwise isomorphism tests."""
    _check_cap(G, cap, "is_ci_subset_oracle")
    S = cayley(G, S).connection
    return _witness_set(G, S) is None


def is_dci_group(G, cap=SCAN_CAP, jobs=1):
    """(True, None) or (False, least non-CI set with its witness)."""
    _check_cap(G, cap, "is_dci_group")
    reps = scan_representatives(G)
    results = scan(G, reps, jobs=jobs)
    bad = [S for S, v in zip(reps, results) if not v.ci]
    if not bad:
        return True, None
    S = min(bad)
    return False, {"set": S, "T": _witness_set(G, S)}


def scan_representatives(G):
    rest = [x for x in G.elements if x != 0]
    reps = set()
    for k in range(len(rest) + 1):
        for S in itertools.combinations(rest, k):
            reps.add(orbit_representative(G, S))
    return sorted(reps)


def _scan_one(args):
    factors, S = args
    from .groups import make_group
    return _babai(make_group(list(factors)), S, CI_CAP)


def scan(G, reps, jobs=1):
    if jobs and jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            flags = list(ex.map(_scan_one, [(G.factors, S) for S in reps]))
        for S, f in zip(reps, flags):
            _VERDICTS.setdefault((G.factors, orbit_representative(G, S)), f)
        return [CIVerdict(f) for f in flags]
    return [CIVerdict(_ci_flag(G, S)) for S in reps]


def _ci_flag(G, S):
    key = (G.factors, orbit_representative(G, S))
    if key not in _VERDICTS:
        _VERDICTS[key] = _babai(G, S, CI_CAP)
    return _VERDICTS[key]


# --------------------------------------------------------------------- CI-S-rings

def is_ci_sring(A, cap=CI_CAP):
    """iso_e(A) = aut(A)_e Aut(G), compared coset by coset."""
    from .srings import automorphism_images, iso_cosets

    _check_cap(A.group, cap, "is_ci_sring")
    return iso_cosets(A) == automorphism_images(A)
