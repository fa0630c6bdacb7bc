"""Letter-matrix model of rational S-rings over C_p^2 x C_q^2.

Basic sets of W(G) are the cells X_{1,a} X_{2,b} with (a, b) in [0,p+1] x [0,q+1];
X_{i,0} = {e} and X_{i,j} = L_{i,j}^#.  A rational S-ring is a coarsening of
W(G), and (for primitive ones) is determined by the letters written in the
interior cells [1,p+1] x [1,q+1].
"""

from __future__ import annotations

import copy
import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .errors import CapExceeded, DominanceViolation, EmptyProfile
from .groups import Subgroup, make_group, prime_factors, ring_multiply, simple
from .srings import SchurPartition, radical

RATIONAL_CAP = 35  # pq


def _check_primes(p, q, cap=RATIONAL_CAP):
    if p == q or prime_factors(p) != {p: 1} or prime_factors(q) != {q: 1}:
        raise ValueError("p and q must be distinct primes")
    if p * q > cap:
        raise CapExceeded("rational model pq", p * q, cap)


class RationalModel:
    """C_p^2 x C_q^2 with its order-p and order-q subgroups in a fixed order."""

    def __init__(self, p, q, cap=RATIONAL_CAP):
        _check_primes(p, q, cap)
        self.p, self.q = p, q
        self.group = make_group([p, p, q, q])
        G = self.group
        self.P = G.sylow(p)
        self.Q = G.sylow(q)
        self.L = (self._order_subgroups(p), self._order_subgroups(q))

    def _order_subgroups(self, r):
        G = self.group
        subs = {}
        for x in G.elements:
            if G.element_orders[x] == r:
                H = tuple(sorted(G.mul(x, k) for k in range(r)))
                subs[H] = H
        # tie-break: lexicographic by least non-identity element
        return [Subgroup(H) for H in sorted(subs.values(), key=lambda H: H[1:])]

    def Lsub(self, i, j):
        """L_{i,j} with 1-based j."""
        return self.L[i - 1][j - 1]

    def X(self, i, t):
        if t == 0:
            return (0,)
        return tuple(x for x in self.L[i - 1][t - 1].members if x != 0)

    @cached_property
    def cells(self):
        G = self.group
        out = {}
        for a in range(self.p + 2):
            for b in range(self.q + 2):
                out[(a, b)] = G.set_add(self.X(1, a), self.X(2, b))
        return out

    @cached_property
    def cell_keys(self):
        return sorted(self.cells)

    @cached_property
    def cell_of(self):
        out = [None] * self.group.order
        for key, xs in self.cells.items():
            for x in xs:
                out[x] = key
        return out

    @cached_property
    def structure_constants(self):
        """c[i, j, k]: coefficient of a fixed element of cell k in X_i X_j."""
        G = self.group
        keys = self.cell_keys
        idx = {k: n for n, k in enumerate(keys)}
        reps = [self.cells[k][0] for k in keys]
        t = G.add_table
        r = len(keys)
        c = np.zeros((r, r, r), dtype=np.int64)
        for i, ki in enumerate(keys):
            Xi = self.cells[ki]
            for j, kj in enumerate(keys):
                Xj = set(self.cells[kj])
                for k, g in enumerate(reps):
                    c[i, j, k] = sum(1 for x in Xi if t[g][G.neg[x]] in Xj)
        return c

    @cached_property
    def pq_subgroups(self):
        G = self.group
        out = {}
        for i in range(1, self.p + 2):
            for j in range(1, self.q + 2):
                out[(i, j)] = Subgroup(G.set_add(self.Lsub(1, i).members, self.Lsub(2, j).members))
        return out

    @cached_property
    def w_subgroups(self):
        """All subgroups of G as cell sets (each is a product of a P- and a Q-subgroup)."""
        pa = [[0]] + [[0, i] for i in range(1, self.p + 2)] + [list(range(self.p + 2))]
        qb = [[0]] + [[0, j] for j in range(1, self.q + 2)] + [list(range(self.q + 2))]
        return [frozenset((a, b) for a in A for b in B) for A in pa for B in qb]


@lru_cache(maxsize=None)
def model(p, q):
    return RationalModel(p, q)


# --------------------------------------------------------------------- profiles

@dataclass(frozen=True)
class RatProfile:
    p: int
    q: int
    T: frozenset

    def decode(self):
        return decode_profile(self)


def decode_profile(profile):
    if not profile.T:
        raise EmptyProfile("empty profile")
    m = model(profile.p, profile.q)
    out = set()
    for key in profile.T:
        out.update(m.cells[tuple(key)])
    return tuple(sorted(out))


def profile_size(p, q, T):
    size = {0: 1}
    out = 0
    for a, b in T:
        out += (1 if a == 0 else p - 1) * (1 if b == 0 else q - 1)
    return out


def fiber(T, i, a):
    """T_i(a): coordinates t_i of members of T whose other coordinate is a."""
    if i == 1:
        return {t[0] for t in T if t[1] == a}
    return {t[1] for t in T if t[0] == a}


def fiber_shape_ok(Ti, size):
    """Four-shape law: empty, {0,l}, [0,size] minus {0,l}, or everything."""
    full = set(range(size + 1))
    if not Ti or Ti == full:
        return True
    if 0 in Ti:
        return len(Ti) == 2
    return len(full - Ti) == 2


# --------------------------------------------------------------------- letter matrices

def _line_ok(line):
    """Constant, or constant with one exception (only meaningful for length >= 3)."""
    counts = {}
    for x in line:
        counts[x] = counts.get(x, 0) + 1
    if len(counts) == 1:
        return True
    if len(counts) > 2:
        return False
    return 1 in counts.values() and len(line) >= 3


def _dominant(line):
    counts = {}
    for x in line:
        counts[x] = counts.get(x, 0) + 1
    if len(counts) == 1:
        return line[0], None
    a, b = sorted(counts, key=lambda z: counts[z])
    return b, a  # (dominant, exception)


def check_dominance(M):
    rows = [tuple(r) for r in M]
    cols = list(zip(*rows))
    for i, r in enumerate(rows):
        if not _line_ok(r):
            raise DominanceViolation(f"row {i + 1}")
    for j, c in enumerate(cols):
        if not _line_ok(c):
            raise DominanceViolation(f"column {j + 1}")
    return True


def letter_profiles(M):
    """Profile T of every letter, border cells assigned by the dominance rule."""
    check_dominance(M)
    rows = [tuple(r) for r in M]
    cols = list(zip(*rows))
    T = {}
    for i, r in enumerate(rows, start=1):
        for j, x in enumerate(r, start=1):
            T.setdefault(x, set()).add((i, j))
    for i, r in enumerate(rows, start=1):
        dom, exc = _dominant(r)
        T[exc if exc is not None else dom].add((i, 0))
    for j, c in enumerate(cols, start=1):
        dom, exc = _dominant(c)
        T[exc if exc is not None else dom].add((0, j))
    return {x: frozenset(t) for x, t in T.items()}


def matrix_to_partition(M, p, q):
    """Candidate partition {e} + one class per letter (not validated)."""
    m = model(p, q)
    if len(M) != p + 1 or any(len(r) != q + 1 for r in M):
        raise DominanceViolation("matrix shape is not (p+1) x (q+1)")
    prof = letter_profiles(M)
    classes = [(0,)] + [decode_profile(RatProfile(p, q, T)) for T in prof.values()]
    return SchurPartition(m.group, classes)


def _coarsening_ok(m, profiles):
    """Validate a coarsening of W(G) through W's structure constants."""
    keys = m.cell_keys
    idx = {k: n for n, k in enumerate(keys)}
    parts = [[(0, 0)]] + [sorted(T) for T in profiles]
    r = len(keys)
    ind = np.zeros((len(parts), r), dtype=np.int64)
    for a, part in enumerate(parts):
        for k in part:
            ind[a, idx[k]] = 1
    coef = np.einsum("ai,bj,ijk->abk", ind, ind, m.structure_constants)
    for part in parts:
        cols = [idx[k] for k in part]
        block = coef[:, :, cols]
        if not (block == block[:, :, :1]).all():
            return False
    return True


def is_valid_matrix(M, p, q):
    m = model(p, q)
    return _coarsening_ok(m, list(letter_profiles(M).values()))


def a_subgroup_cells(m, profiles):
    """Subgroups of G (as cell sets) that are unions of classes."""
    owner = {}
    for a, T in enumerate(profiles):
        for k in T:
            owner[k] = a
    out = []
    for S in m.w_subgroups:
        letters = {owner[k] for k in S if k != (0, 0)}
        if all(set(profiles[a]) <= S for a in letters):
            out.append(S)
    return out


def is_primitive_matrix(M, p, q):
    m = model(p, q)
    subs = a_subgroup_cells(m, list(letter_profiles(M).values()))
    return len(subs) == 2


def pcp_shape(T):
    """Matching of (i,j) cells if T = union of (L_{1,i} L_{2,j})^# over a partial matching."""
    inner = sorted((i, j) for i, j in T if i and j)
    rows = [i for i, _ in inner]
    cols = [j for _, j in inner]
    if not inner or len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        return None
    expect = set(inner) | {(i, 0) for i in rows} | {(0, j) for j in cols}
    return inner if expect == set(T) else None


# --------------------------------------------------------------------- named matrices

def named_matrix(which, p, q):
    """M1..M6 in the row/column arrangement of the case analysis."""
    X, Y = "X", "Y"
    R, C = p + 1, q + 1
    M = [[X] * C for _ in range(R)]
    if which == "M1":
        for i in range(R - 1):
            M[i][C - 1] = Y
        for j in range(C - 1):
            M[R - 1][j] = Y
    elif which in ("M2", "M3", "M4", "M5"):
        for i in range(1, R - 1):
            M[i][C - 1] = Y
        for j in range(1, C):
            M[R - 1][j] = Y
        if which in ("M3", "M4"):
            M[0][C - 1] = Y
        if which == "M4":
            M[R - 1][0] = Y
        if which == "M5":
            M[0][0] = Y
    elif which == "M6":
        M[0][C - 1] = Y
        for j in range(C - 1):
            M[R - 1][j] = Y
    else:
        raise ValueError(f"unknown matrix {which!r}")
    return M


def coefficient_oracle(G, Y, g):
    """Coefficient of g in (Y)^2, by explicit convolution."""
    sq = ring_multiply(simple(G, Y), simple(G, Y))
    return sq[g]


def _pick(G, pool, avoid, order):
    bad = set().union(*[set(H.members) for H in avoid])
    for x in sorted(pool):
        if x not in bad and G.element_orders[x] == order:
            return x
    return None


def analyze_matrix(which, p, q):
    """Recompute the contradiction attached to M1..M6 from raw group-ring products."""
    m = model(p, q)
    G = m.group
    M = named_matrix(which, p, q)
    prof = letter_profiles(M)
    sets = {x: decode_profile(RatProfile(p, q, T)) for x, T in prof.items()}
    A = matrix_to_partition(M, p, q)
    out = {"matrix": which, "p": p, "q": q,
           "classes": {x: len(s) for x, s in sets.items()},
           "valid_sring": _coarsening_ok(m, list(prof.values())),
           "primitive": is_primitive_matrix(M, p, q)}
    L1, L2 = m.L
    if which in ("M2", "M5"):
        Y = sets["Y"]
        h = _pick(G, m.Q.members, [L2[0], L2[-1]], q)
        h2 = _pick(G, m.P.members, [L1[0], L1[-1]], p)
        ch = coefficient_oracle(G, Y, h)
        ch2 = coefficient_oracle(G, Y, h2)
        Ys = set(Y)
        if which == "M2":
            f_h = p * (q - 2) ** 2 + 2 * (p - 1) * (q - 2)
            f_h2 = (p - 2) ** 2 * q + 2 * (p - 2) * (q - 1)
            f_gap = (q - p) * (p * q - 2)
        else:
            f_h = p * (q - 2) ** 2 + 2 * (p - 1) * (q - 2) + 2 * (q - 2)
            f_h2 = (p - 2) ** 2 * q + 2 * (p - 2) * (q - 1) + 2 * (p - 2)
            f_gap = (q - p) * p * q
        out.update({"kind": "CoefficientClash", "h": list(G.coords(h)),
                    "h_prime": list(G.coords(h2)), "h_in_Y": h in Ys, "h_prime_in_Y": h2 in Ys,
                    "c_h": ch, "c_h_prime": ch2, "gap": ch - ch2,
                    "formula": {"c_h": f_h, "c_h_prime": f_h2, "gap": f_gap}})
        return out
    # radical witnesses
    P_last, Q_last = L1[-1], L2[-1]
    if which == "M1":
        target, claimed = sets["Y"], G.set_add(P_last.members, Q_last.members)
    elif which == "M3":
        target, claimed = sets["Y"], P_last.members
    elif which == "M4":
        target, claimed = sets["X"], G.set_add(P_last.members, Q_last.members)
    else:  # M6
        target, claimed = tuple(sorted(set(sets["Y"]) | {0})), Q_last.members
    rad = radical(G, target)
    Ts = set(target)
    verified = all(G.add(y, x) in Ts for x in claimed for y in target)
    out.update({"kind": "NontrivialRadical", "witness": [list(G.coords(x)) for x in claimed],
                "witness_order": len(claimed), "radical_order": rad.order,
                "witness_verified": verified,
                "radical_contains_witness": set(claimed) <= rad.member_set,
                "nontrivial": 1 < rad.order < G.order})
    return out


# --------------------------------------------------------------------- exhaustive search

def dominance_matrices(p, q):
    """All (p+1) x (q+1) letter matrices obeying the dominance law, letters named
    0, 1, ... in order of first appearance (row-major)."""
    R, C = p + 1, q + 1
    M = [[None] * C for _ in range(R)]

    def partial_ok(line):
        counts = {}
        for x in line:
            if x is not None:
                counts[x] = counts.get(x, 0) + 1
        if len(counts) > 2:
            return False
        if len(counts) == 2 and min(counts.values()) > 1:
            return False
        return True

    def rec(pos, nletters):
        if pos == R * C:
            yield tuple(tuple(r) for r in M)
            return
        i, j = divmod(pos, C)
        for x in range(nletters + 1):
            M[i][j] = x
            if partial_ok(M[i]) and partial_ok([M[r][j] for r in range(R)]):
                yield from rec(pos + 1, max(nletters, x + 1))
            M[i][j] = None

    yield from rec(0, 0)


def _matrix_graph(M):
    """Rows, columns, cells and letters as a vertex-coloured graph."""
    R, C = len(M), len(M[0])
    letters = sorted({x for r in M for x in r})
    lid = {x: n for n, x in enumerate(letters)}
    n = R + C + R * C + len(letters)
    A = [[0] * n for _ in range(n)]
    for v in range(n):
        A[v][v] = 1 if v < R else 2 if v < R + C else 3 if v < R + C + R * C else 4
    for i in range(R):
        for j in range(C):
            c = R + C + i * C + j
            l = R + C + R * C + lid[M[i][j]]
            A[i][c] = A[c][i] = 5
            A[R + j][c] = A[c][R + j] = 6
            A[c][l] = A[l][c] = 7
    return A


def matrix_invariant(M):
    """Cheap invariant under row, column and letter permutations."""
    cols = list(zip(*M))
    out = []
    for x in {x for r in M for x in r}:
        out.append((sum(r.count(x) for r in M),
                    tuple(sorted(r.count(x) for r in M)),
                    tuple(sorted(c.count(x) for c in cols))))
    return (len(M), len(M[0]), tuple(sorted(out)))


def matrices_equivalent(M1, M2):
    """Equal up to permuting rows, columns and letters."""
    from .search import find_isomorphism

    if matrix_invariant(M1) != matrix_invariant(M2):
        return False
    return find_isomorphism(_matrix_graph(M1), _matrix_graph(M2)) is not None


def reduce_matrices(Ms):
    """One representative per symmetry class, in first-seen order."""
    buckets = {}
    reps = []
    for M in Ms:
        bucket = buckets.setdefault(matrix_invariant(M), [])
        if any(matrices_equivalent(M, N) for N in bucket):
            continue
        bucket.append(M)
        reps.append(M)
    return reps


def primitive_rational_search(p, q, cap=RATIONAL_CAP):
    """Surviving primitive rank >= 3 candidates, each with its PCP-shaped basic sets."""
    _check_primes(p, q, cap)
    return copy.deepcopy(_search(p, q))


@lru_cache(maxsize=None)
def _search(p, q):
    m = model(p, q)
    found = []
    examined = 0
    for M in dominance_matrices(p, q):
        examined += 1
        prof = letter_profiles(M)
        if len(prof) < 2:
            continue  # rank 2
        profiles = list(prof.values())
        if len(a_subgroup_cells(m, profiles)) != 2:
            continue
        if not _coarsening_ok(m, profiles):
            continue
        found.append(M)
    survivors = []
    for M in reduce_matrices(found):
        prof = letter_profiles(M)
        pcps = {x: pcp_shape(T) for x, T in prof.items()}
        survivors.append({"matrix": M, "rank": len(prof) + 1,
                          "pcp_letters": {x: v for x, v in pcps.items() if v is not None}})
    return {"p": p, "q": q, "examined": examined, "survivors": survivors,
            "all_have_pcp_set": all(s["pcp_letters"] for s in survivors)}


def two_letter_obstructions(p, q):
    """Two-letter dominance matrices with no PCP-shaped letter in which every letter
    occurs in at least two rows and two columns, up to row/column/letter permutation."""
    out = []
    for M in dominance_matrices(p, q):
        letters = {x for r in M for x in r}
        if len(letters) != 2:
            continue
        prof = letter_profiles(M)
        if any(pcp_shape(T) for T in prof.values()):
            continue
        ok = True
        for x in letters:
            rows = {i for i, r in enumerate(M) if x in r}
            cols = {j for j in range(q + 1) if any(r[j] == x for r in M)}
            if len(rows) < 2 or len(cols) < 2:
                ok = False
        if ok:
            out.append(M)
    return reduce_matrices(out)
