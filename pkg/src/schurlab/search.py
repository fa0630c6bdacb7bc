"""Individualisation-refinement search on colour matrices.

A colour matrix ``C`` is an n x n list of integer colours; ``C[x][y]`` is the
colour of the arc (x, y).  Everything here is exact and deterministic: cells are
ordered by their (invariant) colour ids, branching goes in increasing vertex order.
"""

from __future__ import annotations

from collections import Counter

from .perms import PermGroup, build_group, identity, inv


def _pair_codes(C):
    n = len(C)
    k = 1 + max((c for row in C for c in row), default=0)
    return [[C[v][u] * k + C[u][v] for u in range(n)] for v in range(n)]


def _signatures(P, col):
    n = len(P)
    m = 1 + max(col)
    out = []
    for v in range(n):
        row = P[v]
        cnt = Counter(row[u] * m + col[u] for u in range(n))
        out.append((col[v], tuple(sorted(cnt.items()))))
    return out


def joint_refine(P1, col1, P2, col2):
    """Refine two colourings in lockstep; None when they become inconsistent."""
    ncol = len(set(col1))
    while True:
        s1 = _signatures(P1, col1)
        s2 = _signatures(P2, col2) if P2 is not None else None
        if s2 is not None and Counter(s1) != Counter(s2):
            return None
        keys = sorted(set(s1))
        ids = {s: i for i, s in enumerate(keys)}
        col1 = [ids[s] for s in s1]
        if s2 is not None:
            col2 = [ids[s] for s in s2]
        if len(keys) == ncol:
            return col1, col2
        ncol = len(keys)


def _initial(C, vcol):
    n = len(C)
    base = [(C[v][v], vcol[v] if vcol is not None else 0) for v in range(n)]
    keys = sorted(set(base))
    ids = {k: i for i, k in enumerate(keys)}
    return [ids[b] for b in base]


def _individualize(col, v):
    col = list(col)
    col[v] = max(col) + 1
    return col


def _cells(col):
    cells = {}
    for v, c in enumerate(col):
        cells.setdefault(c, []).append(v)
    return cells


def _target_cell(col):
    cells = _cells(col)
    best = None
    for c, vs in cells.items():
        if len(vs) > 1 and (best is None or (len(vs), c) < (len(cells[best]), best)):
            best = c
    return best, cells


def _verify(C1, C2, phi):
    n = len(C1)
    for x in range(n):
        r1 = C1[x]
        r2 = C2[phi[x]]
        for y in range(n):
            if r1[y] != r2[phi[y]]:
                return False
    return True


def find_isomorphism(C1, C2, vcol1=None, vcol2=None, fixed=()):
    """A bijection phi with C1[x][y] == C2[phi x][phi y] for all x, y, or None.

    ``fixed`` is a sequence of forced pairs (x, phi(x)).
    """
    n = len(C1)
    if len(C2) != n:
        return None
    P1, P2 = _pair_codes(C1), _pair_codes(C2)
    if sorted(c for row in P1 for c in row) != sorted(c for row in P2 for c in row):
        return None
    col1, col2 = _initial(C1, vcol1), _initial(C2, vcol2)
    if Counter(col1) != Counter(col2):
        return None
    # initial ids are computed separately; align through the joint key set
    k1 = [(C1[v][v], vcol1[v] if vcol1 else 0) for v in range(n)]
    k2 = [(C2[v][v], vcol2[v] if vcol2 else 0) for v in range(n)]
    keys = sorted(set(k1) | set(k2))
    ids = {k: i for i, k in enumerate(keys)}
    col1 = [ids[k] for k in k1]
    col2 = [ids[k] for k in k2]
    for x, y in fixed:
        m = max(max(col1), max(col2)) + 1
        col1 = list(col1)
        col2 = list(col2)
        col1[x] = m
        col2[y] = m
    return _iso_rec(C1, C2, P1, P2, col1, col2)


def _iso_rec(C1, C2, P1, P2, col1, col2):
    r = joint_refine(P1, col1, P2, col2)
    if r is None:
        return None
    col1, col2 = r
    c, cells1 = _target_cell(col1)
    if c is None:
        pos2 = {cc: v for v, cc in enumerate(col2)}
        phi = tuple(pos2[cc] for cc in col1)
        return phi if _verify(C1, C2, phi) else None
    cells2 = _cells(col2)
    x = cells1[c][0]
    m = max(col1) + 1
    for y in cells2[c]:
        a = list(col1)
        b = list(col2)
        a[x] = m
        b[y] = m
        phi = _iso_rec(C1, C2, P1, P2, a, b)
        if phi is not None:
            return phi
    return None


def colored_automorphisms(C, vcol=None):
    """Automorphism group of a colour matrix (optionally with vertex colours)."""
    n = len(C)
    P = _pair_codes(C)
    col0 = _initial(C, vcol)
    col0 = joint_refine(P, col0, None, None)[0]
    base = list(range(n))
    prefix_cols = {}

    def prefix_colouring(level):
        # refined colouring after individualising base[:level]
        if level in prefix_cols:
            return prefix_cols[level]
        col = col0
        for v in base[:level]:
            col = joint_refine(P, _individualize(col, v), None, None)[0]
        prefix_cols[level] = col
        return col

    def candidates(level):
        col = prefix_colouring(level)
        b = base[level]
        cell = [v for v in range(n) if col[v] == col[b]]
        return cell if len(cell) > 1 else []

    def extend(level, gamma):
        fixed = [(v, v) for v in base[:level]] + [(base[level], gamma)]
        return find_isomorphism(C, C, vcol, vcol, fixed)

    return build_group(n, base, candidates, extend)


def adjacency_colors(n, arcs):
    C = [[0] * n for _ in range(n)]
    for x, y in arcs:
        C[x][y] = 1
    return C


def canonical_form(C, aut=None):
    """Canonical encoding: least leaf matrix over the refinement tree.

    Subtrees equivalent under the automorphism group are explored once.
    """
    n = len(C)
    P = _pair_codes(C)
    if aut is None:
        aut = colored_automorphisms(C)
    col0 = joint_refine(P, _initial(C, None), None, None)[0]
    best = [None]

    def rec(col, prefix):
        c, cells = _target_cell(col)
        if c is None:
            order = sorted(range(n), key=lambda v: col[v])
            enc = tuple(C[order[i]][order[j]] for i in range(n) for j in range(n))
            if best[0] is None or enc < best[0]:
                best[0] = enc
            return
        stab = pointwise_stabilizer(aut, prefix)
        seen = set()
        for v in cells[c]:
            if v in seen:
                continue
            seen |= stab.orbit(v)
            col2 = joint_refine(P, _individualize(col, v), None, None)[0]
            rec(col2, prefix + [v])

    rec(col0, [])
    return (n, best[0])


def pointwise_stabilizer(A, points):
    if not points:
        return A
    B = PermGroup(A.degree, A.generators, base_prefix=points)
    return B.level_group(len(points))
