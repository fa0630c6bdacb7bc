"""Command-line front end.

    schurlab group subgroups --group C3xC3 --table
    schurlab sring enumerate --group Z8
    schurlab ci check --group Z8 --set 1,2,5
    schurlab ci scan --group Z8 --jobs 4
    schurlab net search --group C6xC6 --k 3
    schurlab net verify --pcp pcp.json
    schurlab rat analyze --p 3 --q 5 --matrix M2
    schurlab rat search --p 3 --q 5
    schurlab lemma run --id PropW --max-order 16
    schurlab lemma run --all

Exit codes: 0 computed, 1 property violated, 2 usage error.
JSON goes to stdout (or --out); --table prints a TSV summary instead.
"""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys

from . import __version__
from .errors import CapExceeded, InvalidGroup, SchurlabError
from .store import Cache, cached, canonical_json

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class Outcome:
    """Payload plus TSV rows plus whether a checked property failed."""

    def __init__(self, payload, header=(), rows=(), violated=False):
        self.payload = payload
        self.header = list(header)
        self.rows = [list(r) for r in rows]
        self.violated = violated


# --------------------------------------------------------------------- parsing helpers

def _group(text):
    from .groups import parse_group
    try:
        return parse_group(text)
    except InvalidGroup as exc:
        raise UsageError(f"bad group literal {text!r}: {exc}. Try e.g. Z8 or C2xC2xC3") from exc


_ELEM = re.compile(r"\(([^)]*)\)|(\d+)")


def _elements(G, text):
    """'1,2,5' (element indices) or '(0,1);(1,1)' (coordinates)."""
    out = []
    for m in _ELEM.finditer(text):
        if m.group(1) is not None:
            coords = tuple(int(c) for c in m.group(1).split(","))
            if len(coords) != len(G.factors) or any(not 0 <= c < f for c, f in zip(coords, G.factors)):
                raise UsageError(f"coordinates {coords} do not fit {G.name}")
            out.append(G.index(coords))
        else:
            x = int(m.group(2))
            if not 0 <= x < G.order:
                raise UsageError(f"element {x} out of range for {G.name} (order {G.order})")
            out.append(x)
    return out


def _coords(G, xs):
    return [list(G.coords(x)) for x in xs]


def _fmt(G, xs):
    return " ".join("(" + ",".join(map(str, G.coords(x))) + ")" for x in xs)


# --------------------------------------------------------------------- group

def cmd_group(args, cache):
    from .groups import all_subgroups, automorphism_group
    G = _group(args.group)
    if args.action == "info":
        payload = {"group": G.name, "factors": list(G.factors), "order": G.order,
                   "exponent": G.exponent,
                   "automorphisms": automorphism_group(G, cap=max(64, G.order)).order()}
        return Outcome(payload, ["group", "order", "exponent", "automorphisms"],
                       [[G.name, G.order, G.exponent, payload["automorphisms"]]])
    subs = all_subgroups(G, cap=max(64, G.order))
    payload = {"group": G.name,
               "subgroups": [{"order": H.order, "members": _coords(G, H.members)} for H in subs]}
    return Outcome(payload, ["order", "members"], [[H.order, _fmt(G, H.members)] for H in subs])


# --------------------------------------------------------------------- sring

def cmd_sring(args, cache):
    from .srings import (SchurPartition, a_subgroups, complete_traces, enumerate_srings,
                         is_schurian, validate_partition)
    from .errors import NotAPartition

    if args.action == "validate":
        with open(args.file) as fh:
            obj = json.load(fh)
        try:
            A = SchurPartition.from_json(obj)
        except SchurlabError as exc:
            payload = {"valid": False, "error": type(exc).__name__, "detail": str(exc)}
            return Outcome(payload, ["valid", "error"], [[False, type(exc).__name__]], violated=True)
        payload = {"valid": True, "rank": A.rank, "schurian": is_schurian(A)}
        return Outcome(payload, ["valid", "rank", "schurian"], [[True, A.rank, payload["schurian"]]])

    G = _group(args.group)
    if args.action == "traces":
        A = complete_traces(G)
        return Outcome(A.to_json(), ["rank", "sizes"],
                       [[A.rank, " ".join(map(str, A.sizes))]])

    if G.order > args.max_order:
        raise CapExceeded("sring enumerate", G.order, args.max_order)

    def compute():
        out = []
        for A in enumerate_srings(G, cap=args.max_order):
            d = A.to_json()
            d["rank"] = A.rank
            d["schurian"] = is_schurian(A)
            d["a_subgroups"] = len(a_subgroups(A))
            out.append(d)
        return {"group": G.name, "count": len(out), "srings": out}

    payload, _ = cached(cache, "sring enumerate", {"group": list(G.factors),
                                                   "cap": args.max_order}, compute)
    rows = [[i, s["rank"], s["schurian"], s["a_subgroups"],
             " ".join(str(len(c)) for c in s["classes"])] for i, s in enumerate(payload["srings"])]
    return Outcome(payload, ["index", "rank", "schurian", "a_subgroups", "sizes"], rows)


# --------------------------------------------------------------------- ci

def cmd_ci(args, cache):
    from . import ci

    G = _group(args.group)
    if G.order > args.max_order:
        raise CapExceeded(f"ci {args.action}", G.order, args.max_order)
    if args.action == "check":
        if args.set is None:
            raise UsageError("ci check needs --set, e.g. --set 1,2,5")
        S = sorted(set(_elements(G, args.set)))
        if 0 in S:
            raise UsageError("the identity may not lie in a connection set")

        def compute():
            v = ci.is_ci_subset(G, S, cap=args.max_order)
            w = None
            if not v.ci:
                T = v.witness["T"] if v.witness else ci._witness_set(G, tuple(S))
                w = {"T": _coords(G, T)}
            return {"group": G.name, "set": _coords(G, S), "ci": v.ci, "witness": w}

        payload, _ = cached(cache, "ci check", {"group": list(G.factors), "set": S}, compute)
        return Outcome(payload, ["group", "set", "ci"], [[G.name, _fmt(G, S), payload["ci"]]])

    def compute():
        reps = ci.scan_representatives(G)
        verdicts = ci.scan(G, reps, jobs=args.jobs)
        bad = [S for S, v in zip(reps, verdicts) if not v.ci]
        witness = None
        if bad:
            S = min(bad)
            witness = {"set": _coords(G, S), "T": _coords(G, ci._witness_set(G, S))}
        return {"group": G.name, "dci": not bad, "representatives": len(reps),
                "non_ci": [_coords(G, S) for S in bad], "witness": witness,
                "rows": [[_fmt(G, S), v.ci] for S, v in zip(reps, verdicts)]}

    payload, _ = cached(cache, "ci scan", {"group": list(G.factors)}, compute)
    rows = payload.pop("rows")
    if args.table:
        return Outcome(payload, ["set", "ci"], rows)
    return Outcome(payload)


# --------------------------------------------------------------------- net

def _net_summary(pcp):
    from .nets import build_net, collinearity_graph, line_clique_check, srg_formula, srg_parameters
    from .errors import NotApplicable

    net = build_net(pcp)
    adj = collinearity_graph(net)
    n, k = pcp.n, pcp.k
    out = {"pcp": pcp.to_json(), "n": n, "k": k, "formula": list(srg_formula(n, k))}
    try:
        out["srg"] = list(srg_parameters(adj))
    except NotApplicable as exc:
        out["srg"] = None
        out["srg_note"] = str(exc)
    try:
        ok, bad = line_clique_check(net)
        out["lines_are_only_n_cliques"] = ok
        out["exceptional_cliques"] = [list(c) for c in bad]
    except NotApplicable as exc:
        out["lines_are_only_n_cliques"] = None
        out["clique_note"] = str(exc)
    return out


def cmd_net(args, cache):
    from .nets import PCP, find_pcps

    if args.action == "verify":
        with open(args.pcp) as fh:
            obj = json.load(fh)
        try:
            pcp = PCP.from_json(obj)
        except SchurlabError as exc:
            payload = {"valid": False, "error": type(exc).__name__, "detail": str(exc)}
            return Outcome(payload, ["valid", "error"], [[False, type(exc).__name__]], violated=True)
        s = _net_summary(pcp)
        s["valid"] = True
        violated = s["srg"] is not None and s["srg"] != s["formula"]
        return Outcome(s, ["valid", "n", "k", "srg", "formula"],
                       [[True, s["n"], s["k"], s["srg"], s["formula"]]], violated=violated)

    G = _group(args.group)
    if args.k is None:
        raise UsageError("net search needs --k")

    def compute():
        pcps = find_pcps(G, args.k, up_to_aut=not args.all)
        return {"group": G.name, "k": args.k, "up_to_aut": not args.all,
                "count": len(pcps), "nets": [_net_summary(p) for p in pcps]}

    payload, _ = cached(cache, "net search", {"group": list(G.factors), "k": args.k,
                                              "all": args.all}, compute)
    rows = [[i, s["n"], s["k"], s["srg"], s["lines_are_only_n_cliques"]]
            for i, s in enumerate(payload["nets"])]
    return Outcome(payload, ["index", "n", "k", "srg", "line_cliques"], rows)


# --------------------------------------------------------------------- rat

def cmd_rat(args, cache):
    from .rational import analyze_matrix, primitive_rational_search

    if args.action == "analyze":
        names = [args.matrix] if args.matrix else ["M1", "M2", "M3", "M4", "M5", "M6"]

        def compute():
            return {"p": args.p, "q": args.q,
                    "reports": [analyze_matrix(m, args.p, args.q) for m in names]}

        payload, _ = cached(cache, "rat analyze", {"p": args.p, "q": args.q, "m": names}, compute)
        rows = [[r["matrix"], r["kind"], r["valid_sring"], r.get("gap", r.get("witness_order"))]
                for r in payload["reports"]]
        violated = any(r["valid_sring"] for r in payload["reports"])
        return Outcome(payload, ["matrix", "kind", "valid_sring", "gap_or_order"], rows,
                       violated=violated)

    def compute():
        r = primitive_rational_search(args.p, args.q)
        r["survivors"] = [{"matrix": [list(row) for row in s["matrix"]], "rank": s["rank"],
                           "pcp_letters": {str(x): v for x, v in s["pcp_letters"].items()}}
                          for s in r["survivors"]]
        return r

    payload, _ = cached(cache, "rat search", {"p": args.p, "q": args.q}, compute)
    rows = [[i, s["rank"], bool(s["pcp_letters"])] for i, s in enumerate(payload["survivors"])]
    return Outcome(payload, ["index", "rank", "has_pcp_set"], rows)


# --------------------------------------------------------------------- lemma

def cmd_lemma(args, cache):
    from .lemmas import REGISTRY, run_check

    if args.list:
        rows = [[e.id, e.statement] for e in sorted(REGISTRY.values(), key=lambda e: e.id)]
        return Outcome({"statements": [{"id": r[0], "statement": r[1]} for r in rows]},
                       ["id", "statement"], rows)
    if not args.all and not args.id:
        raise UsageError("lemma run needs --id NAME or --all (see `lemma list`)")
    ids = sorted(REGISTRY) if args.all else args.id
    for i in ids:
        if i not in REGISTRY:
            raise UsageError(f"unknown statement {i!r}; known: {', '.join(sorted(REGISTRY))}")
    params = {}
    if args.max_order:
        params["max_order"] = args.max_order
    if args.groups:
        params["groups"] = args.groups.split(",")
    reports = []
    for i in ids:
        rep, _ = cached(cache, "lemma run", {"id": i, "params": params},
                        lambda i=i: run_check(i, params).to_json())
        reports.append(rep)
    rows = [[r["id"], r["instances"], r["passed"], r["not_applicable"], r["failed"]]
            for r in reports]
    return Outcome({"reports": reports}, ["id", "instances", "passed", "not_applicable", "failed"],
                   rows, violated=any(r["failed"] for r in reports))


# --------------------------------------------------------------------- parser

def build_parser():
    p = argparse.ArgumentParser(prog="schurlab", description="Schur rings over small abelian groups.")
    p.add_argument("--version", action="version", version=f"schurlab {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--table", action="store_true", help="TSV summary instead of JSON")
    common.add_argument("--cache-dir", help="cache directory (default: $SCHURLAB_CACHE)")
    common.add_argument("--no-cache", action="store_true")
    common.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("group", help="abelian groups").add_subparsers(dest="action", required=True)
    for a in ("info", "subgroups"):
        s = g.add_parser(a, parents=[common])
        s.add_argument("--group", required=True)

    s = sub.add_parser("sring", help="S-rings").add_subparsers(dest="action", required=True)
    e = s.add_parser("enumerate", parents=[common])
    e.add_argument("--group", required=True)
    e.add_argument("--max-order", type=int, default=16)
    t = s.add_parser("traces", parents=[common])
    t.add_argument("--group", required=True)
    v = s.add_parser("validate", parents=[common])
    v.add_argument("--file", required=True)

    c = sub.add_parser("ci", help="CI tests").add_subparsers(dest="action", required=True)
    chk = c.add_parser("check", parents=[common])
    chk.add_argument("--group", required=True)
    chk.add_argument("--set", help="1,2,5 or (0,1);(1,1)")
    chk.add_argument("--max-order", type=int, default=12)
    sc = c.add_parser("scan", parents=[common])
    sc.add_argument("--group", required=True)
    sc.add_argument("--jobs", type=int, default=1)
    sc.add_argument("--max-order", type=int, default=10)

    n = sub.add_parser("net", help="translation nets").add_subparsers(dest="action", required=True)
    ns = n.add_parser("search", parents=[common])
    ns.add_argument("--group", required=True)
    ns.add_argument("--k", type=int)
    ns.add_argument("--all", action="store_true", help="do not reduce modulo Aut(G)")
    nv = n.add_parser("verify", parents=[common])
    nv.add_argument("--pcp", required=True)

    r = sub.add_parser("rat", help="rational S-rings over C_p^2 x C_q^2").add_subparsers(
        dest="action", required=True)
    ra = r.add_parser("analyze", parents=[common])
    ra.add_argument("--p", type=int, required=True)
    ra.add_argument("--q", type=int, required=True)
    ra.add_argument("--matrix", choices=["M1", "M2", "M3", "M4", "M5", "M6"])
    rs = r.add_parser("search", parents=[common])
    rs.add_argument("--p", type=int, required=True)
    rs.add_argument("--q", type=int, required=True)

    lm = sub.add_parser("lemma", help="statement checks").add_subparsers(dest="action", required=True)
    lr = lm.add_parser("run", parents=[common])
    lr.add_argument("--id", action="append")
    lr.add_argument("--all", action="store_true")
    lr.add_argument("--max-order", type=int)
    lr.add_argument("--groups", help="comma-separated group literals")
    lr.set_defaults(list=False)
    ll = lm.add_parser("list", parents=[common])
    ll.set_defaults(list=True, all=False, id=None, max_order=None, groups=None)
    return p


COMMANDS = {"group": cmd_group, "sring": cmd_sring, "ci": cmd_ci, "net": cmd_net,
            "rat": cmd_rat, "lemma": cmd_lemma}


def _emit(out, args):
    if args.table:
        lines = ["\t".join(out.header)] + ["\t".join(_cell(c) for c in r) for r in out.rows]
        text = "\n".join(lines) + "\n"
    else:
        text = canonical_json(out.payload) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cell(c):
    if isinstance(c, (list, tuple)):
        return ",".join(map(str, c))
    return str(c)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="schurlab: %(levelname)s: %(message)s")
    cache = Cache(None if args.no_cache else args.cache_dir)
    if args.no_cache:
        cache.root = None
    try:
        out = COMMANDS[args.command](args, cache)
    except UsageError as exc:
        print(f"schurlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"schurlab: error: {exc} (raise --max-order to override)", file=sys.stderr)
        return EXIT_USAGE
    except (SchurlabError, ValueError) as exc:
        print(f"schurlab: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"schurlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(out, args)
    return EXIT_VIOLATION if out.violated else EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
