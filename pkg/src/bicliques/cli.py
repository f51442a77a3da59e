"""Command-line surface: gen, params, find, decompose, verify, oracle, bench.

Machine-readable failures: library errors print one JSON object
``{"error": <category>, "detail": <message>}`` to stderr and exit nonzero.
"""

import argparse
import json
import sys
from pathlib import Path

from bicliques import gen as generators
from bicliques.bench import records_to_csv, run_bench
from bicliques.decomposer import (
    decompose,
    decompose_bipartite,
    decomposition_from_json,
    decomposition_to_json,
    verify_decomposition,
)
from bicliques.errors import BicliquesError, InvalidCounts
from bicliques.finder import find_biclique, find_biclique_bipartite
from bicliques.io import parse_bipartite, parse_graph, serialize_bipartite, serialize_graph
from bicliques.oracle import DEFAULT_SIZE_LIMIT, max_balanced_biclique
from bicliques.params import bipartite_params, general_params


def _build_parser():
    p = argparse.ArgumentParser(
        prog="bicliques",
        description="balanced biclique search and biclique edge decomposition",
    )
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a graph file")
    g.add_argument("--kind", required=True,
                   choices=["gnm", "complete", "complete-bipartite", "bipartite-gnm", "matching"])
    g.add_argument("--n", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--a", type=int)
    g.add_argument("--b", type=int)
    g.add_argument("--s", type=int)
    g.add_argument("--t", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", required=True)

    pa = sub.add_parser("params", help="print q, r, regime as JSON")
    pa.add_argument("--n", type=int)
    pa.add_argument("--m", type=int, required=True)
    pa.add_argument("--a", type=int)
    pa.add_argument("--b", type=int)

    f = sub.add_parser("find", help="find a balanced biclique")
    f.add_argument("--in", dest="input", required=True)
    f.add_argument("--bipartite", action="store_true")
    f.add_argument("--json", action="store_true")

    d = sub.add_parser("decompose", help="decompose edges into balanced bicliques")
    d.add_argument("--in", dest="input", required=True)
    d.add_argument("--bipartite", action="store_true")
    d.add_argument("--out", required=True)
    d.add_argument("--stats", action="store_true")

    v = sub.add_parser("verify", help="verify a decomposition against its graph")
    v.add_argument("--graph", required=True)
    v.add_argument("--decomp", required=True)
    v.add_argument("--bipartite", action="store_true")

    o = sub.add_parser("oracle", help="exhaustive maximum balanced biclique")
    o.add_argument("--in", dest="input", required=True)
    o.add_argument("--limit", type=int, default=DEFAULT_SIZE_LIMIT)

    b = sub.add_parser("bench", help="benchmark find/decompose on seeded inputs")
    b.add_argument("--suite", required=True, choices=["find", "decompose"])
    b.add_argument("--sizes", required=True)
    b.add_argument("--edges", required=True)
    b.add_argument("--seeds", required=True)
    b.add_argument("--csv", required=True)
    return p


def _read(path):
    return Path(path).read_text(encoding="ascii")


def _load_graph(path, bipartite):
    text = _read(path)
    return parse_bipartite(text) if bipartite else parse_graph(text)


def _report_json(rep, bg=None):
    bic = rep.biclique
    obj = {
        "left": list(bic.left),
        "right": list(bic.right),
        "q_target": rep.q_target,
        "q_achieved": rep.q_achieved,
        "fallback_used": rep.fallback_used,
        "subsets_scanned": rep.subsets_scanned,
        "regime": rep.regime.value,
    }
    if bg is not None:
        # internal left is the B side; report which file side each list holds
        obj["left_side"] = "A" if bg.swapped else "B"
        obj["right_side"] = "B" if bg.swapped else "A"
    return obj


def _cmd_gen(args):
    kind = args.kind
    need = {
        "gnm": ("n", "m"),
        "complete": ("n",),
        "complete-bipartite": ("s", "t"),
        "bipartite-gnm": ("a", "b", "m"),
        "matching": ("n",),
    }[kind]
    for name in need:
        if getattr(args, name) is None:
            raise InvalidCounts(f"gen --kind {kind} requires --{name}")
    if kind == "gnm":
        text = serialize_graph(generators.gnm(args.n, args.m, args.seed))
    elif kind == "complete":
        text = serialize_graph(generators.complete(args.n))
    elif kind == "complete-bipartite":
        text = serialize_graph(generators.complete_bipartite_general(args.s, args.t))
    elif kind == "bipartite-gnm":
        text = serialize_bipartite(generators.bipartite_gnm(args.a, args.b, args.m, args.seed))
    else:
        text = serialize_bipartite(generators.matching_bipartite(args.n))
    Path(args.out).write_text(text, encoding="ascii")
    return 0


def _cmd_params(args):
    if args.a is not None or args.b is not None:
        if args.a is None or args.b is None:
            raise InvalidCounts("bipartite params need both --a and --b")
        ps = bipartite_params(max(args.a, args.b), min(args.a, args.b), args.m)
    else:
        if args.n is None:
            raise InvalidCounts("params needs --n or --a/--b")
        ps = general_params(args.n, args.m)
    print(json.dumps({"q": ps.q, "r": ps.r, "regime": ps.regime.value}))
    return 0


def _cmd_find(args):
    g = _load_graph(args.input, args.bipartite)
    if args.bipartite:
        rep = find_biclique_bipartite(g)
        obj = _report_json(rep, bg=g)
    else:
        rep = find_biclique(g)
        obj = _report_json(rep)
    if args.json:
        print(json.dumps(obj))
    else:
        bic = rep.biclique
        print(f"q_target={rep.q_target} q_achieved={rep.q_achieved} "
              f"fallback_used={str(rep.fallback_used).lower()} "
              f"left={list(bic.left)} right={list(bic.right)}")
    return 0


def _cmd_decompose(args):
    g = _load_graph(args.input, args.bipartite)
    d = decompose_bipartite(g) if args.bipartite else decompose(g)
    Path(args.out).write_text(decomposition_to_json(d), encoding="ascii")
    if args.stats:
        print("ell iterations edges_removed q_min q_max", file=sys.stderr)
        for ph in d.phases:
            print(f"{ph.ell} {ph.iterations} {ph.edges_removed} {ph.q_min} {ph.q_max}",
                  file=sys.stderr)
    return 0


def _cmd_verify(args):
    g = _load_graph(args.graph, args.bipartite)
    d = decomposition_from_json(_read(args.decomp))
    expected_kind = "bipartite" if args.bipartite else "general"
    if d.kind != expected_kind:
        raise InvalidCounts(f"decomposition kind {d.kind!r} does not match graph kind")
    report = verify_decomposition(g, d)
    obj = {
        "valid": report.valid,
        "violations": [{"kind": v.kind, "info": list(v.info)} for v in report.violations],
    }
    if report.truncated:
        obj["truncated"] = True
    print(json.dumps(obj))
    return 0 if report.valid else 1


def _cmd_oracle(args):
    g = parse_graph(_read(args.input))
    q_max, witness = max_balanced_biclique(g, size_limit=args.limit)
    obj = {"q_max": q_max, "witness": None}
    if witness is not None:
        obj["witness"] = {"left": list(witness.left), "right": list(witness.right)}
    print(json.dumps(obj))
    return 0


def _parse_sizes(text):
    try:
        return [int(tok) for tok in text.split(",") if tok != ""]
    except ValueError:
        raise InvalidCounts(f"bad --sizes value {text!r}") from None


def _parse_seeds(text):
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(tok) for tok in text.split(",") if tok != ""]
    except ValueError:
        raise InvalidCounts(f"bad --seeds value {text!r}") from None


def _cmd_bench(args):
    records = run_bench(args.suite, _parse_sizes(args.sizes), args.edges,
                        _parse_seeds(args.seeds))
    Path(args.csv).write_text(records_to_csv(records), encoding="ascii")
    return 0


_HANDLERS = {
    "gen": _cmd_gen,
    "params": _cmd_params,
    "find": _cmd_find,
    "decompose": _cmd_decompose,
    "verify": _cmd_verify,
    "oracle": _cmd_oracle,
    "bench": _cmd_bench,
}


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except BicliquesError as exc:
        print(json.dumps({"error": exc.category, "detail": str(exc)}), file=sys.stderr)
        return 1
    except OSError as exc:
        print(json.dumps({"error": "IOError", "detail": str(exc)}), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
