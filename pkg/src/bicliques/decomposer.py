"""Edge decomposition into balanced complete bipartite subgraphs.

Repeatedly extract a balanced biclique and delete its edges while the current
edge count exceeds n^2/ln n (original n, natural log, checked before every
extraction), then emit each remaining edge as its own 1x1 part. The bipartite
variant uses the threshold a*b/ln(a+b).

Decompositions carry per-phase statistics: an extraction with current edge
count in (n^2/(l+1), n^2/l] belongs to phase l, so l = n^2 // m_cur exactly.
"""

import json
from dataclasses import dataclass

import numpy as np

from bicliques.errors import InternalInconsistency, MissingEdge, ParseError
from bicliques.finder import find_biclique, find_biclique_bipartite
from bicliques.graph import BipartiteGraph, Graph
from bicliques.params import exceeds_bipartite_threshold, exceeds_decomposition_threshold

__all__ = ["PhaseStat", "Decomposition", "Violation", "VerifyReport", "decompose",
           "decompose_bipartite", "verify_decomposition", "complexity",
           "decomposition_to_json", "decomposition_from_json"]

MAX_VIOLATIONS = 10000


@dataclass(frozen=True)
class PhaseStat:
    ell: int
    iterations: int
    edges_removed: int
    q_min: int
    q_max: int


@dataclass
class Decomposition:
    """Ordered parts (A_i, B_i) whose edge sets partition the source edges.

    For bipartite sources the sides are in the original file orientation:
    A_i holds A-side ids and B_i holds B-side ids.
    """

    kind: str  # "general" | "bipartite"
    parts: list
    complexity: int
    phases: list
    n: int = None
    a: int = None
    b: int = None


@dataclass(frozen=True)
class Violation:
    kind: str
    info: tuple


@dataclass
class VerifyReport:
    violations: list
    truncated: bool = False

    @property
    def valid(self):
        return not self.violations and not self.truncated


class _Phases:
    def __init__(self):
        self.data = {}

    def record(self, ell, q):
        st = self.data.get(ell)
        if st is None:
            self.data[ell] = [1, q * q, q, q]
        else:
            st[0] += 1
            st[1] += q * q
            if q < st[2]:
                st[2] = q
            if q > st[3]:
                st[3] = q

    def stats(self):
        return [PhaseStat(ell, *self.data[ell]) for ell in sorted(self.data)]


def decompose(g, threads=None):
    """Decompose a general graph; the input graph is not modified."""
    n = g.n
    work = g.copy()
    parts = []
    phases = _Phases()
    total = 0
    nsq = n * n
    while exceeds_decomposition_threshold(work.m, n):
        rep = find_biclique(work, threads)
        bic = rep.biclique
        phases.record(nsq // work.m, rep.q_achieved)
        try:
            work._delete_arrays(
                np.asarray(bic.left, dtype=np.int64),
                np.asarray(bic.right, dtype=np.int64),
            )
        except MissingEdge as exc:
            raise InternalInconsistency(f"extracted biclique not in graph: {exc}") from exc
        parts.append((bic.left, bic.right))
        total += 2 * rep.q_achieved
    us, vs = work.edges()
    for u, v in zip(us.tolist(), vs.tolist()):
        parts.append(((u,), (v,)))
    total += 2 * len(us)
    return Decomposition("general", parts, total, phases.stats(), n=n)


def decompose_bipartite(bg, threads=None):
    """Decompose a bipartite graph; parts use original file-side orientation."""
    work = bg.copy()
    parts = []
    phases = _Phases()
    total = 0
    prod = bg.a * bg.b
    swapped = bg.swapped

    def to_file(left_b, right_a):
        # internal left is B-side; when input sides were swapped the internal
        # B side is the file A side
        return (left_b, right_a) if swapped else (right_a, left_b)

    while exceeds_bipartite_threshold(work.m, bg.a, bg.b):
        rep = find_biclique_bipartite(work, threads)
        bic = rep.biclique
        phases.record(prod // work.m, rep.q_achieved)
        try:
            work._delete_arrays(
                np.asarray(bic.left, dtype=np.int64),
                np.asarray(bic.right, dtype=np.int64),
            )
        except MissingEdge as exc:
            raise InternalInconsistency(f"extracted biclique not in graph: {exc}") from exc
        parts.append(to_file(bic.left, bic.right))
        total += 2 * rep.q_achieved
    bs, as_ = work.edges_internal()
    for b_id, a_id in zip(bs.tolist(), as_.tolist()):
        parts.append(to_file((b_id,), (a_id,)))
    total += 2 * len(bs)
    return Decomposition("bipartite", parts, total, phases.stats(),
                         a=bg.orig_a, b=bg.orig_b)


def complexity(d):
    """Total vertex count over parts, recomputed from the parts themselves."""
    return sum(len(a) + len(b) for a, b in d.parts)


def _flatten_parts(parts):
    us, vs, counts = [], [], []
    for A, B in parts:
        lb = len(B)
        us.extend([u for u in A for _ in range(lb)])
        vs.extend(B * len(A))
        counts.append(len(A) * lb)
    u = np.array(us, dtype=np.int64)
    v = np.array(vs, dtype=np.int64)
    part_of = np.repeat(np.arange(len(parts), dtype=np.int64), counts)
    return u, v, part_of


def _gather_bits(words, rows, cols):
    widx = (cols >> 6).astype(np.intp)
    shift = (cols & 63).astype(np.uint64)
    return ((words[rows.astype(np.intp), widx] >> shift) & np.uint64(1)).astype(bool)


def verify_decomposition(source, d):
    """Check that parts exactly partition the source's edges; nothing thrown,
    all problems reported (capped at MAX_VIOLATIONS)."""
    out = []
    truncated = False

    def add(kind, info):
        nonlocal truncated
        if len(out) >= MAX_VIOLATIONS:
            truncated = True
            return False
        out.append(Violation(kind, tuple(int(x) for x in info)))
        return True

    bipartite = isinstance(source, BipartiteGraph)
    if bipartite:
        nu, nv = source.orig_a, source.orig_b
        gu, gv = source.edges_original()
    else:
        nu = nv = source.n
        gu, gv = source.edges()

    for idx, (A, B) in enumerate(d.parts):
        if not bipartite and set(A) & set(B):
            add("NonDisjointSides", (idx,))

    u, v, part_of = _flatten_parts(d.parts)
    in_range = (u >= 0) & (u < nu) & (v >= 0) & (v < nv)
    present = np.zeros(len(u), dtype=bool)
    ir = np.nonzero(in_range)[0]
    if len(ir):
        uu, vv = u[ir], v[ir]
        if bipartite:
            if source.swapped:
                rows, cols = uu, vv
            else:
                rows, cols = vv, uu
            ok = _gather_bits(source._adj_b, rows, cols)
        else:
            ok = _gather_bits(source._adj, uu, vv) & (uu != vv)
        present[ir] = ok
    for i in np.nonzero(~present)[0]:
        if not add("EdgeNotInGraph", (u[i], v[i], part_of[i])):
            break

    # duplicate coverage among pairs that are actual edges
    cov = np.nonzero(present)[0]
    if bipartite:
        keys = u[cov] * np.int64(max(nv, 1)) + v[cov]
    else:
        lo = np.minimum(u[cov], v[cov])
        hi = np.maximum(u[cov], v[cov])
        keys = lo * np.int64(max(nu, 1)) + hi
    order = np.argsort(keys, kind="stable")
    sk = keys[order]
    group_start = 0
    for i in range(1, len(sk) + 1):
        if i == len(sk) or sk[i] != sk[group_start]:
            group_start = i
            continue
        if sk[i] == sk[group_start]:
            p0 = cov[order[group_start]]
            pi = cov[order[i]]
            if not add("EdgeCoveredTwice", (u[p0], v[p0], part_of[p0], part_of[pi])):
                break

    # uncovered edges of the source
    if bipartite:
        gkeys = gu * np.int64(max(nv, 1)) + gv
    else:
        gkeys = gu * np.int64(max(nu, 1)) + gv
    covered = np.unique(keys)
    missing = ~np.isin(gkeys, covered)
    for i in np.nonzero(missing)[0]:
        if not add("EdgeUncovered", (gu[i], gv[i])):
            break

    recomputed = complexity(d)
    if recomputed != d.complexity:
        add("ComplexityMismatch", (d.complexity, recomputed))
    return VerifyReport(out, truncated)


def decomposition_to_json(d):
    obj = {"kind": d.kind}
    if d.kind == "general":
        obj["n"] = d.n
    else:
        obj["a"] = d.a
        obj["b"] = d.b
    obj["parts"] = [{"A": list(A), "B": list(B)} for A, B in d.parts]
    obj["complexity"] = d.complexity
    obj["phases"] = [
        {"ell": p.ell, "iterations": p.iterations, "edges_removed": p.edges_removed,
         "q_min": p.q_min, "q_max": p.q_max}
        for p in d.phases
    ]
    return json.dumps(obj, separators=(",", ":")) + "\n"


def decomposition_from_json(text):
    try:
        obj = json.loads(text)
        kind = obj["kind"]
        if kind not in ("general", "bipartite"):
            raise ValueError(f"unknown kind {kind!r}")
        parts = [(tuple(p["A"]), tuple(p["B"])) for p in obj["parts"]]
        phases = [PhaseStat(p["ell"], p["iterations"], p["edges_removed"],
                            p["q_min"], p["q_max"]) for p in obj["phases"]]
        if kind == "general":
            return Decomposition(kind, parts, obj["complexity"], phases, n=obj["n"])
        return Decomposition(kind, parts, obj["complexity"], phases,
                             a=obj["a"], b=obj["b"])
    except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
        raise ParseError(1, f"malformed decomposition document: {exc}") from exc
