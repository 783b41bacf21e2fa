"""Executable registry of the fixatic-number results, checked over corpora.

Each claim decides, per instance, whether a stated relation holds and what
was observed.  ``run_claim`` collects every failing instance as a
counterexample certificate (graph6 string plus the observed integers), and
``verify_paper`` runs the whole registry over exhaustive scans of small
connected graphs and the family constructions.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import Any, Callable, Iterable, Iterator

from .autom import automorphism_group, saturated_vertices, transposition_automorphisms, twin_sets
from .counting import odd_cycle_partition_count
from .families import FamilyGraph, cycle, family_graph, k4_minus_e
from .fixing import fixing_number, fixing_vertices
from .graph import Graph, complement, encode_graph6, is_connected, join
from .locating import locatic_number
from .partition import (COUNT_CAP, count_fixatic_partitions, fixatic_number, fixatic_upper_bound,
                        iter_max_fixatic_partitions)

SCAN_MAX_N = 7


# instances ------------------------------------------------------------------

@dataclass(frozen=True)
class JoinPair:
    left: Graph
    right: Graph

    @property
    def graph(self) -> Graph:
        return join(self.left, self.right)


@dataclass(frozen=True)
class FamilySequence:
    """Members of one family at increasing sizes."""
    family: str
    members: tuple[FamilyGraph, ...]


def as_graph(instance) -> Graph | None:
    if isinstance(instance, Graph):
        return instance
    if isinstance(instance, FamilyGraph):
        return instance.graph
    return None


def scan_connected_graphs(n: int) -> Iterator[Graph]:
    """All labelled connected graphs on n vertices, by edge-subset bitmask order."""
    if n > SCAN_MAX_N:
        raise ValueError(f"exhaustive scans are capped at n <= {SCAN_MAX_N}, got {n}")
    if n < 1:
        return
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        bits = mask
        k = 0
        while bits:
            if bits & 1:
                i, j = pairs[k]
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bits >>= 1
            k += 1
        g = Graph(n, tuple(rows))
        if is_connected(g):
            yield g


@lru_cache(maxsize=1 << 12)
def canonical_graph6(g: Graph) -> str:
    """Lexicographically least graph6 over all relabellings (small n only)."""
    if g.n > 7:
        raise ValueError("canonical_graph6 is brute force; n <= 7 only")
    return min(encode_graph6(g.relabel(p)) for p in permutations(range(g.n)))


def isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_graph6(g) == canonical_graph6(h)


def _fix(g: Graph) -> int:
    return fixing_number(g).size


def _fxt(g: Graph) -> int:
    return fixatic_number(g).fxt


def _connected(g: Graph | None, min_n: int = 2) -> bool:
    return g is not None and g.n >= min_n and is_connected(g)


def _symmetric(g: Graph) -> bool:
    return not automorphism_group(g).is_trivial()


# claim checks ----------------------------------------------------------------
# Each check returns (holds, observed, expected-relation text).

def _check_fxt_n(inst):
    g = as_graph(inst)
    fxt = _fxt(g)
    singles = len(fixing_vertices(g))
    holds = (fxt == g.n) == (singles == g.n)
    return holds, {"n": g.n, "fxt": fxt, "fixing_vertices": singles}, \
        "fxt == n iff every vertex stabiliser is trivial"


def _check_interchange(inst):
    g = as_graph(inst)
    fxt = _fxt(g)
    checked = 0
    for u, v in transposition_automorphisms(g):
        if fxt >= 2:
            for part in iter_max_fixatic_partitions(g):
                checked += 1
                if any(u in c and v in c for c in part.classes):
                    return False, {"fxt": fxt, "u": u, "v": v, "partitions_checked": checked}, \
                        "u and v lie in different classes of every maximum fixatic partition"
        else:
            count = count_fixatic_partitions(g)
            checked += count
            if count != 1:
                return False, {"fxt": fxt, "u": u, "v": v, "pi_t": count}, \
                    "only the one-class partition when fxt < 2"
    return True, {"fxt": fxt, "partitions_checked": checked}, \
        "interchanged vertices are separated iff fxt >= 2"


def _is_odd_cycle(g: Graph | None) -> bool:
    return (_connected(g, 3) and g.n % 2 == 1 and g.m == g.n
            and all(g.degree(v) == 2 for v in range(g.n)))


def _check_odd_cycle(inst):
    g = as_graph(inst)
    fxt = _fxt(g)
    count = count_fixatic_partitions(g)
    formula = odd_cycle_partition_count(g.n)
    holds = fxt == g.n // 2 and count == formula
    return holds, {"n": g.n, "fxt": fxt, "pi_t": count, "formula": formula}, \
        "fxt == floor(n/2) and pi_t matches the closed form"


def _check_lemf1(inst):
    g = as_graph(inst)
    L, fxt, ub = locatic_number(g), _fxt(g), fixatic_upper_bound(g)
    return L <= fxt <= ub, {"locatic": L, "fxt": fxt, "upper": ub, "fix": _fix(g)}, \
        "locatic <= fxt <= floor(n/fix)"


def _check_complement(inst):
    g = as_graph(inst)
    a, b = _fxt(g), _fxt(complement(g))
    return 2 <= a + b <= 2 * g.n, {"n": g.n, "fxt": a, "fxt_complement": b}, \
        "2 <= fxt(G) + fxt(complement) <= 2n"


def _check_saturated(inst):
    g = as_graph(inst)
    sat = len(saturated_vertices(g))
    fxt = _fxt(g)
    return fxt <= g.n - sat + 2, {"n": g.n, "saturated": sat, "fxt": fxt}, \
        "fxt <= n - saturated + 2"


def _has_big_twin_set(g):
    return _connected(g) and any(len(t) >= 3 for t in twin_sets(g))


def _check_twin_u(inst):
    g = as_graph(inst)
    fxt = _fxt(g)
    for t in twin_sets(g):
        if len(t) < 3:
            continue
        for u in t:
            sub = _fxt(g.remove_vertices([u]))
            if fxt > sub:
                return False, {"fxt": fxt, "removed": u, "fxt_after": sub}, \
                    "fxt(G) <= fxt(G - u) for u in a twin set of size >= 3"
    return True, {"fxt": fxt}, "fxt(G) <= fxt(G - u) for u in a twin set of size >= 3"


def _check_twin_B(inst):
    g = as_graph(inst)
    fxt = _fxt(g)
    for t in twin_sets(g):
        if len(t) < 3:
            continue
        for size in range(len(t) - 1):
            for B in combinations(t, size):
                sub = _fxt(g.remove_vertices(B))
                if fxt > sub:
                    return False, {"fxt": fxt, "removed": list(B), "fxt_after": sub}, \
                        "fxt(G) <= fxt(G - B) for B in a twin set T, |B| <= |T| - 2"
    return True, {"fxt": fxt}, "fxt(G) <= fxt(G - B) for B in a twin set T, |B| <= |T| - 2"


def _check_sum_upper(inst):
    g = as_graph(inst)
    fix, fxt = _fix(g), _fxt(g)
    return fix + fxt <= g.n + 1, {"n": g.n, "fix": fix, "fxt": fxt, "sum": fix + fxt}, \
        "fix + fxt <= n + 1"


def _check_sum_lower(inst):
    g = as_graph(inst)
    fix, fxt = _fix(g), _fxt(g)
    return g.n <= fix + fxt, {"n": g.n, "fix": fix, "fxt": fxt, "sum": fix + fxt}, \
        "n <= fix + fxt"


def _removable_fixing_vertices(g):
    out = []
    for y in fixing_vertices(g):
        h = g.remove_vertices([y])
        if is_connected(h) and _symmetric(h):
            out.append(y)
    return out


def _check_fixing_vertex(inst):
    g = as_graph(inst)
    fxt = _fxt(g)
    for y in _removable_fixing_vertices(g):
        sub = _fxt(g.remove_vertices([y]))
        if fxt < sub:
            return False, {"fxt": fxt, "removed": y, "fxt_after": sub}, "fxt(G) >= fxt(G - y)"
    return True, {"fxt": fxt}, "fxt(G) >= fxt(G - y)"


def _check_join_fix(inst: JoinPair):
    a, b, j = _fix(inst.left), _fix(inst.right), _fix(inst.graph)
    return j >= a + b, {"fix_left": a, "fix_right": b, "fix_join": j,
                        "left": encode_graph6(inst.left), "right": encode_graph6(inst.right)}, \
        "fix(G1 + G2) >= fix(G1) + fix(G2)"


def _check_join_fxt(inst: JoinPair):
    a, b, j = _fxt(inst.left), _fxt(inst.right), _fxt(inst.graph)
    return j <= min(a, b), {"fxt_left": a, "fxt_right": b, "fxt_join": j,
                            "left": encode_graph6(inst.left), "right": encode_graph6(inst.right)}, \
        "fxt(G1 + G2) <= min(fxt(G1), fxt(G2))"


def _check_k1_join(inst):
    g = as_graph(inst)
    a, j = _fxt(g), _fxt(join(Graph.empty(1), g))
    return j <= a, {"fxt": a, "fxt_k1_join": j}, "fxt(K1 + G) <= fxt(G)"


def _check_no_singleton(inst):
    # a fixing vertex v gives the fixatic partition {v}, V - v, and every
    # singleton class is a fixing vertex, so these two conditions coincide
    g = as_graph(inst)
    fix, fxt = _fix(g), _fxt(g)
    singles = len(fixing_vertices(g))
    holds = fix != fxt or singles == 0
    return holds, {"fix": fix, "fxt": fxt, "fixing_vertices": singles}, \
        "fix == fxt implies no fixatic partition has a singleton class"


_EDGE_PARTITION_GRAPHS = (cycle(4), k4_minus_e())


def _check_fxt2_edges(inst):
    g = as_graph(inst)
    parts = list(iter_max_fixatic_partitions(g))
    all_edges = bool(parts) and all(
        len(c) == 2 and g.has_edge(*c) for p in parts for c in p.classes)
    listed = any(isomorphic(g, h) for h in _EDGE_PARTITION_GRAPHS)
    return all_edges == listed, {"n": g.n, "fxt": 2, "partitions": len(parts),
                                 "all_classes_edges": int(all_edges), "listed": int(listed)}, \
        "every maximum fixatic partition consists of edges iff G is C4 or K4-e up to isomorphism"


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))


def _is_labelled_circulant(g: Graph) -> bool:
    return all(g.has_edge(i, j) == g.has_edge(0, (j - i) % g.n)
               for i in range(g.n) for j in range(g.n) if i != j)


def _cayley_scope(inst) -> bool:
    if isinstance(inst, FamilyGraph):
        if inst.family != "circulant":
            return False
    g = as_graph(inst)
    return (_connected(g, 3) and g.n % 2 == 1 and _is_prime(g.n)
            and _is_labelled_circulant(g))


def _check_cayley(inst):
    g = as_graph(inst)
    fix, fxt = _fix(g), _fxt(g)
    p = g.n // 2
    conn = [s for s in range(1, g.n) if g.has_edge(0, s)]
    return fix == 2 and fxt == p, {"n": g.n, "connection_set": conn, "fix": fix, "fxt": fxt, "p": p}, \
        "fix == 2 and fxt == (n - 1) / 2"


def _cayley_exception(counterexamples) -> bool:
    return all(len(c["observed"]["connection_set"]) == c["observed"]["n"] - 1
               for c in counterexamples)


def _check_constant_fix(inst: FamilySequence):
    fixes = [_fix(m.graph) for m in inst.members]
    fxts = [_fxt(m.graph) for m in inst.members]
    holds = len(set(fixes)) == 1 and all(a < b for a, b in zip(fxts, fxts[1:]))
    return holds, {"sizes": [m.graph.n for m in inst.members], "fix": fixes, "fxt": fxts}, \
        "constant fix along the family and strictly increasing fxt"


def _realize(family, relation, text):
    def check(inst: FamilyGraph):
        t = inst.params[0]
        fix, fxt = _fix(inst.graph), _fxt(inst.graph)
        return relation(t, fix, fxt), {"t": t, "fix": fix, "fxt": fxt}, text
    return check


# registry ---------------------------------------------------------------------

@dataclass(frozen=True)
class VerifyConfig:
    max_n: int = 5
    join_max_n: int = 4
    odd_cycles: tuple[int, ...] = (3, 5, 7, 9)
    cayley_orders: tuple[int, ...] = (5, 7)
    include_complete_cayley: bool = False
    path_sizes: tuple[int, ...] = (2, 4, 6, 8, 10, 12)
    odd_cycle_sizes: tuple[int, ...] = (3, 5, 7, 9, 11)
    realize_params: dict = field(default_factory=lambda: {
        "broom_pair": (2, 3), "spider_dan1": (2, 3), "caterpillar2": (4, 5),
        "spider_rslt": (1, 2), "double_broom": (3, 4)})


def _scans(cfg: VerifyConfig) -> list[Graph]:
    out = []
    for n in range(2, cfg.max_n + 1):
        out.extend(scan_connected_graphs(n))
    return out


def symmetric_connection_sets(n: int, include_complete: bool = False) -> list[list[int]]:
    """Non-empty connection sets S = -S of Z_n (0 excluded), smallest first."""
    halves = list(range(1, n // 2 + 1))
    out = []
    for k in range(1, len(halves) + 1):
        for chosen in combinations(halves, k):
            S = sorted(set(chosen) | {n - s for s in chosen})
            if len(S) == n - 1 and not include_complete:
                continue
            out.append(S)
    return out


def _cayley_corpus(cfg):
    return [family_graph("circulant", [n, *S]) for n in cfg.cayley_orders
            for S in symmetric_connection_sets(n, cfg.include_complete_cayley)]


def _join_corpus(cfg):
    reps: dict[str, Graph] = {}
    for n in range(1, cfg.join_max_n + 1):
        for g in scan_connected_graphs(n):
            reps.setdefault(canonical_graph6(g), g)
    graphs = list(reps.values())
    return [JoinPair(a, b) for i, a in enumerate(graphs) for b in graphs[i:]]


def _sequence_corpus(cfg):
    return [
        FamilySequence("path", tuple(family_graph("path", [n]) for n in cfg.path_sizes)),
        FamilySequence("cycle", tuple(family_graph("cycle", [n]) for n in cfg.odd_cycle_sizes)),
    ]


def _realize_corpus(family):
    def build(cfg):
        return [family_graph(family, [t]) for t in cfg.realize_params[family]]
    return build


@dataclass(frozen=True)
class Claim:
    id: str
    statement: str
    scope: Callable[[Any], bool]
    check: Callable[[Any], tuple[bool, dict, str]]
    corpus: Callable[[VerifyConfig], list] = _scans
    expected_fail: Callable[[list], bool] | None = None
    note: str = ""


def _graph_scope(extra=None, min_n=2, max_n=None):
    def scope(inst):
        g = as_graph(inst)
        if not _connected(g, min_n):
            return False
        if max_n is not None and g.n > max_n:
            return False
        return extra is None or extra(g)
    return scope


def _pair_scope(min_each=1, min_total=2):
    def scope(inst):
        return (isinstance(inst, JoinPair) and _connected(inst.left, min_each)
                and _connected(inst.right, min_each)
                and inst.left.n + inst.right.n >= min_total)
    return scope


def _family_scope(family):
    return lambda inst: isinstance(inst, FamilyGraph) and inst.family == family


def _scans_and_cycles(cfg):
    return _scans(cfg) + [family_graph("cycle", [n]) for n in cfg.odd_cycles]


CLAIMS: dict[str, Claim] = {c.id: c for c in [
    Claim("fxt_n_iff_trivial_stab", "F_xt(G) = n iff every vertex stabiliser is trivial",
          _graph_scope(), _check_fxt_n),
    Claim("interchange_separation",
          "if an automorphism swaps u, v and fixes everything else, then F_xt >= 2 iff u, v are "
          "in different classes of every maximum fixatic partition",
          _graph_scope(lambda g: bool(transposition_automorphisms(g)), max_n=COUNT_CAP),
          _check_interchange),
    Claim("odd_cycle_fxt_and_count", "odd n: F_xt(C_n) = floor(n/2), Pi_t given by the closed form",
          _graph_scope(_is_odd_cycle, min_n=3, max_n=COUNT_CAP), _check_odd_cycle,
          corpus=_scans_and_cycles),
    Claim("lemf1_bounds", "L(G) <= F_xt(G) <= floor(n / fix(G))",
          _graph_scope(max_n=12), _check_lemf1),
    Claim("complement_corollary", "2 <= F_xt(G) + F_xt(complement G) <= 2n",
          _graph_scope(), _check_complement),
    Claim("saturated_bound", "symmetric G with n' saturated vertices: F_xt(G) <= n - n' + 2",
          _graph_scope(_symmetric), _check_saturated),
    Claim("twin_removal_u", "twin set T, |T| >= 3: F_xt(G) <= F_xt(G - u) for all u in T",
          _graph_scope(lambda g: _has_big_twin_set(g)), _check_twin_u),
    Claim("twin_removal_B", "twin set T, |T| >= 3: F_xt(G) <= F_xt(G - B) for B in T, |B| <= |T| - 2",
          _graph_scope(lambda g: _has_big_twin_set(g)), _check_twin_B),
    Claim("sum_upper", "fix(G) + F_xt(G) <= n + 1", _graph_scope(), _check_sum_upper),
    Claim("sum_lower", "n <= fix(G) + F_xt(G)", _graph_scope(), _check_sum_lower,
          expected_fail=lambda cexs: True,
          note="claimed lower bound fails already for K_{1,3}: fix = 2, F_xt = 1, 2 + 1 < 4"),
    Claim("fixing_vertex_removal",
          "fixing vertex y with G - y connected and symmetric: F_xt(G) >= F_xt(G - y)",
          _graph_scope(lambda g: bool(_removable_fixing_vertices(g)), min_n=3), _check_fixing_vertex,
          expected_fail=lambda cexs: True,
          note="fails on the spider with legs of orders 2, 1, 1 (graph6 Dk_): F_xt = 2, and deleting "
               "the fixing vertex 3 leaves P_4 with F_xt = 4"),
    Claim("join_fix_superadditive", "fix(G1 + G2) >= fix(G1) + fix(G2)",
          _pair_scope(), _check_join_fix, corpus=_join_corpus),
    Claim("join_fxt_min", "n1, n2 >= 2, n1 + n2 >= 5: F_xt(G1 + G2) <= min(F_xt(G1), F_xt(G2))",
          _pair_scope(2, 5), _check_join_fxt, corpus=_join_corpus),
    Claim("k1_join", "F_xt(K_1 + G) <= F_xt(G) for connected symmetric G, |G| >= 2",
          _graph_scope(_symmetric), _check_k1_join),
    Claim("no_singleton_when_equal", "fix(G) = F_xt(G) implies no fixatic class is a singleton",
          _graph_scope(_symmetric), _check_no_singleton),
    Claim("fxt2_edge_partition",
          "n >= 4, F_xt = 2: every class of every maximum fixatic partition induces an edge iff "
          "G is C_4 (= K_{2,2}) or K_4 - e (= K_1 + P_3)",
          _graph_scope(lambda g: _fxt(g) == 2, min_n=4, max_n=COUNT_CAP), _check_fxt2_edges),
    Claim("cayley_example", "prime n = 2p + 1: fix(Cay(Z_n; S)) = 2 and F_xt = p",
          _cayley_scope, _check_cayley, corpus=_cayley_corpus, expected_fail=_cayley_exception,
          note="Cay(Z_n; Z_n - {0}) is K_n, where fix = n - 1 and F_xt = 1"),
    Claim("constant_fix_unbounded",
          "constant fixing number along a family forces unbounded F_xt (sampled: strictly "
          "increasing F_xt over the listed sizes)",
          lambda inst: isinstance(inst, FamilySequence), _check_constant_fix,
          corpus=_sequence_corpus),
    Claim("realize_fix_eq_fxt", "broom_pair(t): fix = F_xt = t",
          _family_scope("broom_pair"), _realize("broom_pair", lambda t, a, b: a == t == b,
                                                "fix == fxt == t"),
          corpus=_realize_corpus("broom_pair")),
    Claim("realize_fxt_fix_plus_one", "spider_dan1(t): fix = t, F_xt = t + 1",
          _family_scope("spider_dan1"), _realize("spider_dan1", lambda t, a, b: (a, b) == (t, t + 1),
                                                 "fix == t and fxt == t + 1"),
          corpus=_realize_corpus("spider_dan1")),
    Claim("realize_sum_t", "caterpillar2(t): fix + F_xt = t",
          _family_scope("caterpillar2"), _realize("caterpillar2", lambda t, a, b: a + b == t,
                                                  "fix + fxt == t"),
          corpus=_realize_corpus("caterpillar2")),
    Claim("realize_fxt_minus_fix", "spider_rslt(t): fix = t, F_xt = 2t",
          _family_scope("spider_rslt"), _realize("spider_rslt", lambda t, a, b: (a, b) == (t, 2 * t),
                                                 "fix == t and fxt == 2t"),
          corpus=_realize_corpus("spider_rslt")),
    Claim("realize_fix_minus_fxt", "double_broom(t): fix - F_xt = t",
          _family_scope("double_broom"), _realize("double_broom", lambda t, a, b: a - b == t,
                                                  "fix - fxt == t"),
          corpus=_realize_corpus("double_broom")),
]}


# reports ----------------------------------------------------------------------

@dataclass
class ClaimReport:
    claim: str
    tested: int
    verdict: str
    counterexamples: list[dict] = field(default_factory=list)
    expected_fail: bool = False
    note: str = ""

    @property
    def unexpected_failure(self) -> bool:
        return self.verdict == "FAIL" and not self.expected_fail

    def to_json(self) -> dict:
        out = {"claim": self.claim, "tested": self.tested, "verdict": self.verdict,
               "counterexamples": self.counterexamples}
        if self.expected_fail:
            out["expected_fail"] = True
        if self.note and self.verdict == "FAIL":
            out["note"] = self.note
        return out


def _certificate_graph(inst) -> Graph:
    if isinstance(inst, JoinPair):
        return inst.graph
    if isinstance(inst, FamilySequence):
        return inst.members[-1].graph
    return as_graph(inst)


def evaluate(claim_id: str, inst) -> dict | None:
    """Counterexample certificate for one instance, or None if the claim holds."""
    holds, observed, expected = CLAIMS[claim_id].check(inst)
    if holds:
        return None
    return {"graph6": encode_graph6(_certificate_graph(inst)), "observed": observed,
            "expected": expected}


def _evaluate_packed(args):
    return evaluate(*args)


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("FIXATIC_THREADS", "1")))
    except ValueError:
        return 1


def run_claim(claim_id: str, corpus: Iterable, workers: int | None = None) -> ClaimReport:
    if claim_id not in CLAIMS:
        raise KeyError(f"unknown claim id {claim_id!r}")
    claim = CLAIMS[claim_id]
    corpus = list(corpus)
    if claim.corpus is _join_corpus:
        # plain graphs are paired up into joins
        plain = [g for g in corpus if isinstance(g, Graph)]
        corpus = [x for x in corpus if not isinstance(x, Graph)]
        corpus += [JoinPair(a, b) for i, a in enumerate(plain) for b in plain[i:]]
    instances = [inst for inst in corpus if claim.scope(inst)]
    workers = _workers() if workers is None else workers
    if workers > 1 and len(instances) > 64:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_evaluate_packed, ((claim_id, i) for i in instances),
                                    chunksize=32))
    else:
        results = [evaluate(claim_id, inst) for inst in instances]
    cexs = [r for r in results if r is not None]
    verdict = "FAIL" if cexs else "PASS"
    expected = bool(cexs) and claim.expected_fail is not None and claim.expected_fail(cexs)
    return ClaimReport(claim_id, len(instances), verdict, cexs, expected, claim.note)


def verify_paper(max_n: int = 5, config: VerifyConfig | None = None) -> list[ClaimReport]:
    if config is None:
        config = VerifyConfig(max_n=max_n, join_max_n=min(4, max_n))
    return [run_claim(cid, claim.corpus(config)) for cid, claim in CLAIMS.items()]


def harness_ok(reports: Iterable[ClaimReport]) -> bool:
    return not any(r.unexpected_failure for r in reports)
