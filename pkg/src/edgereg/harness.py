"""Verification campaigns over enumerated graph corpora.

Each ``check_*`` function walks a corpus and returns a :class:`Report`
with one :class:`CheckResult` per (statement, instance).  Instances that
hit a resource cap are recorded as skipped, never dropped.
"""

from __future__ import annotations

import csv
import io
import json
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Iterator

from . import __version__
from .betti import LATTICE_CAP, regularity
from .enumeration import enumerate_forests, enumerate_graphs, enumerate_unicyclic
from .errors import ResourceError
from .graph6 import encode_graph6
from .graphs import SimpleGraph
from .monomials import MonomialIdeal
from .symbolic import edge_ideal, mixed_ideal, odd_cycle_symbolic_sum, symbolic_power, vertex_monomial

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"
CORPORA = ("unicyclic", "bipartite", "all-small")


def field_label(p: int) -> str:
    return "q" if p == 0 else f"fp:{p}"


@dataclass
class Config:
    max_n: int = 7
    max_s: int = 3
    fields: tuple[int, ...] = (0,)
    lattice_cap: int = LATTICE_CAP
    jobs: int = 1
    corpus: str = "unicyclic"
    seed: int = 0
    partition_cap: int = 64
    forest_max_n: int | None = None
    case2_intermediate: bool = False
    graphs: tuple[SimpleGraph, ...] | None = None

    def __post_init__(self):
        if self.max_n < 3:
            raise ValueError("max_n must be at least 3")
        if self.max_s < 1:
            raise ValueError("max_s must be at least 1")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")
        if not self.fields:
            raise ValueError("at least one field is required")
        if self.corpus not in CORPORA:
            raise ValueError(f"corpus must be one of {CORPORA}")
        self.fields = tuple(self.fields)

    def echo(self) -> dict:
        d = asdict(self)
        d["fields"] = [field_label(p) for p in self.fields]
        d["graphs"] = None if self.graphs is None else [encode_graph6(G) for G in self.graphs]
        return d


@dataclass
class CheckResult:
    check_id: str
    instance: dict
    status: str
    observed: dict
    elapsed: float = 0.0

    def key(self) -> tuple:
        inst = self.instance
        return (
            self.check_id,
            inst.get("n", 0),
            inst.get("graph", ""),
            inst.get("s", 0),
            inst.get("field", ""),
            inst.get("params", ""),
        )

    def body(self) -> dict:
        return {
            "check_id": self.check_id,
            "instance": self.instance,
            "status": self.status,
            "observed": self.observed,
        }


@dataclass
class Report:
    command: str
    config: Config
    results: list[CheckResult]
    timestamp: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat())

    def __post_init__(self):
        self.results = sorted(self.results, key=CheckResult.key)

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if r.status == FAIL]

    @property
    def skipped(self) -> list[CheckResult]:
        return [r for r in self.results if r.status == SKIPPED]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> list[dict]:
        counts: Counter = Counter()
        for r in self.results:
            counts[(r.check_id, r.instance.get("n", 0), r.instance.get("s", 0), r.status)] += 1
        groups = sorted({k[:3] for k in counts})
        return [
            {
                "check_id": c,
                "n": n,
                "s": s,
                PASS: counts[(c, n, s, PASS)],
                FAIL: counts[(c, n, s, FAIL)],
                SKIPPED: counts[(c, n, s, SKIPPED)],
            }
            for c, n, s in groups
        ]

    def summary_text(self) -> str:
        lines = [f"{'check':<26}{'n':>3}{'s':>3}{'pass':>7}{'fail':>6}{'skip':>6}"]
        for row in self.summary():
            lines.append(
                f"{row['check_id']:<26}{row['n']:>3}{row['s']:>3}"
                f"{row[PASS]:>7}{row[FAIL]:>6}{row[SKIPPED]:>6}"
            )
        status = "OK" if self.ok else f"{len(self.failures)} FAILURES"
        lines.append(f"{self.command}: {len(self.results)} results, {status}")
        return "\n".join(lines)

    def to_json(self) -> str:
        doc = {
            "header": {
                "tool_version": __version__,
                "command": self.command,
                "config": self.config.echo(),
                "timestamp": self.timestamp,
                "timings": [round(r.elapsed, 6) for r in self.results],
            },
            "summary": self.summary(),
            "results": [r.body() for r in self.results],
        }
        return json.dumps(doc, indent=1, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["check_id", "graph", "n", "s", "field", "params", "status", "observed"])
        for r in self.results:
            i = r.instance
            w.writerow([
                r.check_id, i.get("graph", ""), i.get("n", ""), i.get("s", ""),
                i.get("field", ""), i.get("params", ""), r.status,
                json.dumps(r.observed, sort_keys=True),
            ])
        return buf.getvalue()


# ---------------------------------------------------------------------------
# Cached algebra


@lru_cache(maxsize=4096)
def ideal_regularity(I: MonomialIdeal, field: int = 0, cap: int = LATTICE_CAP) -> int | None:
    """Regularity of I, or None for the zero ideal (whose regularity is -inf)."""
    if I.is_zero:
        return None
    return regularity(I, field, cap)


@lru_cache(maxsize=4096)
def _power(I: MonomialIdeal, s: int) -> MonomialIdeal:
    return I**s


@lru_cache(maxsize=4096)
def _symbolic(G: SimpleGraph, s: int) -> MonomialIdeal:
    return symbolic_power(G, s)


@lru_cache(maxsize=1024)
def _nu(G: SimpleGraph) -> int:
    return G.induced_matching_number()


def _reg(I: MonomialIdeal, field: int, cfg: Config) -> int | None:
    return ideal_regularity(I, field, cfg.lattice_cap)


# ---------------------------------------------------------------------------
# Corpora


def unicyclic_corpus(max_n: int) -> list[SimpleGraph]:
    return [G for n in range(3, max_n + 1) for G in enumerate_unicyclic(n)]


def forest_corpus(max_n: int) -> list[SimpleGraph]:
    """Forests without isolated vertices, at least one edge, ≤ max_n vertices."""
    out = []
    for n in range(2, max_n + 1):
        for G in enumerate_forests(n):
            if G.edges and all(G.degree(v) for v in G.vertices):
                out.append(G)
    return out


def connected_corpus(max_n: int, bipartite: bool = False) -> list[SimpleGraph]:
    out = []
    for n in range(2, max_n + 1):
        for G in enumerate_graphs(n, connected=True):
            if not bipartite or G.is_bipartite():
                out.append(G)
    return out


def main_corpus(cfg: Config) -> list[SimpleGraph]:
    if cfg.graphs is not None:
        return list(cfg.graphs)
    if cfg.corpus == "unicyclic":
        return unicyclic_corpus(cfg.max_n)
    return connected_corpus(cfg.max_n, bipartite=cfg.corpus == "bipartite")


# ---------------------------------------------------------------------------
# Result helpers


def _instance(G: SimpleGraph, s: int | None = None, field_: int | None = None, params: str = "") -> dict:
    inst = {"graph": encode_graph6(G), "n": len(G.vertices), "params": params}
    if s is not None:
        inst["s"] = s
    if field_ is not None:
        inst["field"] = field_label(field_)
    return inst


def _run(check_id: str, instance: dict, fn: Callable[[], tuple[bool, dict, dict]]) -> CheckResult:
    """Evaluate one instance.  ``fn`` returns (holds, observed, ideals); the
    ideals are embedded only on failure."""
    start = time.perf_counter()
    try:
        holds, observed, ideals = fn()
        status = PASS if holds else FAIL
        if not holds:
            observed = dict(observed, ideals={k: str(v) for k, v in ideals.items()})
    except ResourceError as exc:
        status, observed = SKIPPED, {"reason": str(exc)}
    return CheckResult(check_id, instance, status, observed, time.perf_counter() - start)


def _le(a: int | None, b: int | None) -> bool:
    # None stands for the zero ideal, whose regularity is -infinity.
    if a is None:
        return True
    return b is not None and a <= b


def _edge_str(e) -> str:
    return f"{e[0]}-{e[1]}"


# ---------------------------------------------------------------------------
# Per-graph work units (module level so they pickle for process pools)


def _main_items(G: SimpleGraph, cfg: Config) -> list[CheckResult]:
    out = []
    I = edge_ideal(G)
    for s in range(1, cfg.max_s + 1):
        for p in cfg.fields:
            def fn(s=s, p=p):
                sym, ordinary = _symbolic(G, s), _power(I, s)
                rs, rp = _reg(sym, p, cfg), _reg(ordinary, p, cfg)
                obs = {
                    "reg_symbolic": rs, "reg_power": rp, "nu": _nu(G),
                    "gens_symbolic": len(sym), "gens_power": len(ordinary),
                }
                return rs == rp, obs, {"symbolic": sym, "power": ordinary}
            out.append(_run("main", _instance(G, s, p), fn))
    return out


def _all_leaves_near_cycle(G: SimpleGraph) -> bool:
    cyc = G.unique_cycle()
    if cyc is None:
        return False
    return all(G.distance_to_set(x, cyc) == 1 for x in G.leaves())


def _pendant_pairs(G: SimpleGraph) -> list[tuple[int, int]]:
    return [(x, next(iter(G.neighbors(x)))) for x in sorted(G.leaves())]


def _lemma_items(G: SimpleGraph, cfg: Config) -> list[CheckResult]:
    out = []
    I = edge_ideal(G)
    unicyclic = G.is_unicyclic()
    for s in range(1, cfg.max_s + 1):
        sym = _symbolic(G, s)

        # deletion: I(G)^(s) + (xy) = I(G - xy)^(s) + (xy)
        for e in G.sorted_edges():
            def fn(e=e):
                xy = MonomialIdeal(G.n, [vertex_monomial(G, e)])
                lhs = sym + xy
                rhs = _symbolic(G.delete_edge(e), s) + xy
                return lhs == rhs, {"lhs_gens": len(lhs), "rhs_gens": len(rhs)}, {"lhs": lhs, "rhs": rhs}
            out.append(_run("lemma_deletion", _instance(G, s, params=f"edge={_edge_str(e)}"), fn))

        # pendant colon: (I(G)^(s) : xy) = I(G)^(s-1)
        for x, y in _pendant_pairs(G):
            def fn(x=x, y=y):
                lhs = sym.colon(vertex_monomial(G, (x, y)))
                rhs = _symbolic(G, s - 1) if s > 1 else MonomialIdeal.unit_ideal(G.n)
                return lhs == rhs, {"lhs_gens": len(lhs), "rhs_gens": len(rhs)}, {"lhs": lhs, "rhs": rhs}
            out.append(_run("lemma_colon", _instance(G, s, params=f"leaf={x},nbr={y}"), fn))

        # leaf-neighbour deletion: reg(I(G \ N[y])^s) <= reg(I(G)^s) - 1
        for x, y in _pendant_pairs(G):
            for p in cfg.fields:
                def fn(x=x, y=y, p=p):
                    small = edge_ideal(G.delete_vertices(G.closed_neighbors(y)))
                    lhs = _reg(_power(small, s), p, cfg) if not small.is_zero else None
                    rhs = _reg(_power(I, s), p, cfg)
                    holds = lhs is None or lhs <= rhs - 1
                    return holds, {"lhs": lhs, "rhs": rhs - 1}, {"small": small}
                out.append(_run("lemma_leaf_nbhd", _instance(G, s, p, f"leaf={x},nbr={y}"), fn))

        if unicyclic and _all_leaves_near_cycle(G):
            def fn():
                lhs = sym.intersect_max_power(2 * s)
                rhs = _power(I, s)
                return lhs == rhs, {"lhs_gens": len(lhs), "rhs_gens": len(rhs)}, {"lhs": lhs, "rhs": rhs}
            out.append(_run("lemma_max_power_claim", _instance(G, s), fn))
            for p in cfg.fields:
                def fn(p=p):
                    lhs, rhs = _reg(sym, p, cfg), _reg(_power(I, s), p, cfg)
                    return lhs <= rhs, {"lhs": lhs, "rhs": rhs}, {"symbolic": sym}
                out.append(_run("lemma_near_cycle_reg", _instance(G, s, p), fn))

        if G.is_bipartite():
            def fn():
                ordinary = _power(I, s)
                return sym == ordinary, {"lhs_gens": len(sym), "rhs_gens": len(ordinary)}, {
                    "symbolic": sym, "power": ordinary}
            out.append(_run("bipartite_collapse", _instance(G, s), fn))

        cyc = G.unique_cycle() if unicyclic else None
        if cyc is not None and len(cyc) == len(G.vertices) and len(cyc) % 2:
            def fn():
                lhs = odd_cycle_symbolic_sum(G, s)
                return lhs == sym, {"lhs_gens": len(lhs), "rhs_gens": len(sym)}, {"sum": lhs, "symbolic": sym}
            out.append(_run("odd_cycle_decomposition", _instance(G, s), fn))
    return out


def _subsets(items: list, cap: int) -> Iterator[tuple]:
    """Subsets of ``items`` in bitmask order, at most ``cap`` of them."""
    for mask in range(min(1 << len(items), cap)):
        yield tuple(x for i, x in enumerate(items) if mask >> i & 1)


def _prop_sum_items(G: SimpleGraph, cfg: Config) -> list[CheckResult]:
    out = []
    I = edge_ideal(G)
    cyc_edges = G.cycle_edges()
    rest = sorted(G.edges - cyc_edges)
    C = G.edge_subgraph(cyc_edges)
    near = _all_leaves_near_cycle(G)
    for s in range(1, cfg.max_s + 1):
        for p in cfg.fields:
            for T in _subsets(rest, cfg.partition_cap):
                H1 = G.edge_subgraph(cyc_edges | set(T))
                H2 = G.edge_subgraph(set(rest) - set(T))
                params = "H1+=" + ",".join(map(_edge_str, T))

                def fn(H1=H1, H2=H2, p=p):
                    J = mixed_ideal(H1, s, H2)
                    lhs, rhs = _reg(J, p, cfg), _reg(_power(I, s), p, cfg)
                    return lhs <= rhs, {"lhs": lhs, "rhs": rhs, "gens": len(J)}, {"mixed": J}
                out.append(_run("prop_sum", _instance(G, s, p, params), fn))

            def fn(p=p):
                J = _symbolic(C, s) + edge_ideal(G.edge_subgraph(rest))
                lhs, rhs = _reg(J, p, cfg), _reg(_power(I, s), p, cfg)
                return lhs <= rhs, {"lhs": lhs, "rhs": rhs, "gens": len(J)}, {"mixed": J}
            out.append(_run("lemma_cycle_plus_rest", _instance(G, s, p), fn))

            if near:
                for H in _subsets(rest, cfg.partition_cap):
                    def fn(H=H, p=p):
                        J = _symbolic(G, s) + edge_ideal(G.edge_subgraph(H))
                        lhs, rhs = _reg(J, p, cfg), _reg(_power(I, s), p, cfg)
                        return lhs <= rhs, {"lhs": lhs, "rhs": rhs, "gens": len(J)}, {"mixed": J}
                    params = "H=" + ",".join(map(_edge_str, H))
                    out.append(_run("lemma_near_cycle_sum", _instance(G, s, p, params), fn))
    return out


def forest_partitions(G: SimpleGraph, cap: int, seed: int) -> list[tuple]:
    """Edge subsets forming H1: all of them when there are at most ``cap``,
    otherwise a seeded sample of ``cap`` distinct ones."""
    edges = G.sorted_edges()
    m = len(edges)
    if 1 << m <= cap:
        masks = range(1 << m)
    else:
        rng = random.Random(f"{seed}:{encode_graph6(G)}")
        masks = sorted(rng.sample(range(1 << m), cap))
    return [tuple(e for i, e in enumerate(edges) if mask >> i & 1) for mask in masks]


def _forest_sum_items(G: SimpleGraph, cfg: Config) -> list[CheckResult]:
    out = []
    I = edge_ideal(G)
    for s in range(1, cfg.max_s + 1):
        for p in cfg.fields:
            for T in forest_partitions(G, cfg.partition_cap, cfg.seed):
                H1 = G.edge_subgraph(T)
                H2 = G.edge_subgraph(G.edges - set(T))

                def fn(H1=H1, H2=H2, p=p):
                    J = _power(edge_ideal(H1), s) + edge_ideal(H2)
                    lhs, rhs = _reg(J, p, cfg), _reg(_power(I, s), p, cfg)
                    return lhs <= rhs, {"lhs": lhs, "rhs": rhs, "gens": len(J)}, {"mixed": J}
                params = "H1=" + ",".join(map(_edge_str, T))
                out.append(_run("lemma_forest_sum", _instance(G, s, p, params), fn))
    return out


def _bounds_items(G: SimpleGraph, cfg: Config) -> list[CheckResult]:
    out = []
    I = edge_ideal(G)
    forest = G.is_forest()
    cyc = None if forest else G.unique_cycle()
    is_cycle = cyc is not None and len(cyc) == len(G.vertices)
    for p in cfg.fields:
        def reg1(p=p):
            return _reg(I, p, cfg)

        def fn(p=p):
            r, nu = reg1(p), _nu(G)
            return r >= nu + 1, {"reg": r, "nu_plus_1": nu + 1}, {"ideal": I}
        out.append(_run("katzman", _instance(G, 1, p), fn))

        if not forest:
            def fn(p=p):
                r, nu = reg1(p), _nu(G)
                return r in (nu + 1, nu + 2), {"reg": r, "nu": nu}, {"ideal": I}
            out.append(_run("dichotomy", _instance(G, 1, p), fn))

        if is_cycle and len(cyc) % 3 == 2:
            def fn(p=p):
                r, nu = reg1(p), _nu(G)
                return r == nu + 2, {"reg": r, "nu_plus_2": nu + 2}, {"ideal": I}
            out.append(_run("cycle_mod3", _instance(G, 1, p), fn))

        for s in range(1, cfg.max_s + 1):
            def fn(s=s, p=p):
                r, nu = _reg(_power(I, s), p, cfg), _nu(G)
                return r >= 2 * s + nu - 1, {"reg": r, "bound": 2 * s + nu - 1}, {"power": _power(I, s)}
            out.append(_run("power_lower_bound", _instance(G, s, p), fn))

            if forest:
                def fn(s=s, p=p):
                    r, nu = _reg(_power(I, s), p, cfg), _nu(G)
                    return r == 2 * s + nu - 1, {"reg": r, "formula": 2 * s + nu - 1}, {"power": _power(I, s)}
                out.append(_run("forest_formula", _instance(G, s, p), fn))
            elif s >= 2 and not is_cycle:
                def fn(s=s, p=p):
                    r = _reg(_power(I, s), p, cfg)
                    return r == 2 * s + reg1(p) - 2, {"reg": r, "formula": 2 * s + reg1(p) - 2}, {
                        "power": _power(I, s)}
                out.append(_run("unicyclic_power", _instance(G, s, p), fn))
            elif s >= 2 and is_cycle:
                def fn(s=s, p=p):
                    r, nu = _reg(_power(I, s), p, cfg), _nu(G)
                    return r == 2 * s + nu - 1, {"reg": r, "formula": 2 * s + nu - 1}, {"power": _power(I, s)}
                out.append(_run("cycle_power", _instance(G, s, p), fn))
    return out


def find_gamma(G: SimpleGraph) -> frozenset[int] | None:
    """Smallest (then lexicographically first) set of non-cycle vertices whose
    removal leaves the cycle as a connected component without lowering the
    induced matching number."""
    cyc = frozenset(G.unique_cycle())
    others = sorted(G.vertices - cyc)
    nu = _nu(G)
    for k in range(len(others) + 1):
        for gamma in combinations(others, k):
            rest = G.delete_vertices(gamma)
            if cyc not in rest.components():
                continue
            if _nu(rest) == nu:
                return frozenset(gamma)
    return None


def _case2_items(G: SimpleGraph, cfg: Config) -> list[CheckResult]:
    out = []
    I = edge_ideal(G)
    cyc = G.unique_cycle()
    for p in cfg.fields:
        for s in range(1, cfg.max_s + 1):
            inst = _instance(G, s, p)
            start = time.perf_counter()
            try:
                r1, nu = _reg(I, p, cfg), _nu(G)
            except ResourceError as exc:
                out.append(CheckResult("case2", inst, SKIPPED, {"reason": str(exc)}))
                continue
            if len(cyc) == len(G.vertices):
                out.append(CheckResult("case2", inst, SKIPPED, {"reason": "cycle graph"}))
                continue
            if r1 != nu + 1 and r1 != nu + 2:
                out.append(CheckResult("case2", inst, FAIL, {"reg": r1, "nu": nu, "reason": "dichotomy fails"}))
                continue
            if r1 == nu + 1:
                out.append(CheckResult("case2", inst, SKIPPED, {"reason": "reg = nu + 1"}))
                continue
            gamma = find_gamma(G)
            if gamma is None:
                out.append(CheckResult(
                    "case2", inst, FAIL,
                    {"reason": "no qualifying vertex set found", "reg": r1, "nu": nu},
                    time.perf_counter() - start,
                ))
                continue
            gamma_str = ",".join(map(str, sorted(gamma)))
            out.append(CheckResult(
                "case2_gamma", inst, PASS,
                {"gamma": gamma_str, "cycle_length": len(cyc)}, time.perf_counter() - start,
            ))
            if s == 1:
                def fn():
                    return len(cyc) % 3 == 2, {"cycle_length": len(cyc), "mod3": len(cyc) % 3}, {}
                out.append(_run("case2_cycle_mod3", _instance(G, 1, p), fn))

            def fn(s=s, p=p):
                lhs = _reg(_symbolic(G, s), p, cfg)
                return lhs >= 2 * s + nu, {"lhs": lhs, "rhs": 2 * s + nu}, {"symbolic": _symbolic(G, s)}
            out.append(_run("case2", inst, fn))

            if cfg.case2_intermediate:
                def fn(s=s, p=p):
                    rest = G.delete_vertices(gamma)
                    forest = rest.delete_vertices(cyc)
                    a = _reg(_symbolic(G, s), p, cfg)
                    b = _reg(_symbolic(rest, s), p, cfg)
                    f = _reg(_power(edge_ideal(forest), s), p, cfg)
                    c = None if f is None else _reg(edge_ideal(G.induced_subgraph(cyc)), p, cfg) + f - 1
                    holds = a >= b and (c is None or b >= c)
                    return holds, {"reg_G": a, "reg_minus_gamma": b, "product_bound": c}, {}
                out.append(_run("case2_intermediate", _instance(G, s, p, f"gamma={gamma_str}"), fn))
    return out


# ---------------------------------------------------------------------------
# Campaign drivers


def _map(fn, graphs: list[SimpleGraph], cfg: Config) -> list[CheckResult]:
    results: list[CheckResult] = []
    if cfg.jobs > 1 and len(graphs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            for part in pool.map(fn, graphs, [cfg] * len(graphs)):
                results.extend(part)
    else:
        for G in graphs:
            results.extend(fn(G, cfg))
    return results


def check_main(cfg: Config) -> Report:
    return Report("check-main", cfg, _map(_main_items, main_corpus(cfg), cfg))


def check_lemmas(cfg: Config) -> Report:
    return Report("check-lemmas", cfg, _map(_lemma_items, main_corpus(cfg), cfg))


def check_prop_sum(cfg: Config) -> Report:
    graphs = [G for G in main_corpus(cfg) if G.is_unicyclic()]
    results = _map(_prop_sum_items, graphs, cfg)
    if cfg.graphs is None:
        forests = forest_corpus(cfg.forest_max_n or cfg.max_n)
    else:
        forests = [G for G in cfg.graphs if G.is_forest() and G.edges]
    results += _map(_forest_sum_items, forests, cfg)
    return Report("check-prop-sum", cfg, results)


def check_bounds(cfg: Config) -> Report:
    if cfg.graphs is not None:
        graphs = [G for G in cfg.graphs if G.edges and (G.is_forest() or G.is_unicyclic())]
    else:
        graphs = unicyclic_corpus(cfg.max_n) + forest_corpus(cfg.forest_max_n or cfg.max_n)
    return Report("check-bounds", cfg, _map(_bounds_items, graphs, cfg))


def check_case2(cfg: Config) -> Report:
    graphs = [G for G in main_corpus(cfg) if G.is_unicyclic()]
    return Report("check-case2", cfg, _map(_case2_items, graphs, cfg))


CHECKS: dict[str, Callable[[Config], Report]] = {
    "check-main": check_main,
    "check-lemmas": check_lemmas,
    "check-prop-sum": check_prop_sum,
    "check-bounds": check_bounds,
    "check-case2": check_case2,
}


def iter_corpus(cfg: Config) -> Iterable[SimpleGraph]:
    return main_corpus(cfg)
