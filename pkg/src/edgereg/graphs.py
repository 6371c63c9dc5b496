"""Finite simple graphs with vertices labeled 1..n.

A graph remembers the size ``n`` of the ring it lives in separately from
its vertex set, so deleting vertices never renumbers anything and every
subgraph of G shares G's polynomial ring.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .errors import ResourceError

Edge = tuple[int, int]

MATCHING_VERTEX_CAP = 16


class GraphError(ValueError):
    pass


class NotUnicyclicError(GraphError):
    """The graph has two or more independent cycles."""


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None, offset: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}: "
        elif offset is not None:
            where = f"offset {offset}: "
        super().__init__(where + message)
        self.line = line
        self.offset = offset


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset[Edge]
    vertices: frozenset[int] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        verts = frozenset(range(1, self.n + 1)) if self.vertices is None else frozenset(self.vertices)
        object.__setattr__(self, "vertices", verts)
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if u not in verts or v not in verts:
                raise GraphError(f"edge {(u, v)} leaves the vertex set")
            norm.add(_edge(u, v))
        object.__setattr__(self, "edges", frozenset(norm))
        for v in verts:
            if not 1 <= v <= self.n:
                raise GraphError(f"vertex {v} outside 1..{self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "SimpleGraph":
        return cls(n, frozenset(_edge(*e) for e in edges))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={sorted(self.edges)})"

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def _check_vertex(self, x: int) -> None:
        if x not in self.vertices:
            raise GraphError(f"vertex {x} not in graph")

    def neighbors(self, x: int) -> frozenset[int]:
        self._check_vertex(x)
        return frozenset(v if u == x else u for u, v in self.edges if x in (u, v))

    def closed_neighbors(self, x: int) -> frozenset[int]:
        return self.neighbors(x) | {x}

    def degree(self, x: int) -> int:
        return len(self.neighbors(x))

    def leaves(self) -> frozenset[int]:
        adj = self.adjacency()
        return frozenset(v for v, nb in adj.items() if len(nb) == 1)

    def delete_vertices(self, U: Iterable[int]) -> "SimpleGraph":
        U = set(U)
        return SimpleGraph(
            self.n,
            frozenset(e for e in self.edges if e[0] not in U and e[1] not in U),
            self.vertices - U,
        )

    def delete_edge(self, e: Iterable[int]) -> "SimpleGraph":
        e = _edge(*e)
        if e not in self.edges:
            raise GraphError(f"edge {e} not in graph")
        return SimpleGraph(self.n, self.edges - {e}, self.vertices)

    def add_edge(self, e: Iterable[int]) -> "SimpleGraph":
        return SimpleGraph(self.n, self.edges | {_edge(*e)}, self.vertices)

    def induced_subgraph(self, W: Iterable[int]) -> "SimpleGraph":
        W = frozenset(W)
        for w in W:
            self._check_vertex(w)
        return SimpleGraph(
            self.n, frozenset(e for e in self.edges if e[0] in W and e[1] in W), W
        )

    def edge_subgraph(self, edges: Iterable[Iterable[int]]) -> "SimpleGraph":
        """Spanning subgraph with the given edges (must be edges of self)."""
        edges = frozenset(_edge(*e) for e in edges)
        if not edges <= self.edges:
            raise GraphError(f"{sorted(edges - self.edges)} not edges of the graph")
        return SimpleGraph(self.n, edges, self.vertices)

    def union(self, other: "SimpleGraph") -> "SimpleGraph":
        if self.n != other.n:
            raise GraphError("graphs live in different ambient rings")
        return SimpleGraph(self.n, self.edges | other.edges, self.vertices | other.vertices)

    def compact(self) -> "SimpleGraph":
        """Relabel the vertex set to 1..|V| preserving order."""
        order = {v: i + 1 for i, v in enumerate(sorted(self.vertices))}
        return SimpleGraph(len(order), frozenset(_edge(order[u], order[v]) for u, v in self.edges))

    def drop_isolated(self) -> "SimpleGraph":
        used = {v for e in self.edges for v in e}
        return SimpleGraph(self.n, self.edges, frozenset(used))

    def components(self) -> list[frozenset[int]]:
        adj = self.adjacency()
        seen: set[int] = set()
        comps = []
        for start in sorted(self.vertices):
            if start in seen:
                continue
            comp = {start}
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for w in adj[u]:
                    if w not in comp:
                        comp.add(w)
                        queue.append(w)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def is_bipartite(self) -> bool:
        adj = self.adjacency()
        color: dict[int, int] = {}
        for start in self.vertices:
            if start in color:
                continue
            color[start] = 0
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for w in adj[u]:
                    if w not in color:
                        color[w] = 1 - color[u]
                        queue.append(w)
                    elif color[w] == color[u]:
                        return False
        return True

    def is_forest(self) -> bool:
        return len(self.edges) == len(self.vertices) - len(self.components())

    def is_unicyclic(self) -> bool:
        return self.is_connected() and len(self.edges) == len(self.vertices)

    def distances_from(self, sources: Iterable[int]) -> dict[int, int]:
        adj = self.adjacency()
        dist = {s: 0 for s in sources}
        queue = deque(dist)
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def distance_to_set(self, x: int, W: Iterable[int]) -> float:
        """Shortest-path distance from x to the nearest vertex of W
        (``math.inf`` if none is reachable)."""
        W = set(W)
        if not W:
            raise GraphError("distance to an empty set is undefined")
        self._check_vertex(x)
        for w in W:
            self._check_vertex(w)
        return self.distances_from(W).get(x, math.inf)

    def distance(self, x: int, y: int) -> float:
        return self.distance_to_set(x, [y])

    def unique_cycle(self) -> list[int] | None:
        """Vertices of the unique cycle in cyclic order, or None for a forest.

        Raises NotUnicyclicError when the cycle space has dimension ≥ 2.
        """
        rank = len(self.edges) - len(self.vertices) + len(self.components())
        if rank == 0:
            return None
        if rank > 1:
            raise NotUnicyclicError(f"graph has {rank} independent cycles")
        # With one independent cycle, the 2-core is exactly that cycle.
        adj = self.adjacency()
        queue = deque(v for v, nb in adj.items() if len(nb) <= 1)
        removed: set[int] = set()
        while queue:
            v = queue.popleft()
            if v in removed:
                continue
            removed.add(v)
            for w in adj[v]:
                adj[w].discard(v)
                if len(adj[w]) <= 1 and w not in removed:
                    queue.append(w)
            adj[v] = set()
        core = sorted(v for v in adj if v not in removed)
        cycle = [core[0]]
        prev = None
        while True:
            cur = cycle[-1]
            nxt = min(w for w in adj[cur] if w != prev)
            if nxt == cycle[0]:
                break
            prev = cur
            cycle.append(nxt)
        return cycle

    def cycle_edges(self) -> frozenset[Edge]:
        cycle = self.unique_cycle()
        if cycle is None:
            return frozenset()
        return frozenset(_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle)))

    def minimal_vertex_covers(self) -> list[frozenset[int]]:
        """All minimal vertex covers, as complements of maximal independent sets."""
        adj = self.adjacency()
        active = {v for e in self.edges for v in e}
        covers = [active - mis for mis in _maximal_independent_sets(adj, active)]
        return sorted((frozenset(c) for c in covers), key=lambda c: (len(c), sorted(c)))

    def induced_matching_number(self) -> int:
        if len(self.vertices) > MATCHING_VERTEX_CAP:
            raise ResourceError(
                f"induced matching search capped at {MATCHING_VERTEX_CAP} vertices"
            )
        return len(max_induced_matching(self))


def _maximal_independent_sets(adj: dict[int, set[int]], active: set[int]) -> list[set[int]]:
    """Bron–Kerbosch with pivoting on the complement graph restricted to
    ``active``: maximal cliques there are maximal independent sets here."""
    comp = {v: active - adj[v] - {v} for v in active}
    out: list[set[int]] = []

    def expand(R: set[int], P: set[int], X: set[int]) -> None:
        if not P and not X:
            out.append(R)
            return
        pivot = max(P | X, key=lambda u: len(comp[u] & P))
        for v in list(P - comp[pivot]):
            expand(R | {v}, P & comp[v], X & comp[v])
            P = P - {v}
            X = X | {v}

    if not active:
        return [set()]
    expand(set(), set(active), set())
    return out


def max_induced_matching(G: SimpleGraph) -> list[Edge]:
    """A largest induced matching, by branch and bound over the edges.

    Two edges may both be chosen iff they are disjoint and no edge of G
    joins them.
    """
    edges = G.sorted_edges()
    adj = G.adjacency()
    m = len(edges)
    conflict = [0] * m
    for i, j in combinations(range(m), 2):
        a, b = edges[i], edges[j]
        if set(a) & set(b) or any(w in adj[u] for u in a for w in b):
            conflict[i] |= 1 << j
            conflict[j] |= 1 << i

    best: list[int] = []

    def search(chosen: list[int], candidates: int) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if len(chosen) + bin(candidates).count("1") <= len(best):
            return
        while candidates:
            i = (candidates & -candidates).bit_length() - 1
            candidates &= ~(1 << i)
            chosen.append(i)
            search(chosen, candidates & ~conflict[i])
            chosen.pop()
            if len(chosen) + bin(candidates).count("1") <= len(best):
                return

    search([], (1 << m) - 1)
    return [edges[i] for i in best]


def parse_edge_list(text: str) -> SimpleGraph:
    """Parse ``n <count>`` followed by one ``u v`` edge per line.

    Blank lines and ``#`` comments are ignored.
    """
    n = None
    edges: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
                raise ParseError(f"expected header 'n <count>', got {raw!r}", line=lineno)
            n = int(parts[1])
            continue
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise ParseError(f"malformed edge line {raw!r}", line=lineno)
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise ParseError(f"loop at vertex {u}", line=lineno)
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"vertex out of range 1..{n}", line=lineno)
        e = _edge(u, v)
        if e in edges:
            raise ParseError(f"duplicate edge {u} {v}", line=lineno)
        edges.add(e)
    if n is None:
        raise ParseError("missing header 'n <count>'", line=1)
    return SimpleGraph(n, frozenset(edges))


def format_edge_list(G: SimpleGraph) -> str:
    lines = [f"n {G.n}"] + [f"{u} {v}" for u, v in G.sorted_edges()]
    return "\n".join(lines) + "\n"


# Small named graphs used across tests and the CLI.

def cycle(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def path(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def complete(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, combinations(range(1, n + 1), 2))


def star(leaves: int) -> SimpleGraph:
    return SimpleGraph.from_edges(leaves + 1, [(1, i) for i in range(2, leaves + 2)])


def paw() -> SimpleGraph:
    """Triangle 1-2-3 with pendant vertex 4 attached at 3."""
    return SimpleGraph.from_edges(4, [(1, 2), (2, 3), (1, 3), (3, 4)])
