"""Canonical labeling and isomorphism-free enumeration of small graphs.

Canonical forms come from colour refinement followed by a backtracking
search over individualizations; the canonical labeling is the one whose
adjacency certificate is lexicographically smallest.  This is plenty for
the graph sizes used here (n <= 10 or so).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .graph6 import encode_graph6
from .errors import ResourceError
from .graphs import SimpleGraph, cycle

ENUMERATION_CAP = 10
ALL_GRAPHS_CAP = 8


def _refine(adj: list[int], cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out: list[tuple[int, ...]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple(bin(adj[v] & m).count("1") for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
            for sig in sorted(groups):
                out.append(tuple(groups[sig]))
        cells = out
        if not changed:
            return cells


def _certificate(adj: list[int], order: list[int]) -> int:
    cert = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            cert = (cert << 1) | ((row >> order[i]) & 1)
    return cert


def canonical_order(G: SimpleGraph) -> list[int]:
    """Vertices of G (original labels) listed in canonical order."""
    verts = sorted(G.vertices)
    index = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for u, v in G.edges:
        adj[index[u]] |= 1 << index[v]
        adj[index[v]] |= 1 << index[u]

    best: list = [None, None]

    def search(cells: list[tuple[int, ...]]) -> None:
        cells = _refine(adj, cells)
        if all(len(c) == 1 for c in cells):
            order = [c[0] for c in cells]
            cert = _certificate(adj, order)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, order
            return
        size = min(len(c) for c in cells if len(c) > 1)
        i = next(k for k, c in enumerate(cells) if len(c) == size)
        cell = cells[i]
        for v in cell:
            rest = tuple(w for w in cell if w != v)
            search(cells[:i] + [(v,), rest] + cells[i + 1:])

    if not verts:
        return []
    search([tuple(range(len(verts)))])
    return [verts[i] for i in best[1]]


def canonical_graph(G: SimpleGraph) -> SimpleGraph:
    order = canonical_order(G)
    label = {v: i + 1 for i, v in enumerate(order)}
    return SimpleGraph.from_edges(len(order), [(label[u], label[v]) for u, v in G.edges])


def canonical_form(G: SimpleGraph) -> str:
    """graph6 string of the canonically relabeled graph (isolated vertices
    in the vertex set count)."""
    return encode_graph6(canonical_graph(G))


def _check_cap(n: int) -> None:
    if n > ENUMERATION_CAP:
        raise ResourceError(f"enumeration capped at n={ENUMERATION_CAP}")


def _dedup(graphs) -> dict[str, SimpleGraph]:
    out: dict[str, SimpleGraph] = {}
    for G in graphs:
        H = canonical_graph(G)
        out.setdefault(encode_graph6(H), H)
    return out


@lru_cache(maxsize=None)
def _unicyclic_level(n: int) -> tuple[tuple[str, SimpleGraph], ...]:
    if n == 3:
        found = _dedup([cycle(3)])
    else:
        def grow():
            yield cycle(n)
            for _, H in _unicyclic_level(n - 1):
                for v in range(1, n):
                    yield SimpleGraph.from_edges(n, list(H.edges) + [(v, n)])
        found = _dedup(grow())
    return tuple(sorted(found.items()))


def enumerate_unicyclic(n: int) -> Iterator[SimpleGraph]:
    """Connected unicyclic graphs on n vertices, one per isomorphism class,
    ordered by canonical graph6 string."""
    if n < 3:
        raise ValueError("unicyclic graphs need at least 3 vertices")
    _check_cap(n)
    for _, G in _unicyclic_level(n):
        yield G


@lru_cache(maxsize=None)
def _forest_level(n: int) -> tuple[tuple[str, SimpleGraph], ...]:
    if n == 1:
        found = _dedup([SimpleGraph(1, frozenset())])
    else:
        def grow():
            for _, H in _forest_level(n - 1):
                yield SimpleGraph(n, H.edges)
                for v in range(1, n):
                    yield SimpleGraph.from_edges(n, list(H.edges) + [(v, n)])
        found = _dedup(grow())
    return tuple(sorted(found.items()))


def enumerate_forests(n: int) -> Iterator[SimpleGraph]:
    """All forests on exactly n vertices (isolated vertices allowed)."""
    if n < 1:
        raise ValueError("n must be positive")
    _check_cap(n)
    for _, G in _forest_level(n):
        yield G


@lru_cache(maxsize=None)
def _graph_level(n: int) -> tuple[tuple[str, SimpleGraph], ...]:
    if n == 1:
        found = _dedup([SimpleGraph(1, frozenset())])
    else:
        def grow():
            for _, H in _graph_level(n - 1):
                for mask in range(1 << (n - 1)):
                    new = [(v, n) for v in range(1, n) if mask >> (v - 1) & 1]
                    yield SimpleGraph.from_edges(n, list(H.edges) + new)
        found = _dedup(grow())
    return tuple(sorted(found.items()))


def enumerate_graphs(n: int, connected: bool = False) -> Iterator[SimpleGraph]:
    """All simple graphs on n vertices up to isomorphism."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > ALL_GRAPHS_CAP:
        raise ResourceError(f"enumeration of all graphs capped at n={ALL_GRAPHS_CAP}")
    for _, G in _graph_level(n):
        if not connected or G.is_connected():
            yield G
