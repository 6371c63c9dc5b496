"""Edge ideals, cover primes and symbolic powers of graphs.

Variable ``x_i`` of the ring corresponds to vertex ``i`` of the graph, so
index ``i - 1`` of every exponent vector.  All subgraph ideals are formed
in the ring of the graph they came from.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Sequence

from .graphs import GraphError, SimpleGraph
from .errors import ResourceError
from .monomials import MonomialIdeal, squarefree

# Intermediate bases larger than this abort a symbolic power computation.
BASIS_CAP = 200_000


class BasisCapError(ResourceError):
    pass


def edge_ideal(G: SimpleGraph) -> MonomialIdeal:
    return MonomialIdeal(G.n, [squarefree(G.n, (u - 1, v - 1)) for u, v in G.edges])


def vertex_monomial(G: SimpleGraph, vertices) -> tuple[int, ...]:
    """Product of the variables of the given vertices (with multiplicity)."""
    exps = [0] * G.n
    for v in vertices:
        exps[v - 1] += 1
    return tuple(exps)


@dataclass(frozen=True)
class CoverPrimeSet:
    n: int
    covers: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, G: SimpleGraph) -> "CoverPrimeSet":
        return cls(G.n, tuple(G.minimal_vertex_covers()))

    def primes(self) -> list[MonomialIdeal]:
        return [MonomialIdeal.prime(self.n, [v - 1 for v in A]) for A in self.covers]

    def prime_power(self, A: frozenset[int], s: int) -> MonomialIdeal:
        idx = sorted(v - 1 for v in A)
        gens = []
        for combo in combinations_with_replacement(idx, s):
            exps = [0] * self.n
            for i in combo:
                exps[i] += 1
            gens.append(tuple(exps))
        return MonomialIdeal._trusted(self.n, gens)


def symbolic_power(G: SimpleGraph, s: int, cap: int = BASIS_CAP) -> MonomialIdeal:
    """``I(G)^(s)`` as the intersection of the s-th powers of the cover primes,
    folded from the smallest covers up."""
    if s < 1:
        raise ValueError("symbolic powers are indexed from 1")
    if not G.edges:
        return MonomialIdeal.zero(G.n)
    primes = CoverPrimeSet.of(G)
    result = None
    for A in primes.covers:
        P = primes.prime_power(A, s)
        if result is None:
            result = P
            continue
        if len(result) * len(P) > cap:
            raise BasisCapError(
                f"intersection basis {len(result)}x{len(P)} exceeds cap {cap}"
            )
        result = result & P
    return result


def symbolic_member(G: SimpleGraph, m: Sequence[int], s: int) -> bool:
    """Whether m lies in ``I(G)^(s)``: m has degree ≥ s on every minimal cover."""
    if len(m) != G.n:
        raise ValueError(f"monomial has length {len(m)}, ring has {G.n} variables")
    if not G.edges:
        return False
    return all(sum(m[v - 1] for v in A) >= s for A in G.minimal_vertex_covers())


def odd_cycle_symbolic_sum(C: SimpleGraph, s: int) -> MonomialIdeal:
    """``sum_t v^t I^(s - t(k+1))`` for an odd cycle of length 2k+1, with v the
    product of all cycle variables and t running from 0 to floor(s/(k+1))."""
    active = C.drop_isolated()
    cyc = active.unique_cycle() if active.edges else None
    if (
        cyc is None
        or len(cyc) != len(active.vertices)
        or len(active.edges) != len(cyc)
        or len(cyc) % 2 == 0
    ):
        raise GraphError("input is not an odd cycle")
    k = (len(cyc) - 1) // 2
    I = edge_ideal(C)
    v = vertex_monomial(C, cyc)
    total = MonomialIdeal.zero(C.n)
    for t in range(s // (k + 1) + 1):
        scaled = MonomialIdeal(C.n, [tuple(e * t for e in v)])
        total = total + scaled * I ** (s - t * (k + 1))
    return total


def mixed_ideal(H1: SimpleGraph, s: int, H2: SimpleGraph) -> MonomialIdeal:
    """``I(H1)^(s) + I(H2)`` in the common ambient ring."""
    if H1.n != H2.n:
        raise GraphError("H1 and H2 live in different ambient rings")
    overlap = H1.edges & H2.edges
    if overlap:
        raise GraphError(f"edge sets overlap in {sorted(overlap)}")
    return symbolic_power(H1, s) + edge_ideal(H2)
