from itertools import combinations
from itertools import product as cartesian

import pytest
from hypothesis import given
from hypothesis import strategies as st

from edgereg.betti import regularity
from edgereg.enumeration import enumerate_graphs, enumerate_unicyclic
from edgereg.graphs import GraphError, SimpleGraph, cycle, path, paw
from edgereg.monomials import MonomialIdeal, minimalize
from edgereg.symbolic import (
    BasisCapError,
    edge_ideal,
    mixed_ideal,
    odd_cycle_symbolic_sum,
    symbolic_member,
    symbolic_power,
)


def brute_covers(G):
    """Minimal vertex covers by checking every vertex subset."""
    verts = sorted({v for e in G.edges for v in e})
    covers = [set(S) for k in range(len(verts) + 1) for S in combinations(verts, k)
              if all(u in S or v in S for u, v in G.edges)]
    return [A for A in covers if not any(B < A for B in covers)]


def brute_symbolic(G, s):
    """Minimal generators of {m : deg_A(m) >= s for every minimal cover A}.

    Every minimal generator is a product of cover-prime generators, so its
    degree is at most s times the number of covers and each exponent is at most s."""
    covers = brute_covers(G)
    members = [m for m in cartesian(range(s + 1), repeat=G.n)
               if all(sum(m[v - 1] for v in A) >= s for A in covers)]
    return minimalize(members, n=G.n)


def test_edge_ideal_examples():
    assert edge_ideal(cycle(3)) == MonomialIdeal.parse("x1*x2, x2*x3, x1*x3", 3)
    assert edge_ideal(path(3)) == MonomialIdeal.parse("x1*x2, x2*x3", 3)
    assert edge_ideal(SimpleGraph(3, frozenset())).is_zero


def test_triangle_second_symbolic_power():
    expected = MonomialIdeal.parse("x1*x2*x3, x1^2*x2^2, x1^2*x3^2, x2^2*x3^2", 3)
    assert symbolic_power(cycle(3), 2) == expected
    assert edge_ideal(cycle(3)) ** 2 != expected


def test_symbolic_power_edge_cases():
    for G in [cycle(3), cycle(5), paw()]:
        assert symbolic_power(G, 1) == edge_ideal(G)
    assert symbolic_power(SimpleGraph(3, frozenset()), 2).is_zero
    with pytest.raises(ValueError):
        symbolic_power(cycle(3), 0)
    with pytest.raises(BasisCapError):
        symbolic_power(cycle(7), 4, cap=10)


def test_bipartite_symbolic_equals_ordinary():
    for G in [path(4), cycle(4), cycle(6)]:
        for s in (2, 3):
            assert symbolic_power(G, s) == edge_ideal(G) ** s


def test_symbolic_member_examples():
    C5 = cycle(5)
    full = (1,) * 5
    assert symbolic_member(C5, full, 3)
    assert not symbolic_member(C5, full, 4)
    assert full not in edge_ideal(C5) ** 3
    assert not symbolic_member(SimpleGraph(2, frozenset()), (1, 1), 1)
    with pytest.raises(ValueError):
        symbolic_member(C5, (1, 1), 1)


def test_odd_cycle_decomposition():
    for n in (3, 5, 7):
        for s in range(1, 5):
            assert odd_cycle_symbolic_sum(cycle(n), s) == symbolic_power(cycle(n), s)
    with pytest.raises(GraphError):
        odd_cycle_symbolic_sum(cycle(4), 2)
    with pytest.raises(GraphError):
        odd_cycle_symbolic_sum(paw(), 2)


def test_mixed_ideal_on_paw():
    G = paw()
    H1 = G.edge_subgraph([(1, 2), (2, 3), (1, 3)])
    H2 = G.edge_subgraph([(3, 4)])
    J = mixed_ideal(H1, 2, H2)
    assert len(J) == 5
    assert regularity(edge_ideal(G) ** 2) == 4
    assert regularity(J) <= 4
    with pytest.raises(GraphError):
        mixed_ideal(H1, 2, G)
    with pytest.raises(GraphError):
        mixed_ideal(H1, 2, path(5))


def test_containment_chain_examples():
    for G in [cycle(5), paw()]:
        I = edge_ideal(G)
        for s in (2, 3):
            assert I**s <= symbolic_power(G, s) <= I


# -- properties --------------------------------------------------------------

small_graphs = [G for n in range(2, 7) for G in enumerate_graphs(n) if G.edges]


@pytest.mark.property
@pytest.mark.parametrize("G", [G for G in small_graphs if G.n <= 5], ids=lambda G: str(G.sorted_edges()))
def test_symbolic_power_matches_brute_force(G):
    for s in (1, 2, 3):
        assert symbolic_power(G, s) == brute_symbolic(G, s)


@pytest.mark.property
@given(st.sampled_from(small_graphs), st.integers(1, 3), st.data())
def test_symbolic_member_agrees_with_generators(G, s, data):
    m = data.draw(st.tuples(*[st.integers(0, 2)] * G.n).filter(lambda m: sum(m) <= 2 * s + 2))
    assert symbolic_member(G, m, s) == (m in symbolic_power(G, s))


@pytest.mark.property
@pytest.mark.parametrize("s", [1, 2, 3])
def test_containment_chain_on_small_graphs(s):
    for G in small_graphs:
        I = edge_ideal(G)
        sym = symbolic_power(G, s)
        assert I**s <= sym <= I
        if G.is_bipartite():
            assert sym == I**s


@pytest.mark.property
def test_symbolic_powers_decrease_and_multiply():
    for G in small_graphs[::4]:
        for s in (1, 2):
            big, small = symbolic_power(G, s), symbolic_power(G, s + 1)
            assert small <= big
            assert big * symbolic_power(G, 1) <= small


@pytest.mark.property
def test_edge_colon_contains_lower_symbolic_power():
    for n in range(3, 7):
        for G in enumerate_unicyclic(n):
            for u, v in G.sorted_edges():
                e = tuple(1 if i in (u - 1, v - 1) else 0 for i in range(G.n))
                for s in (2, 3):
                    assert symbolic_power(G, s - 1) <= symbolic_power(G, s).colon(e)
