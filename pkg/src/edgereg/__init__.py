"""Edge ideals of graphs: ordinary and symbolic powers, multigraded Betti
numbers, regularity, and verification campaigns on small graph corpora."""

__version__ = "0.1.0"

from .betti import BettiTable, betti_table, regularity, taylor_strand_betti
from .graphs import SimpleGraph, parse_edge_list
from .graph6 import encode_graph6, parse_graph6
from .monomials import MonomialIdeal
from .symbolic import edge_ideal, mixed_ideal, symbolic_power

__all__ = [
    "BettiTable",
    "MonomialIdeal",
    "SimpleGraph",
    "betti_table",
    "edge_ideal",
    "encode_graph6",
    "mixed_ideal",
    "parse_edge_list",
    "parse_graph6",
    "regularity",
    "symbolic_power",
    "taylor_strand_betti",
]
