"""Overlap graphs: pointers as vertices, interlocking pairs as edges.

The overlap graph of a permutation of {1..n} has one vertex per pointer code
1..n-1 and an edge for every interlocking pair, so its edges are exactly the
legal cds moves.  A cds move and the gcds pivot at the matching edge commute
with taking overlap graphs; ``check_commutation`` tests one instance of that
square.
"""

from __future__ import annotations

from .graphs import Graph, apply_gcds
from .permutations import Permutation, apply_cds, legal_moves

__all__ = ["overlap_graph", "check_commutation"]


def overlap_graph(perm: Permutation) -> Graph:
    """The overlap graph on vertex codes 1..n-1 (edgeless when n <= 2)."""
    return Graph(range(1, perm.n), legal_moves(perm))


def check_commutation(perm: Permutation, p: int, q: int) -> bool:
    """Does overlap(cds_{p,q}(perm)) equal gcds(overlap(perm), {p, q})?

    Compares labelled graphs for exact equality.
    """
    after_cds = overlap_graph(apply_cds(perm, p, q))
    after_gcds = apply_gcds(overlap_graph(perm), (p, q))
    return after_cds == after_gcds
