"""Brute-force reference implementations.

These deliberately share no search machinery with the production solvers in
:mod:`chi_lab.invariants`; they exist so the fast paths can be checked
against slow, obviously-correct enumeration.
"""

from __future__ import annotations

import itertools
from typing import Optional

from .graphs import Graph, connected_component, induced_subgraph, iter_bits, mask_of
from .invariants import chromatic_number


def colorable_with(g: Graph, k: int) -> bool:
    """Exhaustive backtracking over all k-colorings in vertex index order."""
    n, adj = g.n, g.adj
    colors = [-1] * n

    def assign(v: int) -> bool:
        if v == n:
            return True
        for c in range(k):
            ok = True
            for u in iter_bits(adj[v]):
                if colors[u] == c:
                    ok = False
                    break
            if ok:
                colors[v] = c
                if assign(v + 1):
                    return True
                colors[v] = -1
        return False

    return assign(0)


def chromatic_number_brute(g: Graph) -> int:
    """Smallest k for which an exhaustive k-coloring search succeeds."""
    for k in range(1, g.n + 1):
        if colorable_with(g, k):
            return k
    raise AssertionError("n colors always suffice")


def vertex_connectivity_brute(g: Graph) -> tuple[int, Optional[int]]:
    """Smallest vertex subset whose removal disconnects g, by direct scan.

    Returns (n-1, None) for complete graphs, matching the solver convention.
    """
    n = g.n
    full = g.all_mask
    for size in range(0, n - 1):
        for combo in itertools.combinations(range(n), size):
            removed = mask_of(combo)
            remaining = full & ~removed
            low = remaining & -remaining
            if connected_component(g.adj, remaining, low) != remaining:
                return size, removed
    return n - 1, None


def chromatic_excess_full(g: Graph) -> int:
    """Excess by full enumeration of all 2^n - 1 non-empty vertex subsets."""
    best = None
    for mask in range(1, 1 << g.n):
        sub = induced_subgraph(g, mask)
        chi, _ = chromatic_number(sub)
        value = sub.n - 3 * chi
        if best is None or value > best:
            best = value
    assert best is not None
    return best
