"""Exact graph invariants with certifying witnesses.

Every solver is a pure function of an immutable graph and uses a fixed,
deterministic search order, so repeated runs (and parallel workers) produce
identical values and witnesses.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .graphs import (
    Graph,
    complement,
    connected_component,
    induced_subgraph,
    is_connected,
    iter_bits,
    mask_of,
)


# -- greedy heuristics (internal bounds only) ----------------------------------


def _greedy_clique(adj: tuple[int, ...], n: int) -> int:
    """Deterministic greedy clique, returned as a bitmask."""
    order = sorted(range(n), key=lambda v: (-adj[v].bit_count(), v))
    start = order[0]
    clique = 1 << start
    cand = adj[start]
    while cand:
        best_v, best_key = -1, None
        for v in iter_bits(cand):
            key = (-(adj[v] & cand).bit_count(), v)
            if best_key is None or key < best_key:
                best_v, best_key = v, key
        clique |= 1 << best_v
        cand &= adj[best_v]
    return clique


def greedy_coloring(g: Graph) -> list[int]:
    """DSATUR greedy coloring; proper but not necessarily optimal."""
    n, adj = g.n, g.adj
    colors = [-1] * n
    for _ in range(n):
        pick, pick_key = -1, None
        for v in range(n):
            if colors[v] >= 0:
                continue
            seen = 0
            for u in iter_bits(adj[v]):
                if colors[u] >= 0:
                    seen |= 1 << colors[u]
            key = (-seen.bit_count(), -adj[v].bit_count(), v)
            if pick_key is None or key < pick_key:
                pick, pick_key = v, key
        forbidden = 0
        for u in iter_bits(adj[pick]):
            if colors[u] >= 0:
                forbidden |= 1 << colors[u]
        c = 0
        while forbidden >> c & 1:
            c += 1
        colors[pick] = c
    return colors


# -- chromatic number ----------------------------------------------------------


def chromatic_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Exact chromatic number with an optimal proper coloring.

    Branch and bound: vertices are colored in dynamic saturation order, a
    DSATUR greedy run seeds the upper bound, and a greedy clique is
    pre-colored to seed the lower bound and break color symmetry.
    """
    n, adj = g.n, g.adj
    greedy = greedy_coloring(g)
    ub = max(greedy) + 1
    clique_mask = _greedy_clique(adj, n)
    lb = clique_mask.bit_count()
    if lb == ub:
        return ub, tuple(greedy)

    best = ub
    best_colors = list(greedy)
    colors = [-1] * n
    for i, v in enumerate(iter_bits(clique_mask)):
        colors[v] = i
    pre = clique_mask.bit_count()

    def descend(uncolored: int, used: int) -> None:
        nonlocal best, best_colors
        if used >= best or best == lb:
            return
        if uncolored == 0:
            best = used
            best_colors = colors.copy()
            return
        pick, pick_key, pick_forbidden = -1, None, 0
        for v in range(n):
            if colors[v] >= 0:
                continue
            forbidden = 0
            for u in iter_bits(adj[v]):
                cu = colors[u]
                if cu >= 0:
                    forbidden |= 1 << cu
            key = (-forbidden.bit_count(), -adj[v].bit_count(), v)
            if pick_key is None or key < pick_key:
                pick, pick_key, pick_forbidden = v, key, forbidden
        limit = min(used + 1, best - 1)
        for c in range(limit):
            if pick_forbidden >> c & 1:
                continue
            colors[pick] = c
            descend(uncolored - 1, used if c < used else c + 1)
            colors[pick] = -1

    descend(n - pre, pre)
    chi = best
    witness = tuple(best_colors)
    return chi, witness


# -- clique and independence ----------------------------------------------------


def clique_number(g: Graph) -> tuple[int, int]:
    """Exact maximum clique size with a witness bitmask.

    Branch and bound over candidate bitmasks with greedy-coloring pruning:
    candidates are partitioned into independent classes and explored in
    reverse class order, cutting branches where size + class index cannot
    beat the incumbent.
    """
    n, adj = g.n, g.adj
    best = 0
    best_mask = 0

    def expand(size: int, mask: int, cand: int) -> None:
        nonlocal best, best_mask
        if cand == 0:
            if size > best:
                best, best_mask = size, mask
            return
        seq = []
        rem = cand
        color = 0
        while rem:
            color += 1
            avail = rem
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                seq.append((color, v, low))
                avail &= ~(adj[v] | low)
                rem ^= low
        for color, v, low in reversed(seq):
            if size + color <= best:
                return
            expand(size + 1, mask | low, cand & adj[v])
            cand &= ~low

    expand(0, 0, g.all_mask)
    return best, best_mask


def independence_number(g: Graph) -> tuple[int, int]:
    """Maximum independent set, computed as a clique of the complement."""
    return clique_number(complement(g))


# -- vertex connectivity ---------------------------------------------------------


def _pair_connectivity(
    adj: tuple[int, ...], n: int, s: int, t: int, cap: int
) -> tuple[int, Optional[int]]:
    """Max internally vertex-disjoint s-t paths for a non-adjacent pair.

    Unit-capacity flow on the implicit vertex-split digraph (states 0..n-1
    are v_in, n..2n-1 are v_out), augmenting one path per BFS. Aborts and
    returns (cap, None) once the flow reaches ``cap``; otherwise returns the
    exact value with a minimum separating set extracted from the residual.
    """
    used = [False] * n
    flow_in = [-1] * n
    flow = 0
    source = s + n
    while flow < cap:
        parent = [-2] * (2 * n)
        parent[source] = -1
        queue = [source]
        qi = 0
        found = False
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            if x == t:
                found = True
                break
            if x >= n:
                v = x - n
                for w in iter_bits(adj[v]):
                    if parent[w] == -2:
                        parent[w] = x
                        queue.append(w)
                if used[v] and parent[v] == -2:
                    parent[v] = x
                    queue.append(v)
            else:
                v = x
                if not used[v] and parent[v + n] == -2:
                    parent[v + n] = x
                    queue.append(v + n)
                u = flow_in[v]
                if u >= 0 and parent[u + n] == -2:
                    parent[u + n] = x
                    queue.append(u + n)
        if not found:
            reachable = [p != -2 for p in parent]
            cut = 0
            for v in range(n):
                if reachable[v] and not reachable[v + n]:
                    cut |= 1 << v
            return flow, cut
        path = []
        x = t
        while x != -1:
            path.append(x)
            x = parent[x]
        path.reverse()
        for a, b in zip(path, path[1:]):
            if a >= n:
                if b == a - n:
                    used[b] = False  # cancel flow through b
                else:
                    flow_in[b] = a - n
            else:
                if b == a + n:
                    used[a] = True
                elif flow_in[a] == b - n:
                    # reverse edge arc with no replacement inflow: a no
                    # longer carries flow (entered via reverse internal)
                    flow_in[a] = -1
        flow += 1
    return flow, None


def vertex_connectivity(g: Graph) -> tuple[int, Optional[int]]:
    """Exact vertex connectivity with a minimum cut witness.

    Menger reduction: kappa is the minimum over non-adjacent pairs of the
    max vertex-disjoint path count. Disconnected graphs return (0, empty
    mask); complete graphs return (n-1, None) by convention, which makes
    kappa(K_1) = 0.
    """
    n, adj = g.n, g.adj
    if not is_connected(g):
        return 0, 0
    if all(adj[v].bit_count() == n - 1 for v in range(n)):
        return n - 1, None
    v0 = min(range(n), key=lambda v: (adj[v].bit_count(), v))
    best = adj[v0].bit_count()
    best_cut: Optional[int] = adj[v0]
    for s in range(n):
        row = adj[s]
        for t in range(s + 1, n):
            if row >> t & 1:
                continue
            value, cut = _pair_connectivity(adj, n, s, t, best)
            if value < best:
                best, best_cut = value, cut
    return best, best_cut


# -- chromatic excess -------------------------------------------------------------


def chromatic_excess(g: Graph) -> tuple[int, int]:
    """max over non-empty induced subgraphs H of |H| - 3*chi(H), with witness.

    Searches subset sizes in decreasing order. Since chi >= 1, once
    size - 3 <= best no smaller size can win; since chi(H) >= |H|/alpha(G),
    sizes with size - 3*ceil(size/alpha) <= best are skipped entirely.
    """
    n = g.n
    alpha, _ = independence_number(g)
    best: Optional[int] = None
    best_mask = 0
    for size in range(n, 0, -1):
        if best is not None and size - 3 <= best:
            break
        if best is not None and size - 3 * (-(-size // alpha)) <= best:
            continue
        for combo in itertools.combinations(range(n), size):
            mask = mask_of(combo)
            chi, _ = chromatic_number(induced_subgraph(g, mask))
            value = size - 3 * chi
            if best is None or value > best:
                best, best_mask = value, mask
    assert best is not None
    return best, best_mask


# -- aggregate report --------------------------------------------------------------


@dataclass(frozen=True)
class InvariantReport:
    """All exact invariants of one graph, with certifying witnesses.

    ``kappa_bar`` and ``delta_bar`` refer to the complement graph;
    ``excess`` is None when the (exponential) excess search was skipped.
    Witness encoding: ``coloring`` maps vertex -> color, the set witnesses
    are vertex bitmasks, ``min_cut_bar`` is None when the complement is
    complete, and ``excess_set`` is None when excess was skipped.
    """

    n: int
    max_degree: int
    chromatic: int
    clique: int
    independence: int
    kappa_bar: int
    delta_bar: int
    excess: Optional[int]
    coloring: tuple[int, ...]
    clique_set: int
    independent_set: int
    min_cut_bar: Optional[int]
    excess_set: Optional[int]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "max_degree": self.max_degree,
            "chromatic": self.chromatic,
            "clique": self.clique,
            "independence": self.independence,
            "kappa_bar": self.kappa_bar,
            "delta_bar": self.delta_bar,
            "excess": self.excess,
            "witnesses": {
                "coloring": list(self.coloring),
                "clique": sorted(iter_bits(self.clique_set)),
                "independent": sorted(iter_bits(self.independent_set)),
                "min_cut_bar": (
                    None if self.min_cut_bar is None else sorted(iter_bits(self.min_cut_bar))
                ),
                "excess_set": (
                    None if self.excess_set is None else sorted(iter_bits(self.excess_set))
                ),
            },
        }


def invariant_report(g: Graph, with_excess: bool = False) -> InvariantReport:
    """Compute every invariant the bound formulas consume."""
    comp = complement(g)
    chi, coloring = chromatic_number(g)
    omega, clique_set = clique_number(g)
    alpha, independent_set = clique_number(comp)
    kappa_bar, min_cut_bar = vertex_connectivity(comp)
    max_degree = g.max_degree()
    if with_excess:
        excess, excess_set = chromatic_excess(g)
    else:
        excess, excess_set = None, None
    return InvariantReport(
        n=g.n,
        max_degree=max_degree,
        chromatic=chi,
        clique=omega,
        independence=alpha,
        kappa_bar=kappa_bar,
        delta_bar=g.n - 1 - max_degree,
        excess=excess,
        coloring=coloring,
        clique_set=clique_set,
        independent_set=independent_set,
        min_cut_bar=min_cut_bar,
        excess_set=excess_set,
    )


# -- witness certification -----------------------------------------------------------


def is_proper_coloring(g: Graph, coloring: tuple[int, ...]) -> bool:
    return all(coloring[u] != coloring[v] for u, v in g.edges())


def is_clique(g: Graph, mask: int) -> bool:
    for v in iter_bits(mask):
        if mask & ~g.adj[v] & ~(1 << v):
            return False
    return True


def is_independent_set(g: Graph, mask: int) -> bool:
    return all(g.adj[v] & mask == 0 for v in iter_bits(mask))


def certify_report(g: Graph, r: InvariantReport) -> list[str]:
    """Re-validate every witness against its definition; returns failures."""
    problems = []
    if len(r.coloring) != g.n or not is_proper_coloring(g, r.coloring):
        problems.append("coloring not proper")
    if len(set(r.coloring)) != r.chromatic:
        problems.append("coloring does not use exactly chi colors")
    if r.clique_set.bit_count() != r.clique or not is_clique(g, r.clique_set):
        problems.append("clique witness invalid")
    if r.independent_set.bit_count() != r.independence or not is_independent_set(
        g, r.independent_set
    ):
        problems.append("independent witness invalid")
    comp = complement(g)
    if r.min_cut_bar is None:
        if r.kappa_bar != g.n - 1 or not all(
            comp.adj[v].bit_count() == g.n - 1 for v in range(g.n)
        ):
            problems.append("missing cut witness but complement not complete")
    else:
        if r.min_cut_bar.bit_count() != r.kappa_bar:
            problems.append("cut witness has wrong size")
        remaining = comp.all_mask & ~r.min_cut_bar
        if remaining:
            low = remaining & -remaining
            if connected_component(comp.adj, remaining, low) == remaining:
                problems.append("cut witness does not disconnect complement")
    if r.excess is not None:
        assert r.excess_set is not None
        sub = induced_subgraph(g, r.excess_set)
        chi, _ = chromatic_number(sub)
        if sub.n - 3 * chi != r.excess:
            problems.append("excess witness does not achieve excess")
    return problems
