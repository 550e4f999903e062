"""Bitset graphs: construction, graph6 codec, complement, induced subgraphs,
random and exhaustive graph streams.

Vertices are integers 0..n-1 and every vertex set is a plain int bitmask,
so all structural operations reduce to machine-word arithmetic for n <= 62.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Iterator, TextIO, Union

MAX_VERTICES = 62  # keeps short-form graph6 and single-word bitmasks

_MASK64 = (1 << 64) - 1


class Graph6Error(ValueError):
    """Malformed graph6 input. ``offset`` is the offending byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class UnsupportedSizeError(ValueError):
    """Graph order outside the supported 1..62 range."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask with the given vertex indices set."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    ``adj[v]`` is the neighbor bitmask of v. Instances are safe to share
    across worker processes.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if not 1 <= n <= MAX_VERTICES:
            raise UnsupportedSizeError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        if len(adj) != n:
            raise ValueError(f"adjacency has {len(adj)} rows for n={n}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has neighbors outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v in range(n):
            for u in iter_bits(adj[v]):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)

    @classmethod
    def _raw(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # internal fast path: caller guarantees validity
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_count()})"

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def max_degree(self) -> int:
        return max(self.adj[v].bit_count() for v in range(self.n))

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in iter_bits(self.adj[v] >> (v + 1) << (v + 1)):
                yield (v, u)


# -- structural operations ---------------------------------------------------


def complement(g: Graph) -> Graph:
    """Graph with exactly the non-edges of g (an involution)."""
    full = g.all_mask
    adj = tuple((full ^ g.adj[v]) & ~(1 << v) for v in range(g.n))
    return Graph._raw(g.n, adj)


def induced_subgraph(g: Graph, s: int) -> Graph:
    """Subgraph induced on bitmask ``s``, relabeled 0..|s|-1 in ascending
    original-vertex order."""
    if s == 0:
        raise ValueError("induced subgraph of the empty vertex set")
    if s & ~g.all_mask:
        raise ValueError("vertex set outside graph")
    verts = list(iter_bits(s))
    index = {v: i for i, v in enumerate(verts)}
    adj = []
    for v in verts:
        row = 0
        for u in iter_bits(g.adj[v] & s):
            row |= 1 << index[u]
        adj.append(row)
    return Graph._raw(len(verts), tuple(adj))


def connected_component(adj: tuple[int, ...], mask: int, seed: int) -> int:
    """Bitmask of the component of ``seed`` inside ``mask``."""
    comp = seed & mask
    frontier = comp
    while frontier:
        reach = 0
        for v in iter_bits(frontier):
            reach |= adj[v]
        frontier = reach & mask & ~comp
        comp |= frontier
    return comp


def component_count(g: Graph, removed: int = 0) -> int:
    """Number of connected components after deleting ``removed`` vertices."""
    remaining = g.all_mask & ~removed
    count = 0
    while remaining:
        low = remaining & -remaining
        remaining &= ~connected_component(g.adj, remaining, low)
        count += 1
    return count


def is_connected(g: Graph, removed: int = 0) -> bool:
    remaining = g.all_mask & ~removed
    if remaining == 0:
        return False
    low = remaining & -remaining
    return connected_component(g.adj, remaining, low) == remaining


def is_cut_set(g: Graph, k: int) -> bool:
    """True when deleting ``k`` leaves at least two components."""
    return component_count(g, removed=k) >= 2


# -- graph6 codec ------------------------------------------------------------
#
# Short form only (n <= 62): first byte is n+63, then the upper-triangle
# column-major bits x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian
# into 6-bit groups, each group offset by 63. Padding bits must be zero.


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (optional '>>graph6<<' prefix tolerated)."""
    s = line.rstrip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    b0 = ord(s[0])
    if b0 < 63 or b0 > 126:
        raise Graph6Error(f"size byte {b0} outside 63..126", 0)
    n = b0 - 63
    if n == 0:
        raise Graph6Error("graph6 order 0 is not a valid graph here", 0)
    if n > MAX_VERTICES:
        raise Graph6Error("long-form graph6 (n > 62) unsupported", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) - 1 != nbytes:
        raise Graph6Error(
            f"expected {nbytes} body bytes for n={n}, got {len(s) - 1}",
            min(len(s), 1 + nbytes),
        )
    acc = 0
    for i, ch in enumerate(s[1:], start=1):
        b = ord(ch)
        if b < 63 or b > 126:
            raise Graph6Error(f"body byte {b} outside 63..126", i)
        acc = (acc << 6) | (b - 63)
    pad = 6 * nbytes - nbits
    if pad and acc & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", nbytes)
    adj = [0] * n
    k = 6 * nbytes - 1  # bit position of x(0,1) within acc
    for v in range(1, n):
        for u in range(v):
            if acc >> k & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            k -= 1
    return Graph._raw(n, tuple(adj))


def encode_graph6(g: Graph) -> str:
    """Inverse of :func:`parse_graph6`."""
    n = g.n
    if n > MAX_VERTICES:
        raise UnsupportedSizeError(f"graph6 short form supports n <= {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    acc = 0
    for v in range(1, n):
        row = g.adj[v]
        for u in range(v):
            acc = (acc << 1) | (row >> u & 1)
    acc <<= 6 * nbytes - nbits
    chars = [chr(n + 63)]
    for i in range(nbytes - 1, -1, -1):
        chars.append(chr(((acc >> (6 * i)) & 63) + 63))
    return "".join(chars)


def iter_graph6(source: Union[str, TextIO]) -> Iterator[Graph]:
    """Parse graphs from a file path or text stream, one per line.

    Blank lines and '>>'-prefixed header lines are skipped.
    """
    if isinstance(source, str):
        with open(source, "r", encoding="ascii") as fh:
            yield from iter_graph6(fh)
        return
    for line in source:
        stripped = line.strip()
        if not stripped or stripped.startswith(">>"):
            continue
        yield parse_graph6(stripped)


# -- deterministic random graphs ---------------------------------------------
#
# The edge stream is driven by splitmix64, a fixed 64-bit mixing generator:
#   state += 0x9E3779B97F4A7C15
#   z = state; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9
#   z = (z ^ z>>27) * 0x94D049BB133111EB; output z ^ z>>31
# Identical (n, p, seed) therefore reproduce the same graph on any platform.


def _splitmix64(state: int) -> tuple[int, int]:
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31), state


def gnp_stream(n: int, p, seed: int, count: int | None = None) -> Iterator[Graph]:
    """G(n, p) graphs from one continuous splitmix64 stream.

    ``p`` may be a Fraction, int, or rational string; the edge test
    ``draw < p * 2^64`` is exact, so p=0 and p=1 are degenerate exactly.
    """
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"edge probability {p} outside [0, 1]")
    if not 1 <= n <= MAX_VERTICES:
        raise UnsupportedSizeError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    state = seed & _MASK64
    threshold = p.numerator << 64
    den = p.denominator
    produced = 0
    while count is None or produced < count:
        adj = [0] * n
        for v in range(1, n):
            for u in range(v):
                draw, state = _splitmix64(state)
                if draw * den < threshold:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
        produced += 1
        yield Graph._raw(n, tuple(adj))


def gen_gnp(n: int, p, seed: int) -> Graph:
    """Single deterministic G(n, p) draw (first element of the stream)."""
    return next(gnp_stream(n, p, seed, count=1))


# -- exhaustive enumeration ---------------------------------------------------


def pair_order(n: int) -> list[tuple[int, int]]:
    """Upper-triangle pairs in graph6 column order: (0,1),(0,2),(1,2),..."""
    return [(u, v) for v in range(1, n) for u in range(v)]


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    """Graph whose edge set is ``mask`` over :func:`pair_order` bits."""
    adj = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            if mask >> k & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            k += 1
    return Graph._raw(n, tuple(adj))


def enumerate_labeled(n: int, max_n: int = 7) -> Iterator[Graph]:
    """All 2^(n(n-1)/2) labeled graphs on n vertices in edge-bitmask order.

    Guarded by ``max_n`` (default 7) because the count is doubly exponential.
    """
    if n > max_n:
        raise UnsupportedSizeError(
            f"refusing to enumerate n={n} labeled graphs (guard max_n={max_n})"
        )
    if n < 1:
        raise UnsupportedSizeError("need n >= 1")
    for mask in range(1 << (n * (n - 1) // 2)):
        yield graph_from_edge_mask(n, mask)


# -- small named graphs (handy fixtures) ---------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)
