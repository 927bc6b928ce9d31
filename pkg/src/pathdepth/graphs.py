"""Simple graphs, graph powers, t-paths and the ideals built from them."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .ring import Monomial, MonomialIdeal, RingContext, _minimal

MAX_PARTIAL_PATHS = 10_000_000


@dataclass(frozen=True)
class SimpleGraph:
    num_vertices: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.num_vertices < 1:
            raise ValueError(f"a graph needs at least one vertex, got {self.num_vertices}")
        for i, j in self.edges:
            if not (1 <= i < j <= self.num_vertices):
                raise ValueError(f"bad edge {{{i}, {j}}} for a graph on {self.num_vertices} vertices")

    @classmethod
    def from_edges(cls, n: int, edges) -> SimpleGraph:
        normalized = set()
        for i, j in edges:
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            normalized.add((min(i, j), max(i, j)))
        return cls(n, frozenset(normalized))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """adjacency[v] is the neighbour set of vertex v; index 0 is unused."""
        nbrs: list[set[int]] = [set() for _ in range(self.num_vertices + 1)]
        for i, j in self.edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        return tuple(frozenset(s) for s in nbrs)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def distances_from(self, source: int) -> dict[int, int]:
        dist = {source: 0}
        queue = deque([source])
        adj = self.adjacency
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        return dist

    def to_json(self) -> dict:
        return {"n": self.num_vertices, "edges": [list(e) for e in self.sorted_edges()]}

    @classmethod
    def from_json(cls, data: dict) -> SimpleGraph:
        return cls.from_edges(int(data["n"]), [tuple(e) for e in data["edges"]])


def path_graph(n: int) -> SimpleGraph:
    if n < 1:
        raise ValueError(f"a path needs at least one vertex, got n={n}")
    return SimpleGraph(n, frozenset((i, i + 1) for i in range(1, n)))


def graph_power(G: SimpleGraph, k: int) -> SimpleGraph:
    """Join every pair of vertices at distance 1..k in G."""
    if k < 1:
        raise ValueError(f"graph power exponent must be >= 1, got {k}")
    edges = set()
    for v in range(1, G.num_vertices + 1):
        for w, d in G.distances_from(v).items():
            if v < w and d <= k:
                edges.add((v, w))
    return SimpleGraph(G.num_vertices, frozenset(edges))


@dataclass(frozen=True)
class TPath:
    vertices: tuple[int, ...]  # a witness sequence, first vertex < last vertex
    monomial: Monomial


def enumerate_t_paths(G: SimpleGraph, t: int, max_partial: int = MAX_PARTIAL_PATHS) -> list[TPath]:
    """All paths on t distinct vertices, one representative per reversal pair."""
    if t < 2:
        raise ValueError(f"t must be >= 2, got {t}")
    n = G.num_vertices
    ring = RingContext(n)
    adj = G.adjacency
    found: list[TPath] = []
    explored = 0

    def extend(seq: list[int], used: set[int]) -> None:
        nonlocal explored
        explored += 1
        if explored > max_partial:
            raise RuntimeError(f"t-path enumeration exceeded {max_partial} partial sequences")
        if len(seq) == t:
            if seq[0] < seq[-1]:
                found.append(TPath(tuple(seq), ring.monomial(seq)))
            return
        for w in sorted(adj[seq[-1]]):
            if w not in used:
                seq.append(w)
                used.add(w)
                extend(seq, used)
                used.discard(w)
                seq.pop()

    for v in range(1, n + 1):
        extend([v], {v})
    return found


def path_ideal(G: SimpleGraph, t: int) -> MonomialIdeal:
    ring = RingContext(G.num_vertices)
    return MonomialIdeal(ring, _minimal(p.monomial.exponents for p in enumerate_t_paths(G, t)))


def edge_ideal(G: SimpleGraph) -> MonomialIdeal:
    ring = RingContext(G.num_vertices)
    return MonomialIdeal(ring, _minimal(ring.monomial(e).exponents for e in G.edges))


def path_power_ideal(n: int, k: int = 2, t: int = 3, num_vars: int | None = None) -> MonomialIdeal:
    """I_t(P_n^k), optionally placed in a larger ring on x1..x_{num_vars}.

    Paths with fewer than t vertices give the zero ideal, and n < 1 is read as
    the empty path (zero ideal) so that recursions on n - c stay well defined.
    """
    size = num_vars if num_vars is not None else max(n, 1)
    ring = RingContext(size)
    if n < t:
        return MonomialIdeal.zero(ring)
    if n > size:
        raise ValueError(f"P_{n} does not fit in a ring with {size} variables")
    I = path_ideal(graph_power(path_graph(n), k), t)
    pad = size - n
    return MonomialIdeal(ring, tuple(g + (0,) * pad for g in I.gens))
