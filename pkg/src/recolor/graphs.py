"""Core graph types: graphs, colorings, elimination orderings.

Vertices are the integers 0..n-1.  Colors are 1-based, drawn from a palette
{1..t}.  All three types are immutable once built; operations return new
values instead of mutating.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import NotChordal, PaletteExhausted, PaletteViolation


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Edges are deduplicated; self-loops are rejected.  Adjacency is stored
    as a tuple of frozensets so instances can be shared freely.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in adj)

    @property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in sorted(self.adj[u]):
                if u < v:
                    yield (u, v)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Graph on the same vertex ids keeping only edges inside `vertices`."""
        keep = set(vertices)
        return Graph(self.n, [(u, v) for u, v in self.edges() if u in keep and v in keep])

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Coloring:
    """Assignment of a 1-based color to every vertex, with a palette size t.

    The constructor only checks shape (positive integers); whether every
    color actually fits inside the palette is checked by `is_proper`, so a
    palette violation can be reported separately from an improper edge.
    """

    __slots__ = ("colors", "palette_size")

    def __init__(self, colors: Sequence[int], palette_size: int):
        if palette_size < 1:
            raise ValueError("palette size must be at least 1")
        cols = tuple(int(c) for c in colors)
        for v, c in enumerate(cols):
            if c < 1:
                raise ValueError(f"vertex {v} has non-positive color {c}")
        self.colors = cols
        self.palette_size = palette_size

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)

    def with_color(self, v: int, c: int) -> "Coloring":
        lst = list(self.colors)
        lst[v] = c
        return Coloring(lst, self.palette_size)

    def with_palette(self, t: int) -> "Coloring":
        return Coloring(self.colors, t)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Coloring)
            and self.colors == other.colors
            and self.palette_size == other.palette_size
        )

    def __hash__(self) -> int:
        return hash((self.colors, self.palette_size))

    def __repr__(self) -> str:
        return f"Coloring({list(self.colors)}, t={self.palette_size})"


def is_proper(g: Graph, coloring: Coloring) -> bool:
    """True iff no edge of g is monochromatic under `coloring`.

    Raises PaletteViolation if some vertex uses a color outside
    {1..palette_size}; that is an error, not mere improperness.
    """
    t = coloring.palette_size
    cols = coloring.colors
    if len(cols) != g.n:
        raise ValueError(f"coloring covers {len(cols)} vertices, graph has {g.n}")
    for v, c in enumerate(cols):
        if c > t:
            raise PaletteViolation(v, c, t)
    for u in range(g.n):
        cu = cols[u]
        for v in g.adj[u]:
            if v > u and cols[v] == cu:
                return False
    return True


@dataclass(frozen=True)
class EliminationOrdering:
    """A vertex ordering together with its back-neighborhoods.

    order[i] is the i-th vertex; rank is the inverse permutation.  The
    back-neighborhood of v collects the neighbors of v that appear earlier
    in the ordering.  `perfect` is True only when the ordering was
    certified: every back-neighborhood is a clique.
    """

    order: tuple[int, ...]
    rank: tuple[int, ...]
    back_nbrs: tuple[tuple[int, ...], ...]
    perfect: bool = field(default=False, compare=False)

    @classmethod
    def from_order(cls, g: Graph, order: Sequence[int]) -> "EliminationOrdering":
        order = tuple(order)
        if sorted(order) != list(range(g.n)):
            raise ValueError("order must be a permutation of 0..n-1")
        rank = [0] * g.n
        for i, v in enumerate(order):
            rank[v] = i
        back = []
        for v in range(g.n):
            rv = rank[v]
            back.append(tuple(sorted(u for u in g.adj[v] if rank[u] < rv)))
        return cls(order, tuple(rank), tuple(back))

    @property
    def max_back_degree(self) -> int:
        return max((len(b) for b in self.back_nbrs), default=0)


def certify_perfect(g: Graph, ordering: EliminationOrdering) -> EliminationOrdering:
    """Check that every back-neighborhood is a clique.

    Returns a copy with perfect=True on success; raises NotChordal with a
    witness vertex and missing edge otherwise.
    """
    for v in range(g.n):
        b = ordering.back_nbrs[v]
        for i in range(len(b)):
            for j in range(i + 1, len(b)):
                if b[j] not in g.adj[b[i]]:
                    raise NotChordal(v, (b[i], b[j]))
    return EliminationOrdering(ordering.order, ordering.rank, ordering.back_nbrs, True)


def mcs_peo(g: Graph) -> EliminationOrdering:
    """Perfect elimination ordering via maximum cardinality search.

    Vertices are picked one by one, always a vertex with the most already
    picked neighbors (ties broken by smallest id).  On a chordal graph the
    resulting order has clique back-neighborhoods, which is certified
    before returning; when certification fails the graph is not chordal
    and NotChordal is raised.
    """
    n = g.n
    weight = [0] * n
    picked = [False] * n
    order = []
    for _ in range(n):
        best = -1
        for v in range(n):
            if not picked[v] and (best < 0 or weight[v] > weight[best]):
                best = v
        picked[best] = True
        order.append(best)
        for u in g.adj[best]:
            if not picked[u]:
                weight[u] += 1
    return certify_perfect(g, EliminationOrdering.from_order(g, order))


def degeneracy(g: Graph) -> tuple[int, EliminationOrdering]:
    """Exact degeneracy and a witnessing ordering.

    Vertices are peeled in min-degree order (smallest id on ties); the
    ordering returned is the reverse of the peeling, so every vertex has
    at most d earlier neighbors and some vertex has exactly d.
    """
    n = g.n
    deg = [g.degree(v) for v in range(n)]
    removed = [False] * n
    heap = [(deg[v], v) for v in range(n)]
    heapq.heapify(heap)
    peel = []
    d = 0
    while heap:
        dv, v = heapq.heappop(heap)
        if removed[v] or dv != deg[v]:
            continue
        removed[v] = True
        peel.append(v)
        d = max(d, dv)
        for u in g.adj[v]:
            if not removed[u]:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
    order = list(reversed(peel))
    ordering = EliminationOrdering.from_order(g, order)
    assert ordering.max_back_degree == d
    return d, ordering


def greedy_color(g: Graph, ordering: EliminationOrdering, palette: int) -> Coloring:
    """Color along the ordering, always the smallest color free of earlier
    neighbors.  Raises PaletteExhausted when no color in 1..palette is free.
    """
    colors = [0] * g.n
    for v in ordering.order:
        used = {colors[u] for u in ordering.back_nbrs[v]}
        c = 1
        while c in used:
            c += 1
        if c > palette:
            raise PaletteExhausted(v, palette)
        colors[v] = c
    return Coloring(colors, palette)
