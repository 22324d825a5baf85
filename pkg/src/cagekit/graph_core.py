"""Immutable simple-graph primitives.

Vertices are ids 0..n-1 and adjacency is a tuple of frozensets: no loops,
no parallel edges, no mutation after construction. Operations are pure
functions; the ones that relabel vertices also return the old-to-new map.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

from .errors import EmptyGraphError, OutOfRangeError, SelfLoopError

VertexSet = frozenset[int]


class Distance:
    """A hop count: either a nonnegative integer or unreachable.

    Unreachable absorbs addition and compares greater than every finite
    distance, so min/max and threshold tests need no special casing.
    Comparisons and equality also accept plain ints.
    """

    __slots__ = ("_hops",)

    def __init__(self, hops: int | None):
        if hops is not None and (not isinstance(hops, int) or isinstance(hops, bool) or hops < 0):
            raise ValueError(f"hops must be a nonnegative int or None, got {hops!r}")
        self._hops = hops

    @property
    def is_unreachable(self) -> bool:
        return self._hops is None

    @property
    def hops(self) -> int:
        if self._hops is None:
            raise ValueError("unreachable distance has no finite hop count")
        return self._hops

    def _key(self) -> float:
        return float("inf") if self._hops is None else float(self._hops)

    @staticmethod
    def _other_key(other) -> float | None:
        if isinstance(other, Distance):
            return other._key()
        if isinstance(other, int) and not isinstance(other, bool):
            return float(other)
        return None

    def __eq__(self, other):
        key = Distance._other_key(other)
        return NotImplemented if key is None else self._key() == key

    def __lt__(self, other):
        key = Distance._other_key(other)
        return NotImplemented if key is None else self._key() < key

    def __le__(self, other):
        key = Distance._other_key(other)
        return NotImplemented if key is None else self._key() <= key

    def __gt__(self, other):
        key = Distance._other_key(other)
        return NotImplemented if key is None else self._key() > key

    def __ge__(self, other):
        key = Distance._other_key(other)
        return NotImplemented if key is None else self._key() >= key

    def __add__(self, other):
        if isinstance(other, Distance):
            hops = other._hops
        elif isinstance(other, int) and not isinstance(other, bool):
            if other < 0:
                raise ValueError("cannot add a negative offset to a distance")
            hops = other
        else:
            return NotImplemented
        if self._hops is None or hops is None:
            return UNREACHABLE
        return Distance(self._hops + hops)

    __radd__ = __add__

    def __int__(self) -> int:
        return self.hops

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return "UNREACHABLE" if self._hops is None else f"Distance({self._hops})"


UNREACHABLE = Distance(None)


class Graph:
    """Undirected simple graph with value semantics.

    Use :func:`build_graph` to construct one from an edge list; the raw
    constructor trusts its arguments.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: tuple[VertexSet, ...]):
        self.n = n
        self.adj = adj

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adj)

    def min_degree(self) -> int:
        if self.n == 0:
            raise EmptyGraphError("minimum degree of an empty graph")
        return min(len(nbrs) for nbrs in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbors(self, v: int) -> VertexSet:
        return self.adj[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in sorted(self.adj[u]):
                if u < v:
                    yield (u, v)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def vertex_set(self) -> VertexSet:
        return frozenset(range(self.n))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"


def _check_vertex(n: int, v: int) -> None:
    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
        raise OutOfRangeError(f"vertex {v!r} outside 0..{n - 1}")


def _check_subset(g: Graph, s: Iterable[int]) -> frozenset[int]:
    s = frozenset(s)
    for v in s:
        _check_vertex(g.n, v)
    return s


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph on vertices 0..n-1 from unordered id pairs.

    Duplicate edges are silently merged. Raises OutOfRangeError for an
    endpoint >= n and SelfLoopError for a pair (v, v).
    """
    if n < 0:
        raise OutOfRangeError("vertex count must be nonnegative")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        _check_vertex(n, u)
        _check_vertex(n, v)
        if u == v:
            raise SelfLoopError(f"edge ({u}, {v})")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(s) for s in adj))


def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edges are exactly g's non-edges."""
    full = frozenset(range(g.n))
    adj = tuple(full - g.adj[v] - {v} for v in range(g.n))
    return Graph(g.n, adj)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """Disjoint union; b's vertex i becomes a.n + i in the result."""
    shifted = tuple(frozenset(w + a.n for w in b.adj[v]) for v in range(b.n))
    return Graph(a.n + b.n, a.adj + shifted)


def _bfs_dist(g: Graph, source: int) -> list[int]:
    """Distances from source; -1 marks unreachable vertices."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(g: Graph, u: int, v: int) -> Distance:
    """Shortest-path distance between u and v, UNREACHABLE across components."""
    _check_vertex(g.n, u)
    _check_vertex(g.n, v)
    if u == v:
        return Distance(0)
    dist = [-1] * g.n
    dist[u] = 0
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for w in g.adj[x]:
            if dist[w] < 0:
                if w == v:
                    return Distance(dist[x] + 1)
                dist[w] = dist[x] + 1
                queue.append(w)
    return UNREACHABLE


def diameter(g: Graph) -> Distance:
    """Maximum pairwise distance; UNREACHABLE iff g is disconnected."""
    if g.n == 0:
        raise EmptyGraphError("diameter of the empty graph")
    best = 0
    for v in range(g.n):
        dist = _bfs_dist(g, v)
        if any(d < 0 for d in dist):
            return UNREACHABLE
        best = max(best, max(dist))
    return Distance(best)


def components(g: Graph) -> list[VertexSet]:
    """Connected components as disjoint vertex sets, ordered by smallest member."""
    seen = [False] * g.n
    out: list[VertexSet] = []
    for seed in range(g.n):
        if seen[seed]:
            continue
        seen[seed] = True
        comp = [seed]
        queue = deque([seed])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(frozenset(comp))
    return out


def is_k_regular(g: Graph, k: int) -> bool:
    """True iff every vertex has degree exactly k (vacuously true when n=0)."""
    return all(len(nbrs) == k for nbrs in g.adj)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by s, plus the old-to-new id map.

    New ids follow increasing old-id order.
    """
    s = _check_subset(g, s)
    order = sorted(s)
    relabel = {old: new for new, old in enumerate(order)}
    adj = tuple(frozenset(relabel[w] for w in g.adj[old] if w in s) for old in order)
    return Graph(len(order), adj), relabel


def delete_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Graph with s removed (the subgraph induced by the remaining vertices)."""
    s = _check_subset(g, s)
    return induced_subgraph(g, frozenset(range(g.n)) - s)


def neighborhood_in(g: Graph, s: Iterable[int], h: Iterable[int]) -> VertexSet:
    """Vertices of h adjacent in g to at least one vertex of s."""
    s = _check_subset(g, s)
    h = _check_subset(g, h)
    return frozenset(v for v in h if g.adj[v] & s)
