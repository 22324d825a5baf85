"""Shortest cycles: girth, exhaustive girth-cycle enumeration, and the
nonseparating predicate.

Cycles are stored in a canonical form so that rotations and reflections of
the same vertex cycle compare equal and enumeration output is reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import AcyclicGraphError, NotACycleOfGraphError, NotOnCycleError
from .graph_core import UNREACHABLE, Distance, Graph, components, delete_vertices


def _canonical(seq: Sequence[int]) -> tuple[int, ...]:
    verts = tuple(seq)
    if len(verts) < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    if len(set(verts)) != len(verts):
        raise ValueError("cycle vertices must be distinct")
    i = verts.index(min(verts))
    rot = verts[i:] + verts[:i]
    if rot[1] > rot[-1]:
        rot = (rot[0],) + tuple(reversed(rot[1:]))
    return rot


@dataclass(frozen=True, order=True)
class Cycle:
    """A simple cycle as a canonical vertex sequence.

    Canonical form: rotated so the smallest id comes first, then of the two
    traversal directions the one with the smaller second vertex is kept.
    """

    vertices: tuple[int, ...]

    def __post_init__(self):
        if self.vertices != _canonical(self.vertices):
            raise ValueError("not in canonical form; use Cycle.from_vertices")

    @classmethod
    def from_vertices(cls, seq: Sequence[int]) -> "Cycle":
        return cls(_canonical(seq))

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def length(self) -> int:
        return len(self.vertices)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def edges(self) -> Iterator[tuple[int, int]]:
        m = len(self.vertices)
        for i in range(m):
            u, v = self.vertices[i], self.vertices[(i + 1) % m]
            yield (u, v) if u < v else (v, u)

    def is_cycle_of(self, g: Graph) -> bool:
        if any(not 0 <= v < g.n for v in self.vertices):
            return False
        return all(g.has_edge(u, v) for u, v in self.edges())


def girth(g: Graph) -> Distance:
    """Length of a shortest cycle; UNREACHABLE for forests.

    One breadth-first search per vertex: every non-tree edge met at depth d
    witnesses a cycle through the root of length at most 2d+1, and a
    shortest cycle is always seen from each of its own vertices.
    """
    best: int | None = None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                break
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    cand = dist[u] + dist[w] + 1
                    if best is None or cand < best:
                        best = cand
    return UNREACHABLE if best is None else Distance(best)


def _anchored_bfs(g: Graph, anchor: int) -> list[int]:
    """Distances from anchor in the subgraph of vertices >= anchor (-1 if cut off)."""
    dist = [-1] * g.n
    dist[anchor] = 0
    queue = deque([anchor])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w >= anchor and dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def enumerate_g_cycles(g: Graph) -> list[Cycle]:
    """Every cycle whose length equals the girth, canonical and sorted.

    Depth-first search from each anchor vertex (the cycle's minimum id),
    pruned by breadth-first distance back to the anchor; rotations and
    reflections collapse via canonical form.
    """
    gir = girth(g)
    if gir.is_unreachable:
        raise AcyclicGraphError("graph has no cycle")
    target = gir.hops
    found: set[Cycle] = set()
    adj = g.adj
    for anchor in range(g.n):
        if len(adj[anchor]) < 2:
            continue
        dist = _anchored_bfs(g, anchor)
        path = [anchor]
        on_path = [False] * g.n
        on_path[anchor] = True

        def extend(u: int, depth: int) -> None:
            if depth == target - 1:
                if anchor in adj[u]:
                    found.add(Cycle.from_vertices(path))
                return
            for w in sorted(adj[u]):
                if w <= anchor or on_path[w]:
                    continue
                if dist[w] < 0 or depth + 1 + dist[w] > target:
                    continue
                path.append(w)
                on_path[w] = True
                extend(w, depth + 1)
                path.pop()
                on_path[w] = False

        extend(anchor, 0)
    return sorted(found)


def _require_cycle_of(g: Graph, c: Cycle) -> None:
    if not c.is_cycle_of(g):
        raise NotACycleOfGraphError(f"{c.vertices} is not a cycle of {g!r}")


def is_nonseparating(g: Graph, c: Cycle) -> bool:
    """True iff removing the cycle's vertices leaves at most one component.

    An empty remainder counts as nonseparating.
    """
    _require_cycle_of(g, c)
    remainder, _ = delete_vertices(g, c.vertex_set())
    return len(components(remainder)) <= 1


def cycle_distance(c: Cycle, u: int, v: int) -> Distance:
    """Distance between u and v along the cycle (shorter arc)."""
    try:
        i = c.vertices.index(u)
        j = c.vertices.index(v)
    except ValueError:
        missing = u if u not in c.vertices else v
        raise NotOnCycleError(f"vertex {missing} is not on the cycle") from None
    m = len(c.vertices)
    step = abs(i - j)
    return Distance(min(step, m - step))
