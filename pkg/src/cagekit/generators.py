"""Constructions for standard graph families and the cataloged cages.

The cage constructions here double as independent cross-checks for the
embedded catalog data: tests rebuild each graph from first principles and
compare against the stored serialization.
"""

from __future__ import annotations

from itertools import combinations

from .graph_core import Graph, build_graph


def path_graph(n: int) -> Graph:
    """Path on vertices 0..n-1 in order."""
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    """Cycle 0-1-...-(n-1)-0; needs n >= 3."""
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def petersen() -> Graph:
    """Petersen graph, outer cycle 0..4, inner pentagram 5..9, spokes i to i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return build_graph(10, edges)


def kneser_graph(n: int, k: int) -> Graph:
    """Kneser graph: k-subsets of an n-set, adjacent when disjoint."""
    subsets = sorted(combinations(range(n), k))
    edges = [
        (i, j)
        for i, j in combinations(range(len(subsets)), 2)
        if not set(subsets[i]) & set(subsets[j])
    ]
    return build_graph(len(subsets), edges)


def lcf_graph(pattern: list[int], repeats: int) -> Graph:
    """Cubic graph from LCF notation: a Hamiltonian cycle on n = len(pattern) *
    repeats vertices plus the chord i to i + pattern[i mod len(pattern)]."""
    n = len(pattern) * repeats
    edges = [(i, (i + 1) % n) for i in range(n)]
    for i in range(n):
        edges.append((i, (i + pattern[i % len(pattern)]) % n))
    return build_graph(n, edges)


def heawood() -> Graph:
    """Heawood graph (14 vertices, cubic, girth 6)."""
    return lcf_graph([5, -5], 7)


def mcgee() -> Graph:
    """McGee graph (24 vertices, cubic, girth 7)."""
    return lcf_graph([12, 7, -7], 8)


def tutte_coxeter() -> Graph:
    """Tutte-Coxeter graph (30 vertices, cubic, girth 8)."""
    return lcf_graph([-13, -9, 7, -7, 9, 13], 5)


def fano_plane_incidence() -> Graph:
    """Point-line incidence graph of the 7-point projective plane.

    Points are 0..6, lines {i, i+1, i+3} mod 7 are 7..13. Isomorphic to the
    Heawood graph; used as an independent structural cross-check.
    """
    edges = []
    for j in range(7):
        for p in (j, (j + 1) % 7, (j + 3) % 7):
            edges.append((p, 7 + j))
    return build_graph(14, edges)


def pg23_incidence() -> Graph:
    """Point-line incidence graph of the 13-point projective plane.

    Built from the perfect difference set {0, 1, 3, 9} mod 13: point p lies
    on line j iff p - j is in the set. 26 vertices, 4-regular, girth 6.
    """
    diffs = (0, 1, 3, 9)
    edges = []
    for j in range(13):
        for d in diffs:
            edges.append(((d + j) % 13, 13 + j))
    return build_graph(26, edges)


def hoffman_singleton() -> Graph:
    """Hoffman-Singleton graph (50 vertices, 7-regular, girth 5).

    Five pentagons P_h and five pentagrams Q_i; vertex j of P_h joins
    vertex (h*i + j) mod 5 of Q_i.
    """

    def pent(h: int, j: int) -> int:
        return 5 * h + j

    def star(i: int, j: int) -> int:
        return 25 + 5 * i + j

    edges = []
    for h in range(5):
        for j in range(5):
            edges.append((pent(h, j), pent(h, (j + 1) % 5)))
            edges.append((star(h, j), star(h, (j + 2) % 5)))
    for h in range(5):
        for i in range(5):
            for j in range(5):
                edges.append((pent(h, j), star(i, (h * i + j) % 5)))
    return build_graph(50, edges)


# The unique 4-regular girth-5 graph on 19 vertices, found by exhaustive
# backtracking over girth-constrained completions of the canonical
# breadth-first tree; regularity, girth, and order are re-verified in tests.
_ROBERTSON_EDGES: tuple[tuple[int, int], ...] = (
    (0, 1), (0, 2), (0, 3), (0, 4),
    (1, 5), (1, 6), (1, 7),
    (2, 8), (2, 9), (2, 10),
    (3, 11), (3, 12), (3, 13),
    (4, 14), (4, 15), (4, 16),
    (5, 8), (5, 11), (5, 14),
    (6, 9), (6, 12), (6, 15),
    (7, 10), (7, 13), (7, 16),
    (8, 12), (8, 16),
    (9, 13), (9, 17),
    (10, 15), (10, 18),
    (11, 15), (11, 17),
    (12, 18),
    (13, 14),
    (14, 18),
    (16, 17),
    (17, 18),
)


def robertson() -> Graph:
    """Robertson graph (19 vertices, 4-regular, girth 5)."""
    return build_graph(19, _ROBERTSON_EDGES)
