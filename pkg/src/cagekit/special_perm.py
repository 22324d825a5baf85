"""Special permutations and a constructive Hamiltonian-cycle finder.

A permutation of a graph's vertex set is *special* when it maps the two
endpoints of every edge onto a nonadjacent pair. Explicit constructions
cover cycles (length >= 5), paths (>= 4 vertices), a cycle plus a 2- or
3-vertex path, and disjoint unions of paths and cycles; a bounded
exhaustive search closes the one case the constructions leave open
(a 5-cycle joined with a short path).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .cycle_engine import Cycle
from .errors import (
    ConstructionGapError,
    DiracViolatedError,
    DomainMismatchError,
    InternalStallError,
    OverlappingDomainsError,
    PreconditionError,
    TooShortError,
    UnionSpecError,
)
from .generators import cycle_graph, path_graph
from .graph_core import Graph, build_graph, complement, disjoint_union

VIA_CONSTRUCTION = "construction"
VIA_SEARCH = "search"


@dataclass(frozen=True)
class Permutation:
    """A bijection on a finite set of vertex ids.

    ``via`` records whether the object came from an explicit construction
    or from exhaustive search; it does not affect equality.
    """

    mapping: dict[int, int]
    via: str = field(default=VIA_CONSTRUCTION, compare=False)

    def __post_init__(self):
        if set(self.mapping.values()) != set(self.mapping):
            raise ValueError("mapping must be a bijection onto its own domain")

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(self.mapping)

    def __call__(self, v: int) -> int:
        return self.mapping[v]

    def items(self) -> list[tuple[int, int]]:
        return sorted(self.mapping.items())

    def one_based(self) -> dict[int, int]:
        """The same map with 1-based labels, for display."""
        return {v + 1: w + 1 for v, w in self.items()}

    def __repr__(self):
        inner = ", ".join(f"{v}->{w}" for v, w in self.items())
        return f"Permutation({{{inner}}})"


def identity_permutation(domain: Iterable[int]) -> Permutation:
    return Permutation({v: v for v in domain})


def compose_disjoint(perms: Sequence[Permutation]) -> Permutation:
    """Union of permutations with pairwise disjoint domains."""
    mapping: dict[int, int] = {}
    via = VIA_CONSTRUCTION
    for p in perms:
        overlap = mapping.keys() & p.mapping.keys()
        if overlap:
            raise OverlappingDomainsError(f"domains share vertices {sorted(overlap)}")
        mapping.update(p.mapping)
        if p.via == VIA_SEARCH:
            via = VIA_SEARCH
    return Permutation(mapping, via=via)


@dataclass(frozen=True)
class UnionSpec:
    """Shape of a disjoint union: path orders and cycle lengths.

    Paths need at least 2 vertices and cycles at least 5; a lone path with
    no cycles needs at least 4 vertices, because shorter ones admit no
    special permutation.
    """

    paths: tuple[int, ...] = ()
    cycles: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "paths", tuple(self.paths))
        object.__setattr__(self, "cycles", tuple(self.cycles))
        if any(p < 2 for p in self.paths):
            raise UnionSpecError("every path needs at least 2 vertices")
        if any(c < 5 for c in self.cycles):
            raise UnionSpecError("every cycle needs length at least 5")
        if not self.cycles and len(self.paths) == 1 and self.paths[0] < 4:
            raise UnionSpecError(
                "a lone path with no cycles needs at least 4 vertices"
            )

    @property
    def order(self) -> int:
        return sum(self.paths) + sum(self.cycles)


def union_graph(spec: UnionSpec) -> Graph:
    """The disjoint union described by spec: paths first, then cycles,
    each part on consecutive vertex ids."""
    edges: list[tuple[int, int]] = []
    offset = 0
    for p in spec.paths:
        edges.extend((offset + i, offset + i + 1) for i in range(p - 1))
        offset += p
    for c in spec.cycles:
        edges.extend((offset + i, offset + (i + 1) % c) for i in range(c))
        offset += c
    return build_graph(offset, edges)


def cycle_plus_path_graph(g_len: int, n: int) -> Graph:
    """Cycle on 0..g_len-1 joined disjointly with a path on the next n ids."""
    return disjoint_union(cycle_graph(g_len), path_graph(n))


def is_special_permutation(g: Graph, p: Permutation) -> bool:
    """True iff p maps every edge's endpoints onto a nonadjacent pair."""
    if p.domain != frozenset(range(g.n)):
        raise DomainMismatchError(
            f"permutation domain has {len(p.domain)} vertices, graph has {g.n}"
        )
    return all(not g.has_edge(p(x), p(y)) for x, y in g.edges())


def hamilton_cycle_dirac(g: Graph) -> Cycle:
    """Hamiltonian cycle by rotation-extension, smallest-id tie-breaking.

    Grows a path greedily from vertex 0, closes a maximal path into a cycle
    through a rotation, then absorbs an off-cycle neighbor and repeats.
    Completion is guaranteed when minimum degree >= n/2; sparser inputs are
    still attempted and may succeed, but a stalled search then raises
    DiracViolatedError. A stall despite the degree bound is a defect and
    raises InternalStallError.
    """
    n = g.n
    if n < 3:
        raise DiracViolatedError("a Hamiltonian cycle needs at least 3 vertices")
    dirac_ok = 2 * g.min_degree() >= n

    def stall(reason: str) -> Exception:
        if dirac_ok:
            return InternalStallError(reason)
        return DiracViolatedError(f"min degree below n/2 and {reason}")

    adj = g.adj
    path = [0]
    on_path = [False] * n
    on_path[0] = True
    while True:
        grew = True
        while grew:
            grew = False
            for end, insert in ((path[-1], path.append), (path[0], lambda v: path.insert(0, v))):
                cands = sorted(w for w in adj[end] if not on_path[w])
                if cands:
                    insert(cands[0])
                    on_path[cands[0]] = True
                    grew = True
                    break
        # maximal path: both endpoints' neighbors lie on it
        if g.has_edge(path[0], path[-1]):
            cyc = list(path)
        else:
            cyc = None
            for i in range(len(path) - 1):
                if g.has_edge(path[0], path[i + 1]) and g.has_edge(path[-1], path[i]):
                    cyc = path[: i + 1] + path[: i : -1]
                    break
            if cyc is None:
                raise stall("no rotation closes the current maximal path")
        if len(cyc) == n:
            return Cycle.from_vertices(cyc)
        cyc_set = set(cyc)
        absorb = None
        for u in range(n):
            if u in cyc_set:
                continue
            hooks = sorted(w for w in adj[u] if w in cyc_set)
            if hooks:
                absorb = (u, hooks[0])
                break
        if absorb is None:
            raise stall("the cycle cannot reach the remaining vertices")
        u, hook = absorb
        j = cyc.index(hook)
        path = [u] + cyc[j:] + cyc[:j]
        on_path = [False] * n
        for v in path:
            on_path[v] = True


# Special permutation of the 5-cycle 0-1-2-3-4: position i of the cycle is
# sent to position i of the complement's Hamiltonian cycle 0-2-4-1-3.
_PENTAGON_ORDER = (0, 2, 4, 1, 3)


def _complement_cycle_order(g_len: int) -> tuple[int, ...]:
    """Vertex order of a Hamiltonian cycle in the complement of the g_len-cycle."""
    if g_len == 5:
        return _PENTAGON_ORDER
    return hamilton_cycle_dirac(complement(cycle_graph(g_len))).vertices


def _cycle_perm_from_order(g_len: int, order: Sequence[int]) -> Permutation:
    return Permutation({i: order[i] for i in range(g_len)})


def special_perm_cycle(g_len: int) -> Permutation:
    """Special permutation of the cycle 0-1-...-(g_len-1), g_len >= 5.

    Walks the cycle and a Hamiltonian cycle of its complement in lockstep:
    consecutive vertices map to consecutive complement-cycle vertices, so
    every edge image is a complement edge. Lengths 3 and 4 admit none (the
    complement of a 4-cycle is a perfect matching).
    """
    if g_len < 5:
        raise TooShortError(f"no special permutation of a {g_len}-cycle exists")
    return _cycle_perm_from_order(g_len, _complement_cycle_order(g_len))


def _special_perm_cycle_fixing(g_len: int, fixed: int) -> Permutation:
    """Like special_perm_cycle but rotated so that ``fixed`` maps to itself.

    Any rotation of the complement cycle's order stays special; pinning a
    fixed point lets the cycle-plus-path construction swap that vertex out
    without breaking bijectivity.
    """
    order = list(_complement_cycle_order(g_len))
    shift = (order.index(fixed) - fixed) % g_len
    order = order[shift:] + order[:shift]
    return _cycle_perm_from_order(g_len, order)


def special_perm_path(n: int) -> Permutation:
    """Special permutation of the path 0-1-...-(n-1), n >= 4.

    For n > 4 the path is closed into a cycle by the extra edge (n-1, 0);
    a special permutation of that cycle is special for the path too, since
    the path's edges are a subset of the cycle's. Paths on 2 or 3 vertices
    admit none.
    """
    if n < 4:
        raise TooShortError(f"no special permutation of a {n}-vertex path exists")
    if n == 4:
        return Permutation({0: 2, 2: 3, 3: 1, 1: 0})
    return Permutation(dict(special_perm_cycle(n).mapping))


def special_perm_cycle_plus_path(g_len: int, n: int) -> Permutation:
    """Special permutation of a cycle (length > 5) plus a 2- or 3-vertex path.

    Layout: cycle on 0..g_len-1, path on g_len..g_len+n-1. The last cycle
    vertex swaps with the path's y1 (n=2) or middle vertex y2 (n=3); the
    remaining path vertices stay fixed and the rest of the cycle follows a
    special permutation pinned to fix the swapped vertex.
    """
    if g_len <= 5 or n not in (2, 3):
        raise PreconditionError(
            "construction needs cycle length > 5 and a 2- or 3-vertex path"
        )
    x_last = g_len - 1
    mapping = dict(_special_perm_cycle_fixing(g_len, x_last).mapping)
    if n == 2:
        y1, y2 = g_len, g_len + 1
        mapping[x_last] = y1
        mapping[y1] = x_last
        mapping[y2] = y2
    else:
        y1, y2, y3 = g_len, g_len + 1, g_len + 2
        mapping[x_last] = y2
        mapping[y2] = x_last
        mapping[y1] = y1
        mapping[y3] = y3
    return Permutation(mapping)


def search_special_permutation(g: Graph) -> Permutation | None:
    """Exhaustive backtracking search for a special permutation.

    Deterministic (images tried in increasing order) and complete: returns
    None only when no special permutation exists. Factorial in the worst
    case, so intended for small graphs.
    """
    n = g.n
    adj = g.adj
    image = [-1] * n
    used = [False] * n

    def place(v: int) -> bool:
        if v == n:
            return True
        for t in range(n):
            if used[t]:
                continue
            if any(image[u] >= 0 and t in adj[image[u]] for u in adj[v]):
                continue
            image[v] = t
            used[t] = True
            if place(v + 1):
                return True
            image[v] = -1
            used[t] = False
        return False

    if place(0):
        return Permutation({v: image[v] for v in range(n)}, via=VIA_SEARCH)
    return None


def special_perm_union(spec: UnionSpec) -> Permutation:
    """Special permutation of the union graph described by spec.

    Paths are concatenated into one virtual path when they carry 4 or more
    vertices in total; a lone short path folds into a cycle instead (via
    the cycle-plus-path construction for cycle length > 5, or exhaustive
    search when only 5-cycles are available). Each remaining cycle gets its
    own cycle permutation and everything composes over disjoint domains.
    """
    total_path = sum(spec.paths)
    path_region = total_path  # slots 0..total_path-1 hold the paths in order
    cycle_starts = []
    offset = path_region
    for c in spec.cycles:
        cycle_starts.append(offset)
        offset += c

    def tau(j: int) -> Permutation:
        base = special_perm_cycle(spec.cycles[j])
        start = cycle_starts[j]
        return Permutation({start + v: start + w for v, w in base.mapping.items()})

    if not spec.paths:
        return compose_disjoint([tau(j) for j in range(len(spec.cycles))])

    if total_path >= 4:
        sigma1 = special_perm_path(total_path)
        return compose_disjoint(
            [sigma1] + [tau(j) for j in range(len(spec.cycles))]
        )

    # lone 2- or 3-vertex path: fold it into one cycle
    plen = spec.paths[0]
    pick = next((j for j, c in enumerate(spec.cycles) if c > 5), None)
    if pick is not None:
        fold_len = spec.cycles[pick]
        folded = special_perm_cycle_plus_path(fold_len, plen)
    else:
        pick = 0
        fold_len = spec.cycles[0]
        folded = search_special_permutation(cycle_plus_path_graph(fold_len, plen))
        if folded is None:
            raise ConstructionGapError(
                f"no special permutation found for a {fold_len}-cycle plus "
                f"{plen}-vertex path"
            )
    # conjugate from the fold's layout (cycle then path) onto the union slots
    relocate = {i: cycle_starts[pick] + i for i in range(fold_len)}
    relocate.update({fold_len + i: i for i in range(plen)})
    sigma1 = Permutation(
        {relocate[v]: relocate[w] for v, w in folded.mapping.items()},
        via=folded.via,
    )
    rest = [tau(j) for j in range(len(spec.cycles)) if j != pick]
    return compose_disjoint([sigma1] + rest)
