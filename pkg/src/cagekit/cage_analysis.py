"""Nonseparating-cycle verification on regular graphs of known girth.

For every girth-length cycle C the pipeline removes V(C), studies the
smallest remaining component H, maps each vertex of N_H(C) to its neighbor
on C, finds *bad pairs* (vertices of N_H(C) at the minimum possible
distance (g+1)/2 - 2 inside H, whose attachments are then antipodal on C),
assembles the bad-pair graph, and builds a permutation of N_H(C) that maps
no bad pair onto a bad pair. On genuine cages every such cycle leaves a
connected remainder; separating behavior is exercised by synthetic
fixtures.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import ceil
from typing import Iterable

from .cycle_engine import Cycle, cycle_distance, enumerate_g_cycles, girth
from .errors import (
    ConstructionGapError,
    DegreeHypothesisError,
    DegreeViolationError,
    EvenGirthError,
    EvenLengthError,
    GirthMismatchError,
    NoWitnessError,
    NotAGCycleError,
    NotRegularError,
    UnionSpecError,
)
from .graph_core import Graph, VertexSet, build_graph, induced_subgraph
from .special_perm import (
    Permutation,
    UnionSpec,
    identity_permutation,
    search_special_permutation,
    special_perm_union,
)


def antipodal_pairs(c: Cycle) -> list[tuple[int, int]]:
    """All vertex pairs at distance (m-1)/2 along an odd cycle of length m.

    Each vertex has exactly two such partners, so there are m pairs.
    """
    m = len(c)
    if m % 2 == 0:
        raise EvenLengthError("antipodal pairs need an odd cycle")
    half = (m - 1) // 2
    verts = c.vertices
    pairs = set()
    for i in range(m):
        for j in (i + half, i + half + 1):
            u, v = verts[i], verts[j % m]
            pairs.add((u, v) if u < v else (v, u))
    return sorted(pairs)


def _components_within(g: Graph, allowed: VertexSet) -> list[VertexSet]:
    """Connected components of the subgraph induced by ``allowed``,
    in original vertex ids, ordered by smallest member."""
    seen: set[int] = set()
    out: list[VertexSet] = []
    for seed in sorted(allowed):
        if seed in seen:
            continue
        seen.add(seed)
        comp = [seed]
        queue = deque([seed])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        out.append(frozenset(comp))
    return out


def _distances_within(g: Graph, allowed: VertexSet, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w in allowed and w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


@dataclass(frozen=True)
class RemovalReport:
    """Structure of G - V(C) around one girth cycle C.

    ``attachments`` maps each component's boundary vertex w to its neighbor
    on C (the smallest one if several; multiplicities land in
    ``multi_attached``). ``h_distances`` holds pairwise distances inside the
    selected smallest component H between its attached vertices.
    ``attachment_ok`` is the unique-neighbor plus distance-floor condition:
    d_H(x, y) >= g - 2 - d_C(x', y') for all attached x, y in H.
    """

    cycle: Cycle
    components: tuple[VertexSet, ...]
    smallest_index: int | None
    attachments: tuple[dict[int, int], ...]
    multi_attached: tuple[dict[int, tuple[int, ...]], ...]
    h_distances: dict[tuple[int, int], int]
    attachment_ok: bool
    findings: tuple[str, ...]

    @property
    def attachment(self) -> dict[int, int]:
        if self.smallest_index is None:
            return {}
        return self.attachments[self.smallest_index]

    @property
    def h_vertices(self) -> VertexSet:
        if self.smallest_index is None:
            return frozenset()
        return self.components[self.smallest_index]

    @property
    def nonseparating(self) -> bool:
        return len(self.components) <= 1


def analyze_removal(g: Graph, c: Cycle, girth_g: int) -> RemovalReport:
    """Remove V(C) and report the component/attachment structure.

    The selected component H minimizes order, ties broken by smallest
    member. Violations (a boundary vertex with two neighbors on C while the
    cycle is short enough to forbid that, or a distance below the floor)
    are recorded as findings, never raised.
    """
    if len(c) != girth_g or not c.is_cycle_of(g):
        raise NotAGCycleError(
            f"expected a girth-{girth_g} cycle of the graph, got {c.vertices}"
        )
    cyc_set = c.vertex_set()
    rest = frozenset(range(g.n)) - cyc_set
    comps = _components_within(g, rest)
    findings: list[str] = []
    # the cycle's own diameter; unique attachments are forced when it is
    # below g - 2
    unique_forced = girth_g // 2 < girth_g - 2
    attachments: list[dict[int, int]] = []
    multi: list[dict[int, tuple[int, ...]]] = []
    ok = True
    for comp in comps:
        att: dict[int, int] = {}
        mul: dict[int, tuple[int, ...]] = {}
        for w in sorted(comp):
            on_c = sorted(g.adj[w] & cyc_set)
            if not on_c:
                continue
            att[w] = on_c[0]
            if len(on_c) > 1:
                mul[w] = tuple(on_c)
                if unique_forced:
                    ok = False
                    findings.append(
                        f"vertex {w} has {len(on_c)} neighbors on the cycle"
                    )
        attachments.append(att)
        multi.append(mul)

    smallest = None
    if comps:
        smallest = min(
            range(len(comps)), key=lambda i: (len(comps[i]), min(comps[i]))
        )

    h_distances: dict[tuple[int, int], int] = {}
    if smallest is not None:
        h = comps[smallest]
        boundary = sorted(attachments[smallest])
        for idx, x in enumerate(boundary):
            dist = _distances_within(g, h, x)
            for y in boundary[idx + 1 :]:
                d = dist[y]  # same component, always reachable
                h_distances[(x, y)] = d
                floor = girth_g - 2 - cycle_distance(
                    c, attachments[smallest][x], attachments[smallest][y]
                ).hops
                if d < floor:
                    ok = False
                    findings.append(
                        f"d_H({x},{y}) = {d} below floor {floor}"
                    )
    return RemovalReport(
        cycle=c,
        components=tuple(comps),
        smallest_index=smallest,
        attachments=tuple(attachments),
        multi_attached=tuple(multi),
        h_distances=h_distances,
        attachment_ok=ok,
        findings=tuple(findings),
    )


@dataclass(frozen=True)
class BadPairGraph:
    """Auxiliary graph on the bad-pair vertices of one removal report.

    Vertices ``a`` are the members of bad pairs, edges are the bad pairs
    themselves. ``antipodal_ok``: every bad pair's attachments sit at
    distance (g-1)/2 on the cycle. ``distinct_attachments_ok``: no vertex
    has two bad-pair partners sharing one attachment.
    """

    a: VertexSet
    edges: tuple[tuple[int, int], ...]
    host: VertexSet
    antipodal_ok: bool
    distinct_attachments_ok: bool
    findings: tuple[str, ...]

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def max_degree(self) -> int:
        return max((self.degree(v) for v in self.a), default=0)


def bad_pairs(report: RemovalReport, g: int) -> BadPairGraph:
    """Bad pairs of the report's selected component: attached vertices at
    distance (g+1)/2 - 2 inside H, the minimum the girth allows."""
    if g % 2 == 0:
        raise EvenGirthError("bad pairs are defined for odd girth only")
    threshold = (g + 1) // 2 - 2
    att = report.attachment
    edges = tuple(
        sorted(pair for pair, d in report.h_distances.items() if d == threshold)
    )
    findings: list[str] = []
    antipodal_ok = True
    for x, y in edges:
        if cycle_distance(report.cycle, att[x], att[y]) != (g - 1) // 2:
            antipodal_ok = False
            findings.append(
                f"bad pair ({x},{y}) attaches at non-antipodal cycle vertices"
            )
    partners: dict[int, list[int]] = {}
    for x, y in edges:
        partners.setdefault(x, []).append(y)
        partners.setdefault(y, []).append(x)
    distinct_ok = True
    for x, ys in sorted(partners.items()):
        seen: dict[int, int] = {}
        for y in ys:
            if att[y] in seen:
                distinct_ok = False
                findings.append(
                    f"partners {seen[att[y]]} and {y} of {x} share attachment {att[y]}"
                )
            seen[att[y]] = y
    return BadPairGraph(
        a=frozenset(v for e in edges for v in e),
        edges=edges,
        host=report.h_vertices,
        antipodal_ok=antipodal_ok,
        distinct_attachments_ok=distinct_ok,
        findings=tuple(findings),
    )


@dataclass(frozen=True)
class G1Structure:
    """Decomposition of a bad-pair graph into maximal paths and cycles."""

    paths: tuple[tuple[int, ...], ...]
    cycles: tuple[tuple[int, ...], ...]
    union_spec: UnionSpec | None
    short_single_path: bool
    findings: tuple[str, ...]


def classify_g1(bp: BadPairGraph, g: int) -> G1Structure:
    """Split the bad-pair graph into paths and cycles.

    Raises DegreeViolationError if some vertex has 3 or more partners.
    Cycle components shorter than g are reported as findings (impossible
    when the host graph really has girth g). ``short_single_path`` marks
    the case of a single path with fewer than 3 edges and no cycles, which
    takes the swap construction instead of the union construction.
    """
    adj: dict[int, list[int]] = {v: [] for v in bp.a}
    for x, y in bp.edges:
        adj[x].append(y)
        adj[y].append(x)
    for v, nbrs in sorted(adj.items()):
        if len(nbrs) > 2:
            raise DegreeViolationError(
                f"bad-pair vertex {v} has {len(nbrs)} partners"
            )
    visited: set[int] = set()
    paths: list[tuple[int, ...]] = []
    cycles: list[tuple[int, ...]] = []
    for start in sorted(v for v, nbrs in adj.items() if len(nbrs) == 1):
        if start in visited:
            continue
        seq = [start]
        visited.add(start)
        cur, prev = start, None
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            seq.append(cur)
            visited.add(cur)
        paths.append(tuple(seq))
    for start in sorted(adj):
        if start in visited:
            continue
        # remaining vertices all have degree 2: a cycle through start
        nbrs = sorted(adj[start])
        seq = [start]
        visited.add(start)
        prev, cur = start, nbrs[0]
        while cur != start:
            seq.append(cur)
            visited.add(cur)
            step = [w for w in adj[cur] if w != prev]
            prev, cur = cur, step[0]
        cycles.append(tuple(seq))
    paths.sort(key=lambda s: min(s))
    cycles.sort(key=lambda s: min(s))
    findings = [
        f"bad-pair cycle of length {len(seq)} is shorter than the girth {g}"
        for seq in cycles
        if len(seq) < g
    ]
    short_single = len(paths) == 1 and not cycles and len(paths[0]) - 1 < 3
    spec: UnionSpec | None = None
    if not short_single:
        try:
            spec = UnionSpec(
                tuple(len(s) for s in paths), tuple(len(s) for s in cycles)
            )
        except UnionSpecError as exc:
            findings.append(f"decomposition violates union side conditions: {exc}")
    return G1Structure(
        paths=tuple(paths),
        cycles=tuple(cycles),
        union_spec=spec,
        short_single_path=short_single,
        findings=tuple(findings),
    )


def build_sigma(report: RemovalReport, bp: BadPairGraph, g: int) -> Permutation:
    """Permutation of N_H(C) mapping no bad pair onto a bad pair.

    A single bad pair (or two sharing a middle vertex) swaps one involved
    vertex with a witness outside the bad-pair set; richer structures take
    a special permutation of the bad-pair graph's path/cycle decomposition,
    extended by the identity off it.
    """
    nhc = frozenset(report.attachment)
    if not bp.edges:
        return identity_permutation(nhc)
    structure = classify_g1(bp, g)
    if structure.short_single_path:
        witnesses = sorted(nhc - bp.a)
        if not witnesses:
            raise NoWitnessError(
                "every attached vertex lies in a bad pair; no swap partner exists"
            )
        w = witnesses[0]
        seq = structure.paths[0]
        swapped = min(seq) if len(seq) == 2 else seq[1]
        mapping = {v: v for v in nhc}
        mapping[swapped], mapping[w] = w, swapped
        return Permutation(mapping)
    if structure.union_spec is not None:
        std = special_perm_union(structure.union_spec)
    else:
        # decomposition outside the constructions (possible only when the
        # girth hypothesis is broken); fall back to bounded search
        if len(bp.a) > 10:
            raise ConstructionGapError(
                "bad-pair graph too irregular and too large for search"
            )
        order = sorted(bp.a)
        relabel = {v: i for i, v in enumerate(order)}
        g1 = build_graph(
            len(order), [(relabel[x], relabel[y]) for x, y in bp.edges]
        )
        found = search_special_permutation(g1)
        if found is None:
            raise ConstructionGapError(
                "no bad-pair-avoiding permutation exists for this structure"
            )
        std = Permutation(
            {order[v]: order[w] for v, w in found.mapping.items()}, via=found.via
        )
        ext = {v: v for v in nhc - bp.a}
        ext.update(std.mapping)
        return Permutation(ext, via=std.via)
    slots: list[int] = []
    for seq in structure.paths + structure.cycles:
        slots.extend(seq)
    mapping = {v: v for v in nhc - bp.a}
    for v, w in std.mapping.items():
        mapping[slots[v]] = slots[w]
    return Permutation(mapping, via=std.via)


@dataclass(frozen=True)
class SpecialSubgraphDetail:
    """Outcome of the induced-subgraph distance conditions."""

    ok: bool
    distance_floor: int
    min_pair: tuple[int, int] | None
    min_d_sigma: int | None
    half_order_ok: bool
    violations: tuple[str, ...]


def check_special_subgraph(
    g: Graph,
    h_vertices: Iterable[int],
    b: Iterable[int],
    sigma: Permutation,
    girth_g: int,
) -> tuple[bool, SpecialSubgraphDetail]:
    """Check the distance conditions that make H (induced on h_vertices)
    special with respect to sigma on its boundary set b.

    Conditions, for all distinct x, y in b:
    d_H(x, y) >= ceil(g/4) - 1 and
    d_H(x, y) + d_H(sigma x, sigma y) + 2 >= g.
    Also evaluates the consequence |V(H)| >= |V(G)| / 2 as a side flag.
    """
    h_vertices = frozenset(h_vertices)
    b = frozenset(b)
    degs = set(g.degrees())
    if len(degs) != 1:
        raise DegreeHypothesisError("host graph must be regular")
    k = degs.pop()
    hg, relabel = induced_subgraph(g, h_vertices)
    if hg.n and hg.min_degree() < k - 1:
        raise DegreeHypothesisError(
            f"induced subgraph has minimum degree {hg.min_degree()} < {k - 1}"
        )
    boundary = frozenset(
        v for v in h_vertices if hg.degree(relabel[v]) == k - 1
    )
    if b != boundary:
        raise DegreeHypothesisError(
            "b must be exactly the set of vertices of degree k-1 in H"
        )
    if sigma.domain != b:
        raise DegreeHypothesisError("sigma must permute b")

    floor = ceil(girth_g / 4) - 1
    ordered = sorted(b)
    dists: dict[int, dict[int, int]] = {
        x: _distances_within(g, h_vertices, x) for x in ordered
    }

    def d_h(x: int, y: int) -> int | None:
        return dists[x].get(y)  # None when H is disconnected between them

    ok = True
    violations: list[str] = []
    min_pair = None
    min_d = None
    for i, x in enumerate(ordered):
        for y in ordered[i + 1 :]:
            dxy = d_h(x, y)
            if dxy is not None and dxy < floor:
                ok = False
                violations.append(f"d_H({x},{y}) = {dxy} below {floor}")
            dimg = d_h(min(sigma(x), sigma(y)), max(sigma(x), sigma(y)))
            if dxy is None or dimg is None:
                continue  # unreachable pairs satisfy every lower bound
            total = dxy + dimg + 2
            if total < girth_g:
                ok = False
                violations.append(
                    f"D_sigma({x},{y}) = {total} below girth {girth_g}"
                )
            if min_d is None or total < min_d:
                min_d, min_pair = total, (x, y)
    half_order_ok = 2 * len(h_vertices) >= g.n
    detail = SpecialSubgraphDetail(
        ok=ok,
        distance_floor=floor,
        min_pair=min_pair,
        min_d_sigma=min_d,
        half_order_ok=half_order_ok,
        violations=tuple(violations),
    )
    return ok, detail


@dataclass(frozen=True)
class CycleAnalysis:
    """Everything the pipeline learned about one girth cycle."""

    cycle: Cycle
    nonseparating: bool
    component_sizes: tuple[int, ...]
    attachment_ok: bool
    removal: RemovalReport
    bad_pair_graph: BadPairGraph | None = None
    structure: G1Structure | None = None
    sigma: Permutation | None = None
    sigma_avoids_bad_pairs: bool | None = None
    degree_bound_ok: bool | None = None
    cycle_length_bound_ok: bool | None = None
    subgraph_detail: SpecialSubgraphDetail | None = None
    findings: tuple[str, ...] = ()


def analyze_cycle(g: Graph, c: Cycle, girth_g: int) -> CycleAnalysis:
    """Run the full removal / bad-pair / permutation pipeline on one cycle.

    Even girth stops after the removal analysis (bad pairs are an
    odd-girth notion). Structural violations become findings, not errors,
    so the pipeline doubles as a counterexample hunter on non-cage inputs.
    """
    report = analyze_removal(g, c, girth_g)
    findings = list(report.findings)
    analysis = dict(
        cycle=c,
        nonseparating=report.nonseparating,
        component_sizes=tuple(len(comp) for comp in report.components),
        attachment_ok=report.attachment_ok,
        removal=report,
    )
    if girth_g % 2 and report.smallest_index is not None:
        bp = bad_pairs(report, girth_g)
        findings.extend(bp.findings)
        analysis["bad_pair_graph"] = bp
        structure = None
        try:
            structure = classify_g1(bp, girth_g)
            analysis["degree_bound_ok"] = True
        except DegreeViolationError as exc:
            analysis["degree_bound_ok"] = False
            findings.append(str(exc))
        if structure is not None:
            findings.extend(structure.findings)
            analysis["structure"] = structure
            analysis["cycle_length_bound_ok"] = all(
                len(seq) >= girth_g for seq in structure.cycles
            )
            try:
                sigma = build_sigma(report, bp, girth_g)
                analysis["sigma"] = sigma
                bad_set = {frozenset(e) for e in bp.edges}
                analysis["sigma_avoids_bad_pairs"] = all(
                    frozenset((sigma(x), sigma(y))) not in bad_set
                    for x, y in bp.edges
                )
                if report.h_vertices and not report.multi_attached[
                    report.smallest_index
                ]:
                    try:
                        _, detail = check_special_subgraph(
                            g,
                            report.h_vertices,
                            frozenset(report.attachment),
                            sigma,
                            girth_g,
                        )
                        analysis["subgraph_detail"] = detail
                    except DegreeHypothesisError as exc:
                        findings.append(f"subgraph check skipped: {exc}")
            except (NoWitnessError, ConstructionGapError) as exc:
                findings.append(f"no permutation constructed: {exc}")
    return CycleAnalysis(findings=tuple(findings), **analysis)


@dataclass(frozen=True)
class VerificationReport:
    """Aggregated verdict over every girth cycle of one graph."""

    name: str
    k: int
    girth: int
    order: int
    cycle_count: int
    all_nonseparating: bool
    per_cycle: tuple[CycleAnalysis, ...]
    checks: dict[str, bool | None]
    findings: tuple[str, ...]


def _aggregate(flags: list[bool | None]) -> bool | None:
    known = [f for f in flags if f is not None]
    if not known:
        return None
    return all(known)


def verify_cage_nonseparating(
    g: Graph,
    k: int | None = None,
    girth_g: int | None = None,
    name: str = "",
) -> VerificationReport:
    """Check that every girth cycle leaves a connected remainder, with the
    full per-cycle structural analysis attached.

    ``k`` defaults to the graph's uniform degree; a non-regular graph or a
    degree mismatch raises NotRegularError, a girth mismatch raises
    GirthMismatchError.
    """
    degs = set(g.degrees())
    if len(degs) != 1:
        raise NotRegularError(f"degrees {sorted(degs)} are not uniform")
    actual_k = degs.pop()
    if k is not None and k != actual_k:
        raise NotRegularError(f"graph is {actual_k}-regular, not {k}-regular")
    gir = girth(g)
    if gir.is_unreachable:
        raise GirthMismatchError("graph has no cycle")
    if girth_g is not None and gir != girth_g:
        raise GirthMismatchError(f"computed girth {gir.hops}, stated {girth_g}")
    target = gir.hops
    cycles = enumerate_g_cycles(g)
    per_cycle = tuple(analyze_cycle(g, c, target) for c in cycles)
    findings: list[str] = []
    for entry in per_cycle:
        findings.extend(entry.findings)
        if not entry.nonseparating:
            findings.append(
                f"separating cycle {entry.cycle.vertices}: components of sizes "
                f"{entry.component_sizes}"
            )
    checks: dict[str, bool | None] = {
        "all_nonseparating": all(e.nonseparating for e in per_cycle),
        "attachment_ok": _aggregate([e.attachment_ok for e in per_cycle]),
        "degree_bound_ok": _aggregate([e.degree_bound_ok for e in per_cycle]),
        "antipodal_ok": _aggregate(
            [e.bad_pair_graph.antipodal_ok if e.bad_pair_graph else None for e in per_cycle]
        ),
        "distinct_attachments_ok": _aggregate(
            [
                e.bad_pair_graph.distinct_attachments_ok if e.bad_pair_graph else None
                for e in per_cycle
            ]
        ),
        "cycle_length_bound_ok": _aggregate(
            [e.cycle_length_bound_ok for e in per_cycle]
        ),
        "sigma_avoids_bad_pairs": _aggregate(
            [e.sigma_avoids_bad_pairs for e in per_cycle]
        ),
        "min_d_sigma_ok": _aggregate(
            [
                (e.subgraph_detail.min_d_sigma is None or e.subgraph_detail.min_d_sigma >= target)
                if e.subgraph_detail
                else None
                for e in per_cycle
            ]
        ),
        "special_subgraph_ok": _aggregate(
            [e.subgraph_detail.ok if e.subgraph_detail else None for e in per_cycle]
        ),
        "half_order_ok": _aggregate(
            [e.subgraph_detail.half_order_ok if e.subgraph_detail else None for e in per_cycle]
        ),
    }
    return VerificationReport(
        name=name,
        k=actual_k,
        girth=target,
        order=g.n,
        cycle_count=len(cycles),
        all_nonseparating=checks["all_nonseparating"],
        per_cycle=per_cycle,
        checks=checks,
        findings=tuple(findings),
    )
