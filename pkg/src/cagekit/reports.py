"""Deterministic JSON and text rendering for analysis results.

Every container is sorted before emission, so identical inputs produce
byte-identical reports.
"""

from __future__ import annotations

from .cage_analysis import (
    BadPairGraph,
    CycleAnalysis,
    G1Structure,
    RemovalReport,
    SpecialSubgraphDetail,
    VerificationReport,
)
from .special_perm import Permutation


def permutation_to_dict(p: Permutation) -> dict:
    return {"mapping": [[v, w] for v, w in p.items()], "via": p.via}


def removal_to_dict(r: RemovalReport) -> dict:
    return {
        "cycle": list(r.cycle.vertices),
        "components": [sorted(c) for c in r.components],
        "smallest_index": r.smallest_index,
        "attachment": [[w, c] for w, c in sorted(r.attachment.items())],
        "multi_attached": [
            [[w, list(cs)] for w, cs in sorted(m.items())] for m in r.multi_attached
        ],
        "h_distances": [[x, y, d] for (x, y), d in sorted(r.h_distances.items())],
        "attachment_ok": r.attachment_ok,
        "findings": list(r.findings),
    }


def bad_pairs_to_dict(bp: BadPairGraph) -> dict:
    return {
        "a": sorted(bp.a),
        "edges": [list(e) for e in bp.edges],
        "host": sorted(bp.host),
        "antipodal_ok": bp.antipodal_ok,
        "distinct_attachments_ok": bp.distinct_attachments_ok,
        "findings": list(bp.findings),
    }


def structure_to_dict(st: G1Structure) -> dict:
    return {
        "paths": [list(s) for s in st.paths],
        "cycles": [list(s) for s in st.cycles],
        "union_spec": (
            None
            if st.union_spec is None
            else {"paths": list(st.union_spec.paths), "cycles": list(st.union_spec.cycles)}
        ),
        "short_single_path": st.short_single_path,
        "findings": list(st.findings),
    }


def subgraph_detail_to_dict(d: SpecialSubgraphDetail) -> dict:
    return {
        "ok": d.ok,
        "distance_floor": d.distance_floor,
        "min_pair": list(d.min_pair) if d.min_pair else None,
        "min_d_sigma": d.min_d_sigma,
        "half_order_ok": d.half_order_ok,
        "violations": list(d.violations),
    }


def cycle_analysis_to_dict(e: CycleAnalysis, detail: bool = False) -> dict:
    out = {
        "cycle": list(e.cycle.vertices),
        "nonseparating": e.nonseparating,
        "component_sizes": list(e.component_sizes),
        "attachment_ok": e.attachment_ok,
        "bad_pair_count": len(e.bad_pair_graph.edges) if e.bad_pair_graph else None,
        "degree_bound_ok": e.degree_bound_ok,
        "cycle_length_bound_ok": e.cycle_length_bound_ok,
        "sigma_via": e.sigma.via if e.sigma else None,
        "sigma_avoids_bad_pairs": e.sigma_avoids_bad_pairs,
        "min_d_sigma": e.subgraph_detail.min_d_sigma if e.subgraph_detail else None,
        "special_subgraph_ok": e.subgraph_detail.ok if e.subgraph_detail else None,
        "findings": list(e.findings),
    }
    if detail:
        out["removal"] = removal_to_dict(e.removal)
        out["bad_pairs"] = bad_pairs_to_dict(e.bad_pair_graph) if e.bad_pair_graph else None
        out["g1"] = structure_to_dict(e.structure) if e.structure else None
        out["sigma"] = permutation_to_dict(e.sigma) if e.sigma else None
        out["special_subgraph"] = (
            subgraph_detail_to_dict(e.subgraph_detail) if e.subgraph_detail else None
        )
    return out


def report_to_dict(rep: VerificationReport, detail: bool = False) -> dict:
    return {
        "name": rep.name,
        "k": rep.k,
        "girth": rep.girth,
        "order": rep.order,
        "cycle_count": rep.cycle_count,
        "all_nonseparating": rep.all_nonseparating,
        "checks": dict(rep.checks),
        "findings": list(rep.findings),
        "cycles": [cycle_analysis_to_dict(e, detail) for e in rep.per_cycle],
    }


def _flag(value: bool | None) -> str:
    if value is None:
        return "n/a"
    return "pass" if value else "FAIL"


def render_report_text(rep: VerificationReport, detail: bool = False) -> str:
    nonsep = sum(1 for e in rep.per_cycle if e.nonseparating)
    lines = [
        f"name: {rep.name}",
        f"k: {rep.k}",
        f"girth: {rep.girth}",
        f"order: {rep.order}",
        f"result: {nonsep}/{rep.cycle_count} g-cycles nonseparating",
        "checks:",
    ]
    lines.extend(f"  {key}: {_flag(val)}" for key, val in rep.checks.items())
    if rep.findings:
        lines.append("findings:")
        lines.extend(f"  - {f}" for f in rep.findings)
    if detail:
        for e in rep.per_cycle:
            lines.append(f"cycle {' '.join(map(str, e.cycle.vertices))}:")
            lines.append(
                f"  nonseparating: {str(e.nonseparating).lower()}"
                f"  components: {len(e.component_sizes)}"
                f"  sizes: {list(e.component_sizes)}"
            )
            if e.bad_pair_graph is not None:
                lines.append(
                    f"  bad_pairs: {len(e.bad_pair_graph.edges)}"
                    f"  sigma_via: {e.sigma.via if e.sigma else 'n/a'}"
                    f"  min_d_sigma: "
                    f"{e.subgraph_detail.min_d_sigma if e.subgraph_detail else 'n/a'}"
                )
    return "\n".join(lines)


def render_permutation_text(p: Permutation, special: bool | None = None) -> str:
    pairs = " ".join(f"{v}->{w}" for v, w in sorted(p.one_based().items()))
    lines = [f"sigma: {pairs}", f"via: {p.via}"]
    if special is not None:
        lines.append(f"special: {str(special).lower()}")
    return "\n".join(lines)
