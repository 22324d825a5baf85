from itertools import combinations

import pytest

from cagekit.cage_analysis import (
    BadPairGraph,
    RemovalReport,
    analyze_cycle,
    analyze_removal,
    antipodal_pairs,
    bad_pairs,
    build_sigma,
    check_special_subgraph,
    classify_g1,
    verify_cage_nonseparating,
)
from cagekit.catalog_io import catalog_entries
from cagekit.cycle_engine import Cycle, cycle_distance, enumerate_g_cycles
from cagekit.errors import (
    DegreeHypothesisError,
    DegreeViolationError,
    EvenGirthError,
    EvenLengthError,
    GirthMismatchError,
    NotAGCycleError,
    NotRegularError,
    NoWitnessError,
)
from cagekit.generators import cycle_graph, heawood, mcgee, path_graph, petersen, robertson
from cagekit.graph_core import build_graph, components, delete_vertices
from cagekit.special_perm import Permutation, UnionSpec, identity_permutation


OUTER_PENTAGON = Cycle.from_vertices([0, 1, 2, 3, 4])


def synthetic_report(attachment, h_distances, cycle=OUTER_PENTAGON):
    """Hand-built removal report for exercising the permutation assembly."""
    h = frozenset(attachment)
    return RemovalReport(
        cycle=cycle,
        components=(h,),
        smallest_index=0,
        attachments=(dict(attachment),),
        multi_attached=({},),
        h_distances=dict(h_distances),
        attachment_ok=True,
        findings=(),
    )


class TestAntipodalPairs:
    def test_pentagon(self):
        assert antipodal_pairs(OUTER_PENTAGON) == [
            (0, 2), (0, 3), (1, 3), (1, 4), (2, 4),
        ]

    def test_seven_cycle(self):
        pairs = antipodal_pairs(Cycle.from_vertices(range(7)))
        assert len(pairs) == 7
        c = Cycle.from_vertices(range(7))
        assert all(cycle_distance(c, u, v) == 3 for u, v in pairs)

    def test_even_rejected(self):
        with pytest.raises(EvenLengthError):
            antipodal_pairs(Cycle.from_vertices(range(6)))


class TestAnalyzeRemoval:
    def test_petersen_outer_pentagon(self, petersen_graph):
        report = analyze_removal(petersen_graph, OUTER_PENTAGON, 5)
        assert report.components == (frozenset(range(5, 10)),)
        assert report.smallest_index == 0
        assert report.attachment == {5: 0, 6: 1, 7: 2, 8: 3, 9: 4}
        assert report.attachment_ok and not report.findings
        assert report.nonseparating

    def test_triangle_with_pendants(self):
        g = build_graph(5, [(0, 1), (1, 2), (0, 2), (3, 0), (4, 1)])
        report = analyze_removal(g, Cycle.from_vertices([0, 1, 2]), 3)
        assert report.components == (frozenset({3}), frozenset({4}))
        assert report.attachments == ({3: 0}, {4: 1})
        assert not report.nonseparating

    def test_heawood_hexagons(self):
        g = heawood()
        for c in enumerate_g_cycles(g):
            report = analyze_removal(g, c, 6)
            assert len(report.components) == 1
            assert len(report.components[0]) == 8
            assert report.attachment_ok

    def test_wrong_length_rejected(self, petersen_graph):
        with pytest.raises(NotAGCycleError):
            analyze_removal(petersen_graph, OUTER_PENTAGON, 6)

    def test_non_cycle_rejected(self, petersen_graph):
        with pytest.raises(NotAGCycleError):
            analyze_removal(petersen_graph, Cycle.from_vertices([0, 1, 2, 3, 9]), 5)


class TestBadPairs:
    def test_petersen_pentagon_gives_inner_pentagram(self, petersen_graph):
        report = analyze_removal(petersen_graph, OUTER_PENTAGON, 5)
        bp = bad_pairs(report, 5)
        assert bp.a == frozenset(range(5, 10))
        assert bp.edges == ((5, 7), (5, 8), (6, 8), (6, 9), (7, 9))
        assert bp.antipodal_ok and bp.distinct_attachments_ok
        assert bp.host == frozenset(range(5, 10))
        # attachments of each bad pair sit two apart on the outer cycle
        for x, y in bp.edges:
            att = report.attachment
            assert cycle_distance(report.cycle, att[x], att[y]) == 2

    def test_distances_above_threshold_leave_it_empty(self):
        report = synthetic_report({10: 0, 11: 1, 12: 2}, {(10, 11): 2, (10, 12): 2, (11, 12): 2})
        bp = bad_pairs(report, 5)
        assert bp.a == frozenset() and bp.edges == ()

    def test_mcgee_degree_bound_across_all_heptagons(self):
        g = mcgee()
        for c in enumerate_g_cycles(g):
            report = analyze_removal(g, c, 7)
            bp = bad_pairs(report, 7)
            assert bp.max_degree() <= 2
            assert bp.antipodal_ok and bp.distinct_attachments_ok

    def test_even_girth_rejected(self):
        g = heawood()
        report = analyze_removal(g, enumerate_g_cycles(g)[0], 6)
        with pytest.raises(EvenGirthError):
            bad_pairs(report, 6)


class TestClassifyG1:
    def test_petersen_single_five_cycle(self, petersen_graph):
        report = analyze_removal(petersen_graph, OUTER_PENTAGON, 5)
        structure = classify_g1(bad_pairs(report, 5), 5)
        assert structure.paths == ()
        assert [len(c) for c in structure.cycles] == [5]
        assert structure.union_spec is not None
        assert structure.union_spec.cycles == (5,)
        assert not structure.findings

    def test_empty(self):
        bp = BadPairGraph(frozenset(), (), frozenset({1, 2}), True, True, ())
        structure = classify_g1(bp, 5)
        assert structure.paths == () and structure.cycles == ()
        assert structure.union_spec == UnionSpec()

    def test_short_path_flagged(self):
        bp = BadPairGraph(frozenset({1, 2, 3}), ((1, 2), (2, 3)), frozenset({1, 2, 3}), True, True, ())
        structure = classify_g1(bp, 5)
        assert structure.short_single_path
        assert structure.paths == ((1, 2, 3),)

    def test_degree_violation(self):
        bp = BadPairGraph(
            frozenset({0, 1, 2, 3}), ((0, 1), (0, 2), (0, 3)), frozenset(range(4)), True, True, ()
        )
        with pytest.raises(DegreeViolationError):
            classify_g1(bp, 5)

    def test_short_cycle_reported_not_raised(self):
        bp = BadPairGraph(
            frozenset({0, 1, 2}), ((0, 1), (0, 2), (1, 2)), frozenset(range(3)), True, True, ()
        )
        structure = classify_g1(bp, 5)
        assert [len(c) for c in structure.cycles] == [3]
        assert structure.union_spec is None
        assert any("shorter than the girth" in f for f in structure.findings)


class TestBuildSigma:
    def test_petersen_pentagram_case(self, petersen_graph):
        report = analyze_removal(petersen_graph, OUTER_PENTAGON, 5)
        bp = bad_pairs(report, 5)
        sigma = build_sigma(report, bp, 5)
        assert sigma.domain == frozenset(range(5, 10))
        bad = {frozenset(e) for e in bp.edges}
        for x, y in bp.edges:
            assert frozenset((sigma(x), sigma(y))) not in bad

    def test_single_bad_pair_swaps_with_witness(self):
        report = synthetic_report({10: 0, 11: 1, 12: 2}, {(10, 11): 1, (10, 12): 2, (11, 12): 2})
        bp = bad_pairs(report, 5)
        assert bp.edges == ((10, 11),)
        sigma = build_sigma(report, bp, 5)
        assert sigma(10) == 12 and sigma(12) == 10 and sigma(11) == 11

    def test_two_bad_pairs_swap_middle_vertex(self):
        report = synthetic_report(
            {10: 0, 11: 1, 12: 2, 13: 3},
            {(10, 11): 1, (11, 12): 1, (10, 12): 2, (10, 13): 2, (11, 13): 2, (12, 13): 2},
        )
        bp = bad_pairs(report, 5)
        assert bp.edges == ((10, 11), (11, 12))
        sigma = build_sigma(report, bp, 5)
        assert sigma(11) == 13 and sigma(13) == 11
        assert sigma(10) == 10 and sigma(12) == 12

    def test_no_witness(self):
        report = synthetic_report({10: 0, 11: 1}, {(10, 11): 1})
        bp = bad_pairs(report, 5)
        with pytest.raises(NoWitnessError):
            build_sigma(report, bp, 5)

    def test_empty_bad_pairs_yield_identity(self):
        report = synthetic_report({10: 0, 11: 1}, {(10, 11): 2})
        sigma = build_sigma(report, bad_pairs(report, 5), 5)
        assert sigma == identity_permutation({10, 11})


class TestCheckSpecialSubgraph:
    def test_petersen_inner_pentagram_passes(self, petersen_graph):
        report = analyze_removal(petersen_graph, OUTER_PENTAGON, 5)
        sigma = build_sigma(report, bad_pairs(report, 5), 5)
        ok, detail = check_special_subgraph(
            petersen_graph, report.h_vertices, frozenset(report.attachment), sigma, 5
        )
        assert ok and detail.min_d_sigma == 5
        assert detail.distance_floor == 1
        assert detail.half_order_ok  # 5 vertices = half of 10, the bound is tight

    def test_identity_fails(self, petersen_graph):
        report = analyze_removal(petersen_graph, OUTER_PENTAGON, 5)
        ok, detail = check_special_subgraph(
            petersen_graph,
            report.h_vertices,
            frozenset(report.attachment),
            identity_permutation(report.attachment),
            5,
        )
        assert not ok
        assert detail.min_d_sigma == 4  # a bad pair mapped to itself: 1 + 1 + 2

    def test_whole_graph_has_empty_boundary(self, petersen_graph):
        ok, detail = check_special_subgraph(
            petersen_graph, range(10), frozenset(), Permutation({}), 5
        )
        assert ok and detail.min_pair is None and detail.min_d_sigma is None

    def test_hypothesis_violations(self, petersen_graph):
        report = analyze_removal(petersen_graph, OUTER_PENTAGON, 5)
        with pytest.raises(DegreeHypothesisError):
            check_special_subgraph(
                petersen_graph, report.h_vertices, frozenset({5}), identity_permutation({5}), 5
            )
        with pytest.raises(DegreeHypothesisError):
            check_special_subgraph(
                petersen_graph,
                report.h_vertices,
                frozenset(report.attachment),
                identity_permutation({5}),
                5,
            )
        with pytest.raises(DegreeHypothesisError):
            check_special_subgraph(path_graph(4), {0, 1}, {0, 1}, Permutation({0: 1, 1: 0}), 5)


class TestVerify:
    def test_petersen_report(self, petersen_graph):
        report = verify_cage_nonseparating(petersen_graph, 3, 5, name="Petersen")
        assert report.cycle_count == 12
        assert report.all_nonseparating
        assert report.findings == ()
        assert all(v is True for v in report.checks.values())
        assert all(e.sigma is not None and e.sigma.via == "construction" for e in report.per_cycle)

    def test_heawood_even_girth_skips_odd_pipeline(self):
        report = verify_cage_nonseparating(heawood(), name="Heawood")
        assert report.cycle_count == 28 and report.all_nonseparating
        assert report.checks["degree_bound_ok"] is None
        assert all(e.bad_pair_graph is None for e in report.per_cycle)

    def test_cycle_graph_self_removal(self):
        report = verify_cage_nonseparating(cycle_graph(5))
        assert report.cycle_count == 1 and report.all_nonseparating
        assert report.per_cycle[0].component_sizes == ()

    def test_separating_fixture_detected(self, separating_fixture):
        report = verify_cage_nonseparating(separating_fixture, name="fixture")
        assert report.cycle_count == 7
        assert not report.all_nonseparating
        separating = [e for e in report.per_cycle if not e.nonseparating]
        assert len(separating) == 1
        assert separating[0].cycle == Cycle.from_vertices([0, 1, 2])
        assert separating[0].component_sizes == (5, 5, 5)
        assert any("separating cycle" in f for f in report.findings)

    def test_not_regular(self):
        with pytest.raises(NotRegularError):
            verify_cage_nonseparating(path_graph(4))
        with pytest.raises(NotRegularError):
            verify_cage_nonseparating(petersen(), k=4)

    def test_girth_mismatch(self):
        with pytest.raises(GirthMismatchError):
            verify_cage_nonseparating(petersen(), 3, 6)
        with pytest.raises(GirthMismatchError):
            verify_cage_nonseparating(build_graph(2, [(0, 1)]), 1)


class TestStructuralInvariantsOnCatalog:
    def test_attachment_conditions_petersen_and_mcgee(self):
        for g, gir in ((petersen(), 5), (mcgee(), 7)):
            for c in enumerate_g_cycles(g):
                report = analyze_removal(g, c, gir)
                assert report.attachment_ok
                assert all(not m for m in report.multi_attached)

    def test_three_connectivity_of_higher_degree_cages(self):
        # brute force over all vertex cuts of size at most 2
        for record in catalog_entries():
            if record.k <= 3:
                continue
            g = record.graph()
            for size in (1, 2):
                for cut in combinations(range(g.n), size):
                    rest, _ = delete_vertices(g, frozenset(cut))
                    assert len(components(rest)) == 1, (record.name, cut)

    def test_robertson_full_pipeline(self):
        report = verify_cage_nonseparating(robertson(), 4, 5, name="Robertson")
        assert report.cycle_count == 54
        assert report.all_nonseparating
        assert all(v is True for v in report.checks.values())

    def test_every_odd_girth_entry_passes_all_checks(self):
        # McGee and Robertson route their bad-pair graphs through the path
        # and multi-path union constructions; Hoffman-Singleton through the
        # pure-cycle composition. All must come out clean.
        for record in catalog_entries():
            if record.g % 2 == 0:
                continue
            report = verify_cage_nonseparating(
                record.graph(), record.k, record.g, name=record.name
            )
            assert report.findings == (), record.name
            assert all(v is True for v in report.checks.values()), record.name
            assert all(
                e.sigma is not None and e.sigma.via == "construction"
                for e in report.per_cycle
            ), record.name


class TestAnalyzeCycleSeparatingPath:
    def test_pipeline_runs_on_smallest_component(self, separating_fixture):
        report = analyze_cycle(separating_fixture, Cycle.from_vertices([0, 1, 2]), 3)
        assert not report.nonseparating
        assert report.component_sizes == (5, 5, 5)
        # odd girth: the bad-pair stage ran on the first gadget
        assert report.bad_pair_graph is not None
        assert report.bad_pair_graph.host == frozenset(range(3, 8))
