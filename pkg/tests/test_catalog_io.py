import random
from itertools import combinations

import pytest

from cagekit.catalog_io import (
    CageRecord,
    catalog_entries,
    get_cage,
    moore_bound,
    parse_graph6,
    read_graph6_file,
    write_graph6,
)
from cagekit.errors import Graph6FormatError, NotInCatalogError, PreconditionError
from cagekit.cycle_engine import girth
from cagekit.generators import (
    complete_graph,
    cycle_graph,
    fano_plane_incidence,
    heawood,
    hoffman_singleton,
    kneser_graph,
    mcgee,
    path_graph,
    petersen,
    pg23_incidence,
    robertson,
    tutte_coxeter,
)
from cagekit.graph_core import build_graph, diameter, is_k_regular


class TestParse:
    def test_hand_encoded_k2(self):
        g = parse_graph6("A_")
        assert g.n == 2 and list(g.edges()) == [(0, 1)]

    def test_hand_encoded_k3(self):
        g = parse_graph6("Bw")
        assert g == complete_graph(3)

    def test_single_vertex(self):
        g = parse_graph6("@")
        assert g.n == 1 and g.edge_count == 0

    def test_header_prefix_and_newline(self):
        assert parse_graph6(">>graph6<<A_\n") == complete_graph(2)

    def test_empty_graph_of_order_zero(self):
        assert parse_graph6("?").n == 0

    def test_malformed(self):
        for text in ("", "A", "A_" + "_", chr(32) + "_", "B" + chr(130), "~~A__"):
            with pytest.raises(Graph6FormatError):
                parse_graph6(text)

    def test_nonzero_padding_rejected(self):
        # K2 body with a stray low bit set: '_' is 100000, '`' is 100001
        with pytest.raises(Graph6FormatError):
            parse_graph6("A`")


class TestWrite:
    def test_hand_encodings(self):
        assert write_graph6(complete_graph(2)) == "A_"
        assert write_graph6(complete_graph(3)) == "Bw"
        assert write_graph6(build_graph(1, [])) == "@"

    def test_petersen_roundtrip(self):
        g = petersen()
        assert parse_graph6(write_graph6(g)) == g

    def test_extended_header_roundtrip(self):
        g = cycle_graph(70)
        text = write_graph6(g)
        assert text.startswith("~")
        assert parse_graph6(text) == g

    def test_random_roundtrips(self):
        rng = random.Random(11)
        for _ in range(150):
            n = rng.randint(0, 40)
            pairs = list(combinations(range(n), 2))
            edges = [p for p in pairs if rng.random() < rng.random()]
            g = build_graph(n, edges)
            assert parse_graph6(write_graph6(g)) == g


class TestGraph6File(object):
    def test_one_graph_per_line(self, tmp_path):
        path = tmp_path / "graphs.g6"
        path.write_text("A_\n\nBw\n")
        graphs = read_graph6_file(str(path))
        assert [g.n for g in graphs] == [2, 3]


class TestMooreBound:
    def test_known_values(self):
        assert moore_bound(3, 5) == 10
        assert moore_bound(3, 6) == 14
        assert moore_bound(4, 5) == 17
        assert moore_bound(7, 5) == 50

    def test_degree_two_gives_cycle_order(self):
        for g in range(3, 30):
            assert moore_bound(2, g) == g

    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            moore_bound(1, 5)
        with pytest.raises(PreconditionError):
            moore_bound(3, 2)


class TestCatalog:
    def test_core_entries_present(self):
        fast = {(r.k, r.g): r for r in catalog_entries(include_slow=False)}
        assert set(fast) == {(3, 5), (3, 6), (3, 7), (3, 8), (4, 5)}
        assert fast[(3, 5)].name == "Petersen"
        assert fast[(4, 5)].name == "Robertson"

    def test_every_entry_verifies(self):
        for record in catalog_entries():
            g = record.graph()
            assert g.n == record.order
            assert is_k_regular(g, record.k)
            assert girth(g) == record.g
            assert record.order >= moore_bound(record.k, record.g)
            assert all(record.verified().values())

    def test_literals_match_generators(self):
        builders = {
            "Petersen": petersen,
            "Heawood": heawood,
            "McGee": mcgee,
            "Tutte-Coxeter": tutte_coxeter,
            "Robertson": robertson,
            "PG(2,3)": pg23_incidence,
            "Hoffman-Singleton": hoffman_singleton,
        }
        for record in catalog_entries():
            assert parse_graph6(record.graph6) == builders[record.name]()

    def test_corrupt_record_caught_at_decode(self):
        record = CageRecord(3, 5, 10, write_graph6(cycle_graph(10)), "bogus")
        assert record.verified() == {"order": True, "regular": False, "girth": False}
        with pytest.raises(NotInCatalogError):
            record.graph()

    def test_lookup(self):
        assert get_cage(3, 5).name == "Petersen"
        assert get_cage(7, 5).name == "Hoffman-Singleton"
        with pytest.raises(NotInCatalogError):
            get_cage(5, 5)

    def test_supplementary_catalog_via_environment(self, tmp_path, monkeypatch):
        path = tmp_path / "extra.g6"
        lines = [
            write_graph6(cycle_graph(9)),      # 2-regular girth 9
            write_graph6(path_graph(3)),       # not regular: skipped
            write_graph6(complete_graph(4)),   # 3-regular girth 3
        ]
        path.write_text("\n".join(lines) + "\n")
        monkeypatch.setenv("CAGE_CATALOG_PATH", str(path))
        names = [r.name for r in catalog_entries()]
        assert "external-0" in names and "external-2" in names
        assert "external-1" not in names
        assert get_cage(2, 9).order == 9
        assert get_cage(3, 3).order == 4


class TestGeneratorCrossChecks:
    def test_petersen_equals_relabeled_kneser(self):
        # 2-subsets of a 5-set, adjacent when disjoint; the explicit
        # relabeling identifies it with the outer/inner labeling
        kneser = kneser_graph(5, 2)
        subsets = sorted(combinations(range(5), 2))
        index = {s: i for i, s in enumerate(subsets)}
        outer = [(0, 1), (2, 3), (0, 4), (1, 2), (3, 4)]
        inner = [(2, 4), (1, 4), (1, 3), (0, 3), (0, 2)]
        to_standard = {}
        for i, s in enumerate(outer):
            to_standard[index[s]] = i
        for i, s in enumerate(inner):
            to_standard[index[s]] = 5 + i
        relabeled = build_graph(
            10, [(to_standard[u], to_standard[v]) for u, v in kneser.edges()]
        )
        assert relabeled == petersen()

    def test_heawood_matches_incidence_profile(self):
        lcf, inc = heawood(), fano_plane_incidence()
        for g in (lcf, inc):
            assert g.n == 14 and is_k_regular(g, 3)
            assert girth(g) == 6 and diameter(g) == 3

    def test_hoffman_singleton_profile(self):
        g = hoffman_singleton()
        assert g.n == 50 and is_k_regular(g, 7)
        assert girth(g) == 5 and diameter(g) == 2

    def test_pg23_is_bipartite_incidence(self):
        g = pg23_incidence()
        assert g.n == 26 and is_k_regular(g, 4) and girth(g) == 6
        # bipartition: points 0..12, lines 13..25
        assert all(not g.has_edge(u, v) for u in range(13) for v in range(u + 1, 13))

    def test_robertson_profile(self):
        g = robertson()
        assert g.n == 19 and g.edge_count == 38
        assert is_k_regular(g, 4) and girth(g) == 5
