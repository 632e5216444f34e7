"""Graph construction, generators (with their edge-type censuses), and file IO."""

from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from topoidx.errors import (
    GraphFileError,
    InvalidFamilyParams,
    SelfLoop,
    VertexOutOfRange,
)
from topoidx.graph import (
    FamilySpec,
    Graph,
    bfs_distances,
    build_graph,
    dumps,
    generate,
    generate_family,
    is_connected,
    loads,
)


def isomorphic_bruteforce(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    h_edges = set(h.edges)
    for perm in permutations(range(g.n)):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in h_edges
               for u, v in g.edges):
            return True
    return False


class TestBuildGraph:
    def test_triangle(self):
        g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
        assert g.degrees == (2, 2, 2)
        assert g.edge_count == 3

    def test_dedup(self):
        g = build_graph(2, [(0, 1), (1, 0)])
        assert g.edges == ((0, 1),)

    def test_vertex_out_of_range(self):
        with pytest.raises(VertexOutOfRange):
            build_graph(4, [(0, 4)])

    def test_self_loop(self):
        with pytest.raises(SelfLoop):
            build_graph(3, [(1, 1)])

    def test_immutable(self):
        g = build_graph(2, [(0, 1)])
        with pytest.raises(AttributeError):
            g.n = 5


class TestGenerators:
    def test_wheel_structure(self):
        g = generate_family("wheel", 4)
        assert (g.n, g.edge_count) == (5, 8)
        assert g.degrees[0] == 4
        assert g.degrees[1:] == (3, 3, 3, 3)

    @pytest.mark.parametrize("n", range(4, 9))
    def test_wheel_census(self, n):
        g = generate_family("wheel", n)
        assert g.degree_pair_census() == {(3, 3): n, (3, n): n}

    def test_sunflower_counts(self):
        g = generate_family("sunflower", 4)
        assert (g.n, g.edge_count) == (13, 20)

    @pytest.mark.parametrize("n", range(3, 9))
    def test_sunflower_census(self, n):
        g = generate_family("sunflower", n)
        assert g.degree_pair_census() == {
            (4, 4): n,
            (4, 3 * n): n,
            (2, 4): n,
            (2, 3 * n): n,
            (1, 3 * n): n,
        }

    def test_french_windmill(self):
        g = generate_family("french_windmill", 4, 3)
        assert (g.n, g.edge_count) == (10, 18)
        assert g.degrees[0] == 9
        assert set(g.degrees[1:]) == {3}

    def test_regular(self):
        g = generate_family("regular", 6, 3)
        assert set(g.degrees) == {3}
        assert g.edge_count == 9

    @pytest.mark.parametrize("n,r", [(5, 2), (6, 2), (6, 3), (7, 4), (8, 3), (10, 5)])
    def test_regular_degrees(self, n, r):
        g = generate_family("regular", n, r)
        assert set(g.degrees) == {r}
        assert is_connected(g)

    def test_bipartite_nn_is_regular(self):
        g = generate_family("complete_bipartite", 4, 4)
        assert set(g.degrees) == {4}

    @pytest.mark.parametrize("n", range(3, 8))
    def test_path_and_cycle(self, n):
        p = generate_family("path", n)
        assert sorted(p.degrees) == [1, 1] + [2] * (n - 2)
        c = generate_family("cycle", n)
        assert set(c.degrees) == {2}

    def test_star_and_double_star(self):
        s = generate_family("star", 5)
        assert sorted(s.degrees) == [1] * 5 + [5]
        d = generate_family("double_star", 2, 3)
        assert sorted(d.degrees) == [1] * 5 + [3, 4]

    def test_wheel3_isomorphic_to_k4(self):
        assert isomorphic_bruteforce(generate_family("wheel", 3),
                                     generate_family("complete", 4))

    @pytest.mark.parametrize("family,params", [
        ("wheel", (2,)),
        ("cycle", (2,)),
        ("sunflower", (2,)),
        ("french_windmill", (2, 3)),
        ("french_windmill", (3, 2)),
        ("regular", (5, 3)),
        ("regular", (4, 4)),
        ("double_star", (0, 1)),
    ])
    def test_invalid_params(self, family, params):
        with pytest.raises(InvalidFamilyParams):
            generate(FamilySpec(family, params))

    def test_unknown_family(self):
        with pytest.raises(InvalidFamilyParams):
            FamilySpec("torus", (3,))

    def test_wrong_arity(self):
        with pytest.raises(InvalidFamilyParams):
            FamilySpec("wheel", (3, 4))

    def test_handshake_over_families(self, small_families):
        for label, g in small_families:
            assert sum(g.degrees) == 2 * g.edge_count, label

    @given(st.integers(2, 9).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.lists(
                st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
                max_size=20,
            ),
        )
    ))
    def test_handshake_random(self, data):
        n, raw = data
        edges = [(u, v) for u, v in raw if u != v]
        g = Graph(n, edges)
        assert sum(g.degrees) == 2 * g.edge_count
        for u, v in g.edges:
            assert v in g.adj[u] and u in g.adj[v]


class TestBfs:
    def test_path_from_endpoint(self):
        assert bfs_distances(generate_family("path", 3), 0) == [0, 1, 2]

    def test_complete(self):
        assert bfs_distances(generate_family("complete", 4), 2) == [1, 1, 0, 1]

    def test_wheel_hub(self):
        assert bfs_distances(generate_family("wheel", 5), 0) == [0, 1, 1, 1, 1, 1]

    def test_unreachable_is_none(self):
        g = Graph(3, [(0, 1)])
        assert bfs_distances(g, 0) == [0, 1, None]


class TestFileFormat:
    def test_dumps_wheel4(self):
        text = dumps(generate_family("wheel", 4))
        lines = text.splitlines()
        assert lines[0] == "n 5"
        assert len(lines) == 9

    def test_round_trip(self, small_families):
        for label, g in small_families:
            assert loads(dumps(g, comment=label)) == g

    def test_comments_and_blanks_ignored(self):
        g = loads("# a comment\n\nn 3\n0 1\n# another\n1 2\n")
        assert g.edges == ((0, 1), (1, 2))

    @pytest.mark.parametrize("text,fragment", [
        ("0 1\n", "line 1"),
        ("n x\n", "line 1"),
        ("n 3\n0\n", "line 2"),
        ("n 3\n0 one\n", "line 2"),
        ("n 3\n0 3\n", "line 2"),
        ("n 3\n1 1\n", "line 2"),
        ("", "missing"),
    ])
    def test_parse_errors_cite_lines(self, text, fragment):
        with pytest.raises(GraphFileError, match=fragment):
            loads(text)
