import random

import pytest

from linesym.constructions import (
    EdgeIndex,
    catalog,
    catalog_entries,
    clique_graph,
    line_graph,
    subdivision_graph,
)
from linesym.graphs import build_graph, is_complete, is_regular, isomorphic
from linesym.metrics import diameter, girth, is_connected
from oracles import maximal_cliques_reference

from conftest import random_connected_graph


def cycle(n):
    return catalog(f"cycle({n})")


def path(r):
    return catalog(f"path({r})")


# -- edge index ---------------------------------------------------------------


def test_edge_index_ranks_are_lexicographic(petersen):
    idx = EdgeIndex.from_graph(petersen)
    assert idx.edges == petersen.edges
    for i, (u, v) in enumerate(idx.edges):
        assert idx.rank_of(u, v) == i
        assert idx.rank_of(v, u) == i
    with pytest.raises(ValueError):
        idx.rank_of(0, 0)


# -- line graphs ---------------------------------------------------------------


def test_line_graph_vertex_count_is_edge_count(petersen, heawood):
    assert line_graph(petersen).graph.n == petersen.m
    assert line_graph(heawood).graph.n == heawood.m


def test_line_graph_degree_rule():
    """deg_L({u,v}) = deg(u) + deg(v) - 2, for a few random graphs."""
    rng = random.Random(3)
    for _ in range(15):
        g = random_connected_graph(rng, rng.randint(3, 9))
        lg = line_graph(g)
        for i, (u, v) in enumerate(lg.index.edges):
            assert lg.graph.degree(i) == g.degree(u) + g.degree(v) - 2


def test_line_graph_of_cycle_is_cycle():
    for n in (3, 5, 8):
        assert isomorphic(line_graph(cycle(n)).graph, cycle(n)) is not None


@pytest.mark.parametrize("r", [2, 3, 4, 5, 6])
def test_line_graph_of_path_drops_one_edge(r):
    lg = line_graph(path(r)).graph
    assert isomorphic(lg, path(r - 1)) is not None


def test_line_graph_of_k4_is_k3_parts_of_2(k4, k3_parts_of_2):
    assert isomorphic(line_graph(k4).graph, k3_parts_of_2) is not None


def test_line_graph_refuses_edgeless():
    with pytest.raises(ValueError):
        line_graph(build_graph(2, []))


# -- subdivision ---------------------------------------------------------------


def test_subdivision_shape(petersen):
    s = subdivision_graph(petersen)
    assert s.graph.n == petersen.n + petersen.m
    assert s.graph.m == 2 * petersen.m
    assert s.tags is not None
    assert s.tags[:petersen.n] == ("vertex",) * petersen.n
    assert s.tags[petersen.n:] == ("edge",) * petersen.m


def test_subdivision_doubles_girth(petersen, k4):
    assert girth(subdivision_graph(petersen).graph) == 2 * girth(petersen)
    assert girth(subdivision_graph(k4).graph) == 6


def test_subdivision_is_bipartite():
    rng = random.Random(9)
    for _ in range(10):
        g = random_connected_graph(rng, rng.randint(3, 8))
        s = subdivision_graph(g).graph
        # 2-color by BFS
        color = {0: 0}
        frontier = [0]
        while frontier:
            nxt = []
            for v in frontier:
                for w in s.adj[v]:
                    if w not in color:
                        color[w] = 1 - color[v]
                        nxt.append(w)
            frontier = nxt
        assert len(color) == s.n
        for u, v in s.edges:
            assert color[u] != color[v]


def test_subdivision_of_triangle_is_c6():
    k3 = catalog("complete(3)")
    assert isomorphic(subdivision_graph(k3).graph, cycle(6)) is not None


def test_subdivision_of_single_edge_path():
    # one edge splits into a path with two edges
    s = subdivision_graph(path(1)).graph
    assert isomorphic(s, path(2)) is not None


# -- clique graphs --------------------------------------------------------------


def test_clique_graph_equals_line_graph_beyond_girth_3(petersen, heawood, k33):
    for g in (petersen, heawood, k33, cycle(6)):
        assert isomorphic(clique_graph(g).graph, line_graph(g).graph) is not None


def test_clique_graph_of_k3_parts_of_2(k3_parts_of_2):
    # maximum cliques are the 8 triangles picking one vertex per part
    cg = clique_graph(k3_parts_of_2)
    assert cg.graph.n == 8
    assert cg.cliques is not None and all(len(c) == 3 for c in cg.cliques)


def test_clique_graph_reconstructs_host(petersen):
    lp = line_graph(petersen).graph
    assert isomorphic(clique_graph(lp).graph, petersen) is not None


def test_maximal_cliques_match_subset_oracle():
    from linesym.constructions import _maximal_cliques

    rng = random.Random(17)
    for _ in range(25):
        g = random_connected_graph(rng, rng.randint(3, 9), extra_p=rng.choice([0.2, 0.5, 0.8]))
        got = {frozenset(c) for c in _maximal_cliques(g)}
        assert got == maximal_cliques_reference(g)


# -- catalog --------------------------------------------------------------------


def test_catalog_petersen_shape(petersen):
    assert (petersen.n, petersen.m) == (10, 15)
    assert is_regular(petersen) == 3
    assert girth(petersen) == 5


def test_catalog_k32_shape(k3_parts_of_2):
    assert (k3_parts_of_2.n, k3_parts_of_2.m) == (6, 12)
    assert is_regular(k3_parts_of_2) == 4
    assert not is_complete(k3_parts_of_2)


def test_catalog_tutte_shape(tutte):
    assert (tutte.n, tutte.m) == (30, 45)
    assert is_regular(tutte) == 3
    assert girth(tutte) == 8
    assert diameter(tutte) == 4


def test_catalog_heawood_shape(heawood):
    assert (heawood.n, heawood.m) == (14, 21)
    assert girth(heawood) == 6


def test_catalog_icosahedron_shape(icosahedron):
    assert (icosahedron.n, icosahedron.m) == (12, 30)
    assert is_regular(icosahedron) == 5
    assert girth(icosahedron) == 3
    assert diameter(icosahedron) == 3


def test_catalog_parameterized_names():
    assert catalog("complete(5)").m == 10
    assert catalog("cycle(7)").n == 7
    assert catalog("path(3)").n == 4
    k23 = catalog("complete_multipartite(2,3)")
    assert (k23.n, k23.m) == (6, 9)  # K_{3,3} in multipartite clothing
    assert isomorphic(k23, catalog("k33")) is not None


def test_catalog_rejects_unknown_names():
    for bad in ("doughnut", "cycle(2)", "complete(0)", "complete_multipartite(1,4)", "path(0)"):
        with pytest.raises(ValueError):
            catalog(bad)


def test_catalog_entries_lists_every_name():
    names = [n for n, _ in catalog_entries()]
    assert "petersen" in names and "tutte_8_cage" in names
    assert len(names) == len(set(names))


def test_all_catalog_fixtures_connected():
    for name in ("petersen", "heawood", "tutte_8_cage", "icosahedron", "k33"):
        assert is_connected(catalog(name))
