import random

import pytest

from linesym.constructions import catalog, line_graph
from linesym.graphs import build_graph
from linesym.walks import (
    EnumerationCapExceeded,
    enumerate_arcs,
    enumerate_geodesics,
    image_equals_geodesics,
    is_arc,
    is_geodesic,
    is_walk,
    lmap,
    lmap_invert,
    line_neighbors,
)
from oracles import all_arcs, all_geodesics

from conftest import random_connected_graph


def test_walk_arc_geodesic_predicates(petersen):
    k3 = catalog("complete(3)")
    assert is_walk(k3, (0, 1, 0))
    assert not is_arc(k3, (0, 1, 0))          # backtracks
    assert is_arc(k3, (0, 1, 2))
    assert not is_geodesic(k3, (0, 1, 2))     # endpoints adjacent
    some_2_geodesic = enumerate_geodesics(petersen, 2)[0]
    assert is_geodesic(petersen, some_2_geodesic)
    assert is_arc(petersen, some_2_geodesic)
    assert not is_walk(k3, (0, 3))
    assert not is_walk(k3, ())


# frozen counts; every DERIVED one is double-checked against the product-filter
# oracle right here rather than trusted


@pytest.mark.parametrize(
    "name, s, count",
    [
        ("complete(3)", 1, 6),
        ("cycle(5)", 2, 10),
        ("petersen", 3, 120),  # 10*3*2*2: cubic, girth 5, two extensions per step
    ],
)
def test_frozen_arc_counts(name, s, count):
    g = catalog(name)
    arcs = enumerate_arcs(g, s)
    assert len(arcs) == count
    assert set(arcs) == all_arcs(g, s)


@pytest.mark.parametrize(
    "name, s, count",
    [
        ("complete(4)", 1, 12),
        ("cycle(6)", 3, 12),
        ("complete_multipartite(3,2)", 2, 24),
    ],
)
def test_frozen_geodesic_counts(name, s, count):
    g = catalog(name)
    geos = enumerate_geodesics(g, s)
    assert len(geos) == count
    assert set(geos) == all_geodesics(g, s)


def test_one_geodesics_are_exactly_arcs(k4, petersen):
    for g in (k4, petersen):
        assert set(enumerate_geodesics(g, 1)) == set(enumerate_arcs(g, 1))


def test_enumeration_is_sorted_and_duplicate_free(petersen):
    arcs = enumerate_arcs(petersen, 3)
    assert arcs == sorted(arcs)
    assert len(arcs) == len(set(arcs))
    geos = enumerate_geodesics(petersen, 2)
    assert geos == sorted(geos)


def test_arcs_agreeing_with_oracle_on_random_graphs():
    from linesym.metrics import diameter

    rng = random.Random(31)
    for _ in range(12):
        g = random_connected_graph(rng, rng.randint(3, 7))
        for s in (1, 2, 3):
            assert set(enumerate_arcs(g, s)) == all_arcs(g, s)
        for s in (1, 2):
            if s <= diameter(g):
                assert set(enumerate_geodesics(g, s)) == all_geodesics(g, s)


def test_enumerate_arc_cap_raises(petersen):
    with pytest.raises(EnumerationCapExceeded):
        enumerate_arcs(petersen, 3, cap=100)


def test_enumerate_geodesics_rejects_bad_s(petersen):
    with pytest.raises(ValueError):
        enumerate_geodesics(petersen, 3)  # diameter is 2
    with pytest.raises(ValueError):
        enumerate_geodesics(build_graph(4, [(0, 1), (2, 3)]), 1)


def test_geodesics_with_distance_filter_match_arcs(petersen):
    """s-geodesics are exactly the s-arcs whose endpoints sit at distance s."""
    from linesym.metrics import bfs_distances

    for s in (1, 2):
        arcs = enumerate_arcs(petersen, s)
        picked = {a for a in arcs if bfs_distances(petersen, a[0])[a[-1]] == s}
        assert picked == set(enumerate_geodesics(petersen, s))


# -- the edge-sequence map ------------------------------------------------------


def test_lmap_on_triangle():
    k3 = catalog("complete(3)")
    lg = line_graph(k3)
    out = lmap(lg.index, (0, 1, 2))
    assert out == (lg.index.rank_of(0, 1), lg.index.rank_of(1, 2))


def test_lmap_rejects_short_and_non_arcs(petersen):
    idx = line_graph(petersen).index
    with pytest.raises(ValueError):
        lmap(idx, (0, 1))
    bad = (0, 1, 0)
    with pytest.raises(ValueError):
        lmap(idx, bad)


def test_lmap_image_lands_in_line_arcs(petersen):
    lg = line_graph(petersen)
    for a in enumerate_arcs(petersen, 3):
        assert is_arc(lg.graph, lmap(lg.index, a))


def test_line_neighbors_match_line_graph(petersen):
    lg = line_graph(petersen)
    for i in range(lg.graph.n):
        assert tuple(line_neighbors(lg.index, i)) == lg.graph.adj[i]


def test_lmap_invert_round_trip(petersen, heawood, tutte):
    for g, s in ((petersen, 2), (heawood, 3), (tutte, 4)):
        lg = line_graph(g)
        for geo in enumerate_geodesics(g, s):
            image = lmap(lg.index, geo)
            assert lmap_invert(lg.index, image) == geo


def test_lmap_invert_rejects_non_geodesics(k4):
    idx = line_graph(k4).index
    with pytest.raises(ValueError):
        lmap_invert(idx, (0,))
    with pytest.raises(ValueError):
        lmap_invert(idx, (0, 99))
    # a walk in the line graph that is not a geodesic: rank pair at distance 0
    with pytest.raises(ValueError):
        lmap_invert(idx, (0, 0))


def test_bijection_characterization():
    """Onto all (s-1)-arcs exactly for s = 2 or cycle / path hosts."""
    c6 = catalog("cycle(6)")
    p7 = catalog("path(7)")
    pet = catalog("petersen")
    k4 = catalog("complete(4)")

    def onto(g, s):
        lg = line_graph(g)
        image = {lmap(lg.index, a) for a in enumerate_arcs(g, s)}
        return image == set(enumerate_arcs(lg.graph, s - 1))

    assert onto(c6, 3) and onto(c6, 4)
    assert onto(p7, 3)
    assert onto(pet, 2) and onto(k4, 2)   # s = 2 branch
    assert not onto(pet, 3)
    assert not onto(k4, 3)


def test_geodesic_images_are_geodesics(petersen, heawood, cube):
    for g, s in ((petersen, 2), (heawood, 3), (cube, 3)):
        lg = line_graph(g)
        for geo in enumerate_geodesics(g, s):
            assert is_geodesic(lg.graph, lmap(lg.index, geo))


def test_image_equals_geodesics_frozen_cases(petersen, k4):
    ok, witness = image_equals_geodesics(petersen, 3)
    assert ok and witness is None
    ok, witness = image_equals_geodesics(k4, 3)
    assert not ok and witness is not None
    # girth 3 >= 2 always satisfies the s=2 threshold
    for g in (petersen, k4, catalog("k33")):
        assert image_equals_geodesics(g, 2)[0]


def test_image_equals_geodesics_validates_input(petersen):
    with pytest.raises(ValueError):
        image_equals_geodesics(petersen, 1)
    with pytest.raises(ValueError):
        image_equals_geodesics(build_graph(4, [(0, 1), (2, 3)]), 2)
    with pytest.raises(ValueError):
        image_equals_geodesics(petersen, 9)  # line diameter 3, so s tops out at 4
