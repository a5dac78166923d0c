"""Derived graphs (line, subdivision, clique) and a small catalog of named graphs.

Edge numbering is the load-bearing convention here: every derived object
orders the host's edges lexicographically by (min, max) endpoint pair, and
that rank order is what ties a line-graph vertex back to a host edge.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property

from .graphs import Edge, Graph, build_graph


@dataclass(frozen=True)
class EdgeIndex:
    """Lexicographically ranked edge list of a host graph."""

    host: Graph
    edges: tuple[Edge, ...]

    @staticmethod
    def from_graph(g: Graph) -> "EdgeIndex":
        return EdgeIndex(g, g.edges)

    @cached_property
    def rank(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def rank_of(self, u: int, v: int) -> int:
        """Rank of the edge {u, v}; ValueError when it is not an edge."""
        key = (u, v) if u < v else (v, u)
        try:
            return self.rank[key]
        except KeyError:
            raise ValueError(f"{u}-{v} is not an edge of the host") from None

    def __len__(self):
        return len(self.edges)


@dataclass(frozen=True)
class DerivedGraph:
    """A constructed graph plus the data tying its vertices to the host.

    kind is one of "line", "subdivision", "clique".  index is set for line
    and subdivision graphs (edge-vertex i of a subdivision is index.edges[i]),
    tags marks subdivision vertices as "vertex" or "edge", and cliques lists
    the maximum cliques backing a clique graph's vertices.
    """

    graph: Graph
    kind: str
    index: EdgeIndex | None = None
    tags: tuple[str, ...] | None = None
    cliques: tuple[tuple[int, ...], ...] | None = None


def _derived_name(g: Graph, prefix: str) -> str | None:
    return f"{prefix}({g.name})" if g.name else None


def line_graph(g: Graph) -> DerivedGraph:
    """Line graph: one vertex per host edge, adjacent iff the edges share an endpoint.

    Requires at least one edge, since the empty graph is not representable.
    """
    if g.m == 0:
        raise ValueError("line graph of an edgeless graph is empty")
    index = EdgeIndex.from_graph(g)
    pairs = []
    for v in range(g.n):
        incident = [index.rank_of(v, w) for w in g.adj[v]]
        pairs.extend(itertools.combinations(incident, 2))
    lg = build_graph(len(index), pairs, name=_derived_name(g, "L"))
    return DerivedGraph(lg, "line", index=index)


def subdivision_graph(g: Graph) -> DerivedGraph:
    """Subdivision: one new vertex in the middle of every host edge.

    Host vertex v keeps id v; edge of rank i becomes vertex n + i.  The
    result is bipartite between the "vertex" and "edge" classes.
    """
    if g.m == 0:
        raise ValueError("subdividing an edgeless graph changes nothing")
    index = EdgeIndex.from_graph(g)
    edges = []
    for i, (u, v) in enumerate(index.edges):
        edges.append((u, g.n + i))
        edges.append((v, g.n + i))
    sg = build_graph(g.n + len(index), edges, name=_derived_name(g, "S"))
    tags = ("vertex",) * g.n + ("edge",) * len(index)
    return DerivedGraph(sg, "subdivision", index=index, tags=tags)


def _maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All maximal cliques, via Bron-Kerbosch with pivoting."""
    out: list[tuple[int, ...]] = []
    nbr = [set(row) for row in g.adj]

    def expand(r: set, p: set, x: set):
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda u: len(nbr[u] & p))
        for v in sorted(p - nbr[pivot]):
            expand(r | {v}, p & nbr[v], x & nbr[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(range(g.n)), set())
    return sorted(out)


def clique_graph(g: Graph) -> DerivedGraph:
    """Maximum-clique graph: vertices are the largest cliques, adjacent iff they meet.

    On an edgeless graph the maximum cliques are the single vertices, so the
    result is an edgeless copy of the host.
    """
    cliques = _maximal_cliques(g)
    top = max(len(c) for c in cliques)
    best = [c for c in cliques if len(c) == top]
    pairs = [
        (i, j)
        for i, j in itertools.combinations(range(len(best)), 2)
        if set(best[i]) & set(best[j])
    ]
    cg = build_graph(len(best), pairs, name=_derived_name(g, "C"))
    return DerivedGraph(cg, "clique", cliques=tuple(best))


# --- catalog ---------------------------------------------------------------


def _complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete(n) needs n >= 1")
    return build_graph(n, itertools.combinations(range(n), 2), name=f"complete({n})")


def _cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle(n) needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)], name=f"cycle({n})")


def _path(r: int) -> Graph:
    # path(r) is the path of length r: r edges on r + 1 vertices.
    if r < 1:
        raise ValueError("path(r) needs r >= 1")
    return build_graph(r + 1, [(i, i + 1) for i in range(r)], name=f"path({r})")


def _complete_multipartite(m: int, b: int) -> Graph:
    """m parts of b vertices each; part i holds vertices i*b .. i*b+b-1."""
    if m < 2 or b < 1:
        raise ValueError("complete_multipartite(m, b) needs m >= 2, b >= 1")
    n = m * b
    part = lambda v: v // b
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if part(u) != part(v)]
    return build_graph(n, edges, name=f"complete_multipartite({m},{b})")


def _petersen() -> Graph:
    """Vertices are the 2-subsets of {0..4} in lex order; adjacency is disjointness."""
    pairs = list(itertools.combinations(range(5), 2))
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(10), 2)
        if not set(pairs[i]) & set(pairs[j])
    ]
    return build_graph(10, edges, name="petersen")


def _heawood() -> Graph:
    """Point-line incidence graph of the seven-point projective plane.

    Points are 0..6; line i is {i, i+1, i+3} mod 7 (a perfect difference
    set), stored as vertex 7 + i.
    """
    edges = []
    for i in range(7):
        for p in (i, (i + 1) % 7, (i + 3) % 7):
            edges.append((p, 7 + i))
    return build_graph(14, edges, name="heawood")


def _tutte_8_cage() -> Graph:
    """Incidence graph of the generalized quadrangle of order 2.

    Points are the 15 2-subsets of {0..5} (lex order, ids 0..14); lines are
    the 15 perfect matchings of those six symbols into three pairs (lex
    order, ids 15..29); a point lies on a line when its pair is one of the
    matching's three.
    """
    duads = list(itertools.combinations(range(6), 2))
    matchings = []
    for p1 in duads:
        rest = [x for x in range(6) if x not in p1]
        if p1[0] != 0:
            continue
        for k in range(1, 4):
            p2 = (rest[0], rest[k])
            p3 = tuple(x for x in rest[1:] if x != rest[k])
            matchings.append(tuple(sorted((p1, p2, p3))))
    matchings = sorted(set(matchings))
    edges = []
    for j, lines in enumerate(matchings):
        for pair in lines:
            edges.append((duads.index(pair), 15 + j))
    return build_graph(30, edges, name="tutte_8_cage")


_ICOSAHEDRON_ADJ = {
    0: (1, 5, 7, 8, 11),
    1: (2, 5, 6, 8),
    2: (3, 6, 8, 9),
    3: (4, 6, 9, 10),
    4: (5, 6, 10, 11),
    5: (6, 11),
    7: (8, 9, 10, 11),
    8: (9,),
    9: (10,),
    10: (11,),
}


def _icosahedron() -> Graph:
    """1-skeleton of the regular icosahedron: 12 vertices, 30 edges, 5-regular."""
    edges = [(u, v) for u, row in _ICOSAHEDRON_ADJ.items() for v in row]
    return build_graph(12, edges, name="icosahedron")


def _k33() -> Graph:
    """Complete bipartite graph on parts {0,1,2} and {3,4,5}."""
    g = build_graph(6, [(u, v) for u in range(3) for v in range(3, 6)], name="k33")
    return g


_NAMED = {
    "petersen": _petersen,
    "heawood": _heawood,
    "tutte_8_cage": _tutte_8_cage,
    "icosahedron": _icosahedron,
    "k33": _k33,
}

_PARAM = re.compile(r"^(complete|cycle|path|complete_multipartite)\((\d+)(?:\s*,\s*(\d+))?\)$")


def catalog(name: str) -> Graph:
    """Named graph by catalog string, e.g. "petersen" or "complete_multipartite(3,2)"."""
    key = name.strip().lower().replace(" ", "")
    if key in _NAMED:
        return _NAMED[key]()
    m = _PARAM.match(key)
    if m:
        kind, a, b = m.group(1), int(m.group(2)), m.group(3)
        if kind == "complete_multipartite":
            if b is None:
                raise ValueError("complete_multipartite needs two parameters")
            return _complete_multipartite(a, int(b))
        if b is not None:
            raise ValueError(f"{kind} takes one parameter")
        return {"complete": _complete, "cycle": _cycle, "path": _path}[kind](a)
    raise ValueError(f"unknown catalog name {name!r}")


def catalog_entries() -> list[tuple[str, str]]:
    """(name, short description) pairs for the CLI listing."""
    return [
        ("complete(n)", "complete graph on n vertices"),
        ("cycle(n)", "cycle on n >= 3 vertices"),
        ("path(r)", "path of length r (r edges, r+1 vertices)"),
        ("complete_multipartite(m,b)", "m parts of b vertices, all cross edges"),
        ("petersen", "2-subsets of a 5-set, adjacent when disjoint"),
        ("heawood", "point-line incidence of the 7-point plane"),
        ("tutte_8_cage", "incidence graph of the order-2 generalized quadrangle"),
        ("icosahedron", "1-skeleton of the regular icosahedron"),
        ("k33", "complete bipartite 3+3"),
    ]
