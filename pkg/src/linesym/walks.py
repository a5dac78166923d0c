"""Arc and geodesic enumeration, and the map sending an arc to its edge sequence.

An s-arc is a walk (v0, ..., vs) whose consecutive vertices are adjacent and
which never immediately backtracks; an s-geodesic additionally has its
endpoints at distance exactly s.  Tuples of vertex ids represent both; a
"line tuple" is the corresponding tuple of edge ranks in a host's EdgeIndex.
Everything enumerates in lexicographic order so downstream reports are
reproducible.
"""

from __future__ import annotations

from collections import deque

from .constructions import EdgeIndex, line_graph
from .graphs import Graph
from .metrics import bfs_distances, diameter

ENUMERATION_CAP = 10_000_000


class EnumerationCapExceeded(RuntimeError):
    """Raised when an enumeration would produce more tuples than allowed."""


def is_walk(g: Graph, seq: tuple[int, ...]) -> bool:
    """True for a nonempty vertex sequence whose consecutive entries are adjacent."""
    if len(seq) < 1 or any(not 0 <= v < g.n for v in seq):
        return False
    return all(b in g.adj[a] for a, b in zip(seq, seq[1:]))


def is_arc(g: Graph, seq: tuple[int, ...]) -> bool:
    """True for a walk of length >= 1 with no immediate backtracking."""
    if len(seq) < 2 or not is_walk(g, seq):
        return False
    return all(seq[i - 1] != seq[i + 1] for i in range(1, len(seq) - 1))


def is_geodesic(g: Graph, seq: tuple[int, ...]) -> bool:
    """True for a walk realizing the distance between its endpoints."""
    if len(seq) < 2 or not is_walk(g, seq):
        return False
    return distance_ok(g, seq)


def distance_ok(g: Graph, seq) -> bool:
    return bfs_distances(g, seq[0])[seq[-1]] == len(seq) - 1


def enumerate_arcs(g: Graph, s: int, cap: int = ENUMERATION_CAP) -> list[tuple[int, ...]]:
    """All s-arcs in lexicographic order.

    Raises EnumerationCapExceeded once more than cap arcs have been found;
    the cap guards against accidental blowups on dense hosts, not memory
    behaviour in general.
    """
    if s < 1:
        raise ValueError("arcs need length at least 1")
    out: list[tuple[int, ...]] = []

    def extend(path: list[int]):
        if len(path) == s + 1:
            if len(out) >= cap:
                raise EnumerationCapExceeded(f"more than {cap} arcs of length {s}")
            out.append(tuple(path))
            return
        prev = path[-2] if len(path) > 1 else -1
        for w in g.adj[path[-1]]:
            if w != prev:
                path.append(w)
                extend(path)
                path.pop()

    for v in range(g.n):
        extend([v])
    return out


def enumerate_geodesics(g: Graph, s: int) -> list[tuple[int, ...]]:
    """All s-geodesics in lexicographic order; s must not exceed the diameter."""
    d = diameter(g)
    if d is None:
        raise ValueError("geodesics are only defined on connected graphs")
    if not 1 <= s <= d:
        raise ValueError(f"s={s} outside 1..diameter={d}")
    out: list[tuple[int, ...]] = []

    def extend(path: list[int], dist: list[int | None]):
        if len(path) == s + 1:
            out.append(tuple(path))
            return
        k = len(path)
        for w in g.adj[path[-1]]:
            if dist[w] == k:
                path.append(w)
                extend(path, dist)
                path.pop()

    for v in range(g.n):
        dist = bfs_distances(g, v)
        extend([v], dist)
    return out


def lmap(index: EdgeIndex, arc: tuple[int, ...]) -> tuple[int, ...]:
    """Edge-rank sequence of an s-arc (s >= 2): one rank per consecutive pair."""
    if len(arc) < 3:
        raise ValueError("the edge-sequence map needs an arc of length >= 2")
    if not is_arc(index.host, arc):
        raise ValueError(f"{arc} is not an arc of the host")
    return tuple(index.rank_of(a, b) for a, b in zip(arc, arc[1:]))


def line_neighbors(index: EdgeIndex, i: int) -> list[int]:
    """Ranks of the edges sharing an endpoint with edge i, sorted."""
    u, v = index.edges[i]
    out = {index.rank_of(u, w) for w in index.host.adj[u]}
    out |= {index.rank_of(v, w) for w in index.host.adj[v]}
    out.discard(i)
    return sorted(out)


def _line_distance(index: EdgeIndex, a: int, b: int) -> int | None:
    dist: dict[int, int] = {a: 0}
    q = deque([a])
    while q:
        e = q.popleft()
        if e == b:
            return dist[e]
        for f in line_neighbors(index, e):
            if f not in dist:
                dist[f] = dist[e] + 1
                q.append(f)
    return dist.get(b)


def lmap_invert(index: EdgeIndex, line_tuple: tuple[int, ...]) -> tuple[int, ...]:
    """Reconstruct the unique arc whose edge sequence is the given geodesic.

    The input must be a geodesic in the line graph, written as edge ranks.
    Interior vertices are the intersections of consecutive edges; the two
    endpoints are whatever remains of the first and last edge.
    """
    if len(line_tuple) < 2:
        raise ValueError("need at least two edge ranks to invert")
    if any(not 0 <= e < len(index.edges) for e in line_tuple):
        raise ValueError("edge rank out of range")
    for a, b in zip(line_tuple, line_tuple[1:]):
        if a == b or not set(index.edges[a]) & set(index.edges[b]):
            raise ValueError(f"{line_tuple} is not a walk in the line graph")
    if _line_distance(index, line_tuple[0], line_tuple[-1]) != len(line_tuple) - 1:
        raise ValueError(f"{line_tuple} is not a geodesic in the line graph")
    inner = []
    for a, b in zip(line_tuple, line_tuple[1:]):
        (shared,) = set(index.edges[a]) & set(index.edges[b])
        inner.append(shared)
    first = [v for v in index.edges[line_tuple[0]] if v != inner[0]]
    last = [v for v in index.edges[line_tuple[-1]] if v != inner[-1]]
    arc = tuple(first + inner + last)
    # Geodesics never let three consecutive edges share one vertex, so the
    # rebuilt sequence is automatically an arc; anything else is a bug.
    assert is_arc(index.host, arc), arc
    return arc


def image_equals_geodesics(g: Graph, s: int, cap: int = ENUMERATION_CAP):
    """Compare the image of all s-arcs with the (s-1)-geodesics of the line graph.

    Returns (equal, witness) where the witness is the smallest tuple in the
    symmetric difference, or None when the sets agree.  Requires a connected
    host with at least one s-arc and s - 1 within the line graph's diameter.
    """
    if s < 2:
        raise ValueError("comparison needs s >= 2")
    if diameter(g) is None:
        raise ValueError("host must be connected")
    line = line_graph(g)
    dl = diameter(line.graph)
    if s - 1 > dl:
        raise ValueError(f"s={s} exceeds line-graph diameter {dl} + 1")
    arcs = enumerate_arcs(g, s, cap=cap)
    if not arcs:
        raise ValueError(f"host has no {s}-arc")
    image = {lmap(line.index, a) for a in arcs}
    geos = set(enumerate_geodesics(line.graph, s - 1))
    if image == geos:
        return True, None
    return False, min(image ^ geos)
