"""Distance metrics and neighborhood classification.

Disconnected graphs have no diameter and forests have no girth; both cases
come back as None rather than an exception, so callers can gate on
connectivity themselves.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .graphs import Graph, VertexSet, induced_subgraph, is_regular, neighbors


def bfs_distances(g: Graph, source: int) -> list[int | None]:
    """Distances from source; None marks unreachable vertices."""
    if not 0 <= source < g.n:
        raise ValueError(f"vertex {source} out of range")
    dist: list[int | None] = [None] * g.n
    dist[source] = 0
    q = deque([source])
    while q:
        u = q.popleft()
        for w in g.adj[u]:
            if dist[w] is None:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def distance(g: Graph, u: int, v: int) -> int | None:
    """Length of a shortest u-v path, or None when v is unreachable from u."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return bfs_distances(g, u)[v]


def is_connected(g: Graph) -> bool:
    return all(d is not None for d in bfs_distances(g, 0))


def diameter(g: Graph) -> int | None:
    """Largest pairwise distance, or None for a disconnected graph."""
    best = 0
    for v in range(g.n):
        dist = bfs_distances(g, v)
        for d in dist:
            if d is None:
                return None
            best = max(best, d)
    return best


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None when the graph has no cycle.

    One BFS per root; a non-tree edge seen from root r closes a walk of
    length dist[u] + dist[w] + 1, which always contains a cycle, and for a
    root on a shortest cycle the bound is attained.
    """
    best: int | None = None
    for r in range(g.n):
        dist: list[int | None] = [None] * g.n
        parent = [-1] * g.n
        dist[r] = 0
        q = deque([r])
        while q:
            u = q.popleft()
            for w in g.adj[u]:
                if dist[w] is None:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif w != parent[u]:
                    cand = dist[u] + dist[w] + 1
                    if best is None or cand < best:
                        best = cand
    return best


def distance_partition(g: Graph, source: int) -> list[VertexSet]:
    """Vertices grouped by distance from source, nearest level first.

    Unreachable vertices are simply absent, so the level sizes sum to the
    size of source's component.
    """
    dist = bfs_distances(g, source)
    top = max(d for d in dist if d is not None)
    levels: list[list[int]] = [[] for _ in range(top + 1)]
    for v, d in enumerate(dist):
        if d is not None:
            levels[d].append(v)
    return [tuple(level) for level in levels]


@dataclass(frozen=True)
class LocalType:
    """Shape of one vertex's neighborhood graph.

    kind is "cycle" (params (n,)), "disjoint_cliques" (params (m, r) for m
    components of r vertices each), or "other" (params ()).  The witness is
    the induced neighborhood graph itself; it never takes part in equality.
    """

    kind: str
    params: tuple[int, ...]
    witness: Graph | None = field(default=None, compare=False)


@dataclass(frozen=True)
class LocalProfile:
    per_vertex: tuple[LocalType, ...]
    summary: LocalType | None


def _classify_local(local: Graph) -> LocalType:
    # Disjoint unions of equal cliques take precedence, so a triangle
    # neighborhood reads as one K3 rather than as a 3-cycle.
    comp_sizes = []
    seen = [False] * local.n
    all_cliques = True
    for v in range(local.n):
        if seen[v]:
            continue
        comp = [v]
        seen[v] = True
        stack = [v]
        while stack:
            u = stack.pop()
            for w in local.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comp_sizes.append(len(comp))
        if any(len(local.adj[u]) != len(comp) - 1 for u in comp):
            all_cliques = False
    if all_cliques and len(set(comp_sizes)) == 1:
        return LocalType("disjoint_cliques", (len(comp_sizes), comp_sizes[0]), local)
    if (
        local.n >= 3
        and len(comp_sizes) == 1
        and all(len(row) == 2 for row in local.adj)
    ):
        return LocalType("cycle", (local.n,), local)
    return LocalType("other", (), local)


def local_type(g: Graph) -> LocalProfile:
    """Classify every vertex's neighborhood; summary only when all agree.

    The summary is withheld on non-regular graphs even if the kinds happen
    to coincide.  An isolated vertex has an empty neighborhood and is
    classified "other" with no witness.
    """
    per = []
    for v in range(g.n):
        nb = neighbors(g, v)
        if not nb:
            per.append(LocalType("other", (), None))
            continue
        per.append(_classify_local(induced_subgraph(g, nb)))
    summary = None
    if is_regular(g) is not None and len({(t.kind, t.params) for t in per}) == 1:
        summary = per[0]
    return LocalProfile(tuple(per), summary)
