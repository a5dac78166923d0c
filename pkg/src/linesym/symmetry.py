"""Automorphism groups, induced edge actions, orbits, and transitivity tests.

Permutations compose in application order: (p * q) means "apply p, then q",
so acting on the right with exponent-style notation composes the obvious
way.  Group orders come from a stabilizer chain (orbit sizes multiplied down
the chain), never from enumerating elements; the element list is only
materialized on request and only below a size cap.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from . import refinement
from .constructions import EdgeIndex
from .graphs import Graph
from .metrics import bfs_distances, diameter
from .walks import enumerate_arcs, enumerate_geodesics

ELEMENT_CAP = 10**6


@dataclass(frozen=True)
class Permutation:
    """Bijection on 0..n-1, stored as its image tuple."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(n)):
            raise ValueError("images do not form a bijection")

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(n)))

    @staticmethod
    def from_one_line(text: str) -> "Permutation":
        """Parse one-line notation, e.g. "2 0 1 3" or "2,0,1,3"."""
        parts = text.replace(",", " ").split()
        if not parts:
            raise ValueError("empty permutation")
        return Permutation(tuple(int(p) for p in parts))

    def one_line(self) -> str:
        return " ".join(str(i) for i in self.images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, v: int) -> int:
        return self.images[v]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """self, then other."""
        return Permutation(tuple(other.images[i] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def apply(self, seq: Sequence[int]) -> tuple[int, ...]:
        """Image of a tuple under the right action, coordinate by coordinate."""
        return tuple(self.images[v] for v in seq)

    def is_identity(self) -> bool:
        return all(i == v for v, i in enumerate(self.images))


# --- stabilizer chain -------------------------------------------------------


def _compose(p, q):
    # raw tuples: apply p, then q
    return tuple(q[i] for i in p)


def _invert(p):
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def _stabilizer_chain(gens: Sequence[tuple[int, ...]], n: int):
    """Deterministic chain build: levels are completed bottom-up, and a
    residue surfacing at level j sends processing back down to j.

    Returns (base, transversals); the group order is the product of the
    transversal sizes.  Each transversal maps an orbit point t to a group
    element carrying the level's base point to t.  The strong set is global:
    level i works with every strong generator fixing base[:i] pointwise, so
    a generator discovered deep in the chain still contributes to every
    shallower orbit it belongs to.
    """
    identity = tuple(range(n))
    strong: list[tuple[int, ...]] = []
    for g in gens:
        g = tuple(g)
        if g != identity and g not in strong:
            strong.append(g)
    base: list[int] = []

    def cover(p):
        # every strong generator must move some base point
        if all(p[b] == b for b in base):
            base.append(min(v for v in range(n) if p[v] != v))

    for p in strong:
        cover(p)
    trans: list[dict[int, tuple[int, ...]]] = [{} for _ in base]

    def gens_at(i):
        return [p for p in strong if all(p[base[j]] == base[j] for j in range(i))]

    def rebuild(i):
        table = {base[i]: identity}
        frontier = [base[i]]
        members = gens_at(i)
        while frontier:
            nxt = []
            for pt in frontier:
                for s in members:
                    img = s[pt]
                    if img not in table:
                        table[img] = _compose(table[pt], s)
                        nxt.append(img)
            frontier = nxt
        trans[i] = table
        return members

    def strip(p, start):
        for j in range(start, len(base)):
            t = p[base[j]]
            if t not in trans[j]:
                return p, j
            p = _compose(p, _invert(trans[j][t]))
        return p, len(base)

    i = len(base) - 1
    while i >= 0:
        members = rebuild(i)
        new_level = None
        for t in sorted(trans[i]):
            u = trans[i][t]
            for s in members:
                schreier = _compose(_compose(u, s), _invert(trans[i][s[t]]))
                if schreier == identity:
                    continue
                residue, j = strip(schreier, i + 1)
                if residue != identity:
                    strong.append(residue)
                    if j == len(base):
                        cover(residue)
                        trans.append({})
                    new_level = j
                    break
            if new_level is not None:
                break
        if new_level is not None:
            i = new_level
        else:
            i -= 1
    return base, trans


def _chain_order(trans) -> int:
    return math.prod(len(t) for t in trans) if trans else 1


def _chain_elements(trans, n):
    """Every group element exactly once, as transversal products."""
    elems = [tuple(range(n))]
    for level in reversed(trans):
        elems = [_compose(h, u) for h in elems for u in level.values()]
    return elems


@dataclass(frozen=True)
class AutGroup:
    """A permutation group given by generators, with an exact order."""

    degree: int
    generators: tuple[Permutation, ...]
    order: int
    _transversals: tuple = field(repr=False, compare=False, default=())

    @staticmethod
    def from_permutations(degree: int, perms: Iterable[Permutation]) -> "AutGroup":
        gens = tuple(p for p in perms if not p.is_identity())
        for p in gens:
            if p.degree != degree:
                raise ValueError("generator degree mismatch")
        _, trans = _stabilizer_chain([p.images for p in gens], degree)
        return AutGroup(degree, gens, _chain_order(trans), tuple(trans))

    @staticmethod
    def from_generators(g: Graph, perms: Iterable[Permutation]) -> "AutGroup":
        """Validating constructor: every generator must preserve g's edge set."""
        perms = tuple(perms)
        edge_set = set(g.edges)
        for p in perms:
            if p.degree != g.n:
                raise ValueError("generator degree does not match the graph")
            for u, v in g.edges:
                a, b = p(u), p(v)
                if ((a, b) if a < b else (b, a)) not in edge_set:
                    raise ValueError(f"permutation {p.one_line()!r} breaks edge {u}-{v}")
        return AutGroup.from_permutations(g.n, perms)

    def elements(self, cap: int = ELEMENT_CAP) -> tuple[Permutation, ...] | None:
        """Full enumeration when the order is at most cap, else None."""
        if self.order > cap:
            return None
        raw = _chain_elements(self._transversals, self.degree)
        return tuple(Permutation(p) for p in sorted(raw))


def automorphisms(g: Graph) -> AutGroup:
    """Full automorphism group of g via the refinement search kernel."""
    return _automorphisms_cached(g)


@lru_cache(maxsize=256)
def _automorphisms_cached(g: Graph) -> AutGroup:
    gens = refinement.automorphism_generators(g.adj)
    return AutGroup.from_permutations(g.n, (Permutation(p) for p in gens))


def induced_edge_action(index: EdgeIndex, p: Permutation) -> Permutation:
    """Action of a host automorphism on edge ranks: {u,v} goes to {p(u),p(v)}."""
    if p.degree != index.host.n:
        raise ValueError("permutation degree does not match the host")
    images = []
    for u, v in index.edges:
        a, b = p(u), p(v)
        if not index.host.has_edge(a, b):
            raise ValueError(f"permutation {p.one_line()!r} does not preserve edges")
        images.append(index.rank_of(a, b))
    return Permutation(tuple(images))


# --- orbits and transitivity -------------------------------------------------


@dataclass(frozen=True)
class OrbitPartition:
    """Orbit ids for a tuple universe, in the universe's given order."""

    universe: tuple[tuple[int, ...], ...]
    orbit_ids: tuple[int, ...]
    orbit_count: int

    def sizes(self) -> list[int]:
        counts = [0] * self.orbit_count
        for i in self.orbit_ids:
            counts[i] += 1
        return counts


def orbit_of(t: tuple[int, ...], group: AutGroup) -> set[tuple[int, ...]]:
    """Closure of one tuple under the generators, by breadth-first search."""
    gens = [p.images for p in group.generators]
    seen = {tuple(t)}
    q = deque(seen)
    while q:
        cur = q.popleft()
        for images in gens:
            img = tuple(images[v] for v in cur)
            if img not in seen:
                seen.add(img)
                q.append(img)
    return seen


def transitive_on(tuples: Sequence[tuple[int, ...]], group: AutGroup):
    """(is_transitive, OrbitPartition) for a tuple universe under the group.

    An empty universe is vacuously transitive.  Tuples reached by the action
    but missing from the universe are ignored when assigning ids, so a
    universe that is not closed under the group still gets a partition.
    """
    universe = tuple(tuples)
    pos = {t: i for i, t in enumerate(universe)}
    ids = [-1] * len(universe)
    count = 0
    for i, t in enumerate(universe):
        if ids[i] != -1:
            continue
        for member in orbit_of(t, group):
            j = pos.get(member)
            if j is not None:
                ids[j] = count
        count += 1
    part = OrbitPartition(universe, tuple(ids), count)
    return count <= 1, part


def _require_connected(g: Graph):
    if diameter(g) is None:
        raise ValueError("transitivity tests need a connected graph")


def is_s_arc_transitive(g: Graph, s: int, group: AutGroup | None = None) -> bool:
    """True iff g has an s-arc and the group is transitive on t-arcs for all t <= s.

    An orbit can never outgrow the group, so levels where the arc count
    already exceeds the order fail without a search.
    """
    _require_connected(g)
    if s < 1:
        raise ValueError("s must be at least 1")
    group = group if group is not None else automorphisms(g)
    for t in range(1, s + 1):
        arcs = enumerate_arcs(g, t)
        if not arcs:
            return False
        if len(arcs) > group.order:
            return False
        if not transitive_on(arcs, group)[0]:
            return False
    return True


def is_s_geodesic_transitive(g: Graph, s: int, group: AutGroup | None = None) -> bool:
    """True iff the group is transitive on i-geodesics for every i <= s."""
    _require_connected(g)
    d = diameter(g)
    if not 1 <= s <= d:
        raise ValueError(f"s={s} outside 1..diameter={d}")
    group = group if group is not None else automorphisms(g)
    for i in range(1, s + 1):
        geos = enumerate_geodesics(g, i)
        if len(geos) > group.order or not transitive_on(geos, group)[0]:
            return False
    return True


def is_distance_transitive(g: Graph, group: AutGroup | None = None) -> bool:
    """True iff the group is transitive on ordered pairs at each distance."""
    _require_connected(g)
    group = group if group is not None else automorphisms(g)
    d = diameter(g)
    pairs_by_dist: list[list[tuple[int, int]]] = [[] for _ in range(d + 1)]
    for u in range(g.n):
        dist = bfs_distances(g, u)
        for v in range(g.n):
            pairs_by_dist[dist[v]].append((u, v))
    for pairs in pairs_by_dist:
        if pairs and not transitive_on(pairs, group)[0]:
            return False
    return True
