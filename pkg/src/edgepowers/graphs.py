"""Finite simple graphs, matchings, and the recognition routines built on them.

Vertices are ``0 .. n-1`` internally.  Every routine here is exact and meant
for desk-scale graphs (a few dozen vertices at most); matchings are found by
a memoised search over bitmasks of remaining vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

from .errors import InputError

Edge = tuple[int, int]


def _norm_edge(i: int, j: int) -> Edge:
    return (i, j) if i < j else (j, i)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple loopless graph on vertices ``0 .. n-1``.

    ``edges`` may be given as any iterable of pairs; it is normalised to a
    frozenset of ``(i, j)`` with ``i < j``.
    """

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InputError("vertex count must be nonnegative")
        seen = set()
        for e in self.edges:
            i, j = (int(x) for x in e)
            if i == j:
                raise InputError(f"loop at vertex {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise InputError(f"edge {(i, j)} out of range for n={self.n}")
            e2 = _norm_edge(i, j)
            if e2 in seen:
                raise InputError(f"duplicate edge {e2}")
            seen.add(e2)
        object.__setattr__(self, "edges", frozenset(seen))

    # -- basic structure -------------------------------------------------

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adj_mask(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for i, j in self.edges:
            masks[i] |= 1 << j
            masks[j] |= 1 << i
        return tuple(masks)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(_bits(self.adj_mask[v]))

    def degree(self, v: int) -> int:
        return self.adj_mask[v].bit_count()

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj_mask[i] >> j & 1)

    def degrees(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self.adj_mask)

    def isolated_vertices(self) -> list[int]:
        return [v for v, m in enumerate(self.adj_mask) if m == 0]

    def leaves(self) -> list[int]:
        return [v for v, m in enumerate(self.adj_mask) if m.bit_count() == 1]

    def require_no_isolated(self) -> None:
        iso = self.isolated_vertices()
        if iso:
            raise InputError(f"graph has isolated vertices {iso}")

    def is_tree(self) -> bool:
        return self.n >= 1 and len(self.edges) == self.n - 1 and len(connected_components(self)) == 1

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on ``vertices`` plus the map new index -> old index."""
        labels = tuple(sorted(set(vertices)))
        index = {v: k for k, v in enumerate(labels)}
        edges = [(index[i], index[j]) for i, j in self.edges if i in index and j in index]
        return Graph(len(labels), edges), labels

    def remove_vertices(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        drop = set(vertices)
        return self.induced_subgraph(v for v in range(self.n) if v not in drop)

    def complement(self) -> "Graph":
        return Graph(self.n, [e for e in combinations(range(self.n), 2) if e not in self.edges])

    @cached_property
    def _matcher(self) -> "_Matcher":
        return _Matcher(self.adj_mask)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for g in graphs:
        edges.extend((i + offset, j + offset) for i, j in g.edges)
        offset += g.n
    return Graph(offset, edges)


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """Star with center ``leaves`` (the last vertex) and leaves ``0 .. leaves-1``."""
    return Graph(leaves + 1, [(i, leaves) for i in range(leaves)])


# -- components -----------------------------------------------------------


def connected_components(G: Graph) -> list[tuple[Graph, tuple[int, ...]]]:
    """Induced components, ordered by their smallest original vertex."""
    seen = 0
    out = []
    for v in range(G.n):
        if seen >> v & 1:
            continue
        comp, frontier = 1 << v, 1 << v
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= G.adj_mask[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(G.induced_subgraph(_bits(comp)))
    return out


def is_complete(G: Graph) -> bool:
    return len(G.edges) == G.n * (G.n - 1) // 2


# -- matchings ------------------------------------------------------------


class _Matcher:
    """Maximum matchings of induced subgraphs, keyed by vertex bitmask."""

    def __init__(self, adj: tuple[int, ...]):
        self.adj = adj
        self.memo: dict[int, int] = {0: 0}

    def size(self, mask: int) -> int:
        memo = self.memo
        if mask in memo:
            return memo[mask]
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        best = self.size(rest)
        cap = mask.bit_count() // 2
        if best < cap:
            for u in _bits(self.adj[v] & rest):
                best = max(best, 1 + self.size(rest & ~(1 << u)))
                if best == cap:
                    break
        memo[mask] = best
        return best

    def one(self, mask: int) -> list[Edge]:
        target = self.size(mask)
        out: list[Edge] = []
        while target:
            low = mask & -mask
            v = low.bit_length() - 1
            rest = mask ^ low
            if self.size(rest) == target:
                mask = rest
                continue
            for u in _bits(self.adj[v] & rest):
                if 1 + self.size(rest & ~(1 << u)) == target:
                    out.append((v, u))
                    mask = rest & ~(1 << u)
                    target -= 1
                    break
        return out

    def all(self, mask: int) -> Iterator[list[Edge]]:
        target = self.size(mask)
        if target == 0:
            yield []
            return
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        if self.size(rest) == target:
            yield from self.all(rest)
        for u in _bits(self.adj[v] & rest):
            sub = rest & ~(1 << u)
            if 1 + self.size(sub) == target:
                for m in self.all(sub):
                    yield [(v, u)] + m


def maximum_matching_number(G: Graph) -> int:
    return G._matcher.size(G.full_mask)


def maximum_matching(G: Graph) -> list[Edge]:
    return sorted(G._matcher.one(G.full_mask))


def all_maximum_matchings(G: Graph) -> list[list[Edge]]:
    """Every maximum matching, each sorted, in the deterministic search order."""
    return [sorted(m) for m in G._matcher.all(G.full_mask)]


def has_perfect_matching(G: Graph) -> bool:
    return G.n % 2 == 0 and 2 * maximum_matching_number(G) == G.n


def deficiency_vertices(G: Graph) -> frozenset[int]:
    """Vertices ``v`` such that ``G - v`` has a perfect matching."""
    if G.n % 2 == 0:
        return frozenset()
    m = G._matcher
    full = G.full_mask
    return frozenset(v for v in range(G.n) if 2 * m.size(full & ~(1 << v)) == G.n - 1)


def rho(G: Graph) -> int:
    return len(deficiency_vertices(G))


def covered_by_some_maximum_matching(G: Graph, v: int) -> bool:
    m = G._matcher
    full = G.full_mask
    target = m.size(full)
    rest = full & ~(1 << v)
    return any(1 + m.size(rest & ~(1 << u)) == target for u in _bits(G.adj_mask[v]))


@dataclass(frozen=True)
class DeficiencyGraph:
    """Pairs of vertices left uncovered by maximum matchings of a deficiency-2 graph.

    ``witnesses[e]`` is a maximum matching of the source graph missing exactly ``e``.
    """

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    witnesses: dict

    def as_graph(self) -> tuple[Graph, tuple[int, ...]]:
        index = {v: k for k, v in enumerate(self.vertices)}
        return Graph(len(self.vertices), [(index[i], index[j]) for i, j in self.edges]), self.vertices


def deficiency_graph(G: Graph) -> DeficiencyGraph:
    if G.n % 2 or 2 * maximum_matching_number(G) != G.n - 2:
        raise InputError("deficiency graph needs match(G) = (n-2)/2")
    m = G._matcher
    full = G.full_mask
    edges, witnesses = [], {}
    for u, w in combinations(range(G.n), 2):
        sub = full & ~(1 << u) & ~(1 << w)
        if 2 * m.size(sub) == G.n - 2:
            edges.append((u, w))
            witnesses[(u, w)] = sorted(m.one(sub))
    verts = tuple(sorted({v for e in edges for v in e}))
    return DeficiencyGraph(verts, tuple(edges), witnesses)


# -- multipartite recognition ----------------------------------------------


@dataclass(frozen=True)
class MultipartiteSpec:
    """A complete multipartite graph with a matching of cross edges removed."""

    parts: tuple[tuple[int, ...], ...]
    removed: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(sorted(tuple(sorted(p)) for p in self.parts))
        if len(parts) < 2 or any(not p for p in parts):
            raise InputError("need at least two nonempty parts")
        flat = [v for p in parts for v in p]
        if sorted(flat) != list(range(len(flat))):
            raise InputError("parts must partition the vertices 0..n-1")
        where = {v: k for k, p in enumerate(parts) for v in p}
        removed = tuple(sorted(_norm_edge(*e) for e in self.removed))
        touched: set[int] = set()
        for i, j in removed:
            if where[i] == where[j]:
                raise InputError(f"removed edge {(i, j)} lies inside a part")
            if i in touched or j in touched:
                raise InputError("removed edges do not form a matching")
            touched.update((i, j))
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "removed", removed)

    @property
    def n(self) -> int:
        return sum(len(p) for p in self.parts)

    def part_of(self, v: int) -> int:
        return next(k for k, p in enumerate(self.parts) if v in p)

    def graph(self) -> Graph:
        gone = set(self.removed)
        edges = [
            (i, j)
            for a, b in combinations(self.parts, 2)
            for i in a
            for j in b
            if _norm_edge(i, j) not in gone
        ]
        return Graph(self.n, edges)


def complete_multipartite_parts(G: Graph) -> tuple[tuple[int, ...], ...] | None:
    """Parts of ``G`` as a complete multipartite graph (at least two), or None."""
    parts = []
    for comp_graph, labels in connected_components(G.complement()):
        if not is_complete(comp_graph):
            return None
        parts.append(labels)
    if len(parts) < 2:
        return None
    return tuple(parts)


def recognize_multipartite_minus_matching(G: Graph) -> MultipartiteSpec | None:
    """Write ``G`` as ``K_{n_1..n_m} - M`` if possible.

    Vertices are placed in index order; each goes into the first existing part
    that accepts it, and a fresh part is tried last.  A non-edge between two
    parts becomes a removed matching edge.
    """
    G.require_no_isolated()
    n = G.n
    parts: list[list[int]] = []
    part_of = [-1] * n
    partner = [-1] * n

    def place(v: int) -> bool:
        if v == n:
            return len(parts) >= 2
        for p in range(len(parts) + 1):
            if p < len(parts) and any(G.has_edge(v, u) for u in parts[p]):
                continue
            # non-neighbours of v already placed in other parts become removed edges
            missing = [u for u in range(v) if part_of[u] != p and not G.has_edge(u, v)]
            if len(missing) > 1 or (missing and partner[missing[0]] != -1):
                continue
            if p == len(parts):
                parts.append([])
            parts[p].append(v)
            part_of[v] = p
            if missing:
                partner[missing[0]], partner[v] = v, missing[0]
            if place(v + 1):
                return True
            parts[p].pop()
            part_of[v] = -1
            if missing:
                partner[missing[0]], partner[v] = -1, -1
            if not parts[p]:
                parts.pop()
        return False

    if not place(0):
        return None
    removed = sorted({_norm_edge(v, partner[v]) for v in range(n) if partner[v] != -1})
    spec = MultipartiteSpec(tuple(tuple(p) for p in parts), tuple(removed))
    assert spec.graph().edges == G.edges
    return spec
