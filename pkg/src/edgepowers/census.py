"""Small-instance enumeration and the census sweeps.

Unlabeled trees are grown leaf by leaf and deduplicated by a centre-rooted
canonical string; each survivor is relabelled in its canonical DFS order so
that output is reproducible.  Small general graphs are deduplicated by
minimising the sorted edge list over all vertex permutations, which is only
sensible for ``n <= 6``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Iterator, Sequence

from .bounded_powers import delta, top_bounded_generators
from .classification import classify_complete_graph, classify_tree_unit_caps, gorenstein
from .graphs import (
    Graph,
    complete_graph,
    complete_multipartite_parts,
    connected_components,
    deficiency_graph,
    maximum_matching_number,
)
from .toric_oracle import DEFAULT_MAX_ELEMENTS, GorensteinVerdict, gorenstein_oracle

# -- trees -------------------------------------------------------------------


def tree_centers(T: Graph) -> list[int]:
    if T.n <= 2:
        return list(range(T.n))
    deg = list(T.degrees())
    layer = [v for v in range(T.n) if deg[v] == 1]
    left = T.n
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            for u in T.neighbors(v):
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        layer = nxt
    return sorted(layer)


def _encode(T: Graph, root: int, parent: int) -> tuple[str, list[int]]:
    kids = [_encode(T, u, root) for u in sorted(T.neighbors(root)) if u != parent]
    kids.sort(key=lambda k: k[0])
    order = [root]
    for _, sub in kids:
        order.extend(sub)
    return "(" + "".join(k for k, _ in kids) + ")", order


def tree_canonical(T: Graph) -> tuple[str, list[int]]:
    """Canonical string of a tree and a vertex order realising it."""
    return min((_encode(T, c, -1) for c in tree_centers(T)), key=lambda t: t[0])


def relabel(G: Graph, order: Sequence[int]) -> Graph:
    pos = {v: k for k, v in enumerate(order)}
    return Graph(G.n, [(pos[i], pos[j]) for i, j in G.edges])


def free_trees(n: int) -> list[Graph]:
    """All unlabeled trees on ``n`` vertices, canonically labelled and sorted."""
    if n < 1:
        return []
    level = {"()": Graph(1)}
    for m in range(2, n + 1):
        nxt: dict[str, Graph] = {}
        for T in level.values():
            for v in range(T.n):
                S = Graph(m, list(T.edges) + [(v, m - 1)])
                key, order = tree_canonical(S)
                if key not in nxt:
                    nxt[key] = relabel(S, order)
        level = nxt
    return [level[k] for k in sorted(level)]


# -- small graphs ------------------------------------------------------------


def graph_canonical(G: Graph) -> tuple[tuple[int, int], ...]:
    best = None
    for perm in permutations(range(G.n)):
        key = tuple(sorted(tuple(sorted((perm[i], perm[j]))) for i, j in G.edges))
        if best is None or key < best:
            best = key
    return best


def small_graphs(n: int, connected: bool = True) -> list[Graph]:
    """Unlabeled graphs on ``n`` vertices without isolated vertices."""
    pairs = list(combinations(range(n), 2))
    seen = {}
    for bits in range(1 << len(pairs)):
        G = Graph(n, [p for k, p in enumerate(pairs) if bits >> k & 1])
        if G.isolated_vertices() or (connected and len(connected_components(G)) != 1):
            continue
        key = graph_canonical(G)
        if key not in seen:
            seen[key] = Graph(n, key)
    return [seen[k] for k in sorted(seen)]


def cap_vectors(n: int, max_cap: int) -> Iterator[tuple[int, ...]]:
    return product(range(1, max_cap + 1), repeat=n)


# -- census rows -------------------------------------------------------------


@dataclass
class CensusRow:
    ident: str
    fields: dict

    def tsv(self, columns: Sequence[str]) -> str:
        return "\t".join([self.ident] + [_fmt(self.fields.get(c)) for c in columns])


def _fmt(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (list, tuple)):
        return "(" + ",".join(_fmt(y) for y in x) + ")"
    return str(x)


def edges_1based(G: Graph) -> str:
    return " ".join(f"{i + 1}-{j + 1}" for i, j in G.edge_list)


TREE_COLUMNS = ("n", "edges", "case", "classify", "oracle", "hvector", "deficiency_parts")


def tree_census(
    max_n: int, *, max_elements: int = DEFAULT_MAX_ELEMENTS, deadline: float | None = None
) -> Iterator[CensusRow]:
    """Deficiency-2 trees with unit caps: tree case against the oracle."""
    for n in range(2, max_n + 1, 2):
        for idx, T in enumerate(free_trees(n)):
            if 2 * maximum_matching_number(T) != n - 2:
                continue
            tc = classify_tree_unit_caps(T)
            orc = gorenstein_oracle(
                top_bounded_generators(T, [1] * n), max_elements=max_elements, deadline=deadline
            )
            D, labels = deficiency_graph(T).as_graph()
            parts = complete_multipartite_parts(D)
            yield CensusRow(
                f"tree-n{n}-{idx}",
                {
                    "n": n,
                    "edges": edges_1based(T),
                    "case": tc.case,
                    "classify": tc.gorenstein,
                    "oracle": orc.gorenstein,
                    "hvector": orc.hilbert.hvector,
                    "deficiency_parts": tuple(len(p) for p in parts) if parts else None,
                },
            )


CAPS_COLUMNS = ("caps", "delta", "gens", "dim", "hvector", "verdict", "method", "case")


def _verdict_fields(G: Graph, caps, verdict: GorensteinVerdict) -> dict:
    gens = top_bounded_generators(G, caps)
    h = verdict.hilbert
    return {
        "caps": caps,
        "delta": delta(G, caps),
        "gens": len(gens),
        "dim": h.dim if h else None,
        "hvector": h.hvector if h else None,
        "verdict": verdict.gorenstein,
        "method": verdict.method,
        "case": verdict.case,
    }


def caps_census(
    G: Graph, max_cap: int, *, max_elements: int = DEFAULT_MAX_ELEMENTS, deadline: float | None = None
) -> Iterator[CensusRow]:
    for caps in cap_vectors(G.n, max_cap):
        v = gorenstein(G, caps, "both", max_elements=max_elements, deadline=deadline)
        yield CensusRow("caps-" + "-".join(map(str, caps)), _verdict_fields(G, caps, v))


COMPLETE_COLUMNS = ("n", "kind") + CAPS_COLUMNS


def complete_census(
    max_n: int, max_cap: int, *, max_elements: int = DEFAULT_MAX_ELEMENTS, deadline: float | None = None
) -> Iterator[CensusRow]:
    for n in range(2, max_n + 1):
        K = complete_graph(n)
        for caps in cap_vectors(n, max_cap):
            v = gorenstein(K, caps, "both", max_elements=max_elements, deadline=deadline)
            fields = {"n": n, "kind": classify_complete_graph(n, caps).kind}
            fields.update(_verdict_fields(K, caps, v))
            yield CensusRow(f"K{n}-" + "-".join(map(str, caps)), fields)
