"""Shared helpers: small independent reference implementations used as oracles."""

from __future__ import annotations

import sys
from itertools import combinations_with_replacement

import networkx as nx

from edgepowers import Graph


def to_nx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges)
    return H


def brute_delta(G: Graph, caps) -> int:
    """Largest edge multiset respecting caps, by plain enumeration."""
    edges = G.edge_list
    best = 0
    q = 1
    while True:
        found = False
        for ms in combinations_with_replacement(edges, q):
            deg = [0] * G.n
            for i, j in ms:
                deg[i] += 1
                deg[j] += 1
            if all(d <= c for d, c in zip(deg, caps)):
                found = True
                break
        if not found:
            return best
        best = q
        q += 1


def brute_generators(G: Graph, caps) -> set[tuple[int, ...]]:
    """Degree vectors of all top-size edge multisets respecting caps."""
    q = brute_delta(G, caps)
    out = set()
    for ms in combinations_with_replacement(G.edge_list, q):
        deg = [0] * G.n
        for i, j in ms:
            deg[i] += 1
            deg[j] += 1
        if all(d <= c for d, c in zip(deg, caps)):
            out.add(tuple(deg))
    return out


def brute_hilbert(gens, kmax: int) -> list[int]:
    layer = {tuple(0 for _ in gens[0])}
    out = [1]
    for _ in range(kmax):
        layer = {tuple(a + b for a, b in zip(x, g)) for x in layer for g in gens}
        out.append(len(layer))
    return out


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
