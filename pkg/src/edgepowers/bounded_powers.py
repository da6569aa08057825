"""Bounded top powers of edge ideals.

For a graph ``G`` and caps ``c`` the largest ``q`` with ``(I(G)^q)_c != 0`` is
the maximum size of an edge multiset whose degree at each vertex ``v`` stays
within ``c[v]``.  The minimal generators of ``(I(G)^q)_c`` at that ``q`` are
exactly the ``c``-bounded degree sequences of such multisets, so they are
enumerated as vectors of sum ``2q`` in the box ``[0, c]`` filtered by a
realizability check.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import InputError
from .graphs import Graph, connected_components

sys.setrecursionlimit(max(sys.getrecursionlimit(), 10000))

Vector = tuple[int, ...]


@dataclass(frozen=True)
class GeneratorSet:
    """Distinct exponent vectors of one common degree, stored in lex order."""

    members: tuple[Vector, ...]
    degree: int

    def __post_init__(self) -> None:
        members = tuple(sorted({tuple(int(x) for x in m) for m in self.members}))
        if len(members) != len(self.members):
            raise InputError("generator vectors must be pairwise distinct")
        if any(sum(m) != self.degree for m in members):
            raise InputError("generators must all have the stated degree")
        if members and len({len(m) for m in members}) != 1:
            raise InputError("generators must have equal length")
        object.__setattr__(self, "members", members)

    @classmethod
    def from_vectors(cls, vectors: Iterable[Sequence[int]]) -> "GeneratorSet":
        vecs = [tuple(int(x) for x in v) for v in vectors]
        if not vecs:
            raise InputError("empty generator set")
        return cls(tuple(vecs), sum(vecs[0]))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Vector]:
        return iter(self.members)

    def __contains__(self, v) -> bool:
        return tuple(v) in self._lookup

    @cached_property
    def _lookup(self) -> frozenset:
        return frozenset(self.members)

    @property
    def n(self) -> int:
        return len(self.members[0]) if self.members else 0

    def as_array(self) -> np.ndarray:
        return np.array(self.members, dtype=np.int64).reshape(len(self.members), self.n)


def check_caps(G: Graph, caps: Sequence[int]) -> Vector:
    caps = tuple(int(x) for x in caps)
    if len(caps) != G.n:
        raise InputError(f"cap vector has length {len(caps)}, graph has {G.n} vertices")
    if any(x < 1 for x in caps):
        raise InputError("caps must be >= 1")
    return caps


class _Realizer:
    # residual vectors are tuples; memo lives as long as this object
    def __init__(self, G: Graph):
        self.nbrs = [sorted(G.neighbors(v)) for v in range(G.n)]
        self.check = lru_cache(maxsize=None)(self._check)

    def _check(self, res: Vector) -> bool:
        v = next((i for i, r in enumerate(res) if r), None)
        if v is None:
            return True
        need = res[v]
        nb = [u for u in self.nbrs[v] if res[u]]
        if sum(res[u] for u in nb) < need:
            return False
        base = list(res)
        base[v] = 0
        for split in _compositions(need, [res[u] for u in nb]):
            nxt = base[:]
            for u, x in zip(nb, split):
                nxt[u] -= x
            if self.check(tuple(nxt)):
                return True
        return False


def _compositions(total: int, bounds: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All ``x`` with ``0 <= x_i <= bounds[i]`` and ``sum(x) == total``, lex ascending."""
    if not bounds:
        if total == 0:
            yield ()
        return
    tail = sum(bounds[1:])
    for x in range(max(0, total - tail), min(bounds[0], total) + 1):
        for rest in _compositions(total - x, bounds[1:]):
            yield (x,) + rest


def realizable_degree_sequence(G: Graph, a: Sequence[int]) -> bool:
    """Whether ``a`` is the degree sequence of a multigraph supported on ``E(G)``."""
    a = tuple(int(x) for x in a)
    if len(a) != G.n:
        raise InputError("degree vector length does not match the graph")
    if any(x < 0 for x in a):
        return False
    if sum(a) % 2:
        return False
    return _Realizer(G).check(a)


def delta(G: Graph, caps: Sequence[int]) -> int:
    """Largest number of edges (with repetition) whose degrees respect ``caps``."""
    G.require_no_isolated()
    caps = check_caps(G, caps)
    nbrs = [sorted(G.neighbors(v)) for v in range(G.n)]

    @lru_cache(maxsize=None)
    def best(res: Vector) -> int:
        v = next((i for i, r in enumerate(res) if r and any(res[u] for u in nbrs[i])), None)
        if v is None:
            return 0
        cap = sum(res) // 2
        dropped = list(res)
        dropped[v] = 0
        out = best(tuple(dropped))
        for u in nbrs[v]:
            if out == cap:
                break
            if res[u]:
                nxt = list(res)
                nxt[v] -= 1
                nxt[u] -= 1
                out = max(out, 1 + best(tuple(nxt)))
        return out

    return best(caps)


def bounded_vectors(caps: Sequence[int], total: int) -> Iterator[Vector]:
    """Vectors in the box ``[0, caps]`` with coordinate sum ``total``, lex ascending."""
    return _compositions(total, list(caps))


def top_bounded_generators(G: Graph, caps: Sequence[int]) -> GeneratorSet:
    """Minimal generators of ``(I(G)^delta)_caps`` as exponent vectors."""
    q = delta(G, caps)
    real = _Realizer(G)
    members = tuple(a for a in bounded_vectors(caps, 2 * q) if real.check(a))
    return GeneratorSet(members, 2 * q)


def edge_product_cap(G: Graph) -> Vector:
    """Exponent vector of the product of all edges, i.e. the degree vector."""
    G.require_no_isolated()
    return G.degrees()


def combine_components(pieces: Sequence[tuple[GeneratorSet, Sequence[int]]], n: int) -> GeneratorSet:
    """Concatenate one member per piece; ``pieces`` pairs a generator set with its labels."""
    members = []
    for choice in product(*(gs.members for gs, _ in pieces)):
        vec = [0] * n
        for part, (_, labels) in zip(choice, pieces):
            for x, v in zip(part, labels):
                vec[v] = x
        members.append(tuple(vec))
    return GeneratorSet.from_vectors(members)


def componentwise_generators(G: Graph, caps: Sequence[int]) -> GeneratorSet:
    """``top_bounded_generators`` assembled component by component."""
    caps = check_caps(G, caps)
    pieces = []
    for H, labels in connected_components(G):
        pieces.append((top_bounded_generators(H, [caps[v] for v in labels]), labels))
    return combine_components(pieces, G.n)
