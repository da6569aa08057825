"""Reading and writing problem instances.

An instance is a JSON object with 1-indexed vertices::

    {"n": 5,
     "edges": [[1, 5], [2, 4], [2, 5], [3, 4], [3, 5]],
     "caps": [4, 6, 6, 4, 6],
     "parts": [[1, 2, 3], [4, 5]],
     "removed_matching": [[1, 4]]}

``caps`` defaults to all ones; ``parts`` and ``removed_matching`` are optional
and, when present, must rebuild exactly the listed edges.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import InputError
from .graphs import Graph, MultipartiteSpec

_KNOWN = {"n", "edges", "caps", "parts", "removed_matching"}


@dataclass(frozen=True)
class ProblemInstance:
    graph: Graph
    caps: tuple[int, ...]
    spec: MultipartiteSpec | None = None


def _int(x, where: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputError(f"{where}: expected an integer, got {x!r}")
    return x


def _pairs(raw, n: int, field: str) -> list[tuple[int, int]]:
    if not isinstance(raw, list):
        raise InputError(f"{field}: expected a list of pairs")
    out, seen = [], set()
    for k, e in enumerate(raw):
        where = f"{field}[{k}]"
        if not isinstance(e, list) or len(e) != 2:
            raise InputError(f"{where}: expected a pair [i, j]")
        i, j = _int(e[0], where), _int(e[1], where)
        if not (1 <= i <= n and 1 <= j <= n):
            raise InputError(f"{where}: vertex out of range 1..{n}")
        if i == j:
            raise InputError(f"{where}: loop at vertex {i}")
        key = (min(i, j), max(i, j))
        if key in seen:
            raise InputError(f"{where}: duplicate edge {list(key)}")
        seen.add(key)
        out.append((i - 1, j - 1))
    return out


def parse_instance(text: str) -> ProblemInstance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise InputError("instance must be a JSON object")
    unknown = set(doc) - _KNOWN
    if unknown:
        raise InputError(f"unknown fields {sorted(unknown)}")
    if "n" not in doc:
        raise InputError("missing field 'n'")
    n = _int(doc["n"], "n")
    if n < 1:
        raise InputError("n: must be >= 1")
    edges = _pairs(doc.get("edges", []), n, "edges")
    graph = Graph(n, edges)

    caps_raw = doc.get("caps", [1] * n)
    if not isinstance(caps_raw, list) or len(caps_raw) != n:
        raise InputError(f"caps: expected a list of {n} integers")
    caps = tuple(_int(c, f"caps[{k}]") for k, c in enumerate(caps_raw))
    if any(c < 1 for c in caps):
        raise InputError("caps: entries must be >= 1")

    spec = None
    if "parts" in doc:
        parts_raw = doc["parts"]
        if not isinstance(parts_raw, list) or not all(isinstance(p, list) for p in parts_raw):
            raise InputError("parts: expected a list of lists")
        parts = tuple(tuple(_int(v, "parts") - 1 for v in p) for p in parts_raw)
        removed = _pairs(doc.get("removed_matching", []), n, "removed_matching")
        try:
            spec = MultipartiteSpec(parts, tuple(removed))
        except InputError as exc:
            raise InputError(f"parts/removed_matching: {exc}") from None
        if spec.graph().edges != graph.edges:
            raise InputError("parts/removed_matching: declared structure does not rebuild the edges")
    elif "removed_matching" in doc:
        raise InputError("removed_matching given without parts")
    return ProblemInstance(graph, caps, spec)


def instance_to_dict(inst: ProblemInstance) -> dict:
    doc = {
        "n": inst.graph.n,
        "edges": [[i + 1, j + 1] for i, j in inst.graph.edge_list],
        "caps": list(inst.caps),
    }
    if inst.spec is not None:
        doc["parts"] = [[v + 1 for v in p] for p in inst.spec.parts]
        doc["removed_matching"] = [[i + 1, j + 1] for i, j in inst.spec.removed]
    return doc


def dump_instance(inst: ProblemInstance) -> str:
    return json.dumps(instance_to_dict(inst))
