"""Command-line interface.

Single-instance commands print one JSON record per line.  ``census`` prints a
tab-separated header and one row per instance.  Exit codes: 0 success,
1 input error, 2 route disagreement or exhausted budget.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Sequence

from .bounded_powers import delta, top_bounded_generators
from .census import (
    CAPS_COLUMNS,
    COMPLETE_COLUMNS,
    TREE_COLUMNS,
    caps_census,
    complete_census,
    tree_census,
)
from .classification import gorenstein, nocomp_witness
from .errors import BudgetExceeded, HilbertSeriesError, InputError, RouteDisagreement
from .graphs import deficiency_graph
from .io import ProblemInstance, parse_instance
from .polymatroid import check_exchange, dual_matroidal
from .toric_oracle import DEFAULT_MAX_ELEMENTS, h_vector


def _load(path: str) -> tuple[str, ProblemInstance]:
    if path == "-":
        return "stdin", parse_instance(sys.stdin.read())
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return Path(path).stem, parse_instance(text)


def _emit(record: dict) -> None:
    print(json.dumps(record, sort_keys=True), flush=True)


def _deadline(args) -> float | None:
    t = getattr(args, "timeout_seconds", None)
    return None if t is None else time.monotonic() + t


def _budget(args) -> dict:
    return {"max_elements": args.max_sumset, "deadline": _deadline(args)}


def cmd_delta(args) -> int:
    ident, inst = _load(args.instance)
    _emit({"id": ident, "delta": delta(inst.graph, inst.caps)})
    return 0


def cmd_gens(args) -> int:
    ident, inst = _load(args.instance)
    gens = top_bounded_generators(inst.graph, inst.caps)
    _emit({
        "id": ident,
        "delta": gens.degree // 2,
        "generator_count": len(gens),
        "generators": [list(g) for g in gens],
    })
    return 0


def cmd_hvector(args) -> int:
    ident, inst = _load(args.instance)
    gens = top_bounded_generators(inst.graph, inst.caps)
    data = h_vector(gens, **_budget(args))
    _emit({
        "id": ident,
        "delta": gens.degree // 2,
        "generator_count": len(gens),
        "dim": data.dim,
        "hilbert": list(data.values),
        "hvector": list(data.hvector),
    })
    return 0


def cmd_check_polymatroid(args) -> int:
    ident, inst = _load(args.instance)
    gens = top_bounded_generators(inst.graph, inst.caps)
    bad = check_exchange(gens)
    rec = {"id": ident, "generator_count": len(gens), "exchange_ok": bad is None}
    if bad is not None:
        rec["counterexample"] = {"u": list(bad.u), "v": list(bad.v), "i": bad.i + 1}
    if all(x in (0, 1) for g in gens for x in g):
        rec["dual_exchange_ok"] = check_exchange(dual_matroidal(gens)) is None
    _emit(rec)
    return 0


def cmd_gorenstein(args) -> int:
    ident, inst = _load(args.instance)
    gens = top_bounded_generators(inst.graph, inst.caps)
    v = gorenstein(inst.graph, inst.caps, args.method, **_budget(args))
    h = v.hilbert
    _emit({
        "id": ident,
        "delta": gens.degree // 2,
        "generator_count": len(gens),
        "dim": h.dim if h else None,
        "hvector": list(h.hvector) if h else None,
        "verdict": v.gorenstein,
        "method": v.method,
        "case": v.case,
    })
    return 0


def cmd_deficiency_graph(args) -> int:
    ident, inst = _load(args.instance)
    D = deficiency_graph(inst.graph)
    _emit({
        "id": ident,
        "vertices": [v + 1 for v in D.vertices],
        "edges": [[i + 1, j + 1] for i, j in D.edges],
        "witnesses": [
            {"pair": [i + 1, j + 1], "matching": [[a + 1, b + 1] for a, b in D.witnesses[(i, j)]]}
            for i, j in D.edges
        ],
    })
    return 0


def cmd_witness(args) -> int:
    ident, inst = _load(args.instance)
    w = nocomp_witness(inst.graph)
    _emit({
        "id": ident,
        "pair": [w.pair[0] + 1, w.pair[1] + 1],
        "A": [v + 1 for v in w.A],
        "B": [v + 1 for v in w.B],
        "cap": list(w.cap),
        "veronese_degree": w.predicted.d,
        "veronese_caps": list(w.predicted.a),
    })
    return 0


def cmd_census(args) -> int:
    budget = _budget(args)
    if args.mode == "trees":
        rows, columns = tree_census(args.max_n, **budget), TREE_COLUMNS
    elif args.mode == "caps":
        if not args.graph:
            raise InputError("census caps needs -g FILE")
        _, inst = _load(args.graph)
        inst.graph.require_no_isolated()
        rows, columns = caps_census(inst.graph, args.max_cap, **budget), CAPS_COLUMNS
    else:
        rows, columns = complete_census(args.max_n, args.max_cap, **budget), COMPLETE_COLUMNS
    print("\t".join(("id",) + tuple(columns)), flush=True)
    status = 0
    for row in rows:
        print(row.tsv(columns), flush=True)
        if "classify" in row.fields and row.fields["classify"] != row.fields["oracle"]:
            status = 2
    if status:
        print("census: classification and oracle disagree", file=sys.stderr)
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="edgepowers", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def budget_flags(sp):
        sp.add_argument("--max-sumset", type=int, default=DEFAULT_MAX_ELEMENTS,
                        help="cap on candidate sums per Hilbert-function layer")
        sp.add_argument("--timeout-seconds", type=float, default=None)

    for name, fn, needs_budget in (
        ("delta", cmd_delta, False),
        ("gens", cmd_gens, False),
        ("hvector", cmd_hvector, True),
        ("check-polymatroid", cmd_check_polymatroid, False),
        ("gorenstein", cmd_gorenstein, True),
        ("deficiency-graph", cmd_deficiency_graph, False),
        ("witness", cmd_witness, False),
    ):
        sp = sub.add_parser(name)
        sp.add_argument("instance", help="instance file (JSON), or - for stdin")
        if name == "gorenstein":
            sp.add_argument("--method", choices=("classify", "oracle", "both"), default="both")
        if needs_budget:
            budget_flags(sp)
        sp.set_defaults(func=fn)

    sp = sub.add_parser("census")
    sp.add_argument("mode", choices=("trees", "caps", "complete"))
    sp.add_argument("--max-n", type=int, default=8)
    sp.add_argument("--max-cap", type=int, default=2)
    sp.add_argument("-g", "--graph", help="instance file whose graph is swept (caps mode)")
    budget_flags(sp)
    sp.set_defaults(func=cmd_census)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (RouteDisagreement, BudgetExceeded, HilbertSeriesError) as exc:
        _emit({"status": "aborted", "reason": type(exc).__name__, "detail": str(exc)})
        print(f"error: {exc}", file=sys.stderr)
        return 2


run_command = main


if __name__ == "__main__":
    sys.exit(main())
