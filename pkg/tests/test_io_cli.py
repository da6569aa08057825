import json
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from edgepowers import InputError, classification
from edgepowers.cli import main
from edgepowers.io import dump_instance, parse_instance

P3_333 = '{"n": 3, "edges": [[1, 2], [2, 3]], "caps": [3, 3, 3]}'
K32M = (
    '{"n": 5, "edges": [[1, 5], [2, 4], [2, 5], [3, 4], [3, 5]], "caps": [4, 6, 6, 4, 6],'
    ' "parts": [[1, 2, 3], [4, 5]], "removed_matching": [[1, 4]]}'
)


@pytest.fixture
def write(tmp_path):
    def _write(text, name="inst.json"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def test_parse_p3():
    inst = parse_instance('{"n": 3, "edges": [[1, 2], [2, 3]], "caps": [1, 1, 1]}')
    assert inst.graph.edges == {(0, 1), (1, 2)} and inst.caps == (1, 1, 1) and inst.spec is None


def test_parse_multipartite():
    inst = parse_instance(K32M)
    assert inst.spec.parts == ((0, 1, 2), (3, 4)) and inst.spec.removed == ((0, 3),)


@pytest.mark.parametrize(
    "text, message",
    [
        ('{"n": 3, "edges": [[1, 1]]}', "loop"),
        ('{"n": 3, "edges": [[1, 2], [2, 1]]}', "duplicate"),
        ('{"n": 3, "edges": [[1, 4]]}', "out of range"),
        ('{"n": 3, "edges": [[1, 2]], "caps": [1, 1]}', "caps"),
        ('{"n": 3, "edges": [[1, 2]], "caps": [1, 0, 1]}', "caps"),
        ('{"n": 3, "edges": [[1, 2]], "colour": 1}', "unknown"),
        ('{"edges": []}', "missing"),
        ('{"n": 3,\n "edges": [[1, 2],]}', "line 2"),
        ('{"n": 3, "edges": [[1, 2]], "removed_matching": []}', "without parts"),
        ('{"n": 3, "edges": [[1, 2]], "parts": [[1], [2, 3]]}', "rebuild"),
    ],
)
def test_parse_errors(text, message):
    with pytest.raises(InputError, match=message):
        parse_instance(text)


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 7).flatmap(lambda n: st.tuples(
    st.just(n),
    st.sets(st.tuples(st.integers(1, n), st.integers(1, n)).filter(lambda e: e[0] < e[1])),
    st.lists(st.integers(1, 9), min_size=n, max_size=n),
)))
def test_round_trip(data):
    n, edges, caps = data
    text = json.dumps({"n": n, "edges": sorted(map(list, edges)), "caps": caps})
    inst = parse_instance(text)
    assert parse_instance(dump_instance(inst)) == inst


def test_round_trip_with_spec():
    inst = parse_instance(K32M)
    assert parse_instance(dump_instance(inst)) == inst


def test_cli_gorenstein(write, capsys):
    assert main(["gorenstein", write(P3_333, "p3.json")]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["id"] == "p3" and rec["verdict"] is False and rec["hvector"] == [1, 2]
    assert rec["delta"] == 3 and rec["generator_count"] == 4 and rec["dim"] == 2 and rec["method"] == "both"


def test_cli_single_commands(write, capsys):
    path = write(K32M)
    for cmd in ("delta", "gens", "hvector", "check-polymatroid", "witness", "gorenstein"):
        assert main([cmd, path]) == 0
    recs = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert recs[0]["delta"] == 10
    assert recs[1]["generator_count"] == 25
    assert recs[2]["hvector"] == [1, 22, 9]
    assert recs[3]["exchange_ok"] is True
    assert recs[5]["case"] == "multipartite_beta_ii"


def test_cli_deficiency_graph(write, capsys):
    path = write('{"n": 4, "edges": [[1, 4], [2, 4], [3, 4]]}')
    assert main(["deficiency-graph", path]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["edges"] == [[1, 2], [1, 3], [2, 3]]
    assert all(len(w["matching"]) == 1 for w in rec["witnesses"])


def test_cli_input_errors(write, capsys):
    assert main(["delta", write('{"n": 3, "edges": [[1, 1]]}')]) == 1
    assert "loop" in capsys.readouterr().err
    assert main(["delta", "/nonexistent/file.json"]) == 1
    assert main(["gorenstein", write('{"n": 3, "edges": [[1, 2]]}')]) == 1


def test_cli_disagreement_exit_code(write, capsys, monkeypatch):
    from edgepowers.toric_oracle import GorensteinVerdict

    monkeypatch.setattr(classification, "_classify", lambda *a: GorensteinVerdict(True, "classification", "fake"))
    assert main(["gorenstein", "--method", "both", write(P3_333)]) == 2
    out = json.loads(capsys.readouterr().out)
    assert out["status"] == "aborted" and out["reason"] == "RouteDisagreement"


def test_cli_budget_exit_code(write, capsys):
    assert main(["hvector", "--max-sumset", "10", write(K32M)]) == 2
    assert json.loads(capsys.readouterr().out)["reason"] == "BudgetExceeded"


def test_census_trees(capsys):
    assert main(["census", "trees", "--max-n", "6"]) == 0
    lines = capsys.readouterr().out.splitlines()
    header = lines[0].split("\t")
    rows = [dict(zip(header, line.split("\t"))) for line in lines[1:]]
    broom = [r for r in rows if r["edges"] == "1-2 1-5 1-6 2-3 2-4"]
    assert broom and broom[0]["case"] == "ii" and broom[0]["classify"] == broom[0]["oracle"] == "true"
    assert all(r["classify"] == r["oracle"] for r in rows)


def test_census_caps_and_complete(write, capsys):
    assert main(["census", "caps", "-g", write('{"n": 3, "edges": [[1, 2], [2, 3]]}'), "--max-cap", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 1 + 8
    assert main(["census", "complete", "--max-n", "3", "--max-cap", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 1 + 4 + 8
    assert main(["census", "caps", "--max-cap", "2"]) == 1


def test_census_is_deterministic():
    cmd = [sys.executable, "-m", "edgepowers", "census", "trees", "--max-n", "8"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a.count(b"\n") > 5


def test_stdin_instance(monkeypatch, capsys):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO(P3_333))
    assert main(["delta", "-"]) == 0
    assert json.loads(capsys.readouterr().out) == {"id": "stdin", "delta": 3}
