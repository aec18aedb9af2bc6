from __future__ import annotations

import json
import subprocess
import sys

import pytest

from interpcat.cli import main

F_DIAG_PLUS_FULL = json.dumps(
    {
        "source": [1],
        "target": [1],
        "blocks": [
            {
                "sx": 0,
                "ty": 0,
                "terms": [
                    {"subspace_rref": [[1, 1]], "coeff": "1/1"},
                    {"subspace_rref": [[1, 0], [0, 1]], "coeff": "2/1"},
                ],
            }
        ],
    }
)


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr().out
    return status, (json.loads(out) if out.strip() else None)


def test_delta(capsys):
    assert run(capsys, "delta", "--q", "2", "--n", "2", "--symbolic") == (0, {"delta": [["t-1", 4], ["t-2", 1]]})
    status, doc = run(capsys, "delta", "--q", "3", "--n", "2", "--verify")
    assert status == 0 and doc["verified"] is True


def test_hom_dim(capsys):
    assert run(capsys, "hom-dim", "--q", "2", "--dx", "1", "--dy", "1") == (0, {"dim": 5})


def test_quotient_check(capsys):
    status, doc = run(capsys, "quotient-check", "--q", "2", "--r", "1", "--dx", "1", "--dy", "1")
    assert status == 0
    assert {k: doc[k] for k in ("gram_rank", "orbit_count", "match")} == {"gram_rank": 4, "orbit_count": 4, "match": True}
    assert doc["radical_killed"] is True


def test_radical_and_center(capsys):
    status, doc = run(capsys, "radical", "--q", "2", "--dx", "1", "--t", "2/1")
    assert status == 0
    assert doc == {"object": "[1]", "t": "2/1", "singular": True, "radical_dim": 1, "center_dim": 1, "blocks_expected": 2}
    status, doc = run(capsys, "center", "--q", "2", "--dx", "2", "--t", "5")
    assert doc["center_dim"] == doc["blocks_expected"] == 5


def test_lattice(tmp_path, capsys):
    args = ("lattice", "--q", "2", "--n", "3", "--cache-dir", str(tmp_path))
    first = run(capsys, *args)
    second = run(capsys, *args)
    assert first == second
    assert first[1]["count"] == 16 and first[1]["mobius_bottom_top"] == -8


def test_compose_tensor_trace(capsys):
    status, doc = run(capsys, "compose", "--first", F_DIAG_PLUS_FULL, "--second", F_DIAG_PLUS_FULL)
    assert status == 0
    coeffs = [t["coeff"] for t in doc["blocks"][0]["terms"]]
    assert coeffs == ["1/1", "(4*t+4)/1"]
    status, doc = run(capsys, "compose", "--first", F_DIAG_PLUS_FULL, "--second", F_DIAG_PLUS_FULL, "--t", "3")
    assert [t["coeff"] for t in doc["blocks"][0]["terms"]] == ["1/1", "16/1"]
    status, doc = run(capsys, "tensor", "--first", F_DIAG_PLUS_FULL, "--second", F_DIAG_PLUS_FULL)
    assert status == 0 and doc["source"] == [2] and len(doc["blocks"][0]["terms"]) == 4
    assert run(capsys, "trace", "--morphism", F_DIAG_PLUS_FULL) == (0, {"trace": "(3*t)/1"})
    assert run(capsys, "trace", "--q", "3", "--dx", "2") == (0, {"trace": "t^2/1"})


def test_morphism_from_file(tmp_path, capsys):
    path = tmp_path / "f.json"
    path.write_text(F_DIAG_PLUS_FULL)
    assert run(capsys, "trace", "--morphism", f"@{path}", "--t", "2") == (0, {"trace": "6/1"})


def test_specialize(capsys):
    assert run(capsys, "specialize", "--r", "2", "--dx", "2") == (0, {"q": 2, "r": 2, "x": 2, "dim": 16})
    status, doc = run(capsys, "specialize", "--r", "1", "--morphism", F_DIAG_PLUS_FULL)
    assert doc["matrix"] == [["3/1", "2/1"], ["2/1", "3/1"]]


def test_gram_and_idempotents(capsys):
    status, doc = run(capsys, "gram", "--dx", "1", "--dy", "0", "--matrix")
    assert doc["matrix"] == [["1/1", "1/1"], ["1/1", "t/1"]]
    status, doc = run(capsys, "gram", "--dx", "1", "--dy", "1", "--t", "2")
    assert doc["rank"] == 4
    status, doc = run(capsys, "idempotents", "--dx", "2")
    assert status == 0 and doc["orthogonal"] and doc["complete"] and doc["idempotent"]
    assert all(e["matches_p_y"] for e in doc["idempotents"])


def test_selftest(capsys):
    status, doc = run(capsys, "selftest")
    assert status == 0 and doc["failed"] == 0 and doc["passed"] == len(doc["checks"])


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["hom-dim", "--q", "6", "--dx", "1", "--dy", "1"],
        ["hom-dim", "--dx", "1"],
        ["delta", "--n", "1", "--t", "1/0"],
        ["delta", "--n", "1", "--t", "2", "--symbolic"],
        ["radical", "--dx", "1"],
        ["trace"],
        ["hom-dim", "--dx", "1", "--dy", "1", "--unknown"],
        ["lattice", "--n", "2", "--limit-vectors", "0"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv) == 2
    captured = capsys.readouterr()
    assert captured.out == "" and "usage" in captured.err


@pytest.mark.parametrize(
    "argv",
    [
        ["hom-dim", "--dx", "4", "--dy", "4"],
        ["compose", "--first", '{"source":[1],"target":[2]}', "--second", F_DIAG_PLUS_FULL],
        ["trace", "--morphism", '{"source":[1],"target":[1],"blocks":[{"sx":0,"ty":0,"terms":[{"subspace_rref":[[1,2]],"coeff":"1"}]}]}'],
        ["trace", "--morphism", '{"source":[1]}'],
        ["specialize", "--r", "6", "--dx", "3"],
        ["delta", "--n", "4", "--verify", "--limit-gram", "10"],
    ],
)
def test_domain_errors_exit_1(argv, capsys):
    assert main(argv) == 1
    doc = json.loads(capsys.readouterr().out)
    assert set(doc) == {"error", "kind"}


def test_console_script_is_byte_stable():
    cmd = [sys.executable, "-m", "interpcat.cli", "quotient-check", "--q", "3", "--r", "1", "--dx", "1", "--dy", "1"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a.endswith(b"\n")
