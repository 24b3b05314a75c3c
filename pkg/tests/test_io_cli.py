import json
import subprocess
import sys

import pytest

from kkmsperner import io
from kkmsperner.cli import main
from kkmsperner.fixtures import fig1
from kkmsperner.labeling import random_sperner_labeling
from kkmsperner.subdivision import barycentric_refine, edgewise_subdivision


def run(argv, stdin="", capsys=None, monkeypatch=None):
    monkeypatch.setattr(sys, "stdin", __import__("io").StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


@pytest.fixture
def cli(capsys, monkeypatch):
    return lambda argv, stdin="": run(argv, stdin, capsys, monkeypatch)


@pytest.mark.parametrize("make", [
    lambda: (fig1()[0], None),
    lambda: fig1(),
    lambda: (edgewise_subdivision(4, 3), None),
    lambda: (lambda s: (s, random_sperner_labeling(s, 5)))(barycentric_refine(edgewise_subdivision(3, 2))),
])
def test_round_trip_byte_exact(make):
    sub, labels = make()
    text = io.serialize(sub, labels)
    sub2, labels2 = io.parse(text)
    assert sub2 == sub and labels2 == (tuple(labels) if labels else None)
    assert io.serialize(sub2, labels2) == text


def test_document_layout():
    doc = json.loads(io.serialize(*fig1()))
    assert list(doc) == ["n", "vertices", "cells"]
    assert doc["vertices"][5] == {"id": 5, "coords": ["0/1", "3/5", "2/5"], "label": 2}
    assert doc["cells"] == sorted(doc["cells"])


@pytest.mark.parametrize("text", [
    "not json", "[]", '{"n": 3}',
    '{"n": 2, "vertices": [{"id": 1, "coords": ["1/1", "0/1"]}], "cells": []}',
    '{"n": 2, "vertices": [{"id": 0, "coords": ["1/2", "0/1"]}], "cells": []}',
    '{"n": 2, "vertices": [{"id": 0, "coords": ["1/1", "0/1"], "label": 1},'
    ' {"id": 1, "coords": ["0/1", "1/1"]}], "cells": [[0, 1]]}',
])
def test_malformed_documents(text):
    with pytest.raises(io.DocumentError):
        io.parse(text)


def test_cli_find_cl(cli):
    _, doc = cli(["fixture", "fig1"])
    code, out = cli(["find-cl"], doc)
    assert code == 0 and out == '{"count":1,"cells":[[2,6,7]]}\n'


def test_cli_generate_and_validate(cli):
    _, doc = cli(["gen-subdivision", "--n", "3", "--m", "2"])
    code, out = cli(["validate", "--mode", "full"], doc)
    assert code == 0
    report = json.loads(out)
    assert report["passed"] and report["cells"] == 4
    _, doc = cli(["gen-subdivision", "--n", "3", "--m", "2", "--scheme", "barycentric"])
    assert len(json.loads(doc)["cells"]) == 36


def test_cli_intersect(cli):
    _, doc = cli(["fixture", "fig1"])
    code, out = cli(["intersect"], doc)
    res = json.loads(out)
    assert code == 0 and res["point"] == ["5/18", "1/9", "11/18"]
    assert [w["weight"] for w in res["witnesses"]] == ["1/3"] * 3


def test_cli_membership_extract_naive(cli):
    _, doc = cli(["fixture", "fig1"])
    code, out = cli(["member", "--label", "1", "--point", "0,3/5,2/5"], doc)
    assert code == 0 and json.loads(out) == {"member": False, "label": 1}
    code, out = cli(["member", "--label", "2", "--point", "0,3/5,2/5"], doc)
    assert json.loads(out)["weight"] == "1/1"
    code, out = cli(["extract", "--point", "5/18,1/9,11/18"], doc)
    assert code == 0 and json.loads(out) == {"cell": [2, 6, 7]}
    code, out = cli(["extract", "--point", "0,3/5,2/5"], doc)
    assert code == 1 and json.loads(out)["label"] == 1
    code, out = cli(["naive-check"], doc)
    assert json.loads(out)["flagged"] == [5]


def test_cli_cover_commands(cli):
    _, doc = cli(["fixture", "fig1"])
    code, out = cli(["build-cover"], doc)
    assert code == 0 and json.loads(out)["threshold"] == "1/3"
    assert cli(["verify-cover", "--cert"], doc)[0] == 0
    code, out = cli(["verify-cover", "--sample", "--J", "1,2", "--denom", "6"], doc)
    assert code == 0 and json.loads(out)["passed"]
    bad = json.loads(doc)
    bad["vertices"][6]["label"] = 2
    code, out = cli(["verify-cover", "--cert"], json.dumps(bad))
    assert code == 1 and not json.loads(out)["passed"]
    code, out = cli(["validate"], json.dumps(bad))
    assert code == 1


def test_cli_label_and_fixpoint(cli):
    _, doc = cli(["gen-subdivision", "--n", "3", "--m", "4"])
    code, labeled = cli(["label", "--seed", "9"], doc)
    assert code == 0 and cli(["validate"], labeled)[0] == 0
    code, labeled = cli(["label", "--map", "rotate"], doc)
    assert code == 0 and all("label" in v for v in json.loads(labeled)["vertices"])
    code, out = cli(["fixpoint", "--map", "rotate", "--schedule", "2,4,8"])
    lines = [json.loads(line) for line in out.splitlines()]
    assert [x["m"] for x in lines] == [2, 4, 8]
    assert lines[-1] == {"m": 8, "coords": ["1/3", "5/24", "11/24"], "residual": "1/4"}


def test_cli_errors(cli, tmp_path):
    assert cli(["find-cl"], "{broken")[0] == 1
    _, doc = cli(["gen-subdivision", "--n", "3", "--m", "2"])
    assert cli(["find-cl"], doc)[0] == 1  # no labels
    with pytest.raises(SystemExit) as info:
        main(["nonsense"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["member", "--label", "1", "--point", "1/2,1/3"])
    assert info.value.code == 2
    _, doc = cli(["fixture", "fig1"])
    assert cli(["member", "--label", "9", "--point", "1,0,0"], doc)[0] == 2
    _, doc4 = cli(["gen-subdivision", "--n", "4", "--m", "1"])
    assert cli(["render-svg"], doc4)[0] == 1


def test_cli_files(cli, tmp_path):
    path = tmp_path / "fig1.json"
    assert cli(["fixture", "fig1", "--out", str(path)])[0] == 0
    code, out = cli(["find-cl", "--input", str(path)])
    assert code == 0 and json.loads(out)["count"] == 1
    svg = tmp_path / "fig1.svg"
    assert cli(["render-svg", "--input", str(path), "--out", str(svg), "--overlay", "1"])[0] == 0
    assert svg.read_text().startswith("<?xml")


def test_console_script_pipeline():
    fixture = subprocess.run([sys.executable, "-m", "kkmsperner.cli", "fixture", "fig1"],
                             capture_output=True, text=True, check=True).stdout
    res = subprocess.run([sys.executable, "-m", "kkmsperner.cli", "find-cl"], input=fixture,
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == '{"count":1,"cells":[[2,6,7]]}\n'
