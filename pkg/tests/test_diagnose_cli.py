"""Diagnostics reports, oracles, witness replay, and the CLI."""

import json
import subprocess
import sys

import pytest

from hopfcheck import models as M
from hopfcheck.cli import main as cli_main, report_json
from hopfcheck.diagnose import (diagnose, antipode_with_oracle,
                                gvec_direct_antipode, span_direct_antipode)
from hopfcheck.errors import InternalCheckError


def test_diagnose_groupoid_all_hold():
    b = M.category_bimonoid(
        M.group_as_category(M.cyclic_group_table(2), "g0"))
    rep = diagnose(b, samples=2, seed=0)
    assert rep.all_hold() and rep.exact_hold()
    assert rep.antipode is not None
    assert rep.implied == {c: "holds" for c in rep.implied}


def test_diagnose_negative_all_fail_with_replayable_witnesses():
    rep = diagnose(M.idempotent_monoid_algebra(), samples=1, seed=0)
    assert not rep.exact_hold()
    assert all(v["status"] == "fails" for v in rep.verdicts.values())
    assert rep.witnesses and all(w.replay() for w in rep.witnesses)


def test_diagnose_deterministic():
    b = M.sweedler()
    r1 = diagnose(b, samples=2, seed=5)
    r2 = diagnose(b, samples=2, seed=5)
    assert {c: v["status"] for c, v in r1.verdicts.items()} == \
        {c: v["status"] for c, v in r2.verdicts.items()}
    p1, p2 = report_json(r1), report_json(r2)
    p1.pop("elapsed_seconds"), p2.pop("elapsed_seconds")
    assert p1 == p2


def test_direct_oracles_agree():
    kind, inv = span_direct_antipode(
        M.category_bimonoid(M.group_as_category(M.cyclic_group_table(3),
                                                "g0")))
    assert kind == "antipode"
    kind, _ = span_direct_antipode(M.category_bimonoid(M.walking_arrow()))
    assert kind == "none"
    kind, cell = gvec_direct_antipode(M.group_algebra(
        M.cyclic_group_table(2), "g0"))
    assert kind == "antipode"
    kind, cell = gvec_direct_antipode(M.idempotent_monoid_algebra())
    assert kind == "none"
    # full cross-checked runs
    antipode_with_oracle(M.sweedler())
    antipode_with_oracle(M.category_bimonoid(M.walking_arrow()))


def _write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc), encoding="utf-8")
    return str(p)


def test_cli_validate_and_diagnose(tmp_path, capsys):
    doc = {"backend": "span", "parameters": {"objects": [0]},
           "model": {"constructor": "cyclic_groupoid", "args": {"order": 2}}}
    path = _write(tmp_path, "z2.json", doc)
    assert cli_main(["validate", path]) == 0
    out = str(tmp_path / "rep.json")
    assert cli_main(["diagnose", path, "--samples", "1", "--json", out]) == 0
    payload = json.loads(open(out).read())
    assert payload["verdicts"]["antipode"]["status"] == "holds"
    assert payload["antipode"]["kind"] == "function"
    capsys.readouterr()


def test_cli_diagnose_failure_exit_code(tmp_path, capsys):
    doc = {"backend": "span", "parameters": {"objects": [0, 1]},
           "model": {"constructor": "walking_arrow"}}
    path = _write(tmp_path, "walk.json", doc)
    assert cli_main(["diagnose", path, "--samples", "1"]) == 1
    out = capsys.readouterr().out
    assert "fails" in out


def test_cli_antipode_json_roundtrip(tmp_path, capsys):
    doc = {"backend": "gvec-commutative", "parameters": {"n": 1},
           "model": {"inline": {
               "name": "QZ2", "grades": [[0, 0], [0, 0]],
               "mu": [[0, 0, 0, "1"], [0, 1, 1, "1"],
                      [1, 0, 1, "1"], [1, 1, 0, "1"]],
               "eta": [[0, "1"]],
               "delta": [[0, 0, 0, "1"], [1, 1, 1, "1"]],
               "eps": [[0, "1"], [1, "1"]]}}}
    path = _write(tmp_path, "qz2.json", doc)
    assert cli_main(["antipode", path]) == 0
    out = capsys.readouterr().out
    payload = json.loads(out)
    assert payload["antipode"]["kind"] == "matrices"
    mats = payload["antipode"]["blocks"][0]["matrix"]
    assert mats == [["1", "0"], ["0", "1"]]


def test_cli_schema_errors(tmp_path, capsys):
    path = _write(tmp_path, "bad.json", {"backend": "span",
                                         "parameters": {},
                                         "model": {}})
    assert cli_main(["validate", path]) == 2
    err = capsys.readouterr().err
    assert "/parameters/objects" in err
    path = _write(tmp_path, "bad2.json", {"backend": "nope",
                                          "parameters": {"n": 1},
                                          "model": {}})
    assert cli_main(["validate", path]) == 2
    err = capsys.readouterr().err
    assert "/backend" in err


def test_cli_inline_category_and_invalid_axioms(tmp_path, capsys):
    doc = {"backend": "span", "parameters": {"objects": [0, 1]},
           "model": {"inline": {
               "objects": [0, 1],
               "morphisms": [["id_0", 0, 0], ["id_1", 1, 1], ["t", 0, 1]],
               "identities": {"0": "id_0", "1": "id_1"},
               "composition": [["id_0", "id_0", "id_0"],
                               ["id_1", "id_1", "id_1"],
                               ["id_0", "t", "t"], ["t", "id_1", "id_1"]]}}}
    path = _write(tmp_path, "badcat.json", doc)
    assert cli_main(["validate", path]) == 2
    capsys.readouterr()


def test_cli_selftest_smoke(capsys):
    assert cli_main(["selftest", "--suite", "coherence", "--trials", "1"]) == 0
    capsys.readouterr()
