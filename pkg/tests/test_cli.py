import io
import json
from fractions import Fraction

import pytest

import dump
import verify
from embed import Source
from golden import GoldenInt
from utils import Loader, dumps, jsonable, write_json
from verify import Check, SelectorError


def _failing_check(monkeypatch, observe):
    item = Check("zz/failing", "polytopes", 1, verify.DERIVED, observe)
    monkeypatch.setitem(verify.REGISTRY, item.id, item)
    return item


def test_registry():
    assert len(verify.REGISTRY) == 26
    assert len(verify.select("facts/*")) == 10
    assert [c.id for c in verify.select("s4/*")] == ["s4/arrays", "s4/decagons", "s4/hexagons"]
    assert all(c.stage in verify.STAGE_ORDER for c in verify.REGISTRY.values())
    assert {c.provenance for c in verify.REGISTRY.values()} == {verify.PAPER, verify.DERIVED}


def test_unknown_selector(tmp_path):
    with pytest.raises(SelectorError):
        verify.select("nonexistent")
    report = tmp_path / "report.json"
    assert verify.main(["--only", "nonexistent", "--report", str(report)]) == 2
    assert not report.exists()


def test_threads_must_be_positive(tmp_path):
    assert verify.main(["--only", "facts/fact5", "--report", str(tmp_path / "r.json"), "--threads", "0"]) == 2


def test_passing_check_writes_report(tmp_path):
    report = tmp_path / "out" / "report.json"
    assert verify.main(["--only", "facts/fact5", "--report", str(report), "--threads", "2"]) == 0
    entries = json.loads(report.read_text(encoding="utf-8"))
    assert len(entries) == 1
    (entry,) = entries
    assert set(entry) == {"id", "status", "expected", "observed", "elapsed_ms"}
    assert entry["id"] == "facts/fact5"
    assert entry["status"] == "pass"
    assert entry["expected"]["provenance"] == "PAPER"
    assert entry["expected"]["value"]["partitions"] == 10
    assert entry["expected"]["value"]["disjointness_degrees"] == {"8": 25}
    assert entry["observed"] == entry["expected"]["value"]
    assert isinstance(entry["elapsed_ms"], int)


def test_failing_check_still_writes_report(tmp_path, monkeypatch):
    _failing_check(monkeypatch, lambda: 2)
    report = tmp_path / "report.json"
    assert verify.main(["--only", "zz/*", "--report", str(report)]) == 1
    (entry,) = json.loads(report.read_text(encoding="utf-8"))
    assert entry["status"] == "fail"
    assert entry["observed"] == 2
    assert entry["expected"]["value"] == 1


def test_raising_check_is_reported_as_failure(monkeypatch):
    def observe():
        raise ArithmeticError("broken")

    _failing_check(monkeypatch, observe)
    (report,) = verify.run("zz/*", threads=1)
    assert not report.passed
    assert report.observed == "ArithmeticError: broken"


def test_failed_stage_fails_its_checks(monkeypatch):
    def broken():
        raise RuntimeError("no vertices")

    monkeypatch.setitem(verify.STAGES, "polytopes", (broken,))
    (report,) = verify.run("facts/fact5", threads=1)
    assert report.status == "fail"
    assert report.observed == "RuntimeError: no vertices"


def test_summary_lists_every_check(monkeypatch):
    _failing_check(monkeypatch, lambda: 1)
    reports = verify.run("zz/*", threads=1)
    assert reports[0].passed
    assert "zz/failing" in verify.summarize(reports)


def test_dump_is_byte_identical(tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    assert dump.main(["labels", "--out", str(first)]) == 0
    assert dump.main(["labels", "--out", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()
    assert "(16)(27)(38)(49)(5X)" in first.read_text(encoding="utf-8")


def test_dump_to_stdout(capsys):
    assert dump.main(["array"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data["grid"]) == 5
    assert data["g"] == [[-1, 1], [-1, 0], [0, 0], [0, -1]]


def test_unknown_dump_object():
    with pytest.raises(SystemExit) as info:
        dump.main(["nothing"])
    assert info.value.code == 2
    with pytest.raises(KeyError):
        dump.dump("nothing")


def test_jsonable():
    assert jsonable(GoldenInt(3, -1)) == [3, -1]
    assert jsonable(Fraction(-4)) == "-4"
    assert jsonable(Fraction(1, 2)) == "1/2"
    assert jsonable(Source.RECTIFIED) == "rectified 600-cell"
    assert jsonable({1: {3, 1, 2}}) == {"1": [1, 2, 3]}
    assert jsonable((True, None)) == [True, None]
    with pytest.raises(TypeError):
        jsonable(0.5)


def test_canonical_text(tmp_path):
    assert dumps({"b": 1, "a": [Fraction(1, 3)]}) == '{\n  "a": [\n    "1/3"\n  ],\n  "b": 1\n}'
    path = write_json({"φ": GoldenInt(0, 1)}, tmp_path / "nested" / "x.json")
    assert path.read_text(encoding="utf-8") == '{\n  "φ": [\n    0,\n    1\n  ]\n}\n'


@pytest.mark.slow
def test_report_does_not_depend_on_thread_count(tmp_path):
    single, many = tmp_path / "one.json", tmp_path / "many.json"
    verify.main(["--only", "facts/*", "--report", str(single), "--threads", "1"])
    verify.main(["--only", "facts/*", "--report", str(many), "--threads", "8"])
    first = [{k: v for k, v in e.items() if k != "elapsed_ms"} for e in json.loads(single.read_text(encoding="utf-8"))]
    second = [{k: v for k, v in e.items() if k != "elapsed_ms"} for e in json.loads(many.read_text(encoding="utf-8"))]
    assert [e["id"] for e in first] == sorted(e["id"] for e in first)
    assert dumps(first) == dumps(second)


def test_malformed_thread_env_is_a_usage_error(tmp_path, monkeypatch):
    monkeypatch.setenv("H4_THREADS", "many")
    with pytest.raises(SystemExit) as info:
        verify.main(["--only", "facts/fact5", "--report", str(tmp_path / "r.json")])
    assert info.value.code == 2
    assert verify.main(["--only", "facts/fact5", "--report", str(tmp_path / "r.json"), "--threads", "1"]) == 0


def test_loader_writes_final_message():
    stream = io.StringIO()
    with Loader("Building array...", end="{task} done.", timeout=0.01, stream=stream) as loader:
        loader.desc = "Building labels..."
    assert stream.getvalue().endswith("Building labels... done.\n")
    assert not loader._thread.is_alive()
