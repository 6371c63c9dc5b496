import csv
import io
import json
import subprocess
import sys
from collections import Counter

import pytest

from edgereg import harness
from edgereg.cli import parse_field, run_cli
from edgereg.graph6 import encode_graph6
from edgereg.graphs import cycle, format_edge_list, paw
from edgereg.harness import Config, check_bounds, check_case2, check_lemmas, check_main, check_prop_sum
from edgereg.symbolic import symbolic_power


@pytest.fixture
def c5_file(tmp_path):
    p = tmp_path / "c5.edges"
    p.write_text(format_edge_list(cycle(5)))
    return p


def strip_volatile(text):
    doc = json.loads(text)
    del doc["header"]["timestamp"]
    del doc["header"]["timings"]
    return doc


# -- single-ideal commands -----------------------------------------------------

def test_reg_command(c5_file, capsys):
    assert run_cli(["reg", "--graph", str(c5_file)]) == 0
    assert capsys.readouterr().out == "3\n"


def test_reg_with_symbolic_and_fields(capsys):
    g6 = encode_graph6(cycle(5))
    assert run_cli(["reg", "--g6", g6, "--s", "3", "--symbolic"]) == 0
    assert capsys.readouterr().out == "6\n"
    assert run_cli(["reg", "--g6", g6, "--field", "q", "--field", "fp:2"]) == 0
    assert capsys.readouterr().out == "q: 3\nfp:2: 3\n"


def test_betti_power_symbolic_commands(capsys):
    g6 = encode_graph6(cycle(3))
    assert run_cli(["betti", "--g6", g6]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "1 3 1,1,1 2"
    assert run_cli(["power", "--g6", g6, "--s", "2"]) == 0
    assert len(capsys.readouterr().out.strip().split(", ")) == 6
    assert run_cli(["symbolic", "--g6", g6, "--s", "2"]) == 0
    assert capsys.readouterr().out.strip() == "x1^2*x2^2, x1^2*x3^2, x1*x2*x3, x2^2*x3^2"


def test_resource_limit_exit_code(capsys):
    g6 = encode_graph6(cycle(7))
    assert run_cli(["reg", "--g6", g6, "--s", "3", "--lattice-cap", "5"]) == 1
    assert "resource limit" in capsys.readouterr().err


def test_parse_field():
    assert parse_field("q") == 0
    assert parse_field("fp:3") == 3
    for bad in ("fp:4", "r", "fp:"):
        with pytest.raises(Exception):
            parse_field(bad)


@pytest.mark.parametrize("argv", [
    ["check-main", "--max-n", "2"],
    ["check-main", "--max-s", "0"],
    ["check-main", "--jobs", "0"],
    ["check-main", "--corpus", "cubic"],
    ["reg"],
    ["reg", "--g6", "C"],
    ["reg", "--field", "fp:6", "--g6", "Bw"],
    ["enumerate", "--min-n", "5", "--max-n", "4"],
    ["nonsense"],
])
def test_usage_errors_exit_2(argv, capsys):
    assert run_cli(argv) == 2


def test_bad_edge_file_exit_2(tmp_path, capsys):
    p = tmp_path / "bad.edges"
    p.write_text("n 3\n1 1\n")
    assert run_cli(["reg", "--graph", str(p)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_enumerate_command(capsys):
    assert run_cli(["enumerate", "--max-n", "6"]) == 0
    assert len(capsys.readouterr().out.split()) == 1 + 2 + 5 + 13
    assert run_cli(["enumerate", "--min-n", "1", "--max-n", "6", "--corpus", "forests"]) == 0
    assert len(capsys.readouterr().out.split()) == 1 + 2 + 3 + 6 + 10 + 20


def test_module_entry_point(c5_file):
    proc = subprocess.run([sys.executable, "-m", "edgereg", "reg", "--graph", str(c5_file)],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "3\n"


# -- campaigns -----------------------------------------------------------------

def test_check_main_cli_json(tmp_path, capsys):
    out = tmp_path / "main.json"
    assert run_cli(["check-main", "--max-n", "6", "--max-s", "2", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert set(doc) == {"header", "summary", "results"}
    assert {"tool_version", "command", "config", "timestamp", "timings"} <= set(doc["header"])
    assert doc["header"]["config"]["max_n"] == 6
    assert len(doc["results"]) == (1 + 2 + 5 + 13) * 2
    for r in doc["results"]:
        assert set(r) == {"check_id", "instance", "status", "observed"}
        assert r["status"] == "pass"
        assert {"graph", "n", "s", "field"} <= set(r["instance"])
    assert "check-main" in capsys.readouterr().err


def test_check_csv_output(capsys):
    assert run_cli(["check-main", "--max-n", "4", "--max-s", "1", "--format", "csv"]) == 0
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert len(rows) == 3
    assert {r["status"] for r in rows} == {"pass"}
    assert json.loads(rows[0]["observed"])["reg_power"] == 2


def test_reports_are_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert run_cli(["check-lemmas", "--max-n", "5", "--max-s", "2", "--out", str(p)]) == 0
    assert strip_volatile(a.read_text()) == strip_volatile(b.read_text())
    assert a.read_text() != "" and json.loads(a.read_text())["header"]["command"] == "check-lemmas"


def test_parallel_report_matches_serial():
    serial = check_main(Config(max_n=5, max_s=2))
    parallel = check_main(Config(max_n=5, max_s=2, jobs=2))
    assert [r.body() for r in serial.results] == [r.body() for r in parallel.results]


@pytest.mark.parametrize("check", [check_main, check_lemmas, check_prop_sum, check_bounds, check_case2])
def test_each_instance_reported_once(check):
    report = check(Config(max_n=5, max_s=2))
    keys = Counter(r.key() for r in report.results)
    assert keys and max(keys.values()) == 1
    assert report.ok


def test_injected_failure_is_reported(monkeypatch):
    target = symbolic_power(cycle(5), 3)
    original = harness._reg

    def corrupted(I, field, cfg):
        value = original(I, field, cfg)
        return value + 1 if I == target else value

    monkeypatch.setattr(harness, "_reg", corrupted)
    report = check_main(Config(max_n=5, max_s=3, graphs=(cycle(5),)))
    assert not report.ok
    [bad] = report.failures
    assert bad.instance["s"] == 3
    assert bad.observed["reg_symbolic"] == 7 and bad.observed["reg_power"] == 6
    assert "ideals" in bad.observed


def test_injected_failure_exit_code(monkeypatch, capsys):
    monkeypatch.setattr(harness, "_reg", lambda I, field, cfg: len(I))
    assert run_cli(["check-main", "--max-n", "4", "--max-s", "2", "--g6", encode_graph6(paw())]) == 1
    assert "FAILURES" in capsys.readouterr().err


def test_cycle_and_paw_main_values():
    report = check_main(Config(max_n=5, max_s=2, graphs=(cycle(5), paw())))
    obs = {(r.instance["graph"], r.instance["s"]): r.observed for r in report.results}
    c5 = obs[(encode_graph6(cycle(5)), 2)]
    assert c5["reg_symbolic"] == c5["reg_power"] == 4
    assert obs[(encode_graph6(paw()), 2)]["reg_power"] == 4


def test_config_validation():
    with pytest.raises(ValueError):
        Config(max_n=2)
    with pytest.raises(ValueError):
        Config(fields=())
    assert Config(fields=[0, 2]).echo()["fields"] == ["q", "fp:2"]
