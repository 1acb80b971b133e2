"""End-to-end CLI tests via subprocess: exit codes, JSON shape, reproducibility."""

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from helpers import apex_base_fixture
from tightcycle.hypergraph import parse_h3, serialize_h3

SRC = str(Path(__file__).resolve().parent.parent / "src")


def run_cli(*args, cwd=None):
    env = dict(os.environ)
    env["PYTHONPATH"] = SRC + os.pathsep + env.get("PYTHONPATH", "")
    return subprocess.run(
        [sys.executable, "-m", "tightcycle", *args],
        capture_output=True,
        text=True,
        env=env,
        cwd=cwd,
    )


def strip_timing(text: str) -> dict:
    obj = json.loads(text)
    obj.pop("timing", None)
    return obj


@pytest.fixture
def z9_file(tmp_path):
    path = tmp_path / "z9.h3"
    assert run_cli("gen", "z3", "--n", "9", "--out", str(path)).returncode == 0
    return path


class TestGen:
    def test_z3_30(self, tmp_path):
        out = tmp_path / "z30.h3"
        proc = run_cli("gen", "z3", "--n", "30", "--out", str(out))
        assert proc.returncode == 0
        text = out.read_text()
        assert text.splitlines()[0] == "h3 30 1350"
        assert "# color 0 0" in text
        assert "# color 29 2" in text
        h = parse_h3(text)
        assert h.min_codegree() == 9

    def test_complete_4_exact_bytes(self, tmp_path):
        out = tmp_path / "k4.h3"
        assert run_cli("gen", "complete", "--n", "4", "--out", str(out)).returncode == 0
        assert out.read_text() == "h3 4 4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n"

    def test_k4minus(self, tmp_path):
        out = tmp_path / "f.h3"
        assert run_cli("gen", "k4minus", "--out", str(out)).returncode == 0
        assert out.read_text() == "h3 4 3\n0 1 2\n0 1 3\n0 2 3\n"

    def test_invalid_n(self):
        proc = run_cli("gen", "z3", "--n", "2")
        assert proc.returncode == 2
        assert "error" in proc.stderr

    def test_missing_n(self):
        assert run_cli("gen", "z3").returncode == 2

    def test_stdout_default(self):
        proc = run_cli("gen", "complete", "--n", "4")
        assert proc.returncode == 0
        assert proc.stdout == "h3 4 4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n"


class TestAnalyze:
    def test_z3_claims(self, tmp_path):
        out = tmp_path / "z30.h3"
        run_cli("gen", "z3", "--n", "30", "--out", str(out))
        proc = run_cli("analyze", str(out), "--claims")
        assert proc.returncode == 0
        obj = json.loads(proc.stdout)
        assert obj["n"] == 30 and obj["m"] == 1350
        assert obj["delta2"] == 9
        assert obj["strict_threshold"] is False
        assert obj["claims"]["threshold"] == 9
        assert obj["claims"]["edge_claim"] == []
        assert obj["claims"]["two_cycles"] == []
        assert obj["claims"]["degree_implications"] == []
        assert obj["manifest"]["subcommand"] == "analyze"
        assert "wall_ms" in obj["timing"]

    def test_complete_5_two_cycles(self, tmp_path):
        out = tmp_path / "k5.h3"
        run_cli("gen", "complete", "--n", "5", "--out", str(out))
        obj = json.loads(run_cli("analyze", str(out), "--claims").stdout)
        assert obj["claims"]["two_cycles"] != []
        assert obj["k4minus_count"] == 20

    def test_parse_error(self, tmp_path):
        bad = tmp_path / "bad.h3"
        bad.write_text("")
        proc = run_cli("analyze", str(bad))
        assert proc.returncode == 2

    def test_missing_file(self):
        assert run_cli("analyze", "/nonexistent/x.h3").returncode == 2


class TestFindCycle:
    def test_k4_length_11(self, tmp_path):
        out = tmp_path / "k4.h3"
        run_cli("gen", "complete", "--n", "4", "--out", str(out))
        proc = run_cli("find-cycle", str(out), "--length", "11")
        assert proc.returncode == 0
        obj = json.loads(proc.stdout)
        assert obj["found"] is True and len(obj["walk"]) == 11

    def test_z9_length_11_none(self, z9_file):
        proc = run_cli("find-cycle", str(z9_file), "--length", "11")
        assert proc.returncode == 1
        obj = json.loads(proc.stdout)
        assert obj["found"] is False and obj["walk"] is None

    def test_length_3_rejected(self, z9_file):
        assert run_cli("find-cycle", str(z9_file), "--length", "3").returncode == 2

    def test_injective_mode(self, tmp_path):
        out = tmp_path / "k5.h3"
        run_cli("gen", "complete", "--n", "5", "--out", str(out))
        proc = run_cli("find-cycle", str(out), "--length", "5", "--mode", "injective")
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["walk"] == [0, 1, 2, 3, 4]


class TestWitness:
    def test_two_gadget_fixture(self, tmp_path):
        h, _, _ = apex_base_fixture()
        path = tmp_path / "g.h3"
        path.write_text(serialize_h3(h))
        cert_path = tmp_path / "cert.json"
        proc = run_cli("witness", str(path), "--out", str(cert_path))
        assert proc.returncode == 0
        obj = json.loads(cert_path.read_text())
        assert obj["type"] == "walk" and obj["route"] == "apex_base"
        assert obj["sequence"] == [0, 4, 5, 1, 4, 0, 1, 3, 0, 2, 1]
        assert obj["manifest"]["version"]

    def test_z3_30_refutation(self, tmp_path):
        out = tmp_path / "z30.h3"
        run_cli("gen", "z3", "--n", "30", "--out", str(out))
        cert_path = tmp_path / "cert.json"
        proc = run_cli("witness", str(out), "--out", str(cert_path))
        assert proc.returncode == 1
        obj = json.loads(cert_path.read_text())
        assert obj["type"] == "refutation"
        assert obj["conflict_vertex"] == 0
        assert obj["delta2"] == 9 and obj["bound"] == 10

    def test_gadget_stage_on_complete_12(self, tmp_path):
        out = tmp_path / "k12.h3"
        run_cli("gen", "complete", "--n", "12", "--out", str(out))
        proc = run_cli("witness", str(out), "--stages", "gadget")
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["type"] == "walk"

    def test_gadget_stage_inconclusive(self, z9_file):
        proc = run_cli("witness", str(z9_file), "--stages", "gadget")
        assert proc.returncode == 3
        assert "inconclusive" in proc.stderr


class TestVerify:
    def test_round_trip(self, tmp_path, z9_file):
        cert = tmp_path / "cert.json"
        assert run_cli("witness", str(z9_file), "--out", str(cert)).returncode == 1
        assert run_cli("verify", str(z9_file), str(cert)).returncode == 0
        assert run_cli("verify", str(z9_file), str(cert), "--full").returncode == 0

    def test_tampered_sequence(self, tmp_path):
        h, _, _ = apex_base_fixture()
        path = tmp_path / "g.h3"
        path.write_text(serialize_h3(h))
        cert = tmp_path / "cert.json"
        run_cli("witness", str(path), "--out", str(cert))
        obj = json.loads(cert.read_text())
        obj["sequence"][0] = 5
        cert.write_text(json.dumps(obj))
        proc = run_cli("verify", str(path), str(cert))
        assert proc.returncode == 1
        assert "invalid" in proc.stderr

    def test_full_audit_catches_wrong_refutation(self, tmp_path):
        # refutation certificate pointed at a hypergraph that has a walk
        k12 = tmp_path / "k12.h3"
        run_cli("gen", "complete", "--n", "12", "--out", str(k12))
        cert = tmp_path / "cert.json"
        cert.write_text(json.dumps({
            "type": "refutation",
            "delta2": 10,
            "bound": 4,
            "conflict_vertex": None,
            "nb_base": [],
            "nd_out": [],
            "nd_in": [],
        }))
        proc = run_cli("verify", str(k12), str(cert), "--full")
        assert proc.returncode == 1

    def test_parse_error_exit_2(self, tmp_path, z9_file):
        bad = tmp_path / "bad.json"
        bad.write_text("{")
        assert run_cli("verify", str(z9_file), str(bad)).returncode == 2


class TestExtremal:
    def test_n5(self):
        proc = run_cli("extremal", "--n", "5", "--length", "11")
        assert proc.returncode == 0
        obj = json.loads(proc.stdout)
        assert obj["value"] == 1 and obj["status"] == "exact"
        assert obj["witness_h3"].startswith("h3 5 ")
        assert parse_h3(obj["witness_h3"]).min_codegree() == 1
        assert obj["stats"]["nodes"] > 0

    def test_unsupported_n(self):
        assert run_cli("extremal", "--n", "40").returncode == 2

    def test_budget_unknown(self):
        proc = run_cli("extremal", "--n", "6", "--length", "11", "--budget", "50")
        assert proc.returncode == 1
        obj = json.loads(proc.stdout)
        assert obj["status"] == "unknown" and obj["value"] is None


class TestReproducibility:
    def test_identical_json_excluding_timing(self, z9_file):
        a = run_cli("analyze", str(z9_file), "--claims")
        b = run_cli("analyze", str(z9_file), "--claims")
        assert strip_timing(a.stdout) == strip_timing(b.stdout)
        c = run_cli("find-cycle", str(z9_file), "--length", "6")
        d = run_cli("find-cycle", str(z9_file), "--length", "6")
        assert strip_timing(c.stdout) == strip_timing(d.stdout)

    def test_version_flag(self):
        proc = run_cli("--version")
        assert proc.returncode == 0
