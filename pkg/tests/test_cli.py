import json
import subprocess
import sys

import pytest

from streamsparse.cli import main


@pytest.fixture
def files(tmp_path):
    return tmp_path


def cli(*args):
    return main([str(a) for a in args])


def test_generate_sparsify_eval_pipeline(files, capsys):
    g = files / "g.txt"
    assert cli("generate", "--family", "gnp", "--n", 10, "--p", 0.6, "--order", "uniform_shuffle",
               "--seed", 1, "-o", g) == 0
    assert g.read_text().startswith("n 10\n")
    h, dec, rep = files / "h.txt", files / "dec.txt", files / "rep.json"
    assert cli("sparsify", g, "--rho-override", "3/2", "--seed", 4, "-o", h,
               "--decisions", dec, "--report", rep) == 0
    report = json.loads(rep.read_text())
    assert report["rho"] == "3/2" and report["schema"] == 1
    assert report["ek_weight_bound"] == "pass"
    assert set(report) >= {"edges", "total_weight", "rho", "histogram"}
    lines = dec.read_text().splitlines()
    assert len(lines) == len(g.read_text().splitlines()) - 1
    assert all(len(l.split()) == 4 for l in lines)
    capsys.readouterr()
    code = cli("eval", g, h, "--exhaustive", "--epsilon", 0.9)
    out = json.loads(capsys.readouterr().out)
    assert out["verdict"] == ("pass" if code == 0 else "fail")
    assert code in (0, 2)


def test_eval_fail_exit_code(files, capsys):
    g, h = files / "g.txt", files / "h.txt"
    g.write_text("n 3\n0 1\n1 2\n0 2\n")
    h.write_text("n 3\n0 1 2\n1 2 2\n0 2 2\n")
    assert cli("eval", g, h, "--epsilon", 0.5) == 2
    assert cli("eval", g, h, "--sampled", 4, "--epsilon", 0.5) == 2
    assert cli("eval", g, g, "--sampled", 4) == 0


def test_offline(files, capsys):
    g = files / "g.txt"
    cli("generate", "--family", "complete", "--n", 5, "-o", g)
    h = files / "h.txt"
    assert cli("sparsify", "--offline", g, "-o", h) == 0
    assert h.read_text().splitlines()[1:] == [l + " 1" for l in g.read_text().splitlines()[1:]]


def test_determinism_byte_identical(files):
    g = files / "g.txt"
    cli("generate", "--family", "planted_cut", "--n", 12, "--cut", 2, "--order", "uniform_shuffle", "-o", g)
    outs = []
    for i in range(2):
        h, d, r = files / f"h{i}", files / f"d{i}", files / f"r{i}"
        cli("sparsify", g, "--rho-override", 2, "--seed", 7, "-o", h, "--decisions", d, "--report", r)
        outs.append((h.read_bytes(), d.read_bytes(), r.read_bytes()))
    assert outs[0] == outs[1]


def test_mincut_and_strength(files, capsys):
    g = files / "g.txt"
    cli("generate", "--family", "barbell", "--block", 4, "-o", g)
    capsys.readouterr()
    assert cli("mincut", g) == 0
    assert json.loads(capsys.readouterr().out) == {"value": "1", "side": [0, 1, 2, 3]}
    assert cli("mincut", g, "--against", g, "--epsilon", "1/2") == 0
    assert json.loads(capsys.readouterr().out)["ratio"] == "1"
    assert cli("strength", g) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[6] == "6 1" and lines[0] == "0 3"
    for mode in ("brute", "certificate"):
        assert cli("strength", g, "--mode", mode) == 0


def test_stdin_stream(monkeypatch, capsys):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO("n 3\n0 1\n1 2\n"))
    assert cli("sparsify") == 0
    assert capsys.readouterr().out == "n 3\n0 1 1\n1 2 1\n"


@pytest.mark.parametrize("args", [
    ["sparsify", "--epsilon", "2"],
    ["sparsify", "missing-file.txt"],
    ["eval", "nope", "nope"],
    ["generate", "--family", "gnp", "--n", "5"],
])
def test_domain_errors_exit_1(args, capsys, monkeypatch):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO("n 3\n0 1\n"))
    assert main(args) == 1


def test_usage_error_exit_1():
    proc = subprocess.run([sys.executable, "-m", "streamsparse", "frobnicate"], capture_output=True)
    assert proc.returncode == 1


def test_weighted_stream_rejected(files):
    g = files / "g.txt"
    g.write_text("n 3\n0 1 2\n")
    assert cli("sparsify", g) == 1
