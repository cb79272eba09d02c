from __future__ import annotations

import json
import subprocess
import sys

import pytest

from srforge import GF, CompanionCtx, Mat, formats, kron
from srforge.cli import main

EX22 = [[6, 2, 2], [4, 3, 1], [3, 3, 4]]
EX24 = [[1, 0, 1, 0], [0, 1, 0, 1], [0, 1, 1, 0], [1, 0, 1, 1]]
A310 = [[1, 2, 2], [2, 1, 3], [3, 2, 4]]
POLY = "x^3+3x+3"


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, M in {
        "ex22": Mat(GF(7), EX22),
        "ex24": Mat(GF(2), EX24),
        "a31": Mat(GF(7), [[1, 2], [3, 4]]),
        "b31": Mat(GF(7), [[1, 1], [0, 3]]),
        "i2": Mat.identity(GF(7), 2),
        "sing": Mat(GF(7), [[1, 2], [2, 4]]),
        "a310": Mat(GF(5), A310),
    }.items():
        path = tmp_path / f"{name}.txt"
        formats.save(M, path)
        out[name] = str(path)
    return out


def run(argv, capsys):
    code = main(argv)
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_table_1(files, capsys):
    code, out, _ = run(["minors", "--k", "2", files["ex22"]], capsys)
    assert code == 0
    grid = [line.split("|")[1:] for line in out.splitlines()[2:]]
    assert [[int(x) for x in r] for r in grid] == [[3, 5, 3], [5, 4, 2], [3, 6, 2]]
    code, out, _ = run(["verify", "sr", files["ex22"]], capsys)
    assert code == 0 and "minors checked: 19" in out


def test_verify_exit_codes(files, capsys):
    code, out, _ = run(["verify", "sr", files["ex24"], "--out", "json"], capsys)
    rep = json.loads(out)
    assert code == 1 and rep["witness_rows"] == [0] and rep["witness_cols"] == [1]
    code, out, _ = run(["verify", "sr", files["ex24"]], capsys)
    assert "rows {1} cols {2}" in out
    assert run(["verify", "block", "--b", "2", files["ex24"]], capsys)[0] == 0
    assert run(["verify", "block", "--b", "3", files["ex24"]], capsys)[0] == 2
    assert run(["verify", "block", files["ex24"]], capsys)[0] == 2


def test_global_flags_either_side(files, capsys):
    a = run(["--out", "json", "--jobs", "2", "verify", "sr", files["ex22"]], capsys)
    b = run(["verify", "sr", files["ex22"], "--out", "json", "--jobs", "2"], capsys)
    assert a == b and a[0] == 0


def test_jobs_byte_identical(files, capsys):
    outs = {run(["--jobs", str(j), "--out", "json", "--exhaustive", "verify", "sr", files["ex24"]], capsys) for j in (1, 8)}
    assert len(outs) == 1


def test_env_jobs(files, capsys, monkeypatch):
    monkeypatch.setenv("SRFORGE_JOBS", "3")
    from srforge.cli import build_parser
    assert build_parser().parse_args(["verify", "sr", "x"]).jobs == 3


def test_kron_chain_scaled(files, capsys, tmp_path):
    code, out, _ = run(["kron", files["a31"], files["b31"]], capsys)
    M = formats.loads(out)
    assert code == 0 and M.block_size == 2
    assert M.inner == Mat(GF(7), [[1, 1, 2, 2], [0, 3, 0, 6], [3, 3, 4, 4], [0, 2, 0, 5]])
    assert run(["kron", files["a31"], files["sing"]], capsys)[0] == 2
    assert run(["kron", files["sing"], files["b31"]], capsys)[0] == 2
    assert run(["--unchecked", "kron", files["sing"], files["b31"]], capsys)[0] == 0
    code, out, _ = run(["chain", files["a31"], files["a31"], "--with", files["b31"]], capsys)
    assert code == 0 and formats.loads(out).block_size == 4
    code, out, _ = run(["scaled", files["a31"], "--b", files["b31"], "--bs", f"{files['i2']},{files['i2']}"], capsys)
    assert code == 0 and formats.loads(out).inner == M.inner
    code, _, err = run(["scaled", files["a31"], "--b", files["b31"], "--bs", f"{files['i2']},{files['sing']}"], capsys)
    assert code == 2 and "SingularFactor" in err


def test_companion_primitive(capsys):
    code, out, _ = run(["companion", "--p", "5", "--poly", POLY], capsys)
    assert code == 0 and "primitive: yes" in out
    assert formats.loads(out) == Mat(GF(5), [[0, 0, 2], [1, 0, 2], [0, 1, 0]])
    code, out, _ = run(["--out", "json", "companion", "--p", "5", "--poly", "x^2+1"], capsys)
    assert code == 0 and json.loads(out)["primitive"] is False
    code, out, _ = run(["primitive", "--p", "5", "--degree", "3", "--list"], capsys)
    assert code == 0 and POLY in out.split() and len(out.split()) == 20
    assert run(["primitive", "--p", "6", "--degree", "2"], capsys)[0] == 2


def test_lift_embed_frobenius(files, capsys, tmp_path):
    code, out, _ = run(["lift", files["a310"], "--p", "5", "--poly", POLY], capsys)
    N = formats.loads(out)
    E = N.field
    assert code == 0 and [[E.dlog(x) for x in r] for r in N.tolist()] == [[1, 32, 32], [32, 1, 94], [94, 32, 63]]
    path = tmp_path / "n.json"
    formats.save(N, path, "json")
    code, out, _ = run(["embed", str(path), "--p", "5", "--poly", POLY, "--compact"], capsys)
    assert code == 0 and "C^94 C^32 C^63" in out
    ctx = CompanionCtx(POLY, 5)
    assert formats.loads(out).inner == kron(Mat(GF(5), A310), ctx.C)
    bpath = tmp_path / "b.txt"
    bpath.write_text(out)
    code, out, _ = run(["embed", str(bpath), "--inverse", "--p", "5", "--poly", POLY], capsys)
    assert formats.loads(out) == N
    code, out, _ = run(["frobenius", "--j", "2", str(path)], capsys)
    F2 = formats.loads(out)
    assert [[E.dlog(x) for x in r] for r in F2.tolist()][0] == [25, 56, 56]
    assert run(["frobenius", "--j", "3", str(path)], capsys)[0] == 2
    assert run(["lift", files["a310"], "--p", "5", "--poly", POLY, "--texp", "2"], capsys)[0] == 2


def test_perturb(files, capsys, tmp_path):
    spec = {"row": 1, "coeffs": {"1": {"2": 3, "3": 1}}}
    code, out, _ = run(["perturb-row", files["a310"], "--poly", POLY, "--spec", json.dumps(spec)], capsys)
    assert code == 0 and formats.loads(out)[0, 0].coeffs == (2, 3, 3)  # alpha + 3alpha^2 + alpha^3
    assert run(["perturb-row", files["a310"], "--spec", json.dumps(spec)], capsys)[0] == 2
    sp = tmp_path / "spec.json"
    sp.write_text(json.dumps({"t": 2, "rows": 2, "table": [[1, 2, 3], [4, 0, 1]]}))
    code, out, _ = run(["perturb-block", files["a310"], "--poly", POLY, "--spec", str(sp)], capsys)
    assert code == 0 and formats.loads(out).shape == (3, 3)
    j1 = json.dumps({"t": 2, "rows": 1, "table": [[1, 2, 3]]})
    code, _, err = run(["perturb-block", files["a310"], "--poly", POLY, "--spec", j1], capsys)
    assert code == 2 and "j>1" in err
    assert run(["perturb-block", files["a310"], "--poly", POLY, "--spec", j1, "--allow-j1"], capsys)[0] == 0


def test_search(capsys):
    a = run(["search", "--p", "7", "--rows", "3", "--cols", "3", "--tries", "100", "--seed", "9"], capsys)
    b = run(["search", "--p", "7", "--rows", "3", "--cols", "3", "--tries", "100", "--seed", "9"], capsys)
    assert a == b and a[0] == 0 and "seed 9" in a[1]
    code, out, _ = run(["--out", "json", "search", "--p", "2", "--rows", "2", "--cols", "2", "--tries", "50", "--seed", "1"], capsys)
    assert code == 1 and json.loads(out)["found"] is False


def test_paper_example(capsys):
    code, out, _ = run(["paper-example", "ex3.10"], capsys)
    assert code == 0 and "[PASS] ex3.10" in out
    assert "C^1 C^32 C^32" in out and "α^94 α^32 α^63" in out
    code, out, _ = run(["--out", "json", "paper-example", "ex2.4"], capsys)
    assert code == 0 and json.loads(out)[0]["pass"] is True
    assert run(["paper-example", "tableA2"], capsys)[0] == 1
    assert run(["paper-example"], capsys)[0] == 2
    assert run(["paper-example", "nope"], capsys)[0] == 2


def test_usage_errors(files, capsys):
    assert run([], capsys)[0] == 2
    assert run(["bogus"], capsys)[0] == 2
    assert run(["minors", files["ex22"]], capsys)[0] == 2
    assert run(["minors", "--k", "4", files["ex22"]], capsys)[0] == 2
    assert run(["verify", "sr", "/nonexistent"], capsys)[0] == 2
    assert run(["--jobs", "0", "verify", "sr", files["ex22"]], capsys)[0] == 2


def test_csv_outputs(files, capsys):
    code, out, _ = run(["--out", "csv", "minors", "--k", "2", files["ex22"]], capsys)
    assert code == 0 and out.splitlines()[0] == "rows,cols,value"
    code, out, _ = run(["--out", "csv", "kron", files["a31"], files["b31"]], capsys)
    assert out.splitlines()[0] == "1,1,2,2"


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "srforge", "verify", "sr", files["ex24"]], capture_output=True, text=True)
    assert proc.returncode == 1 and "witness" in proc.stdout
