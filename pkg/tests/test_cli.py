import json

import numpy as np
import pytest

from arrowdpr1.bench import CSV_HEADER, read_csv
from arrowdpr1.cli import main
from arrowdpr1.io import serialize_matrix
from arrowdpr1.oracle import dense_det_quaternion_magnitude
from arrowdpr1.sampling import sample_dpr1, singular_nonzero_block
from arrowdpr1.structured import ArrowMatrix, DPR1Matrix, to_dense
from arrowdpr1.blockscalar import BlockScalar

ARROW_DOC = {"kind": "arrow", "field": "real", "n": 3, "tip": 3,
             "diag": [2.0, 3.0], "u": [1.0, 1.0], "v": [1.0, 1.0],
             "alpha": 1.0}


@pytest.fixture
def arrow_file(tmp_path):
    p = tmp_path / "arrow.json"
    p.write_text(json.dumps(ARROW_DOC))
    return str(p)


def _write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


def test_compute_det(arrow_file, capsys):
    assert main(["compute", "--in", arrow_file, "--op", "det"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out == pytest.approx(1.0, rel=1e-12)


def test_compute_matvec(arrow_file, tmp_path, capsys):
    vec = _write(tmp_path, "z.json", [1.0, 1.0, 1.0])
    assert main(["compute", "--in", arrow_file, "--op", "matvec",
                 "--vec", vec]) == 0
    assert json.loads(capsys.readouterr().out) == [3.0, 4.0, 3.0]


def test_compute_inv(arrow_file, capsys):
    assert main(["compute", "--in", arrow_file, "--op", "inv"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["kind"] == "dpr1" and doc["n"] == 3
    assert doc["rho"] == pytest.approx(6.0, rel=1e-12)
    assert doc["x"] == pytest.approx([0.5, 1 / 3, -1.0])


def test_compute_det_quaternion_prints_magnitude(tmp_path, capsys):
    rng = np.random.default_rng(80)
    m = sample_dpr1(rng, 3, "quaternion")
    path = _write(tmp_path, "q.json", serialize_matrix(m))
    assert main(["compute", "--in", path, "--op", "det"]) == 0
    got = json.loads(capsys.readouterr().out)
    assert got == pytest.approx(dense_det_quaternion_magnitude(to_dense(m)),
                                rel=1e-10)


def test_compute_det_block_prints_block(tmp_path, capsys):
    rng = np.random.default_rng(81)
    m = sample_dpr1(rng, 3, "block", block_k=2)
    path = _write(tmp_path, "b.json", serialize_matrix(m))
    assert main(["compute", "--in", path, "--op", "det"]) == 0
    got = json.loads(capsys.readouterr().out)
    assert len(got) == 2 and len(got[0]) == 2
    assert all(isinstance(c, float) for row in got for c in row)


def test_compute_tol_switches_branch(tmp_path, capsys):
    doc = dict(ARROW_DOC, diag=[1e-12, 3.0])
    path = _write(tmp_path, "near.json", doc)
    assert main(["compute", "--in", path, "--op", "inv"]) == 0
    assert json.loads(capsys.readouterr().out)["kind"] == "dpr1"
    assert main(["compute", "--in", path, "--op", "inv", "--tol", "1e-9"]) == 0
    assert json.loads(capsys.readouterr().out)["kind"] == "arrow"


def test_compute_matvec_requires_vec(arrow_file, capsys):
    assert main(["compute", "--in", arrow_file, "--op", "matvec"]) == 2
    assert "--vec" in capsys.readouterr().err


def test_compute_unknown_key_exit_2(tmp_path, capsys):
    path = _write(tmp_path, "bad.json", dict(ARROW_DOC, bogus=1))
    assert main(["compute", "--in", path, "--op", "det"]) == 2
    assert "bogus" in capsys.readouterr().err


def test_compute_bad_json_exit_2(tmp_path, capsys):
    p = tmp_path / "broken.json"
    p.write_text("{oops")
    assert main(["compute", "--in", str(p), "--op", "det"]) == 2
    assert "error:" in capsys.readouterr().err


def test_compute_missing_file_exit_2(tmp_path, capsys):
    assert main(["compute", "--in", str(tmp_path / "absent.json"),
                 "--op", "det"]) == 2


def test_compute_singular_exit_3(tmp_path, capsys):
    m = DPR1Matrix([0.0, 0.0], [1.0, 1.0], [1.0, 1.0], 1.0)
    path = _write(tmp_path, "sing.json", serialize_matrix(m))
    assert main(["compute", "--in", path, "--op", "inv"]) == 3
    assert "error:" in capsys.readouterr().err
    # the determinant of the same matrix is simply zero, not an error
    assert main(["compute", "--in", path, "--op", "det"]) == 0
    assert json.loads(capsys.readouterr().out) == 0.0


def test_compute_block_singular_exit_4(tmp_path, capsys):
    eye = BlockScalar.identity(2)
    bad = singular_nonzero_block(2)
    m = ArrowMatrix([bad, eye], [eye, eye], [eye, eye], eye, tip=3)
    path = _write(tmp_path, "bsing.json", serialize_matrix(m))
    assert main(["compute", "--in", path, "--op", "inv"]) == 4
    assert "error:" in capsys.readouterr().err


def test_no_command_exit_2(capsys):
    assert main([]) == 2


VERIFY_ARGS = ["verify", "--seed", "7", "--trials", "4", "--sizes", "2,3,4"]


def test_verify_summary_is_deterministic(capsys):
    assert main(VERIFY_ARGS) == 0
    first = capsys.readouterr().out
    assert main(VERIFY_ARGS) == 0
    second = capsys.readouterr().out
    assert first == second
    assert first.splitlines()[-1].startswith("OK: ")
    assert all(line.startswith("PASS") for line in first.splitlines()[:-1])


def test_verify_zero_trials(capsys):
    assert main(["verify", "--trials", "0"]) == 0
    captured = capsys.readouterr()
    assert "nothing checked" in captured.err
    assert "OK: 0/0 checks passed" in captured.out


def test_verify_negative_trials(capsys):
    assert main(["verify", "--trials", "-1"]) == 2


def test_verify_injected_order_bug_fails(capsys):
    assert main(VERIFY_ARGS + ["--inject-order-bug", "dpr1-det-term"]) == 1
    lines = capsys.readouterr().out.splitlines()
    fail_lines = [l for l in lines[:-1] if l.startswith("FAIL")]
    assert len(fail_lines) == 1 and "ordering-sentinels" in fail_lines[0]
    assert lines[-1].startswith("FAILED")


def test_bench_writes_csv(tmp_path, capsys):
    out = tmp_path / "bench.csv"
    assert main(["bench", "--sizes", "16,32", "--fields", "real",
                 "--out", str(out), "--runs", "1"]) == 0
    text = out.read_text()
    assert text.splitlines()[0] == ",".join(CSV_HEADER)
    records = read_csv(str(out))
    assert len(records) == 12
    assert {r.operation for r in records} == {
        "arrow_matvec", "arrow_det", "arrow_inv",
        "dpr1_matvec", "dpr1_det", "dpr1_inv"}
    assert all(r.ns_median > 0 and r.scalar_ops > 0 for r in records)
    stdout = capsys.readouterr().out
    assert "time exponent" in stdout
    assert f"wrote 12 records ({','.join(CSV_HEADER)})" in stdout


def test_bench_rejects_bad_sizes(tmp_path, capsys):
    out = str(tmp_path / "b.csv")
    assert main(["bench", "--sizes", "32,16", "--fields", "real",
                 "--out", out]) == 2
    assert main(["bench", "--sizes", ",", "--fields", "real",
                 "--out", out]) == 2


def test_bench_rejects_unknown_field(tmp_path, capsys):
    assert main(["bench", "--sizes", "16", "--fields", "octonion",
                 "--out", str(tmp_path / "b.csv")]) == 2
