import json

import pytest

from lacunary.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_terms_and_frac(capsys):
    code, out, _ = run(capsys, "terms", "--family", "theorem1", "--count", "4")
    assert code == 0 and out.split() == ["3", "8", "19683", "59048"]
    code, out, _ = run(capsys, "frac", "--family", "theorem1", "--k", "4", "--x", "1/7")
    assert code == 0 and out.split() == ["3/7", "0.42857142857142855"]


def test_usage_errors(capsys):
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "frac", "--family", "theorem1", "--k", "0", "--x", "1/7")[0] == 2
    assert run(capsys, "frac", "--family", "theorem1", "--k", "1", "--x", "abc")[0] == 2
    assert run(capsys, "dioph", "count", "--family", "theorem1", "--j1", "3", "--j2", "1", "--nu", "1", "--n", "5000")[0] == 2


def test_discrepancy_json(tmp_path, capsys):
    pts = tmp_path / "pts.csv"
    pts.write_text("x\n1/3\n2/3\n")
    code, out, _ = run(capsys, "discrepancy", "--points", str(pts), "--kind", "extremal")
    doc = json.loads(out)
    assert code == 0 and doc["value"]["exact"] == "2/3"
    assert doc["witness_a"]["exact"] == "1/3" and doc["witness_b"]["exact"] == "2/3"
    code, out, _ = run(capsys, "discrepancy", "--points", str(pts), "--mode", "float")
    assert float(json.loads(out)["value"]["decimal"]) == pytest.approx(1 / 3, abs=1e-15)


def test_dioph(tmp_path, capsys):
    code, out, _ = run(capsys, "dioph", "count", "--family", "theorem1", "--j1", "3", "--j2", "1", "--nu", "1", "--n", "10")
    assert json.loads(out)["count"] == 5
    table = tmp_path / "g.json"
    code, _, _ = run(
        capsys, "dioph", "gamma", "--family", "powers-minus-one", "--dmax", "2", "--ladder", "1e2,1e3", "--out", str(table)
    )
    doc = json.loads(table.read_text())
    assert code == 0 and {"j1": 2, "j2": 1, "nu": -1, "gamma": "1/1"} in doc["entries"]
    code, out, _ = run(capsys, "sigma", "eval", "--f", "cos:1=1,2=1", "--gamma", str(table), "--x", "1/3")
    assert code == 0 and float(json.loads(out)["sigma_sq"]["decimal"]) == pytest.approx(0.5)


def test_sigma_and_lambda(capsys):
    code, out, _ = run(capsys, "sigma", "eval", "--f", "indicator:0,1/2", "--x", "1/2")
    assert json.loads(out)["sigma_sq"]["exact"] == "1/6"
    code, out, _ = run(capsys, "lambda-star", "--x", "7/24")
    doc = json.loads(out)
    assert doc["lambda_sq_closed"] == "1/4" and doc["lambda_numeric"] == "0.5"
    code, out, _ = run(capsys, "sigma", "curve", "--f", "indicator:0,1/3", "--grid", "4")
    lines = out.splitlines()
    assert lines[0].startswith("# lacunary run manifest") and lines[1] == "x,sigma_sq,tail_bound,x_exact"
    assert len(lines) == 7


def test_simulate_is_byte_identical(tmp_path, capsys):
    outs = []
    for name in ("a.csv", "b.csv"):
        path = tmp_path / name
        args = ["simulate", "--family", "geometric", "--base", "2", "--nmax", "2e3", "--samples", "3", "--seed", "9"]
        assert run(capsys, *args, "--out", str(path))[0] == 0
        outs.append(path.read_text().splitlines()[1:])  # manifest names the output file
    assert outs[0] == outs[1]
    assert outs[0][0] == "x,N,stat,normalized,runmax"
    assert len(outs[0]) == 1 + 3 * 8


def test_manifest_header(tmp_path, capsys):
    path = tmp_path / "c.csv"
    run(capsys, "lambda-star", "--curve", "--grid", "8", "--out", str(path))
    head = path.read_text().splitlines()[0]
    man = json.loads(head.split(":", 1)[1])
    assert man["subcommand"] == "lambda-star" and man["version"] and "argv" in man


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "bounds"],
        ["verify", "lemma1", "--n", "20"],
        ["verify", "theorem4", "--max-n", "2", "--mc", "1"],
        ["verify", "koksma", "--trials", "50"],
        ["verify", "sigma-suite", "--grid", "3"],
        ["verify", "theorem2-average", "--samples", "1", "--jmax", "300"],
    ],
)
def test_verify_subcommands_pass(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0, out
    assert out and all(line.startswith("PASS") for line in out.splitlines())


def test_verify_failure_exit_code(capsys):
    # a tolerance nobody can meet turns the curve check into a failure
    code, _, _ = run(capsys, "lambda-star", "--curve", "--grid", "4", "--tol", "-1")
    assert code == 1
