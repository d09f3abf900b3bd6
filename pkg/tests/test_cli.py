import json
import subprocess
import sys

import pytest

from skewcode.cli import run

EXAMPLE = [
    "quantum", "check", "--q", "9", "--i", "1", "--alpha", "49", "--beta", "36",
    "--f", "2,w^5,w^3,1", "--g1", "1,1,w^6", "--g2", "1,1,w^2", "--gray", "hadamard",
]


def invoke(capsys, argv):
    code = run(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture(scope="module")
def example_report():
    proc = subprocess.run([sys.executable, "-m", "skewcode.cli", *EXAMPLE], capture_output=True, text=True)
    return proc.returncode, json.loads(proc.stdout)


def test_quantum_check_example(example_report):
    code, report = example_report
    assert code == 0
    assert (report["n"], report["k"], report["q"]) == (121, 107, 9)
    assert report["dual_containing"] is True and report["route"] == "coprime"
    assert report["result"]["witnesses_verify"] is True
    assert report["config"]["seed"] == 20240601


def test_quantum_check_example_distance(example_report):
    _, report = example_report
    assert report["d"] == 4


def test_code_build_degree_one_divisors(capsys):
    for alpha, beta in [(3, 4), (4, 6), (2, 2)]:
        code, out, _ = invoke(capsys, [
            "code", "build", "--q", "9", "--alpha", str(alpha), "--beta", str(beta),
            "--f", "2,1", "--g1", "2,1", "--g2", "2,1",
        ])
        result = json.loads(out)["result"]
        assert code == 0
        assert result["k"] == (alpha - 1) + 2 * (beta - 1)


def test_report_round_trip(capsys, tmp_path):
    argv = ["code", "build", "--q", "9", "--alpha", "6", "--beta", "4",
            "--f", "x^2 + x + 1", "--g1", "x + w^2", "--g2", "x + 1"]
    _, out, _ = invoke(capsys, argv)
    first = json.loads(out)
    spec_file = tmp_path / "spec.json"
    spec_file.write_text(json.dumps(first["config"]))
    cfg = first["config"]
    _, out, _ = invoke(capsys, ["code", "build", "--spec", str(spec_file), "--gray", cfg["gray"],
                                "--strategy", cfg["strategy"], "--seed", str(cfg["seed"])])
    second = json.loads(out)
    assert second["result"] == first["result"]


def test_output_formats(capsys, tmp_path):
    base = ["skew", "divisors", "--q", "9", "--n", "6", "--degree", "1"]
    _, out, _ = invoke(capsys, base)
    count = json.loads(out)["result"]["count"]
    _, out, _ = invoke(capsys, base + ["--format", "csv"])
    lines = out.splitlines()
    assert lines[0].startswith("# config ") and lines[1] == "ascending,display"
    assert len(lines) == count + 2
    target = tmp_path / "r.txt"
    code, out, _ = invoke(capsys, base + ["--format", "text", "--out", str(target)])
    assert code == 0 and out == ""
    assert target.read_text().startswith("# config ")


def test_skew_utilities(capsys):
    code, out, _ = invoke(capsys, ["skew", "divmod", "--q", "9", "--a", "x^18 - 1", "--b", "x^3 + w^3x^2 + x + 1"])
    result = json.loads(out)["result"]
    assert code == 0 and result["remainder"] == "0" and result["reconstructs"]
    code, out, _ = invoke(capsys, ["skew", "dagger", "--q", "9", "--h", "x + w"])
    assert code == 0 and json.loads(out)["result"]["display"] == "w^3x + 1"


def test_field_info(capsys):
    code, out, _ = invoke(capsys, ["field", "info", "--q", "9"])
    result = json.loads(out)["result"]
    assert code == 0
    assert result["modulus"] == [2, 2, 1] and result["theta_order"] == 2
    assert len(result["mul"]) == 9


def test_search_run(capsys):
    code, out, _ = invoke(capsys, [
        "search", "run", "--q", "9", "--alpha", "3", "--beta", "4",
        "--f-deg", "1,1", "--g1-deg", "1,1", "--g2-deg", "1,1", "--limit", "3",
    ])
    result = json.loads(out)["result"]
    assert code == 0 and result["count"] == 3
    assert all(r["qk"] == 2 * r["k"] - r["n"] for r in result["codes"])


def test_reproduce_single_row_csv(capsys):
    code, out, _ = invoke(capsys, ["reproduce", "table1", "--rows", "3", "--format", "csv"])
    lines = out.splitlines()
    assert lines[0].startswith("# config ")
    assert lines[1].split(",")[0] == "row" and lines[2].startswith("3,9,225,30")
    assert code in (0, 1)


def error_of(err):
    return json.loads(err.strip().splitlines()[-1])


@pytest.mark.parametrize(
    "argv,exit_code",
    [
        (["bogus"], 2),
        (["code", "build", "--q", "9", "--alpha", "3"], 2),
        (["code", "build", "--q", "9", "--alpha", "3", "--beta", "4", "--f", "x^^2", "--g1", "1", "--g2", "1"], 2),
        (["code", "build", "--q", "10", "--alpha", "3", "--beta", "4", "--f", "1", "--g1", "1", "--g2", "1"], 2),
        (["quantum", "check", "--q", "9", "--alpha", "4", "--beta", "3", "--f", "1", "--g1", "1", "--g2", "1"], 3),
        (["code", "build", "--q", "9", "--alpha", "20", "--beta", "20", "--f", "1", "--g1", "x + 2",
          "--g2", "x + 2", "--budget", "10", "--strategy", "enumerate"], 4),
        (["quantum", "check", "--q", "9", "--alpha", "3", "--beta", "4", "--f", "1", "--g1", "x + w",
          "--g2", "1"], 1),
    ],
)
def test_exit_codes_and_error_stream(capsys, argv, exit_code):
    code, out, err = invoke(capsys, argv)
    assert code == exit_code
    if exit_code >= 2:
        assert out == ""  # no partial report
        payload = error_of(err)
        assert payload["exit_code"] == exit_code and payload["message"]
