import json

import pytest

from hurwitz.cli import fmt_fraction, main, parse_partition
from hurwitz.partitions import Partition


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_fmt_fraction():
    from fractions import Fraction

    assert fmt_fraction(Fraction(3)) == "3"
    assert fmt_fraction(Fraction(-5, 720)) == "-1/144"


def test_parse_partition():
    assert parse_partition("3,1,1") == Partition((3, 1, 1))
    with pytest.raises(Exception):
        parse_partition("3,x")


def test_compute_examples(capsys):
    code, out, _ = run_cli(capsys, "compute", "--genus", "1", "--partition", "2")
    assert code == 0
    assert json.loads(out)["value"] == "1"

    code, out, _ = run_cli(
        capsys, "compute", "--genus", "0", "--partition", "3", "--format", "text"
    )
    assert code == 0 and out.strip() == "4"

    code, out, _ = run_cli(capsys, "compute", "--genus", "2", "--partition", "1")
    assert code == 0 and json.loads(out)["value"] == "0"


def test_methods_agree(capsys):
    values = {}
    for method in ("oracle", "joincut", "closed-form", "pipeline"):
        code, out, _ = run_cli(
            capsys,
            "compute",
            "--genus",
            "1",
            "--partition",
            "2,1",
            "--method",
            method,
            "--format",
            "text",
        )
        assert code == 0
        values[method] = out.strip()
    assert len(set(values.values())) == 1


def test_output_is_deterministic(capsys):
    args = ("compute", "--genus", "2", "--partition", "2,2", "--method", "lagrange")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2


def test_json_round_trip(capsys):
    _, out, _ = run_cli(capsys, "compute", "--genus", "2", "--partition", "3,1")
    record = json.loads(out)
    assert record["query"] == {"genus": 2, "partition": [3, 1], "classical": False}
    assert "elapsed_ms" not in record
    num = int(record["value"])  # integers serialize without a slash
    assert num == 17640


def test_timing_flag_adds_field(capsys):
    _, out, _ = run_cli(
        capsys, "compute", "--genus", "1", "--partition", "2", "--timing"
    )
    assert "elapsed_ms" in json.loads(out)


def test_csv_format(capsys):
    _, out, _ = run_cli(
        capsys, "compute", "--genus", "0", "--partition", "2,2", "--format", "csv"
    )
    header, row = out.strip().splitlines()
    assert header == "method,genus,partition,classical,value"
    assert row.endswith(",54")


def test_classical_flag(capsys):
    _, out, _ = run_cli(
        capsys,
        "compute",
        "--genus",
        "0",
        "--partition",
        "2,2",
        "--classical",
        "--format",
        "text",
    )
    assert out.strip() == "288"


def test_rational_form_genus1(capsys):
    code, out, _ = run_cli(capsys, "rational-form", "--genus", "1")
    assert code == 0
    assert json.loads(out) == {"genus": 1, "log_eta": "1/24", "log_gamma": "-1/8"}


def test_rational_form_genus2_matches_published(capsys):
    code, out, _ = run_cli(capsys, "rational-form", "--genus", "2")
    assert code == 0
    record = json.loads(out)
    assert record["constant"] == "-1/240"
    by_alpha = {tuple(t["alpha"]): t["coeff"] for t in record["terms"]}
    assert by_alpha[(2, 1)] == "29/720"
    assert by_alpha[()] == "1/240"
    assert {t["denominator_power"] for t in record["terms"] if t["alpha"] == [2, 1]} == {4}


def test_exit_code_2_on_range_errors(capsys):
    code, _, err = run_cli(capsys, "rational-form", "--genus", "0")
    assert code == 2 and "genus" in err

    code, _, err = run_cli(
        capsys, "compute", "--genus", "2", "--partition", "2", "--method", "closed-form"
    )
    assert code == 0  # single cycle: Matsumoto-Novak applies

    code, _, err = run_cli(
        capsys,
        "compute",
        "--genus",
        "2",
        "--partition",
        "1,1",
        "--method",
        "closed-form",
    )
    assert code == 2 and "closed formulas" in err

    code, _, err = run_cli(
        capsys,
        "compute",
        "--genus",
        "0",
        "--partition",
        "2,1",
        "--max-degree",
        "2",
    )
    assert code == 2 and "--max-degree" in err

    code, _, err = run_cli(
        capsys, "compute", "--genus", "2", "--partition", "1" + ",1" * 9, "--method", "oracle"
    )
    assert code == 2 and "refuses" in err

    code, _, err = run_cli(capsys, "compute", "--genus", "1", "--partition", "")
    assert code == 2 and "nonempty" in err


def test_rational_form_text_and_caps(capsys):
    code, out, _ = run_cli(capsys, "rational-form", "--genus", "1", "--format", "text")
    assert code == 0 and "log 1/(1-eta)" in out

    code, _, err = run_cli(capsys, "rational-form", "--genus", "99")
    assert code == 2 and "cap" in err


def test_verify_scaling_suite(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "scaling")
    assert code == 0
    assert out.startswith("PASS scaling-law")


def test_verify_json_format(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "scaling", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload[0]["check"] == "scaling-law"
    assert payload[0]["passed"] is True


def test_verify_parallel_jobs(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "oracle-vs-joincut", "--jobs", "2"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 3
    # canonical report order regardless of completion order
    assert [ln.split()[1].rstrip(":") for ln in lines] == sorted(
        ln.split()[1].rstrip(":") for ln in lines
    )
