import json
from fractions import Fraction

import pytest

from repst import cli, deligne
from repst.exact import poly_from_json
from repst.partitions import parse_partition


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dim_human_output(capsys):
    code, out, _ = run_cli(capsys, "dim", "--lambda", "2")
    assert code == 0
    assert "1/2*t^2 - 3/2*t" in out
    assert "binom(t,2) - binom(t,1)" in out


def test_dim_json_roundtrip(capsys):
    code, out, _ = run_cli(capsys, "dim", "--lambda", "2,1", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["lambda"] == "2,1"
    poly = poly_from_json(data["dimension"])
    assert poly == deligne.dimension_poly((2, 1))
    binom = poly_from_json(data["dimension_binomial"])
    assert binom.to_monomial() == poly


def test_dim_t_eval_matches_oracle(capsys):
    from repst import snoracle as sn
    from repst.partitions import pad
    code, out, _ = run_cli(capsys, "dim", "--lambda", "2", "--t-eval", "7", "--json")
    data = json.loads(out)
    num, den = data["t_eval"]["value"]
    assert Fraction(int(num), int(den)) == sn.hook_dim(pad((2,), 7))


def test_pieri_empty(capsys):
    code, out, _ = run_cli(capsys, "pieri", "--lambda", "", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["terms"] == [{"partition": "1", "mult": 1}]
    assert deligne.decomposition_from_json(data["terms"]) == {(1,): 1}


def test_omega_m_matches_jm(capsys):
    code, out, _ = run_cli(capsys, "omega-m", "--rho", "1", "--lambda", "1", "--json")
    assert code == 0
    poly = poly_from_json(json.loads(out)["eigenvalue"])
    assert poly == deligne.jm_eigenvalue((1,))


def test_class_size_eval(capsys):
    code, out, _ = run_cli(capsys, "class-size", "--rho", "0,1", "--t-eval", "5")
    assert code == 0
    assert "20" in out


def test_hilbert_table(capsys):
    code, out, _ = run_cli(capsys, "hilbert", "--h", "1,1", "--deg", "3", "--json")
    assert code == 0
    data = json.loads(out)
    from repst.exact import binomial_poly
    for k in range(4):
        assert poly_from_json(data["coefficients"][str(k)]) == binomial_poly(0, k)


def test_verma_command(capsys):
    code, out, _ = run_cli(capsys, "verma", "--lambda", "", "--N", "4", "--t-max", "5", "--json")
    assert code == 0
    assert json.loads(out)["t"] == [0, 1, 2, 3, 4, 5]
    code, out, _ = run_cli(capsys, "verma", "--lambda", "1", "--N", "4", "--t-max", "5", "--json")
    assert json.loads(out)["t"] == [0, 2, 3, 4, 5]


def test_branch_command(capsys):
    code, out, _ = run_cli(capsys, "branch", "--lambda", "1", "--N", "3", "--max-size", "2", "--json")
    assert code == 0
    branches = {parse_partition(b) for b in json.loads(out)["branches"]}
    assert branches == {(1,), (2,), (1, 1)}


def test_stirling_command(capsys):
    code, out, _ = run_cli(capsys, "stirling", "--max-m", "2", "--json")
    assert code == 0
    data = json.loads(out)
    from repst import groupalg
    for m in range(3):
        assert poly_from_json(data[str(m)]) == groupalg.hilbert_coefficient(m)


def test_stirling_help_carries_order_caveat(capsys):
    from repst import groupalg
    with pytest.raises(SystemExit) as exc:
        cli.main(["stirling", "--help"])
    assert exc.value.code == 0
    out = capsys.readouterr().out
    assert "zero radius of convergence" in out


def test_usage_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "dim", "--lambda", "not-a-partition")
    assert code == 2
    assert "error" in err
    code, _, err = run_cli(capsys, "dim", "--lambda", "1,2")
    assert code == 2


def test_unknown_flag_exits_2():
    with pytest.raises(SystemExit) as exc:
        cli.main(["dim", "--bogus"])
    assert exc.value.code == 2


def test_verify_suite_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "oracle",
                           "--max-size", "3", "--max-n", "8", "--max-m", "4")
    assert code == 0
    assert "oracle" in out and "pass" in out


def test_verify_all_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "all", "--json",
                           "--max-size", "3", "--max-n", "8", "--max-m", "3", "--deg", "4")
    assert code == 0
    data = json.loads(out)
    assert data["pass"] is True
    assert {s["suite"] for s in data["suites"]} == {"oracle", "pieri", "stirling", "bounds", "graded"}
    assert all(s["failures"] == [] for s in data["suites"])


def test_verify_detects_a_broken_identity(capsys, monkeypatch):
    # flip the content sign convention; the full gate must exit 1, caught by
    # the transposition-class oracle (rank 5 among the divergences)
    import repst.partitions as partitions_module
    original = partitions_module.content_sum
    monkeypatch.setattr(partitions_module, "content_sum",
                        lambda lam: -original(lam))
    code, out, _ = run_cli(capsys, "verify", "--suite", "all", "--json",
                           "--max-size", "2", "--max-n", "6", "--max-m", "2")
    assert code == 1
    data = json.loads(out)
    assert data["pass"] is False
    oracle = next(s for s in data["suites"] if s["suite"] == "oracle")
    assert any(f["check"] == "jm-oracle" and f["where"]["n"] == 5
               for f in oracle["failures"])
    assert all(s["pass"] for s in data["suites"] if s["suite"] != "oracle")


def test_bounds_command(capsys):
    code, out, _ = run_cli(capsys, "bounds", "--max-n", "9", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["pass"] is True and data["n"] == 9
