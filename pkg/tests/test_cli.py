"""Command-line interface: output formats, exit codes, argument gates."""

import json

import mpmath as mp
import pytest

from conftest import tol
from zetasigma.cli import IDENTITIES, main
from zetasigma.compositions import DualityClass
from zetasigma.delta import delta_class
from zetasigma.lincomb import LinComb

SIGMA2_45 = "0.548311355616075478824138388882008396406316634"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ------------------------------------------------------------------ enumerate

def test_enumerate_text_counts(capsys):
    code, out, _ = run(capsys, "enumerate", "--weight", "5")
    assert code == 0
    assert len(out.strip().splitlines()) == 8  # 2^(5-2) admissible


def test_enumerate_json(capsys):
    code, out, _ = run(
        capsys, "enumerate", "--weight", "6", "--filter", "classes", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 10
    assert payload["items"][0] == {"class": [6]}
    code, out, _ = run(
        capsys, "enumerate", "--weight", "6", "--filter", "even_entries", "--format", "json"
    )
    payload = json.loads(out)
    assert payload["count"] == 4
    assert [tuple(a) for a in payload["items"]] == [(2, 2, 2), (4, 2), (2, 4), (6,)]


def test_enumerate_csv(capsys):
    code, out, _ = run(
        capsys, "enumerate", "--weight", "4", "--filter", "admissible", "--format", "csv"
    )
    assert code == 0
    rows = out.strip().splitlines()
    assert len(rows) == 4
    assert all("," in r or r.isdigit() for r in rows)


def test_enumerate_deterministic(capsys):
    a = run(capsys, "enumerate", "--weight", "7", "--filter", "classes")
    b = run(capsys, "enumerate", "--weight", "7", "--filter", "classes")
    assert a == b


def test_enumerate_bad_filter(capsys):
    with pytest.raises(SystemExit) as e:
        run(capsys, "enumerate", "--weight", "4", "--filter", "bogus")
    assert e.value.code == 2


# ---------------------------------------------------------------------- delta

def test_delta_text(capsys):
    code, out, _ = run(capsys, "delta", "--class", "2")
    assert code == 0
    assert "3" in out and "(2)" in out


def test_delta_json_roundtrip(capsys):
    code, out, _ = run(
        capsys, "delta", "--class", "3,3", "--method", "both", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["class"] == [3, 3]
    got = LinComb.from_json_obj(payload["delta"])
    assert got == delta_class(DualityClass.of((3, 3)))


def test_delta_poly_ring(capsys):
    code, out, _ = run(capsys, "delta", "--class", "3", "--ring", "poly")
    assert code == 0
    assert ")*(" in out  # parenthesised polynomial coefficients


def test_delta_inadmissible(capsys):
    code, _, err = run(capsys, "delta", "--class", "1,2")
    assert code == 2
    assert "error" in err


# ----------------------------------------------------------------- rank-table

def test_rank_table_alpha(capsys):
    code, out, _ = run(
        capsys, "rank-table", "--map", "alpha", "--max-weight", "6", "--format", "json"
    )
    assert code == 0
    table = json.loads(out)["table"]
    assert [r["weight"] for r in table] == list(range(1, 7))
    assert [r["kernel_rank"] for r in table] == [0, 0, 0, 0, 0, 1]
    assert all(r["rank"] == r["cols"] - r["kernel_rank"] for r in table)


def test_rank_table_delta_csv(capsys):
    code, out, _ = run(
        capsys, "rank-table", "--map", "delta", "--max-weight", "6", "--format", "csv"
    )
    assert code == 0
    rows = out.strip().splitlines()
    assert rows[0] == "weight,map,rows,cols,rank,kernel_rank"
    assert len(rows) == 8  # header + weights 0..6
    assert rows[-1].split(",")[-1] == "1"


def test_rank_table_weight_gate(capsys):
    code, _, err = run(capsys, "rank-table", "--map", "alpha", "--max-weight", "14")
    assert code == 2
    assert "extended" in err


# ----------------------------------------------------------------------- eval

def test_eval_sigma_text(capsys):
    code, out, _ = run(capsys, "eval", "--sigma", "2", "--digits", "30")
    assert code == 0
    assert "+/-" in out
    assert out.startswith("sigma (2) at n=0:")


def test_eval_sigma_value(capsys):
    code, out, _ = run(
        capsys, "eval", "--sigma", "2", "--digits", "40", "--format", "json"
    )
    payload = json.loads(out)
    with mp.workprec(200):
        assert abs(mp.mpf(payload["value"]) - mp.mpf(SIGMA2_45)) < tol(39)
        assert mp.mpf(payload["abs_error"]) < tol(40)


def test_eval_zeta_tail(capsys):
    code, out, _ = run(
        capsys, "eval", "--zeta-tail", "3,1", "--n", "2", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "zeta-tail"
    assert payload["n"] == 2


def test_eval_digit_gate(capsys):
    code, _, err = run(capsys, "eval", "--sigma", "2", "--digits", "65")
    assert code == 2
    assert "--extended" in err
    code, out, _ = run(capsys, "eval", "--sigma", "2", "--digits", "65", "--extended")
    assert code == 0
    code, _, _ = run(capsys, "eval", "--sigma", "2", "--digits", "0")
    assert code == 2
    code, _, _ = run(capsys, "eval", "--sigma", "2", "--n", "-1")
    assert code == 2


# --------------------------------------------------------------------- verify

def test_verify_euler(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "euler", "--digits", "30")
    assert code == 0
    assert "result: PASS" in out


@pytest.mark.parametrize("identity", sorted(IDENTITIES))
def test_verify_registry_defaults(identity, capsys):
    code, out, _ = run(
        capsys, "verify", "--identity", identity, "--digits", "12", "--format", "json"
    )
    assert code == 0, out
    payload = json.loads(out)
    assert payload["passed"] is True
    assert payload["checks"]


def test_verify_param_validation(capsys):
    code, _, err = run(
        capsys, "verify", "--identity", "zucker", "--params", "r=9"
    )
    assert code == 2
    code, _, err = run(
        capsys, "verify", "--identity", "euler", "--params", "bogus=3"
    )
    assert code == 2
    assert "unknown" in err
    code, _, _ = run(
        capsys, "verify", "--identity", "bbb", "--params", "k=abc"
    )
    assert code == 2
    with pytest.raises(SystemExit) as e:
        run(capsys, "verify", "--identity", "nonsense")
    assert e.value.code == 2


# --------------------------------------------------------------- delta-matrix

def test_delta_matrix_values(capsys):
    code, out, _ = run(capsys, "delta-matrix", "--weight", "4", "--format", "json")
    assert code == 0
    assert json.loads(out)["matrix"] == [[3, 6], [0, 1]]
    code, out, _ = run(capsys, "delta-matrix", "--weight", "0", "--format", "json")
    assert json.loads(out)["matrix"] == [[1]]


def test_delta_matrix_csv(capsys):
    code, out, _ = run(capsys, "delta-matrix", "--weight", "8", "--format", "csv")
    assert code == 0
    rows = out.strip().splitlines()
    assert len(rows) == 8
    assert rows[0] == "3,6,12,0,6,24,0,0"


def test_delta_matrix_odd_weight(capsys):
    code, _, err = run(capsys, "delta-matrix", "--weight", "5")
    assert code == 2
    assert "even" in err
