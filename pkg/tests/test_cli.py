import json
import subprocess
import sys

import pytest

from sl2trace.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_reduce_pretty(capsys):
    code, out, _ = run(capsys, "reduce", "[a,b]", "--gens", "2", "--format", "pretty")
    assert code == 0
    assert out.strip() == "t[1]^2 + t[2]^2 + t[1,2]^2 - t[1]*t[2]*t[1,2] - 2"


def test_reduce_json(capsys):
    code, out, _ = run(capsys, "reduce", "a^2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["text"] == "t[1]^2 - 2"
    assert {t["coeff"] for t in data["poly"]["terms"]} == {"1/1", "-2/1"}


def test_count_fiber_csv(capsys):
    code, out, _ = run(capsys, "count", "fiber", "--prime", "3", "--t", "2", "--method", "brute", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["p,t,n,method", "3,2,10,brute"]


def test_count_all_and_fit(capsys):
    code, out, _ = run(capsys, "count", "all", "--prime", "5", "--format", "json")
    assert code == 0 and json.loads(out)["sum"] == 125
    code, out, _ = run(capsys, "count", "fit", "--t", "2", "--primes", "3,5,7,11")
    assert code == 0 and out.strip().endswith("fit: q^2 + 1")
    code, out, _ = run(capsys, "count", "fit", "--t", "-2", "--primes", "3,5,7", "--format", "json")
    assert json.loads(out)["fit"] is None


def test_count_commuting(capsys):
    code, out, _ = run(capsys, "count", "commuting-pairs", "--prime", "3")
    assert code == 0 and out.strip() == "168"


def test_verify_engine_small(capsys):
    code, out, _ = run(capsys, "verify", "engine", "--words", "20", "--max-len", "6", "--gens", "3", "--seed", "1")
    assert code == 0 and out.strip() == "20/20 ok"


def test_verify_identity(capsys):
    code, out, _ = run(capsys, "verify", "identity", "--samples", "20", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "check,passed,total"


@pytest.mark.parametrize("which", ["f3", "torus", "discriminant", "reducible"])
def test_equation(capsys, which):
    code, out, _ = run(capsys, "equation", which, "--format", "json")
    assert code == 0 and json.loads(out)["ok"]


def test_singular_hessian_projective(capsys):
    code, out, _ = run(capsys, "singular", "--t", "-2")
    assert code == 0 and out.strip() == "(0, 0, 0)"
    code, out, _ = run(capsys, "singular", "--t", "1/2")
    assert out.strip() == "none"
    code, out, _ = run(capsys, "hessian", "--t", "2", "--point", "2,-2,-2", "--format", "json")
    assert json.loads(out)["hessian_det"] == "-32"
    code, out, _ = run(capsys, "projective", "--t", "0", "--prime", "11", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["infinity_count"] == 33 and data["passed"]


def test_epoly_basis_rank(capsys):
    assert run(capsys, "epoly", "check")[0] == 0
    code, out, _ = run(capsys, "epoly", "table", "--format", "json")
    assert json.loads(out)["V_inf"] == "3q"
    code, out, _ = run(capsys, "basis", "--gens", "3", "--format", "json")
    assert json.loads(out)["dimension"] == 6
    code, out, _ = run(capsys, "jacobian-rank", "--gens", "2", "--samples", "3")
    assert code == 0 and out.startswith("rank 3")


def test_eliminate(capsys):
    code, out, _ = run(capsys, "eliminate-tcd", "--seed", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["vanishes"] and data["degree"] > 0
    code, _, err = run(capsys, "eliminate-tcd", "--values", "2,2,2,2,2,2,2,2,2")
    assert code == 1 and "identically" in err


def test_genus2(capsys):
    code, out, _ = run(capsys, "genus2", "relations")
    assert code == 0 and out.count("\n") == 4
    code, out, _ = run(capsys, "genus2", "check", "--samples", "10", "--format", "json")
    assert code == 0 and json.loads(out)["ok"]


def test_usage_errors(capsys):
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "reduce")[0] == 2
    code, _, err = run(capsys, "reduce", "a(")
    assert code == 2 and "error" in err
    assert run(capsys, "count", "fiber", "--prime", "2", "--t", "0")[0] == 2
    assert run(capsys, "count", "fiber", "--prime", "9", "--t", "0")[0] == 2
    assert run(capsys, "hessian", "--t", "2", "--point", "1,1,1")[0] == 2
    assert run(capsys, "singular", "--t", "x/y")[0] == 2


def test_deterministic_output(capsys):
    argv = ["eliminate-tcd", "--seed", "5", "--format", "json"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "sl2trace", "reduce", "a b a b"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "t[1,2]^2 - 2"
