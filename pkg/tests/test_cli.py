import json
import subprocess
import sys

import pytest

from nomset.cli import run

GOLDEN = [
    (["analyze", "Pfs(Pfin(A))"], 0, "UniformlyInfinite"),
    (["analyze", "Pfs(A x A)"], 0, "Unknown"),
    (["analyze", "A"], 0, "NonUniformlyInfinite"),
    (["analyze", "Pfs(Foo)"], 2, None),
    (["count", "--kind", "subsets", "--support-size", "2"], 0, "8"),
    (["count", "--cross-check", "--support", "a,b", "--universe", "6"], 0, "[OK]"),
    (["count", "--cross-check", "--kind", "subsets", "--support", "a,b", "--universe", "5"], 2, None),
    (["enumerate", "--kind", "funAA", "--support", "a"], 0, "(2 elements)"),
    (["fixpoint", "--map", "(cup{a} | perm((a b)))"], 0, "fixpoint {a,b} after 2 steps"),
    (["check-fn", "fun{a->b, b->a; tail=id}"], 0, "injective True"),
    (["oracle", "--total-order", "--universe", "5", "--support", "a,b"], 0, "True"),
    (["check-card", "--witness", "double-atoms", "--samples", "100", "--seed", "7"], 0, "[OK]"),
]


@pytest.mark.parametrize("argv,code,needle", GOLDEN, ids=[" ".join(g[0][:2]) for g in GOLDEN])
def test_golden_matrix(argv, code, needle, capsys):
    assert run(argv) == code
    out = capsys.readouterr().out
    if needle is not None:
        assert needle in out


def test_mismatch_exit_code(capsys):
    # a map that lies about its support trips the bound check
    assert run(["fixpoint", "--map", "perm((a b))", "--from", "{a}"]) == 1


def test_usage_errors(capsys):
    assert run(["count", "--kind", "bogus", "--support-size", "1"]) == 2
    assert run(["check-card", "--witness", "nope"]) == 2
    assert run([]) == 2
    assert "grammar" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [g[0] for g in GOLDEN if g[1] == 0])
def test_json_round_trip(argv, capsys):
    assert run(argv + ["--json"]) == 0
    out = capsys.readouterr().out
    data = json.loads(out)
    assert json.dumps(data, sort_keys=True, ensure_ascii=False) == out.strip()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nomset", "count", "--kind", "atoms",
                           "--support-size", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "3"
