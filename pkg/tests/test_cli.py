import io
import json
import subprocess
import sys

import pytest

from loopbraid.braid import parse_word
from loopbraid.cli import run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue().splitlines()


def test_eq():
    assert call("eq", "-n", "2", "t1 s1", "s1 t2") == (0, ["true"])
    assert call("eq", "-n", "2", "s1", "r1") == (1, ["false"])


def test_bad_input_exits_2(capsys):
    assert call("eq", "-n", "2", "s1 q2", "s1")[0] == 2
    assert "'q2'" in capsys.readouterr().err
    assert call("eq", "-n", "3", "r5", "s1")[0] == 2
    assert "'r5'" in capsys.readouterr().err
    assert call("frobnicate")[0] == 2
    assert call("eq", "-n", "0", "1", "1")[0] == 2


def test_closable():
    assert call("closable", "-n", "1", "t1") == (1, ["false"])
    assert call("closable", "-n", "1", "t1 t1") == (0, ["true"])


def test_invariants():
    code, lines = call("invariants", "-n", "2", "s1")
    assert code == 0
    assert json.loads(lines[0]) == {"n": 2, "components": 1, "cycles": [[2, 1]], "sigma_parity": 1}
    assert call("invariants", "-n", "1", "t1")[0] == 1


def test_close():
    code, lines = call("close", "-n", "2", "t1 s1")
    assert code == 1 and lines[0] == "false"
    assert json.loads(lines[1])["components"] == [{"strands": [1, 2], "wen_parity": 1}]


def test_conj():
    code, lines = call("conj", "-n", "2", "--radius", "1", "s1", "r1 s1 r1")
    assert code == 0
    assert json.loads(lines[0]) == {"verdict": "conjugate", "witness": "r1", "radius": 1}
    code, lines = call("conj", "-n", "2", "s1", "r1")
    assert code == 1 and json.loads(lines[0])["invariant"] == "sigma_parity"
    code, lines = call("conj", "-n", "2", "--radius", "2", "s1", "s1^-1")
    assert code == 3 and json.loads(lines[0]) == {"verdict": "unknown", "radius": 2}


def test_certify():
    assert call("certify", "-n", "2", "s1", "r1 s1 r1", "r1") == (0, ["true"])
    assert call("certify", "-n", "2", "s1", "r1", "t1") == (1, ["false"])


def test_nf():
    assert call("nf", "-n", "2", "r1 s1^-1 r1 t1") == (0, ["t2", "s1"])


def test_stabilize_destabilize():
    assert call("stabilize", "-n", "2", "--kind", "rho", "s1") == (0, ["s1 r2"])
    assert call("destabilize", "-n", "3", "s1 r2") == (0, ["s1"])
    assert call("destabilize", "-n", "3", "r2 s1")[0] == 1


def test_selftest():
    code, lines = call("selftest", "--max-n", "6")
    assert code == 0
    assert lines[-1] == "n=6 checks=140 failed=0"


@pytest.mark.parametrize("seed", [0, 1, 17])
def test_random_is_reproducible_and_parses(seed):
    first = call("random", "-n", "4", "--len", "12", "--seed", str(seed))
    assert first == call("random", "-n", "4", "--len", "12", "--seed", str(seed))
    code, (text, echo) = first
    assert code == 0 and echo == f"seed {seed}"
    assert len(parse_word(text, 4)) == 12
    assert call("eq", "-n", "4", text, text) == (0, ["true"])


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "loopbraid", "eq", "-n", "2", "t1 s1", "s1 t2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "true\n"
