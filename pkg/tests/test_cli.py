import io
import json
import subprocess
import sys

import pytest

from tambara.burnside import BurnsideElement
from tambara.catalog import GeneratorSet
from tambara.cli import run
from tambara.gw import GwClass
from tambara.ideals import TambaraIdeal


def call(*argv, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        old = sys.stdin
        sys.stdin = io.StringIO(stdin)
    try:
        code = run(list(argv), out, err)
    finally:
        if stdin is not None:
            sys.stdin = old
    return code, out.getvalue(), err.getvalue()


def test_verify_example():
    code, out, _ = call("verify", "--theorem", "finite-fields", "--q", "3", "--N", "12")
    assert code == 0
    rep = json.loads(out)
    assert rep["ok"] and len(rep["levels"]) == 6
    assert all(lv["equal"] for lv in rep["levels"].values())


def test_eval_norm_example():
    code, out, _ = call("eval", "--op", "norm", "--from", "3", "--to", "9", "--x", "t_3 - 3")
    assert code == 0
    x = BurnsideElement.from_json(json.loads(out))
    assert x == BurnsideElement.parse(9, 9, "3t_9 - 8t_3 - 3")
    code, out, _ = call("--format", "text", "eval", "--op", "norm", "--from", "3", "--to", "9", "--x", "t_3 - 3")
    assert out.strip() == "3t_9 - 8t_3 - 3"


def test_kernel_example():
    code, out, _ = call("kernel", "--q", "3", "--N", "2")
    assert code == 0
    ideal = json.loads(out)
    # same lattice as span{(-4, 2)}, written in canonical form
    assert ideal["levels"]["2"]["basis"] == [[4, -2]]
    assert ideal["levels"]["1"]["basis"] == []
    code, out, _ = call("kernel", "--N", "2", "--format", "text")
    assert "level 2: 2t_2 - 4" in out


def test_eval_other_ops():
    x = json.dumps(BurnsideElement.parse(12, 12, "t_6").to_json())
    assert json.loads(call("eval", "--op", "res", "--to", "4", "--x", x)[1])["coeffs"] == {"2": 3}
    code, out, _ = call("eval", "--op", "tr", "--from", "2", "--to", "4", "--x", "t_2")
    assert json.loads(out) == {"N": 4, "M": 4, "coeffs": {"4": 1}}
    code, out, _ = call("eval", "--op", "mul", "--level", "12", "--x", "t_4", "--y", "t_6")
    assert json.loads(out)["coeffs"] == {"12": 2}
    code, out, _ = call("eval", "--op", "card", "--level", "12", "--x", "3t_4 - t_6")
    assert json.loads(out) == {"card": 6}
    code, out, _ = call("eval", "--op", "norm", "--N", "8", "--from", "4", "--to", "8", "--direct",
                        "--x", "t_4 - t_2 - 2")
    assert BurnsideElement.from_json(json.loads(out)) == BurnsideElement.parse(8, 8, "-2t_8 + 3t_4 + 3t_2 - 2")


def test_dress():
    code, out, _ = call("dress", "--q", "3", "--N", "2", "--level", "2", "--x", "t_2 - 2")
    assert code == 0
    assert GwClass.from_json(json.loads(out)) == GwClass(3, 1, 0, 1)


def test_catalog_saturate_round_trip(tmp_path):
    code, out, _ = call("catalog", "--theorem", "finite-fields", "--N", "12")
    assert code == 0
    gs = GeneratorSet.from_json(json.loads(out))
    path = tmp_path / "gens.json"
    path.write_text(out)
    code, sat, _ = call("saturate", "--N", "12", "--gens", str(path))
    assert code == 0
    ideal = TambaraIdeal.from_json(json.loads(sat))
    code, ker, _ = call("kernel", "--q", "3", "--N", "12")
    assert ideal == TambaraIdeal.from_json(json.loads(ker))
    assert json.loads(sat) == json.loads(ker)
    # the same through stdin, @file and inline
    assert call("saturate", "--gens", "-", stdin=out)[1] == sat
    assert call("saturate", "--gens", "@" + str(path))[1] == sat
    assert call("saturate", "--gens", out)[1] == sat
    assert len(gs) == 1


def test_saturate_accepts_bare_list():
    gens = [BurnsideElement.parse(2, 2, "2t_2 - 4").to_json()]
    code, out, _ = call("saturate", "--gens", json.dumps(gens))
    assert code == 0 and json.loads(out)["levels"]["2"]["basis"] == [[4, -2]]


def test_deterministic_output():
    args = ("verify", "--theorem", "zp-truncated", "--q", "3", "--p", "2", "--depth", "3")
    first = call(*args)[1]
    assert first == call(*args)[1]
    keys = list(json.loads(first)["levels"])
    assert keys == sorted(keys, key=int)


def test_verify_failure_exit_code():
    code, out, _ = call("verify", "--theorem", "zhat-truncated", "--n", "5", "--literal")
    assert code == 1 and json.loads(out)["ok"] is False
    code, out, _ = call("--format", "text", "verify", "--theorem", "zhat-truncated", "--n", "5", "--literal")
    assert code == 1 and "MISMATCH witness [5, -1]" in out


@pytest.mark.parametrize("argv", [
    ("eval", "--op", "norm", "--from", "3", "--to", "8", "--x", "t_3"),
    ("eval", "--op", "norm", "--to", "9", "--x", "t_3"),
    ("eval", "--op", "mul", "--level", "4", "--x", "t_4"),
    ("eval", "--op", "res", "--x", "{\"N\": 4}"),
    ("eval", "--op", "card", "--level", "4", "--x", "t_3"),
    ("eval", "--op", "card", "--level", "4", "--x", "t_2 ++ 1"),
    ("kernel", "--q", "4", "--N", "2"),
    ("kernel", "--shape", "Zp", "--p", "4", "--depth", "2"),
    ("saturate", "--gens", "{not json"),
    ("saturate", "--gens", "/nonexistent/gens.json"),
    ("catalog", "--theorem", "nope"),
    ("catalog", "--theorem", "finite-fields"),
    ("verify", "--theorem", "c2-rational", "--r", "1/0"),
    ("verify", "--theorem", "c2-rational", "--r", "0"),
    ("frobnicate",),
    ("eval", "--op", "sqrt", "--x", "1"),
])
def test_malformed_input_exits_2(argv):
    code, _, err = call(*argv)
    assert code == 2


def test_verify_exit_code_matches_report():
    for argv in (("--theorem", "c2", "--tau", "2"), ("--theorem", "zhat-truncated", "--n", "5", "--literal"),
                 ("--theorem", "twopowers-2", "--n", "4")):
        code, out, _ = call("verify", *argv)
        assert code == (0 if json.loads(out)["ok"] else 1)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tambara", "eval", "--op", "card", "--level", "5",
                           "--x", "t_5 - 5"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout) == {"card": 0}
