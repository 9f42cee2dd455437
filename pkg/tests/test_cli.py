import io

import pytest

from ecpsl.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_eval():
    assert call("eval", "x ∧ y*", "x=(E)@1", "y=([0,1/2))@1") == (0, "([1/2,1))@1\n", "")
    assert call("eval", "0*") == (0, "(T)@1\n", "")


def test_eval_unbound():
    code, _, err = call("eval", "x ∧ y", "x=(E)@1")
    assert code == 3 and "'y'" in err


def test_eq():
    assert call("eq", "(E)@1", "(E,T,E)@3")[:2] == (0, "true\n")
    assert call("eq", "(E)@1", "(T)@1")[:2] == (0, "false\n")


def test_witness_ec5_verbose():
    code, out, _ = call("witness", "ec5", "([0,1/2))@1", "(E)@1", "--verbose")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "(E,E)@2"
    assert "premise b < d1: true" in lines
    assert "conclusion d1 ∧ b* = d2 ∧ b*: true" in lines


def test_witness_precondition():
    code, out, err = call("witness", "ec1", "(E)@1", "(T)@1")
    assert code == 3 and out == "" and "b1 skeletal" in err


def test_witness_cap():
    code, _, err = call("witness", "ec5", "([1/4,1/2))@1", "(E)@1", "--max-level", "64")
    assert code == 4 and "cap" in err


def test_witness_arity():
    assert call("witness", "ec3", "(E)@1")[0] == 3
    assert call("witness", "ec3") == (0, "(E)@1\n", "")


def test_parse_error():
    code, out, err = call("eq", "([0,1/3))@1", "(E)@1")
    assert code == 2 and out == "" and "position 4" in err


def test_embed():
    assert call("embed", "(E)@1", "3") == (0, "(E,T,E)@3\n", "")
    assert call("embed", "(E,E)@2", "1")[0] == 3


def test_dump_level():
    code, out, _ = call("dump-level", "3")
    lines = out.splitlines()
    assert code == 0
    assert lines[:2] == ["level 3", "sigma 2 1 3"]
    assert lines[-2:] == ["distinguished [0,1/2)", "ultrafilter_point 0"]
    assert lines[2] == "coord 1 rotations 2 exceptions 1->2 2->1 first [1/2,1)"


def test_enum():
    assert call("enum", "1", "3")[1] == "1 [0,1/2)\n2 [1/2,1)\n3 [0,1/4)\n"
    assert call("enum", "0")[0] == 3


def test_closure():
    code, out, _ = call("closure", "(E)@1", "--verbose")
    assert code == 0 and out.splitlines() == ["(0)@1", "(E)@1", "(T)@1", "size 3"]


def test_closure_overflow():
    code, _, err = call("closure", "(E,[0,1/2))@2", "--max-size", "2")
    assert code == 1 and "violation" in err


def test_check_small_is_deterministic():
    a = call("check", "--cases", "5", "--seed", "3")
    b = call("check", "--cases", "5", "--seed", "3")
    assert a == b
    assert a[1].splitlines()[-1].startswith("summary ")


def test_usage_error():
    with pytest.raises(SystemExit):
        call("bogus")
