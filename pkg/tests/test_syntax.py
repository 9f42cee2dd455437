import pytest
from conftest import clopens, iv, tuples
from hypothesis import given

from ecpsl import syntax
from ecpsl.errors import ParseError
from ecpsl.hat import E, TOP, Tuple
from ecpsl.limit import Meet, PComp, Var, Zero


def test_clopen_forms():
    assert syntax.parse_clopen("0").is_empty()
    assert syntax.parse_clopen("full").is_full()
    assert syntax.parse_clopen("[0,1/4) u [3/4,1)") == iv(("0", "1/4"), ("3/4", "1"))
    assert syntax.parse_clopen("[0,1/4)∪[1/4,1/2)") == iv(("0", "1/2"))


def test_tuple_forms():
    assert syntax.parse_tuple("(E, T, [0,1/2))@3") == Tuple.of(E, TOP, iv(("0", "1/2")))


@given(clopens())
def test_clopen_roundtrip(s):
    assert syntax.parse_clopen(syntax.format_clopen(s)) == s


@given(tuples())
def test_tuple_roundtrip(t):
    assert syntax.parse_tuple(syntax.format_tuple(t)) == t


@pytest.mark.parametrize(
    "text,message,pos",
    [
        ("([0,1/3))@1", "denominator must be a power of two", 4),
        ("([1/2,1/4))@1", "interval endpoints reversed", 1),
        ("(E,E)@3", "level @3 does not match 2 components", 6),
        ("(E)@1 x", "unexpected trailing input", 6),
        ("([0,3/2))@1", "endpoint outside [0,1]", 4),
        ("(E", "expected ')'", 2),
        ("(Q)@1", "expected '0', 'full' or an interval", 1),
    ],
)
def test_errors(text, message, pos):
    with pytest.raises(ParseError) as exc:
        syntax.parse_tuple(text)
    assert exc.value.pos == pos
    assert message in str(exc.value)


def test_terms():
    assert syntax.parse_term("x ∧ y*") == Meet(Var("x"), PComp(Var("y")))
    assert syntax.parse_term("x & y ^ z") == Meet(Meet(Var("x"), Var("y")), Var("z"))
    assert syntax.parse_term("(x ∧ 0)**") == PComp(PComp(Meet(Var("x"), Zero())))
    with pytest.raises(ParseError):
        syntax.parse_term("x ∧")
