import itertools

import pytest
from conftest import tuple_pairs, tuples
from hypothesis import given
from hypothesis import strategies as st

from ecpsl import limit, tower
from ecpsl.errors import ClosureOverflow, LevelCapExceeded, PreconditionError
from ecpsl.limit import LimitElem, Meet, PComp, Var, Zero
from ecpsl.syntax import parse_elem as P


def holds(clauses):
    return all(ok for _, ok in clauses)


class TestEquality:
    def test_lift_is_equal(self):
        x = P("(E)@1")
        assert limit.eq(x, P("(E,T,E)@3"))
        assert x == P("(E,T)@2") and hash(x) == hash(P("(E,T,E)@3"))

    def test_different_classes(self):
        assert not limit.eq(P("(E)@1"), P("(T)@1"))
        assert not limit.eq(P("([0,1/2),0)@2"), P("([0,1/2))@1"))

    def test_canonical_is_minimal(self):
        assert P("(E,T,E)@3").canonical() == P("(E)@1").rep
        assert P("(E,E)@2").canonical().level == 2

    @given(tuples(max_level=4), st.integers(0, 6))
    def test_lift_preserves_class(self, t, k):
        x = LimitElem(t)
        y = LimitElem(tower.embed(t.level, t.level + k, t))
        assert x == y and hash(x) == hash(y)

    @given(tuple_pairs(max_level=3), st.integers(0, 6))
    def test_operations_commute_with_lifting(self, pair, k):
        a, b = pair
        n = a.level + k
        x, y = LimitElem(a), LimitElem(b)
        xl, yl = LimitElem(x.lift(n)), LimitElem(y.lift(n))
        assert limit.l_meet(x, y) == limit.l_meet(xl, yl)
        assert limit.l_pcomp(x) == limit.l_pcomp(xl)
        assert limit.l_leq(x, y) == limit.l_leq(xl, yl)

    def test_mixed_levels(self):
        assert limit.l_meet(P("(E)@1"), P("(T,[0,1/2))@2")) == P("(E,[0,1/2))@2")
        assert limit.l_lt(P("(E,E)@2"), P("(E)@1"))

    def test_zero_one(self):
        assert limit.l_pcomp(limit.zero()) == limit.one()
        assert limit.is_dense(limit.one()) and limit.is_skeletal(limit.zero())


class TestWitnesses:
    def test_ec1(self):
        w = limit.ec1_witness(P("(0)@1"), P("(T)@1"))
        assert str(w) == "([0,1/2))@1"
        assert holds(limit.ec1_conclusion(P("(0)@1"), P("(T)@1"), w))
        assert str(limit.ec1_witness(P("(0)@1"), P("([1/2,1))@1"))) == "([1/2,3/4))@1"

    def test_ec2(self):
        b, d = P("(0,[0,1/2))@2"), P("(E,E)@2")
        w = limit.ec2_witness(b, b, d)
        assert str(w) == "(T,[0,3/4))@2"
        assert holds(limit.ec2_conclusion(b, b, d, w))

    def test_ec2_after_climb(self):
        b, d = P("(0,[0,1/2))@2"), P("(E,T)@2")
        w = limit.ec2_witness(b, b, d)
        assert holds(limit.ec2_conclusion(b, b, d, w))

    def test_ec3(self):
        assert holds(limit.ec3_conclusion(limit.ec3_witness()))

    @pytest.mark.parametrize("d1,d2", [("(E,E)@2", "(E,T)@2"), ("(E,E,E)@3", "(E,T,E)@3")])
    def test_ec4(self, d1, d2):
        w = limit.ec4_witness(P(d1), P(d2))
        assert limit.l_lt(P(d1), w) and limit.l_lt(w, P(d2))
        assert limit.is_dense(w)

    def test_ec5(self):
        b, d = P("([0,1/2))@1"), P("(E)@1")
        w = limit.ec5_witness(b, d)
        assert str(w) == "(E,E)@2"
        assert holds(limit.ec5_conclusion(b, d, w))

    def test_ec5_deep_climb_and_cap(self):
        b, d = P("([1/4,1/2))@1"), P("(E)@1")
        w = limit.ec5_witness(b, d)
        assert holds(limit.ec5_conclusion(b, d, w))
        with pytest.raises(LevelCapExceeded):
            limit.ec5_witness(b, d, max_level=64)

    @pytest.mark.parametrize(
        "call,clause",
        [
            (lambda: limit.ec1_witness(P("(T)@1"), P("(T)@1")), "b1 < b2"),
            (lambda: limit.ec1_witness(P("(E)@1"), P("(T)@1")), "b1 skeletal"),
            (lambda: limit.ec2_witness(P("(0)@1"), P("(0)@1"), P("(E)@1")), "b1* || d"),
            (lambda: limit.ec4_witness(P("(E)@1"), P("(E)@1")), "d1 < d2"),
            (lambda: limit.ec5_witness(P("(0)@1"), P("(E)@1")), "0 < b"),
        ],
    )
    def test_preconditions(self, call, clause):
        with pytest.raises(PreconditionError) as exc:
            call()
        assert exc.value.clause == clause


class TestClosure:
    @pytest.mark.parametrize(
        "gen,want",
        [
            ("(T)@1", ["(0)@1", "(T)@1"]),
            ("(E)@1", ["(0)@1", "(E)@1", "(T)@1"]),
            ("([0,1/2))@1", ["(0)@1", "([0,1/2))@1", "([1/2,1))@1", "(T)@1"]),
        ],
    )
    def test_examples(self, gen, want):
        got = limit.subalgebra_closure([P(gen)])
        assert sorted(map(str, got)) == sorted(want)

    def test_closed_and_exhaustive(self):
        gens = [P("(E,[0,1/2))@2"), P("([1/4,1/2),T)@2")]
        got = limit.subalgebra_closure(gens)
        assert limit.is_closed(got)
        assert len(set(got)) == len(got)
        # every product of two closure members stays inside
        s = set(got)
        assert all(limit.l_meet(x, y) in s for x, y in itertools.product(got, repeat=2))

    def test_overflow(self):
        with pytest.raises(ClosureOverflow):
            limit.subalgebra_closure([P("(E,[0,1/2))@2"), P("([1/4,1/2),T)@2")], max_size=3)


class TestTerms:
    def test_laws(self):
        x = P("([0,1/4)u[1/2,1))@1")
        env = {"x": x}
        assert limit.term_eval(PComp(Zero()), env) == limit.one()
        assert limit.term_eval(Meet(Var("x"), PComp(Var("x"))), env) == limit.zero()
        xs = limit.term_eval(PComp(Var("x")), env)
        assert limit.term_eval(PComp(PComp(PComp(Var("x")))), env) == xs

    def test_unbound(self):
        with pytest.raises(KeyError):
            limit.term_eval(Var("y"), {})

    def test_vars(self):
        assert limit.term_vars(Meet(Var("a"), PComp(Var("b")))) == {"a", "b"}
