from fractions import Fraction

import pytest
from conftest import FULL, HALF, UPPER, clopens, iv
from hypothesis import assume, given
from hypothesis import strategies as st

from ecpsl import clopen as cl
from ecpsl.clopen import ClopenSet, Dyadic, UltraPoint

ZERO = ClopenSet.empty()


def member(s, p):
    """Membership straight from the interval list, no kernel involved."""
    return any(lo.to_fraction() <= p < hi.to_fraction() for lo, hi in s.intervals)


def grid_meet(a, b, k=4):
    pts = [Fraction(t, 1 << k) for t in range(1 << k)]
    return [member(a, p) and member(b, p) for p in pts]


def grid(s, k=4):
    return [member(s, Fraction(t, 1 << k)) for t in range(1 << k)]


class TestDyadic:
    def test_of_reduces(self):
        assert Dyadic.of(4, 3) == Dyadic(1, 1)
        assert Dyadic.of(0, 5) == Dyadic(0, 0)

    @pytest.mark.parametrize("num,exp", [(2, 2), (-1, 0), (5, 2)])
    def test_rejects_bad_forms(self, num, exp):
        with pytest.raises(ValueError):
            Dyadic(num, exp)

    def test_from_rational(self):
        assert Dyadic.from_rational(Fraction(3, 8)) == Dyadic(3, 3)
        with pytest.raises(ValueError):
            Dyadic.from_rational(Fraction(1, 3))

    def test_str(self):
        assert str(Dyadic(3, 2)) == "3/4"
        assert str(Dyadic(1, 0)) == "1"


class TestExamples:
    def test_meet(self):
        got = HALF & iv(("1/4", "3/4"))
        assert got == iv(("1/4", "1/2"))
        assert grid(got) == grid_meet(HALF, iv(("1/4", "3/4")))

    def test_meet_bounds(self):
        x = iv(("1/8", "5/8"))
        assert x & ZERO == ZERO
        assert x & FULL == x

    def test_complement(self):
        assert ~HALF == UPPER
        assert ~ZERO == FULL
        s = iv(("1/4", "1/2"), ("3/4", "1"))
        assert ~s == iv(("0", "1/4"), ("1/2", "3/4"))
        assert grid(~s) == [not m for m in grid(s)]

    def test_join_merges_adjacent(self):
        got = iv(("0", "1/4")) | iv(("1/4", "1/2"))
        assert got == HALF
        assert got.intervals == ((Dyadic(0, 0), Dyadic(1, 1)),)

    def test_join_bounds(self):
        x = iv(("1/8", "5/8"))
        assert x | ZERO == x
        assert x | FULL == FULL

    def test_leq(self):
        assert cl.leq(iv(("0", "1/4")), HALF)
        assert not cl.leq(HALF, iv(("1/4", "3/4")))
        assert cl.leq(ZERO, UPPER)

    @pytest.mark.parametrize(
        "arg,want",
        [
            (FULL, HALF),
            (UPPER, iv(("1/2", "3/4"))),
            (iv(("1/4", "3/8")), iv(("1/4", "5/16"))),
        ],
    )
    def test_split(self, arg, want):
        assert cl.split(arg) == want

    def test_split_zero_raises(self):
        with pytest.raises(ValueError):
            cl.split(ZERO)

    def test_enumerate_prefix(self):
        assert cl.enumerate_set(1) == HALF
        assert cl.enumerate_set(2) == UPPER
        assert cl.enumerate_set(3) == iv(("0", "1/4"))

    def test_enumerate_rejects_zero_index(self):
        with pytest.raises(ValueError):
            cl.enumerate_set(0)

    def test_contains_point(self):
        assert cl.contains_point(HALF, UltraPoint(Dyadic(0, 0)))
        assert not cl.contains_point(HALF, UltraPoint(Dyadic(1, 1)))
        assert cl.contains_point(iv(("1/4", "3/4")), UltraPoint(Dyadic(1, 1)))

    def test_first_point(self):
        assert cl.first_point(HALF).point == Dyadic(0, 0)
        assert cl.first_point(UPPER).point == Dyadic(1, 1)
        assert cl.first_point(iv(("1/4", "3/8"), ("1/2", "1"))).point == Dyadic(1, 2)
        with pytest.raises(ValueError):
            cl.first_point(ZERO)


class TestNormalization:
    def test_unsorted_overlapping_input(self):
        s = ClopenSet([(Fraction(1, 2), 1), (0, Fraction(1, 4)), (Fraction(1, 8), Fraction(1, 2))])
        assert s == FULL
        assert s.is_full()

    def test_empty_intervals_dropped(self):
        assert ClopenSet([(Fraction(1, 2), Fraction(1, 2))]) == ZERO

    def test_reversed_rejected(self):
        with pytest.raises(ValueError):
            ClopenSet([(Fraction(1, 2), Fraction(1, 4))])

    def test_minimal_scale(self):
        assert iv(("0", "1/4"), ("1/4", "1/2")).exp == 1

    @given(clopens())
    def test_renormalize_is_identity(self, s):
        assert ClopenSet(s.intervals) == s
        assert ClopenSet.from_mask(s.mask(), s.exp) == s
        assert hash(ClopenSet(s.intervals)) == hash(s)


class TestLaws:
    @given(clopens(), clopens(), clopens())
    def test_lattice(self, a, b, c):
        assert a & b == b & a and a | b == b | a
        assert (a & b) & c == a & (b & c)
        assert (a | b) | c == a | (b | c)
        assert a & (a | b) == a and a | (a & b) == a
        assert a & (b | c) == (a & b) | (a & c)

    @given(clopens(), clopens())
    def test_complement(self, a, b):
        assert ~~a == a
        assert a & ~a == ZERO and a | ~a == FULL
        assert a | b == ~(~a & ~b)
        assert a - b == a & ~b

    @given(clopens())
    def test_atomless(self, a):
        assume(a)
        assert ZERO < cl.split(a) < a

    @given(clopens(), st.integers(0, 255))
    def test_ultrafilter_dichotomy(self, a, t):
        p = UltraPoint(Dyadic.of(t, 8))
        assert cl.contains_point(a, p) != cl.contains_point(~a, p)
        assert cl.contains_point(a, p) == member(a, p.point.to_fraction())


class TestEnumeration:
    def test_rank_counts(self):
        assert [cl.rank_count(k) for k in (1, 2, 3)] == [2, 12, 240]

    def test_prefix_is_exactly_ranks_up_to_three(self):
        listed = [cl.enumerate_set(j) for j in range(1, 255)]
        assert len(set(listed)) == 254
        assert set(listed) == {ClopenSet.from_mask(m, 3) for m in range(1, 255)}

    def test_rank_two_order_by_brute_force(self):
        # brute force: ascending masks at rank 2, minus those of rank 1
        want = [ClopenSet.from_mask(m, 2) for m in range(1, 15)]
        want = [s for s in want if s.exp == 2]
        assert [cl.enumerate_set(j) for j in range(3, 15)] == want

    @given(st.integers(1, 1 << 70))
    def test_index_roundtrip(self, j):
        assert cl.index_of(cl.enumerate_set(j)) == j

    @given(clopens())
    def test_index_of_inverts(self, s):
        assume(s and not s.is_full())
        assert cl.enumerate_set(cl.index_of(s)) == s
