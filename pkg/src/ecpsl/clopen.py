"""The countable atomless Boolean algebra as dyadic clopen subsets of [0, 1).

A :class:`ClopenSet` is a finite union of half-open intervals ``[lo, hi)``
with dyadic endpoints.  Internally it is stored as a flat, strictly
increasing tuple of integer endpoints at the smallest scale ``2**-exp`` that
represents it exactly, so two sets are equal iff their stored data are equal.

The set operations are delegated to a sweep kernel (compiled when
available, see :mod:`ecpsl._kernel`).
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from . import _kernel


@dataclass(frozen=True, order=False)
class Dyadic:
    """The dyadic rational ``num / 2**exp`` in [0, 1], in lowest terms."""

    num: int
    exp: int

    def __post_init__(self):
        if self.exp < 0 or self.num < 0:
            raise ValueError(f"negative dyadic component: {self.num}/2^{self.exp}")
        if self.num > 1 << self.exp:
            raise ValueError(f"dyadic {self.num}/2^{self.exp} exceeds 1")
        if self.exp > 0 and self.num % 2 == 0:
            raise ValueError(f"dyadic {self.num}/2^{self.exp} is not reduced")

    @classmethod
    def of(cls, num: int, exp: int = 0) -> Dyadic:
        """Build a dyadic from any ``num / 2**exp``, reducing it."""
        if num == 0:
            return cls(0, 0)
        tz = (num & -num).bit_length() - 1
        shift = min(tz, exp)
        return cls(num >> shift, exp - shift)

    @classmethod
    def from_rational(cls, q) -> Dyadic:
        q = Fraction(q)
        den = q.denominator
        if den & (den - 1):
            raise ValueError(f"{q} is not dyadic")
        return cls.of(q.numerator, den.bit_length() - 1)

    def to_fraction(self) -> Fraction:
        return Fraction(self.num, 1 << self.exp)

    def scaled(self, exp: int) -> int:
        """Numerator at scale ``2**-exp``; ``exp`` must be at least ``self.exp``."""
        return self.num << (exp - self.exp)

    def __lt__(self, other: Dyadic) -> bool:
        k = max(self.exp, other.exp)
        return self.scaled(k) < other.scaled(k)

    def __le__(self, other: Dyadic) -> bool:
        return self == other or self < other

    def __str__(self) -> str:
        if self.exp == 0:
            return str(self.num)
        return f"{self.num}/{1 << self.exp}"


@dataclass(frozen=True)
class UltraPoint:
    """A point of [0, 1); its clopen neighbourhoods form an ultrafilter of A."""

    point: Dyadic

    def __post_init__(self):
        if not self.point < Dyadic(1, 0):
            raise ValueError("ultrafilter point must lie in [0,1)")

    def __str__(self) -> str:
        return str(self.point)


def _as_dyadic(x) -> Dyadic:
    if isinstance(x, Dyadic):
        return x
    if isinstance(x, Rational):
        return Dyadic.from_rational(x)
    raise TypeError(f"cannot read {x!r} as a dyadic endpoint")


class ClopenSet:
    """Normalized finite union of half-open dyadic intervals in [0, 1)."""

    __slots__ = ("_ends", "_exp", "_hash")

    def __init__(self, intervals=()):
        acc = _EMPTY_DATA
        for lo, hi in intervals:
            lo, hi = _as_dyadic(lo), _as_dyadic(hi)
            if hi < lo:
                raise ValueError(f"interval [{lo},{hi}) is reversed")
            if lo == hi:
                continue
            k = max(lo.exp, hi.exp)
            acc = _combine(acc, ((lo.scaled(k), hi.scaled(k)), k), _kernel.OP_OR)
        self._ends, self._exp = acc
        self._hash = None

    @classmethod
    def _raw(cls, ends: tuple, exp: int) -> ClopenSet:
        obj = cls.__new__(cls)
        obj._ends, obj._exp = _kernel.reduce_scale(ends, exp)
        obj._hash = None
        return obj

    @classmethod
    def empty(cls) -> ClopenSet:
        return _EMPTY

    @classmethod
    def full(cls) -> ClopenSet:
        return _FULL

    @classmethod
    def from_mask(cls, mask: int, rank: int) -> ClopenSet:
        """Union of the cells ``[t/2**rank, (t+1)/2**rank)`` for each set bit ``t``."""
        if mask < 0 or mask >> (1 << rank):
            raise ValueError(f"mask {mask} does not fit {1 << rank} cells")
        ends = []
        t = 0
        while mask:
            if mask & 1:
                run = ((mask + 1) & ~mask).bit_length() - 1
                ends += (t, t + run)
                mask >>= run
                t += run
            else:
                skip = (mask & -mask).bit_length() - 1
                mask >>= skip
                t += skip
        return cls._raw(tuple(ends), rank)

    @property
    def exp(self) -> int:
        """Smallest ``k`` such that the set is a union of cells of width ``2**-k``."""
        return self._exp

    @property
    def intervals(self) -> tuple[tuple[Dyadic, Dyadic], ...]:
        e, k = self._ends, self._exp
        return tuple(
            (Dyadic.of(e[i], k), Dyadic.of(e[i + 1], k)) for i in range(0, len(e), 2)
        )

    def mask(self) -> int:
        """Cell bitmask at scale :attr:`exp` (inverse of :meth:`from_mask`)."""
        m = 0
        e = self._ends
        for i in range(0, len(e), 2):
            m |= ((1 << e[i + 1]) - 1) ^ ((1 << e[i]) - 1)
        return m

    def is_empty(self) -> bool:
        return not self._ends

    def is_full(self) -> bool:
        return self._exp == 0 and self._ends == (0, 1)

    def __and__(self, other: ClopenSet) -> ClopenSet:
        return meet(self, other)

    def __or__(self, other: ClopenSet) -> ClopenSet:
        return join(self, other)

    def __sub__(self, other: ClopenSet) -> ClopenSet:
        return ClopenSet._raw(*_combine(_data(self), _data(other), _kernel.OP_DIFF))

    def __invert__(self) -> ClopenSet:
        return complement(self)

    def __le__(self, other: ClopenSet) -> bool:
        return leq(self, other)

    def __lt__(self, other: ClopenSet) -> bool:
        return self != other and leq(self, other)

    def __ge__(self, other: ClopenSet) -> bool:
        return leq(other, self)

    def __gt__(self, other: ClopenSet) -> bool:
        return self != other and leq(other, self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClopenSet):
            return NotImplemented
        return self._exp == other._exp and self._ends == other._ends

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._exp, self._ends))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._ends)

    def __str__(self) -> str:
        if not self._ends:
            return "0"
        if self.is_full():
            return "full"
        return "u".join(f"[{lo},{hi})" for lo, hi in self.intervals)

    def __repr__(self) -> str:
        return f"ClopenSet({str(self)!r})"


_EMPTY_DATA: tuple = ((), 0)


def _data(s: ClopenSet) -> tuple:
    return s._ends, s._exp


def _combine(a: tuple, b: tuple, op: int) -> tuple:
    (ea, ka), (eb, kb) = a, b
    k = max(ka, kb)
    ends = _kernel.combine(_kernel.rescale(ea, k - ka), _kernel.rescale(eb, k - kb), op)
    return _kernel.reduce_scale(ends, k)


_EMPTY = ClopenSet._raw((), 0)
_FULL = ClopenSet._raw((0, 1), 0)


def meet(a: ClopenSet, b: ClopenSet) -> ClopenSet:
    return ClopenSet._raw(*_combine(_data(a), _data(b), _kernel.OP_AND))


def join(a: ClopenSet, b: ClopenSet) -> ClopenSet:
    return ClopenSet._raw(*_combine(_data(a), _data(b), _kernel.OP_OR))


def complement(a: ClopenSet) -> ClopenSet:
    ends, k = a._ends, a._exp
    top = 1 << k
    if ends and ends[0] == 0:
        ends = ends[1:]
    else:
        ends = (0,) + ends
    if ends and ends[-1] == top:
        ends = ends[:-1]
    else:
        ends = ends + (top,)
    return ClopenSet._raw(ends, k)


def leq(a: ClopenSet, b: ClopenSet) -> bool:
    return meet(a, b) == a


def split(a: ClopenSet) -> ClopenSet:
    """Left half of the leftmost interval of ``a``: a set strictly between 0 and ``a``."""
    if not a:
        raise ValueError("split of the empty set: 0 has no strictly smaller nonzero element")
    lo, hi = a._ends[0], a._ends[1]
    return ClopenSet._raw((2 * lo, lo + hi), a._exp + 1)


def contains_point(a: ClopenSet, p: UltraPoint | Dyadic) -> bool:
    d = p.point if isinstance(p, UltraPoint) else p
    if d.exp <= a._exp:
        q = d.num << (a._exp - d.exp)
    else:
        # point lies in the cell [q, q+1) at the set's scale
        q = d.num >> (d.exp - a._exp)
    return bisect_right(a._ends, q) % 2 == 1


def first_point(a: ClopenSet) -> UltraPoint:
    if not a:
        raise ValueError("the empty set contains no point")
    return UltraPoint(Dyadic.of(a._ends[0], a._exp))


# -- enumeration of A \ {0, full} -------------------------------------------
#
# Rank k lists the cell masks 1 .. 2**(2**k) - 2 in ascending order, skipping
# masks that already describe a set of lower rank.  A rank-k mask has lower
# rank exactly when it is the "spread" of a rank-(k-1) mask (every cell pair
# both set or both clear).


def rank_count(k: int) -> int:
    """Number of sets whose minimal scale is exactly ``2**-k`` (k >= 1)."""
    if k < 1:
        raise ValueError("rank must be positive")
    return (1 << (1 << k)) - (1 << (1 << (k - 1)))


def _spread(m: int) -> int:
    out = 0
    t = 0
    while m:
        if m & 1:
            out |= 3 << (2 * t)
        m >>= 1
        t += 1
    return out


def _doubled_upto(bound: int, k: int) -> int:
    """Count masks ``m' >= 1`` of rank k-1 with ``spread(m') <= bound``."""
    best = 0
    for t in range((1 << (k - 1)) - 1, -1, -1):
        trial = best | (1 << t)
        if _spread(trial) <= bound:
            best = trial
    return best


def enumerate_set(j: int) -> ClopenSet:
    """The ``j``-th element (1-based) of the base enumeration of A minus {0, full}."""
    if j < 1:
        raise ValueError(f"enumeration index must be >= 1, got {j}")
    k = 1
    while j > rank_count(k):
        j -= rank_count(k)
        k += 1
    # smallest mask M whose count of non-doubled masks in [1, M] reaches j
    lo, hi = 1, (1 << (1 << k)) - 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid - _doubled_upto(mid, k) >= j:
            hi = mid
        else:
            lo = mid + 1
    return ClopenSet.from_mask(lo, k)


def index_of(s: ClopenSet) -> int:
    """Inverse of :func:`enumerate_set`."""
    if not s or s.is_full():
        raise ValueError("0 and full are not enumerated")
    k = s.exp
    m = s.mask()
    return sum(rank_count(r) for r in range(1, k)) + m - _doubled_upto(m, k)
