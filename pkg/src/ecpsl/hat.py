"""The p-semilattice Â and its finite powers G_n = Â^n.

An element of Â is either the adjoined top :data:`TOP` or a
:class:`~ecpsl.clopen.ClopenSet` standing for Inner(set).  The old top of A,
Inner(full), is the proper dense element e (exported as :data:`E`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .clopen import ClopenSet
from .errors import LevelMismatch


class Top:
    """The adjoined top of Â.  Use the singleton :data:`TOP`."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __reduce__(self):
        return (Top, ())

    def __repr__(self) -> str:
        return "TOP"

    def __str__(self) -> str:
        return "T"


TOP = Top()
E = ClopenSet.full()
ZERO = ClopenSet.empty()

HatAElem = Union[Top, ClopenSet]


def h_meet(x: HatAElem, y: HatAElem) -> HatAElem:
    if x is TOP:
        return y
    if y is TOP:
        return x
    return x & y


def h_leq(x: HatAElem, y: HatAElem) -> bool:
    if y is TOP:
        return True
    if x is TOP:
        return False
    return x <= y


def h_pcomp(x: HatAElem) -> HatAElem:
    """Pseudocomplement in Â: 0 goes to the new top, the new top to 0."""
    if x is TOP:
        return ZERO
    if not x:
        return TOP
    return ~x


def h_is_dense(x: HatAElem) -> bool:
    return x is TOP or x == E


def h_is_skeletal(x: HatAElem) -> bool:
    return x != E


def h_str(x: HatAElem) -> str:
    if x is TOP:
        return "T"
    if x == E:
        return "E"
    return str(x)


@dataclass(frozen=True)
class Tuple:
    """Element ``(x_1, ..., x_n)`` of G_n; all operations are componentwise."""

    level: int
    comps: tuple

    def __post_init__(self):
        if self.level < 1:
            raise ValueError(f"level must be positive, got {self.level}")
        if not isinstance(self.comps, tuple):
            object.__setattr__(self, "comps", tuple(self.comps))
        if len(self.comps) != self.level:
            raise ValueError(
                f"level {self.level} tuple needs {self.level} components, got {len(self.comps)}"
            )

    @classmethod
    def of(cls, *comps: HatAElem) -> Tuple:
        return cls(len(comps), comps)

    def __getitem__(self, i: int) -> HatAElem:
        """Component at 1-based coordinate ``i``."""
        if not 1 <= i <= self.level:
            raise IndexError(f"coordinate {i} out of range 1..{self.level}")
        return self.comps[i - 1]

    def replace(self, i: int, value: HatAElem) -> Tuple:
        c = list(self.comps)
        c[i - 1] = value
        return Tuple(self.level, tuple(c))

    def append(self, value: HatAElem) -> Tuple:
        return Tuple(self.level + 1, self.comps + (value,))

    def __and__(self, other: Tuple) -> Tuple:
        return t_meet(self, other)

    def __invert__(self) -> Tuple:
        return t_pcomp(self)

    def __le__(self, other: Tuple) -> bool:
        return t_leq(self, other)

    def __lt__(self, other: Tuple) -> bool:
        return self != other and t_leq(self, other)

    def __ge__(self, other: Tuple) -> bool:
        return t_leq(other, self)

    def __gt__(self, other: Tuple) -> bool:
        return self != other and t_leq(other, self)

    def __str__(self) -> str:
        return "(" + ",".join(h_str(c) for c in self.comps) + f")@{self.level}"


def _check_levels(x: Tuple, y: Tuple) -> None:
    if x.level != y.level:
        raise LevelMismatch(f"levels differ: {x.level} vs {y.level}")


def zero(n: int) -> Tuple:
    return Tuple(n, (ZERO,) * n)


def one(n: int) -> Tuple:
    return Tuple(n, (TOP,) * n)


def t_meet(x: Tuple, y: Tuple) -> Tuple:
    _check_levels(x, y)
    return Tuple(x.level, tuple(h_meet(a, b) for a, b in zip(x.comps, y.comps)))


def t_pcomp(x: Tuple) -> Tuple:
    return Tuple(x.level, tuple(h_pcomp(a) for a in x.comps))


def t_leq(x: Tuple, y: Tuple) -> bool:
    # order read off the meet
    return t_meet(x, y) == x


def is_dense(x: Tuple) -> bool:
    return all(h_is_dense(c) for c in x.comps)


def is_skeletal(x: Tuple) -> bool:
    return all(h_is_skeletal(c) for c in x.comps)


def parallel(x: Tuple, y: Tuple) -> bool:
    _check_levels(x, y)
    return not t_leq(x, y) and not t_leq(y, x)


def skel_join(x: Tuple, y: Tuple) -> Tuple:
    """Join ``(x* ∧ y*)*`` in the Boolean algebra of skeletal tuples."""
    if not is_skeletal(x) or not is_skeletal(y):
        raise ValueError("skel_join is only defined on skeletal tuples")
    return t_pcomp(t_meet(t_pcomp(x), t_pcomp(y)))


def dense_anti_atoms(n: int) -> list[Tuple]:
    """The n maximal dense tuples below 1, the i-th having its E at coordinate i."""
    if n < 1:
        raise ValueError("level must be positive")
    return [Tuple(n, tuple(E if k == i else TOP for k in range(n))) for i in range(n)]
