"""The direct limit G of the tower and witnesses for the axioms EC1-EC5.

A :class:`LimitElem` is a tuple at some level standing for its class under
the embeddings.  Two classes are compared by lifting both representatives to
the higher of their levels; since every step is injective, the answer does
not change at any further level.

Each witness finder checks the hypotheses of its axiom first and raises
:class:`~ecpsl.errors.PreconditionError` naming the failed clause, so an
absent witness is never confused with a vacuous implication.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Union

from . import hat
from .clopen import complement, split
from .errors import (
    ClosureOverflow,
    ConstructionError,
    LevelCapExceeded,
    PreconditionError,
)
from .hat import E, TOP, ZERO, Tuple
from .tower import DEFAULT_CAP, anti_atom, count_e, embed, f_step, split_depth, truncate


class LimitElem:
    """Class ``[rep]`` of a tuple in the direct limit."""

    __slots__ = ("rep", "_canon")

    def __init__(self, rep: Tuple):
        if not isinstance(rep, Tuple):
            raise TypeError(f"LimitElem needs a Tuple, got {type(rep).__name__}")
        self.rep = rep
        self._canon = None

    @property
    def level(self) -> int:
        return self.rep.level

    def lift(self, n: int) -> Tuple:
        return lift(self, n)

    def canonical(self) -> Tuple:
        """Representative at the lowest level the class reaches."""
        if self._canon is None:
            x = self.rep
            while (y := truncate(x)) is not None:
                x = y
            self._canon = x
        return self._canon

    def __eq__(self, other) -> bool:
        if not isinstance(other, LimitElem):
            return NotImplemented
        return eq(self, other)

    def __hash__(self) -> int:
        return hash(self.canonical())

    def __and__(self, other: LimitElem) -> LimitElem:
        return l_meet(self, other)

    def __invert__(self) -> LimitElem:
        return l_pcomp(self)

    def __le__(self, other: LimitElem) -> bool:
        return l_leq(self, other)

    def __lt__(self, other: LimitElem) -> bool:
        return l_lt(self, other)

    def __str__(self) -> str:
        return str(self.rep)

    def __repr__(self) -> str:
        return f"LimitElem({str(self.rep)!r})"


def lift(x: LimitElem, n: int) -> Tuple:
    if n < x.level:
        raise ValueError(f"cannot lift a level {x.level} element down to {n}")
    return embed(x.level, n, x.rep)


def common(*xs: LimitElem, level: int | None = None) -> tuple[int, list[Tuple]]:
    """Lift all arguments to one level (their maximum, or ``level`` if higher)."""
    n = max(x.level for x in xs)
    if level is not None:
        n = max(n, level)
    return n, [lift(x, n) for x in xs]


def eq(x: LimitElem, y: LimitElem) -> bool:
    _, (a, b) = common(x, y)
    return a == b


def l_meet(x: LimitElem, y: LimitElem) -> LimitElem:
    _, (a, b) = common(x, y)
    return LimitElem(hat.t_meet(a, b))


def l_pcomp(x: LimitElem) -> LimitElem:
    return LimitElem(hat.t_pcomp(x.rep))


def l_leq(x: LimitElem, y: LimitElem) -> bool:
    _, (a, b) = common(x, y)
    return hat.t_leq(a, b)


def l_lt(x: LimitElem, y: LimitElem) -> bool:
    _, (a, b) = common(x, y)
    return a != b and hat.t_leq(a, b)


def l_parallel(x: LimitElem, y: LimitElem) -> bool:
    return not l_leq(x, y) and not l_leq(y, x)


def is_dense(x: LimitElem) -> bool:
    return hat.is_dense(x.rep)


def is_skeletal(x: LimitElem) -> bool:
    return hat.is_skeletal(x.rep)


def l_skel_join(x: LimitElem, y: LimitElem) -> LimitElem:
    _, (a, b) = common(x, y)
    return LimitElem(hat.skel_join(a, b))


def zero() -> LimitElem:
    return LimitElem(hat.zero(1))


def one() -> LimitElem:
    return LimitElem(hat.one(1))


# -- axiom clauses ------------------------------------------------------------
#
# Each *_premises / *_conclusion returns ``[(clause, truth), ...]`` in the
# order the axiom states them; these lists double as verification
# transcripts.

Clauses = list


def ec1_premises(b1: LimitElem, b2: LimitElem) -> Clauses:
    return [
        ("b1 skeletal", is_skeletal(b1)),
        ("b2 skeletal", is_skeletal(b2)),
        ("b1 < b2", l_lt(b1, b2)),
    ]


def ec1_conclusion(b1: LimitElem, b2: LimitElem, b3: LimitElem) -> Clauses:
    return [
        ("b3 skeletal", is_skeletal(b3)),
        ("b1 < b3", l_lt(b1, b3)),
        ("b3 < b2", l_lt(b3, b2)),
    ]


def ec2_premises(b1: LimitElem, b2: LimitElem, d: LimitElem) -> Clauses:
    return [
        ("b1 skeletal", is_skeletal(b1)),
        ("b2 skeletal", is_skeletal(b2)),
        ("d dense", is_dense(d)),
        ("b1 <= b2", l_leq(b1, b2)),
        ("b2 < d", l_lt(b2, d)),
        ("d < 1", l_lt(d, one())),
        ("b1* || d", l_parallel(l_pcomp(b1), d)),
    ]


def ec2_conclusion(b1: LimitElem, b2: LimitElem, d: LimitElem, b3: LimitElem) -> Clauses:
    return [
        ("b3 skeletal", is_skeletal(b3)),
        ("b2 < b3", l_lt(b2, b3)),
        ("b3 < 1", l_lt(b3, one())),
        ("b1* ∧ b3 || d", l_parallel(l_meet(l_pcomp(b1), b3), d)),
        ("b1 ∨̇ b3* < d", l_lt(l_skel_join(b1, l_pcomp(b3)), d)),
    ]


def ec3_conclusion(d: LimitElem) -> Clauses:
    return [("d dense", is_dense(d)), ("d < 1", l_lt(d, one()))]


def ec4_premises(d1: LimitElem, d2: LimitElem) -> Clauses:
    return [
        ("d1 dense", is_dense(d1)),
        ("d2 dense", is_dense(d2)),
        ("d1 < d2", l_lt(d1, d2)),
    ]


def ec4_conclusion(d1: LimitElem, d2: LimitElem, d3: LimitElem) -> Clauses:
    return [("d1 < d3", l_lt(d1, d3)), ("d3 < d2", l_lt(d3, d2))]


def ec5_premises(b: LimitElem, d1: LimitElem) -> Clauses:
    return [
        ("b skeletal", is_skeletal(b)),
        ("d1 dense", is_dense(d1)),
        ("0 < b", l_lt(zero(), b)),
        ("b < d1", l_lt(b, d1)),
    ]


def ec5_conclusion(b: LimitElem, d1: LimitElem, d2: LimitElem) -> Clauses:
    nb = l_pcomp(b)
    return [
        ("d2 dense", is_dense(d2)),
        ("d2 < d1", l_lt(d2, d1)),
        ("b || d2", l_parallel(b, d2)),
        ("d1 ∧ b* = d2 ∧ b*", eq(l_meet(d1, nb), l_meet(d2, nb))),
    ]


def _require(clauses: Clauses) -> None:
    for name, ok in clauses:
        if not ok:
            raise PreconditionError(name)


def _climb(xs: list[Tuple], max_level: int) -> list[Tuple]:
    n = xs[0].level
    if n >= max_level:
        raise LevelCapExceeded(f"search needs a level above the cap {max_level}")
    return [f_step(n, x) for x in xs]


# -- witness finders ----------------------------------------------------------


def ec3_witness() -> LimitElem:
    return LimitElem(Tuple.of(E))


def _strictly_between(lo, hi):
    """Skeletal element of Â strictly between ``lo < hi`` (both skeletal)."""
    if hi is TOP:
        return lo | split(complement(lo))
    return lo | split(hi - lo)


def ec1_witness(b1: LimitElem, b2: LimitElem) -> LimitElem:
    _require(ec1_premises(b1, b2))
    _, (x, y) = common(b1, b2)
    for i in range(1, x.level + 1):
        if x[i] != y[i]:
            return LimitElem(y.replace(i, _strictly_between(x[i], y[i])))
    raise ConstructionError("b1 < b2 but no coordinate differs")


def ec2_witness(
    b1: LimitElem, b2: LimitElem, d: LimitElem, max_level: int = DEFAULT_CAP
) -> LimitElem:
    _require(ec2_premises(b1, b2, d))
    _, reps = common(b1, b2, d)
    while count_e(reps[2]) < 2:
        reps = _climb(reps, max_level)
    x, y, w = reps
    n = w.level
    i = next((k for k in range(1, n + 1) if w[k] == E and x[k] == ZERO), None)
    if i is None:
        raise ConstructionError("b1* || d yet no coordinate with d = e and b1 = 0")
    j = next(k for k in range(1, n + 1) if k != i and w[k] == E)
    z = Tuple(n, tuple(_strictly_between(y[j], E) if k == j else TOP for k in range(1, n + 1)))
    return LimitElem(z)


def _first_separating(x: Tuple, y: Tuple, positions=None) -> Tuple | None:
    """First ``y ∧ u`` (u an anti-atom, by number) strictly between ``x`` and ``y``."""
    level = x.level
    for i in range(1, level + 1):
        u = anti_atom(level, i)
        if positions is not None and u.comps.index(E) + 1 not in positions:
            continue
        cand = y & u
        if x < cand < y:
            return cand
    return None


def ec4_witness(d1: LimitElem, d2: LimitElem, max_level: int = DEFAULT_CAP) -> LimitElem:
    _require(ec4_premises(d1, d2))
    n, (x, y) = common(d1, d2)
    found = _first_separating(x, y)
    if found is not None:
        return LimitElem(found)
    # J_x \ J_y is a single coordinate here; wait for its anti-atom to split
    j0 = min(
        (k for k in range(1, n + 1) if x[k] == E and y[k] != E),
        key=lambda k: (split_depth(n, k), k),
    )
    reps = [x, y, Tuple(n, tuple(E if k == j0 else TOP for k in range(1, n + 1)))]
    while True:
        reps = _climb(reps, max_level)
        if count_e(reps[2]) >= 2:
            break
    gx, gy, ga = reps
    split_at = {k for k in range(1, ga.level + 1) if ga[k] == E}
    found = _first_separating(gx, gy, split_at)
    if found is None:
        raise ConstructionError(f"no anti-atom of level {ga.level} separates d1 and d2")
    return LimitElem(found)


EC5_PRESEARCH_MAX = 20


def ec5_witness(b: LimitElem, d1: LimitElem, max_level: int = DEFAULT_CAP) -> LimitElem:
    _require(ec5_premises(b, d1))
    n, (x, y) = common(b, d1)
    if n <= EC5_PRESEARCH_MAX:
        nx = ~x
        target = y & nx
        free = [k for k in range(1, n + 1) if y[k] is TOP]
        for mask in range(1, 1 << len(free)):
            z = y
            for t, k in enumerate(free):
                if mask >> t & 1:
                    z = z.replace(k, E)
            if hat.parallel(x, z) and (z & nx) == target:
                return LimitElem(z)
    while True:
        x, y = _climb([x, y], max_level)
        if x.comps[-1] is TOP and y.comps[-1] is TOP:
            return LimitElem(y.replace(y.level, E))


# -- finite subalgebras ---------------------------------------------------------


def subalgebra_closure(gens, max_size: int = 10**5) -> list[LimitElem]:
    """Closure of ``gens`` and 0 under meet and pseudocomplement.

    All members are represented at the highest generator level.  The result
    is sorted by the string form of the representatives.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("closure needs at least one generator")
    n, reps = common(*gens)
    seen = {hat.zero(n)}
    seen.update(reps)
    order = list(seen)
    frontier = list(order)
    while frontier:
        new = []
        for a in frontier:
            cands = [hat.t_pcomp(a)] + [hat.t_meet(a, b) for b in order]
            for c in cands:
                if c not in seen:
                    seen.add(c)
                    order.append(c)
                    new.append(c)
                    if len(seen) > max_size:
                        raise ClosureOverflow(f"closure exceeded {max_size} elements")
        frontier = new
    return sorted((LimitElem(t) for t in seen), key=str)


def is_closed(elems) -> bool:
    s = set(elems)
    return all(~a in s and all((a & b) in s for b in s) for a in s)


# -- terms ----------------------------------------------------------------------


@dataclass(frozen=True)
class Zero:
    def __str__(self) -> str:
        return "0"


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Meet:
    left: "Term"
    right: "Term"

    def __str__(self) -> str:
        return f"({self.left} ∧ {self.right})"


@dataclass(frozen=True)
class PComp:
    arg: "Term"

    def __str__(self) -> str:
        return f"{self.arg}*"


Term = Union[Zero, Var, Meet, PComp]


def term_eval(t: Term, env: Mapping[str, LimitElem]) -> LimitElem:
    if isinstance(t, Zero):
        return zero()
    if isinstance(t, Var):
        try:
            return env[t.name]
        except KeyError:
            raise KeyError(f"unbound variable {t.name!r}") from None
    if isinstance(t, Meet):
        return l_meet(term_eval(t.left, env), term_eval(t.right, env))
    if isinstance(t, PComp):
        return l_pcomp(term_eval(t.arg, env))
    raise TypeError(f"not a term: {t!r}")


def term_vars(t: Term) -> set[str]:
    if isinstance(t, Var):
        return {t.name}
    if isinstance(t, Meet):
        return term_vars(t.left) | term_vars(t.right)
    if isinstance(t, PComp):
        return term_vars(t.arg)
    return set()
