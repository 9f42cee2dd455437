"""The directed family G_1 -> G_2 -> ... and its per-level bookkeeping.

Each level n carries

* ``sigma``: anti-atom number ``i`` -> coordinate holding that anti-atom's e;
* ``coord_perm``: for every coordinate, a permutation of the base
  enumeration of A minus {0, full} (base index -> current index).

Odd steps rotate the enumeration of the active coordinate ``sigma(1)`` so
that every element eventually becomes the distinguished element; even steps
split the first anti-atom by duplicating its coordinate.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache

from .clopen import ClopenSet, UltraPoint, contains_point, enumerate_set, first_point
from .errors import LevelCapExceeded, LevelMismatch
from .hat import E, TOP, ZERO, Tuple

# ec5 on ([1/4,1/2))@1, (E)@1 must climb to level 162.
DEFAULT_CAP = 256


@dataclass(frozen=True)
class FinSuppPerm:
    """Permutation of the positive integers with finite support.

    Stored as a word of generators ``(size, sign)``, applied left to right.
    ``(N, +1)`` is the rotation sending 1 to N and j to j-1 for 2 <= j <= N;
    ``(N, -1)`` is its inverse.  Explicit exception tables would need 2**n
    entries for the rotations used at level n.
    """

    word: tuple = ()

    @classmethod
    def identity(cls) -> FinSuppPerm:
        return cls(())

    @classmethod
    def rotation(cls, size: int) -> FinSuppPerm:
        if size < 1:
            raise ValueError("rotation size must be positive")
        return cls(((size, 1),))

    def __call__(self, j: int) -> int:
        if j < 1:
            raise ValueError(f"permutations act on positive integers, got {j}")
        for size, sign in self.word:
            if j > size:
                continue
            if sign > 0:
                j = size if j == 1 else j - 1
            else:
                j = 1 if j == size else j + 1
        return j

    def then(self, other: FinSuppPerm) -> FinSuppPerm:
        """``other ∘ self``: apply ``self`` first."""
        return FinSuppPerm(self.word + other.word)

    def inverse(self) -> FinSuppPerm:
        return FinSuppPerm(tuple((size, -sign) for size, sign in reversed(self.word)))

    @property
    def support_bound(self) -> int:
        """Every point above this bound is fixed."""
        return max((size for size, _ in self.word), default=0)

    def exceptions(self, limit: int = 1 << 16) -> dict[int, int]:
        """Explicit ``{j: p(j)}`` for the moved points."""
        bound = self.support_bound
        if bound > limit:
            raise ValueError(f"support bound {bound} exceeds limit {limit}")
        out = {}
        for j in range(1, bound + 1):
            pj = self(j)
            if pj != j:
                out[j] = pj
        return out


@dataclass(frozen=True)
class LevelState:
    n: int
    sigma: tuple
    coord_perm: tuple

    def sigma_of(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"anti-atom number {i} out of range 1..{self.n}")
        return self.sigma[i - 1]

    def number_of(self, coord: int) -> int:
        """Anti-atom number whose e sits at ``coord``."""
        return self.sigma.index(coord) + 1


_STATES = [LevelState(1, (1,), (FinSuppPerm.identity(),))]
_STATES_LOCK = threading.Lock()


def _next_state(s: LevelState) -> LevelState:
    n = s.n
    fresh = FinSuppPerm.identity()
    if n % 2 == 0:
        sigma = s.sigma[1:] + (s.sigma[0], n + 1)
        perms = s.coord_perm + (fresh,)
    else:
        sigma = s.sigma + (n + 1,)
        active = s.sigma[0] - 1
        perms = list(s.coord_perm)
        perms[active] = perms[active].then(FinSuppPerm.rotation(1 << n))
        perms = tuple(perms) + (fresh,)
    return LevelState(n + 1, sigma, perms)


def level_state(n: int) -> LevelState:
    if n < 1:
        raise ValueError(f"levels start at 1, got {n}")
    if n <= len(_STATES):
        return _STATES[n - 1]
    with _STATES_LOCK:
        while len(_STATES) < n:
            _STATES.append(_next_state(_STATES[-1]))
    return _STATES[n - 1]


def anti_atom(n: int, i: int) -> Tuple:
    """Anti-atom number ``i`` of the dense filter of G_n."""
    c = level_state(n).sigma_of(i)
    return Tuple(n, tuple(E if k == c else TOP for k in range(1, n + 1)))


def skeleton_elem(n: int, coord: int, j: int) -> ClopenSet:
    """The ``j``-th element of coordinate ``coord``'s enumeration at level n."""
    s = level_state(n)
    if not 1 <= coord <= n:
        raise IndexError(f"coordinate {coord} out of range 1..{n}")
    if j < 1:
        raise IndexError(f"enumeration index must be >= 1, got {j}")
    return enumerate_set(s.coord_perm[coord - 1].inverse()(j))


def distinguished(n: int) -> ClopenSet:
    if n < 1 or n % 2 == 0:
        raise ValueError(f"distinguished elements exist only at odd levels, got {n}")
    return skeleton_elem(n, level_state(n).sigma_of(1), 1)


@lru_cache(maxsize=None)
def ultrafilter_point(n: int) -> UltraPoint:
    return first_point(distinguished(n))


def f_step(n: int, x: Tuple) -> Tuple:
    """The embedding G_n -> G_{n+1}."""
    if x.level != n:
        raise LevelMismatch(f"f_{n} applied to a level {x.level} tuple")
    c = x.comps[level_state(n).sigma[0] - 1]
    if n % 2 == 0:
        return x.append(c)
    if c is TOP or c == E or contains_point(c, ultrafilter_point(n)):
        return x.append(TOP)
    return x.append(ZERO)


def embed(m: int, n: int, x: Tuple) -> Tuple:
    """``g_{m,n} = f_{n-1} ∘ ... ∘ f_m``; the identity when m == n."""
    if x.level != m:
        raise LevelMismatch(f"g_{m},{n} applied to a level {x.level} tuple")
    if m > n:
        raise ValueError(f"cannot embed level {m} into lower level {n}")
    for k in range(m, n):
        x = f_step(k, x)
    return x


def truncate(x: Tuple) -> Tuple | None:
    """Preimage of ``x`` under the last step, or None if ``x`` is not in the image."""
    if x.level == 1:
        return None
    y = Tuple(x.level - 1, x.comps[:-1])
    return y if f_step(y.level, y) == x else None


def count_e(x: Tuple) -> int:
    return sum(1 for c in x.comps if c == E)


def p1_split_depth(n: int, i: int, max_steps: int = DEFAULT_CAP) -> int:
    """Least k with ``g_{n,n+k}(anti_atom(n, i))`` no longer an anti-atom."""
    x = anti_atom(n, i)
    for k in range(1, max_steps + 1):
        x = f_step(n + k - 1, x)
        if count_e(x) >= 2:
            return k
    raise LevelCapExceeded(f"anti-atom {i} of level {n} still unsplit after {max_steps} steps")


def p2_climb(a: Tuple, d: Tuple, max_steps: int = DEFAULT_CAP) -> int:
    """Least m such that the images of ``a`` and ``d`` both get T at position n+m."""
    if a.level != d.level:
        raise LevelMismatch("p2_climb needs tuples of one level")
    n = a.level
    for m in range(1, max_steps + 1):
        a, d = f_step(n + m - 1, a), f_step(n + m - 1, d)
        if a.comps[-1] is TOP and d.comps[-1] is TOP:
            return m
    raise LevelCapExceeded(f"no common T coordinate within {max_steps} steps of level {n}")


def split_depth(n: int, coord: int) -> int:
    """Steps until the anti-atom with its e at ``coord`` (level n) is split.

    Read off the numbering alone; agrees with :func:`p1_split_depth`.
    """
    i, lvl = level_state(n).number_of(coord), n
    while not (i == 1 and lvl % 2 == 0):
        i = renumber(lvl, i)
        lvl += 1
    return lvl - n + 1


def renumber(n: int, i: int) -> int | None:
    """Number at level n+1 of the image of anti-atom ``i`` of level n.

    None when the step splits it (it is then no longer an anti-atom).
    """
    if n % 2 == 1:
        return i
    return None if i == 1 else i - 1
