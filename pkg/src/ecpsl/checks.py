"""Randomized invariant suites over all modules.

Every suite takes a :class:`random.Random` and returns a
:class:`SuiteResult` whose ``lines`` form a deterministic transcript: the
same seed gives byte-identical output.  Timing is deliberately kept out of
the transcript.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import clopen as cl
from . import hat, limit, tower
from .clopen import ClopenSet
from .errors import EcpslError
from .hat import E, TOP, ZERO, Tuple
from .limit import LimitElem


@dataclass
class SuiteResult:
    name: str
    cases: int
    failures: list = field(default_factory=list)
    lines: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, what: str) -> None:
        self.failures.append(what)

    def check(self, ok: bool, what) -> None:
        # ``what`` may be a callable so detail strings are only built on failure
        if not ok:
            self.fail(what() if callable(what) else what)

    def transcript(self) -> list[str]:
        head = f"[{'PASS' if self.passed else 'FAIL'}] {self.name} cases={self.cases}"
        out = [head] + [f"  {line}" for line in self.lines]
        out += [f"  violation: {f}" for f in self.failures[:10]]
        if len(self.failures) > 10:
            out.append(f"  ... {len(self.failures) - 10} more violations")
        return out


# -- generators ------------------------------------------------------------------


def random_clopen(rng: random.Random, max_rank: int) -> ClopenSet:
    k = rng.randint(0, max_rank)
    return ClopenSet.from_mask(rng.getrandbits(1 << k), k)


def random_inner(rng: random.Random, max_rank: int) -> ClopenSet:
    """Random clopen set other than full (a skeletal element of Â below e)."""
    while True:
        s = random_clopen(rng, max_rank)
        if not s.is_full():
            return s


def random_hat(rng: random.Random, max_rank: int):
    r = rng.random()
    if r < 0.15:
        return TOP
    if r < 0.3:
        return E
    if r < 0.4:
        return ZERO
    return random_clopen(rng, max_rank)


def random_skeletal_hat(rng: random.Random, max_rank: int):
    while True:
        x = random_hat(rng, max_rank)
        if x != E:
            return x


def random_tuple(rng: random.Random, n: int, max_rank: int) -> Tuple:
    return Tuple(n, tuple(random_hat(rng, max_rank) for _ in range(n)))


def random_skeletal(rng: random.Random, n: int, max_rank: int) -> Tuple:
    return Tuple(n, tuple(random_skeletal_hat(rng, max_rank) for _ in range(n)))


def random_dense(rng: random.Random, n: int, proper: bool = True) -> Tuple:
    while True:
        t = Tuple(n, tuple(rng.choice((E, TOP)) for _ in range(n)))
        if not proper or t != hat.one(n):
            return t


def pool(k: int) -> list[ClopenSet]:
    """``enumerate_set(1..k)``."""
    return [cl.enumerate_set(j) for j in range(1, k + 1)]


def random_below_dense(rng: random.Random, d: Tuple, comps: list) -> Tuple:
    """Skeletal tuple below the dense ``d`` with clopen parts drawn from ``comps``."""
    out = []
    for c in d.comps:
        opts = comps + [ZERO] if c == E else comps + [ZERO, TOP]
        out.append(rng.choice(opts))
    return Tuple(d.level, tuple(out))


def _canon(t: Tuple) -> LimitElem:
    return LimitElem(LimitElem(t).canonical())


# -- clopen --------------------------------------------------------------------


def _mask_at(s: ClopenSet, k: int) -> int:
    """Cell bitmask of ``s`` at rank k >= s.exp (independent of the sweep kernel)."""
    m = 0
    for lo, hi in s.intervals:
        a, b = lo.scaled(k), hi.scaled(k)
        m |= ((1 << b) - 1) ^ ((1 << a) - 1)
    return m


def suite_boolean_algebra(rng: random.Random, cases: int = 1000, max_rank: int = 6) -> SuiteResult:
    res = SuiteResult("clopen.boolean_algebra", cases)
    sets = [random_clopen(rng, max_rank) for _ in range(cases)]
    zero, full = ClopenSet.empty(), ClopenSet.full()
    K = max_rank
    fullmask = (1 << (1 << K)) - 1
    for i in range(cases):
        a, b, c = sets[i], sets[(i + 1) % cases], sets[(i + 7) % cases]
        ma, mb = _mask_at(a, K), _mask_at(b, K)
        laws = [
            ("meet oracle", _mask_at(a & b, K) == ma & mb),
            ("join oracle", _mask_at(a | b, K) == ma | mb),
            ("complement oracle", _mask_at(~a, K) == fullmask ^ ma),
            ("leq oracle", (a <= b) == (ma & ~mb == 0)),
            ("meet commutative", a & b == b & a),
            ("join commutative", a | b == b | a),
            ("meet associative", (a & b) & c == a & (b & c)),
            ("join associative", (a | b) | c == a | (b | c)),
            ("idempotent", a & a == a and a | a == a),
            ("absorption", a & (a | b) == a and a | (a & b) == a),
            ("distributive", a & (b | c) == (a & b) | (a & c) and a | (b & c) == (a | b) & (a | c)),
            ("complemented", a & ~a == zero and a | ~a == full),
            ("involution", ~~a == a),
            ("de morgan", a | b == ~(~a & ~b)),
            ("bounds", a & zero == zero and a & full == a and a | zero == a and a | full == full),
            ("leq via meet", (a <= b) == (a & b == a)),
            ("normalized", ClopenSet(a.intervals) == a and ClopenSet.from_mask(a.mask(), a.exp) == a),
        ]
        for name, ok in laws:
            res.check(ok, lambda: f"{name}: a={a} b={b} c={c}")
    return res


def suite_clopen_structure(rng: random.Random, cases: int = 1000, max_rank: int = 6) -> SuiteResult:
    res = SuiteResult("clopen.structure", cases)
    for _ in range(cases):
        a = random_clopen(rng, max_rank)
        if a:
            s = cl.split(a)
            res.check(ClopenSet.empty() < s < a, lambda: f"split not strict: {a} -> {s}")
            p = cl.first_point(a)
            res.check(cl.contains_point(a, p), lambda: f"first_point outside {a}")
        pt = cl.UltraPoint(cl.Dyadic.of(rng.getrandbits(max_rank + 2), max_rank + 2))
        res.check(
            cl.contains_point(a, pt) != cl.contains_point(~a, pt),
            lambda: f"ultrafilter dichotomy fails for {a} at {pt}",
        )
        res.check(
            cl.contains_point(a, pt) == bool(_mask_at(a, max_rank + 2) >> pt.point.scaled(max_rank + 2) & 1),
            lambda: f"membership oracle disagrees for {a} at {pt}",
        )
    # enumeration: a bijection onto every rank <= 3 set, then spot-checked ranks
    prefix = sum(cl.rank_count(k) for k in (1, 2, 3))
    listed = [cl.enumerate_set(j) for j in range(1, prefix + 1)]
    res.check(len(set(listed)) == prefix, "enumeration prefix has duplicates")
    expected = {ClopenSet.from_mask(m, 3) for m in range(1, 255)}
    res.check(set(listed) == expected, "prefix is not exactly the rank <= 3 sets")
    for _ in range(min(cases, 200)):
        j = rng.randint(1, 1 << 40)
        res.check(cl.index_of(cl.enumerate_set(j)) == j, lambda: f"index_of(enumerate({j})) != {j}")
    res.lines.append(f"enumeration bijective on prefix 1..{prefix}")
    return res


# -- hat -----------------------------------------------------------------------


def suite_galois(rng: random.Random, cases: int = 2000, max_level: int = 4, max_rank: int = 3) -> SuiteResult:
    res = SuiteResult("hat.galois", cases)
    hits = 0
    for i in range(cases):
        n = rng.randint(1, max_level)
        a = random_tuple(rng, n, max_rank)
        x = random_tuple(rng, n, max_rank)
        if i % 2:
            x = x & ~a
        lhs = hat.t_meet(x, a) == hat.zero(n)
        rhs = hat.t_leq(x, hat.t_pcomp(a))
        hits += lhs
        res.check(lhs == rhs, lambda: f"x={x} a={a}: meet-zero {lhs}, below-pcomp {rhs}")
    res.lines.append(f"pairs with x ∧ a = 0: {hits}")
    return res


def suite_hat_laws(rng: random.Random, cases: int = 500, max_level: int = 4, max_rank: int = 3) -> SuiteResult:
    res = SuiteResult("hat.laws", cases)
    for n in range(1, max_level + 1):
        res.check(~hat.zero(n) == hat.one(n) and ~hat.one(n) == hat.zero(n), f"0*/1* wrong at level {n}")
    for _ in range(cases):
        n = rng.randint(1, max_level)
        x = random_tuple(rng, n, max_rank)
        y = random_tuple(rng, n, max_rank)
        res.check(x <= ~~x, lambda: f"x <= x** fails for {x}")
        res.check(~~~x == ~x, lambda: f"x*** != x* for {x}")
        res.check(hat.is_skeletal(~x), lambda: f"x* not skeletal for {x}")
        res.check(hat.is_skeletal(x) == (~~x == x), lambda: f"skeletal test disagrees for {x}")
        res.check(hat.is_dense(x) == (~x == hat.zero(n)), lambda: f"dense test disagrees for {x}")
        dx, dy = random_dense(rng, n, proper=False), random_dense(rng, n, proper=False)
        res.check(hat.is_dense(dx & dy), "dense elements not closed under meet")
        res.check(hat.is_dense(dx & y) == hat.is_dense(y) or not hat.is_dense(y), "dense filter")
        # skeleton join is the least skeletal upper bound
        a, b = random_skeletal(rng, n, max_rank), random_skeletal(rng, n, max_rank)
        j = hat.skel_join(a, b)
        res.check(hat.is_skeletal(j) and a <= j and b <= j, lambda: f"skel_join {a},{b} not an upper bound")
        c = random_skeletal(rng, n, max_rank)
        ub = hat.skel_join(j, c) if rng.random() < 0.5 else c
        if a <= ub and b <= ub:
            res.check(j <= ub, lambda: f"skel_join {a},{b} not least below {ub}")
    d2 = list(itertools.product((E, TOP), repeat=2))
    dense2 = [Tuple(2, c) for c in d2]
    for d in hat.dense_anti_atoms(2):
        between = [t for t in dense2 if d < t < hat.one(2)]
        res.check(hat.is_dense(d) and d < hat.one(2) and not between, f"{d} is not an anti-atom")
    return res


# -- tower ---------------------------------------------------------------------


def suite_embedding(rng: random.Random, cases: int = 200, max_level: int = 10, max_rank: int = 3) -> SuiteResult:
    res = SuiteResult("tower.embedding", cases)
    for n in range(1, max_level + 1):
        f = lambda t: tower.f_step(n, t)
        xs = [random_tuple(rng, n, max_rank) for _ in range(cases)]
        # mix in comparable pairs so strict order is exercised
        xs = [x & xs[i - 1] if i % 3 == 0 else x for i, x in enumerate(xs)]
        images = [f(x) for x in xs]
        res.check(len(set(images)) == len(set(xs)), f"f_{n} not injective on sample")
        res.check(f(hat.zero(n)) == hat.zero(n + 1), f"f_{n}(0) != 0")
        res.check(f(hat.one(n)) == hat.one(n + 1), f"f_{n}(1) != 1")
        for i, x in enumerate(xs):
            y = xs[i - 1]
            fx, fy = images[i], images[i - 1]
            props = [
                ("meet", f(x & y) == fx & fy),
                ("pcomp", f(~x) == ~fx),
                ("dense", hat.is_dense(fx) == hat.is_dense(x)),
                ("skeletal", hat.is_skeletal(fx) == hat.is_skeletal(x)),
                ("strict order", (x < y) == (fx < fy) and (y < x) == (fy < fx)),
                ("parallel", hat.parallel(x, y) == hat.parallel(fx, fy)),
            ]
            for name, ok in props:
                res.check(ok, lambda: f"f_{n} breaks {name} on {x}, {y}")
    for _ in range(cases):
        m, k, p = sorted(rng.randint(1, max_level) for _ in range(3))
        x = random_tuple(rng, m, max_rank)
        res.check(
            tower.embed(k, p, tower.embed(m, k, x)) == tower.embed(m, p, x),
            lambda: f"functoriality fails for {m}<={k}<={p} on {x}",
        )
    return res


def suite_sigma(rng: random.Random, max_level: int = 64) -> SuiteResult:
    res = SuiteResult("tower.sigma", max_level)
    for n in range(1, max_level + 1):
        s = tower.level_state(n)
        res.check(sorted(s.sigma) == list(range(1, n + 1)), f"sigma_{n} is not a bijection")
        for i in (1, n):
            a = tower.anti_atom(n, i)
            res.check(a[s.sigma_of(i)] == E and tower.count_e(a) == 1, f"anti_atom({n},{i}) misplaced")
    # word permutations against explicit dictionaries
    for _ in range(50):
        word = tuple((rng.randint(1, 12), rng.choice((1, -1))) for _ in range(rng.randint(0, 5)))
        p = tower.FinSuppPerm(word)
        table = {j: j for j in range(1, 14)}
        for size, sign in word:
            cyc = list(range(1, size + 1))
            img = {c: (size if c == 1 else c - 1) for c in cyc} if sign > 0 else {c: (1 if c == size else c + 1) for c in cyc}
            table = {j: img.get(v, v) for j, v in table.items()}
        res.check(all(p(j) == table[j] for j in table), lambda: f"word {word} disagrees with table")
        res.check(all(p.inverse()(p(j)) == j for j in table), lambda: f"inverse of {word} wrong")
        q = tower.FinSuppPerm(word[::-1])
        res.check(all(p.then(q)(j) == q(p(j)) for j in table), lambda: f"composition of {word} wrong")
    return res


def suite_p1(rng: random.Random, max_level: int = 8, max_steps: int = 64) -> SuiteResult:
    res = SuiteResult("tower.p1_anti_atom_split", max_level)
    for n in range(1, max_level + 1):
        ks = []
        for i in range(1, n + 1):
            try:
                ks.append(tower.p1_split_depth(n, i, max_steps))
            except EcpslError as exc:
                ks.append(None)
                res.fail(str(exc))
        res.lines.append(f"n={n} k={ks}")
    return res


def suite_fairness(rng: random.Random, max_level: int = 8) -> SuiteResult:
    """Every anti-atom number of level n reaches number 1 at an even step by level 3n+2."""
    res = SuiteResult("tower.anti_atom_fairness", max_level)
    for n in range(1, max_level + 1):
        for i in range(1, n + 1):
            num, lvl, hit = i, n, None
            while lvl <= 3 * n + 2:
                if num == 1 and lvl % 2 == 0:
                    hit = lvl
                    break
                num = tower.renumber(lvl, num)
                lvl += 1
            res.check(hit is not None, f"anti-atom {i} of level {n} never first at an even step")
    return res


def suite_p2(rng: random.Random, cases: int = 50, max_level: int = 3, pool_size: int = 8, max_steps: int = 64) -> SuiteResult:
    res = SuiteResult("tower.p2_common_top", cases)
    comps = pool(pool_size)
    ms = []
    while len(ms) < cases:
        n = rng.randint(1, max_level)
        d = random_dense(rng, n, proper=False)
        a = random_below_dense(rng, d, comps)
        if a == hat.zero(n) or a == hat.one(n):
            continue
        try:
            ms.append(tower.p2_climb(a, d, max_steps))
        except EcpslError:
            ms.append(None)
            res.fail(f"no m <= {max_steps} for a={a} d={d}")
    found = [m for m in ms if m is not None]
    res.lines.append(f"max m={max(found) if found else None} mean m={Fraction(sum(found), max(len(found), 1))}")
    return res


# -- limit ---------------------------------------------------------------------


def _ec_instances(rng: random.Random, kind: str, cases: int) -> list:
    out = []
    while len(out) < cases:
        if kind == "ec1":
            n = rng.randint(1, 4)
            y = random_skeletal(rng, n, 3)
            x = y & random_skeletal(rng, n, 3)
            if x == y:
                continue
            out.append((_canon(x), _canon(y)))
        elif kind == "ec2":
            n = rng.randint(1, 4)
            d = random_dense(rng, n)
            y = Tuple(n, tuple(
                random_inner(rng, 3) if c == E else random_skeletal_hat(rng, 3) for c in d.comps
            ))
            mask = Tuple(n, tuple(rng.choice((ZERO, TOP, random_inner(rng, 3))) for _ in range(n)))
            inst = (_canon(y & mask), _canon(y), _canon(d))
            if all(ok for _, ok in limit.ec2_premises(*inst)):
                out.append(inst)
        elif kind == "ec4":
            n = rng.randint(1, 4)
            d2 = random_dense(rng, n, proper=False)
            free = [k for k in range(1, n + 1) if d2[k] is TOP]
            if not free:
                continue
            flip = [k for k in free if rng.random() < 0.5] or [rng.choice(free)]
            d1 = d2
            for k in flip:
                d1 = d1.replace(k, E)
            out.append((_canon(d1), _canon(d2)))
        elif kind == "ec5":
            n = rng.randint(1, 3)
            d = random_dense(rng, n, proper=False)
            b = random_below_dense(rng, d, pool(6))
            inst = (_canon(b), _canon(d))
            if all(ok for _, ok in limit.ec5_premises(*inst)):
                out.append(inst)
    return out


_FINDERS = {
    "ec1": (limit.ec1_witness, limit.ec1_conclusion),
    "ec2": (limit.ec2_witness, limit.ec2_conclusion),
    "ec4": (limit.ec4_witness, limit.ec4_conclusion),
    "ec5": (limit.ec5_witness, limit.ec5_conclusion),
}


def suite_ec(rng: random.Random, kind: str, cases: int = 100) -> SuiteResult:
    res = SuiteResult(f"limit.{kind}_witness", 1 if kind == "ec3" else cases)
    if kind == "ec3":
        w = limit.ec3_witness()
        for name, ok in limit.ec3_conclusion(w):
            res.check(ok, f"{name} fails for {w}")
        res.lines.append(f"witness {w}")
        return res
    finder, conclusion = _FINDERS[kind]
    top_level = 0
    for inst in _ec_instances(rng, kind, cases):
        args = ", ".join(map(str, inst))
        try:
            w = finder(*inst)
        except EcpslError as exc:
            res.fail(f"{kind}({args}) raised {type(exc).__name__}: {exc}")
            continue
        top_level = max(top_level, w.level)
        for name, ok in conclusion(*inst, w):
            res.check(ok, lambda: f"{kind}({args}) -> {w}: {name} false")
    res.lines.append(f"highest witness level {top_level}")
    return res


def suite_well_defined(rng: random.Random, cases: int = 500, max_level: int = 4, extra: int = 6) -> SuiteResult:
    res = SuiteResult("limit.well_defined", cases)
    equal_pairs = 0
    for _ in range(cases):
        x = LimitElem(random_tuple(rng, rng.randint(1, max_level), 3))
        if rng.random() < 0.3:
            y = LimitElem(x.lift(x.level + rng.randint(0, 3)))
        else:
            y = LimitElem(random_tuple(rng, rng.randint(1, max_level), 3))
        n = max(x.level, y.level)
        m, px = limit.l_meet(x, y), limit.l_pcomp(x)
        same = limit.eq(x, y)
        equal_pairs += same
        for k in range(n, n + extra + 1):
            lx, ly = x.lift(k), y.lift(k)
            res.check(m.lift(k) == lx & ly, lambda: f"meet does not commute with lifting to {k}: {x}, {y}")
            res.check(px.lift(k) == ~lx, lambda: f"pcomp does not commute with lifting to {k}: {x}")
            res.check((lx == ly) == same, lambda: f"eq unstable at level {k}: {x}, {y}")
        res.check(limit.eq(x, x) and limit.eq(x, y) == limit.eq(y, x), "eq not reflexive/symmetric")
        res.check(hash(x) == hash(y) or not same, lambda: f"hash differs on equal classes {x}, {y}")
    res.lines.append(f"equal pairs: {equal_pairs}")
    return res


def suite_dense_chain(rng: random.Random, length: int = 10) -> SuiteResult:
    """Descending dense chain 1 > d_1 > ... > d_length > e built by ec4_witness.

    e is represented at the first level where its image has ``length + 1``
    coordinates equal to e, so every step separates at that level.
    """
    res = SuiteResult("limit.dense_chain", length)
    e = limit.ec3_witness()
    rep = e.rep
    while tower.count_e(rep) < length + 1:
        rep = tower.f_step(rep.level, rep)
    low = LimitElem(rep)
    res.check(low == e, "lifted representative left the class of e")
    chain = [limit.one()]
    try:
        for _ in range(length):
            chain.append(limit.ec4_witness(low, chain[-1]))
    except EcpslError as exc:
        res.fail(str(exc))
        return res
    res.check(all(b < a for a, b in zip(chain, chain[1:])), "chain not strictly descending")
    res.check(e < chain[-1], "chain dropped to e")
    res.check(all(limit.is_dense(x) for x in chain), "chain left the dense filter")
    res.lines.append(f"e represented at level {rep.level}; chain levels {[x.level for x in chain[1:]]}")
    return res


def suite_closure(rng: random.Random, cases: int = 100, max_level: int = 2, max_rank: int = 2) -> SuiteResult:
    res = SuiteResult("limit.subalgebra_closure", cases)
    sizes = []
    for _ in range(cases):
        gens = [LimitElem(random_tuple(rng, rng.randint(1, max_level), max_rank)) for _ in range(rng.randint(1, 3))]
        try:
            c = limit.subalgebra_closure(gens, max_size=10**5)
        except EcpslError as exc:
            res.fail(str(exc))
            continue
        sizes.append(len(c))
        res.check(limit.is_closed(c), lambda: f"closure of {list(map(str, gens))} not closed")
        res.check(all(g in set(c) for g in gens), "closure misses a generator")
        lvl = max(g.level for g in gens)
        res.check(all(x.level == lvl for x in c), "closure left the generator level")
    res.lines.append(f"largest closure {max(sizes) if sizes else None}")
    return res


def suite_fixtures(rng: random.Random) -> SuiteResult:
    """Hand-checked values from the worked examples."""
    from .syntax import parse_elem, parse_tuple

    res = SuiteResult("fixtures", 0)
    P = parse_elem
    cases = [
        ("sigma_3", tower.level_state(3).sigma, (2, 1, 3)),
        ("f_1 [0,1/2)", str(tower.f_step(1, parse_tuple("([0,1/2))@1"))), "([0,1/2),T)@2"),
        ("f_1 [1/2,1)", str(tower.f_step(1, parse_tuple("([1/2,1))@1"))), "([1/2,1),0)@2"),
        ("f_2 (E,T)", str(tower.f_step(2, parse_tuple("(E,T)@2"))), "(E,T,E)@3"),
        ("embed 1->3 (E)", str(tower.embed(1, 3, parse_tuple("(E)@1"))), "(E,T,E)@3"),
        ("ec1", str(limit.ec1_witness(P("(0)@1"), P("(T)@1"))), "([0,1/2))@1"),
        ("ec1 split", str(limit.ec1_witness(P("(0)@1"), P("([1/2,1))@1"))), "([1/2,3/4))@1"),
        ("ec2", str(limit.ec2_witness(P("(0,[0,1/2))@2"), P("(0,[0,1/2))@2"), P("(E,E)@2"))), "(T,[0,3/4))@2"),
        ("ec3", str(limit.ec3_witness()), "(E)@1"),
        ("ec5", str(limit.ec5_witness(P("([0,1/2))@1"), P("(E)@1"))), "(E,E)@2"),
        ("distinguished(3)", str(tower.distinguished(3)), "[0,1/2)"),
        ("skeleton_elem(2,1,1)", str(tower.skeleton_elem(2, 1, 1)), "[1/2,1)"),
    ]
    for name, got, want in cases:
        res.check(got == want, f"{name}: got {got}, want {want}")
        res.lines.append(f"{name} = {got}")
    res.cases = len(cases)
    return res


def all_suites(cases: int | None = None):
    """``(name, runner)`` pairs in transcript order; ``cases`` overrides sample sizes."""

    def n(default):
        return default if cases is None else cases

    return [
        ("clopen.boolean_algebra", lambda r: suite_boolean_algebra(r, n(1000))),
        ("clopen.structure", lambda r: suite_clopen_structure(r, n(1000))),
        ("hat.galois", lambda r: suite_galois(r, n(2000))),
        ("hat.laws", lambda r: suite_hat_laws(r, n(500))),
        ("tower.embedding", lambda r: suite_embedding(r, n(200))),
        ("tower.sigma", lambda r: suite_sigma(r)),
        ("tower.p1_anti_atom_split", lambda r: suite_p1(r)),
        ("tower.anti_atom_fairness", lambda r: suite_fairness(r)),
        ("tower.p2_common_top", lambda r: suite_p2(r, n(50))),
        ("limit.well_defined", lambda r: suite_well_defined(r, n(500))),
        ("limit.ec1_witness", lambda r: suite_ec(r, "ec1", n(100))),
        ("limit.ec2_witness", lambda r: suite_ec(r, "ec2", n(100))),
        ("limit.ec3_witness", lambda r: suite_ec(r, "ec3")),
        ("limit.ec4_witness", lambda r: suite_ec(r, "ec4", n(100))),
        ("limit.ec5_witness", lambda r: suite_ec(r, "ec5", n(100))),
        ("limit.dense_chain", lambda r: suite_dense_chain(r)),
        ("limit.subalgebra_closure", lambda r: suite_closure(r, n(100))),
        ("fixtures", lambda r: suite_fixtures(r)),
    ]


def run_all(seed: int = 0, cases: int | None = None) -> list[SuiteResult]:
    """Run every suite, each from its own stream seeded by ``(seed, name)``."""
    out = []
    for name, runner in all_suites(cases):
        out.append(runner(random.Random(f"{seed}:{name}")))
    return out
