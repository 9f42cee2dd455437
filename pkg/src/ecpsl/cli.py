"""Command-line front end.

Exit codes: 0 success, 1 property violation, 2 parse error, 3 precondition
unmet, 4 level cap exceeded.
"""

from __future__ import annotations

import argparse
import sys

from . import checks, limit, tower
from .clopen import enumerate_set
from .errors import (
    ClosureOverflow,
    ConstructionError,
    LevelCapExceeded,
    ParseError,
    PreconditionError,
)
from .syntax import format_elem, format_tuple, parse_elem, parse_term

EXIT_OK, EXIT_VIOLATION, EXIT_PARSE, EXIT_PRECONDITION, EXIT_CAP = range(5)

_WITNESS_ARITY = {"ec1": 2, "ec2": 3, "ec3": 0, "ec4": 2, "ec5": 2}


class _Precondition(Exception):
    pass


def _truth(ok: bool) -> str:
    return "true" if ok else "false"


def cmd_eval(args, out) -> int:
    term = parse_term(args.term)
    env = {}
    for binding in args.bindings:
        name, sep, text = binding.partition("=")
        if not sep or not name:
            raise ParseError("expected NAME=ELEM", binding, 0)
        env[name.strip()] = parse_elem(text)
    missing = sorted(limit.term_vars(term) - env.keys())
    if missing:
        raise _Precondition(f"unbound variable {missing[0]!r}")
    print(format_elem(limit.term_eval(term, env)), file=out)
    return EXIT_OK


def cmd_eq(args, out) -> int:
    print(_truth(limit.eq(parse_elem(args.x), parse_elem(args.y))), file=out)
    return EXIT_OK


def cmd_witness(args, out) -> int:
    kind = args.axiom
    elems = [parse_elem(t) for t in args.elems]
    if len(elems) != _WITNESS_ARITY[kind]:
        raise _Precondition(f"{kind} takes {_WITNESS_ARITY[kind]} elements, got {len(elems)}")
    if kind == "ec3":
        premises = []
        w = limit.ec3_witness()
        conclusion = limit.ec3_conclusion(w)
    else:
        premises = getattr(limit, f"{kind}_premises")(*elems)
        finder = getattr(limit, f"{kind}_witness")
        w = finder(*elems) if kind == "ec1" else finder(*elems, max_level=args.max_level)
        conclusion = getattr(limit, f"{kind}_conclusion")(*elems, w)
    print(format_elem(w), file=out)
    if args.verbose:
        for name, ok in premises:
            print(f"premise {name}: {_truth(ok)}", file=out)
        for name, ok in conclusion:
            print(f"conclusion {name}: {_truth(ok)}", file=out)
    return EXIT_OK if all(ok for _, ok in conclusion) else EXIT_VIOLATION


def cmd_embed(args, out) -> int:
    x = parse_elem(args.elem)
    if args.level < x.level:
        raise _Precondition(f"target level {args.level} below element level {x.level}")
    if args.level > args.max_level:
        raise LevelCapExceeded(f"target level {args.level} above cap {args.max_level}")
    print(format_tuple(x.lift(args.level)), file=out)
    return EXIT_OK


def cmd_dump_level(args, out) -> int:
    n = args.level
    if n < 1:
        raise _Precondition("levels start at 1")
    if n > args.max_level:
        raise LevelCapExceeded(f"level {n} above cap {args.max_level}")
    s = tower.level_state(n)
    print(f"level {n}", file=out)
    print("sigma " + " ".join(map(str, s.sigma)), file=out)
    for c, perm in enumerate(s.coord_perm, start=1):
        rot = ",".join(str(size) for size, _ in perm.word) or "-"
        if perm.support_bound <= 64:
            exc = " ".join(f"{j}->{k}" for j, k in perm.exceptions().items()) or "-"
        else:
            exc = f"(support within 1..{perm.support_bound})"
        first = tower.skeleton_elem(n, c, 1)
        print(f"coord {c} rotations {rot} exceptions {exc} first {first}", file=out)
    if n % 2:
        print(f"distinguished {tower.distinguished(n)}", file=out)
        print(f"ultrafilter_point {tower.ultrafilter_point(n)}", file=out)
    return EXIT_OK


def cmd_enum(args, out) -> int:
    last = args.last if args.last is not None else args.first
    if args.first < 1 or last < args.first:
        raise _Precondition("enumeration indices must satisfy 1 <= FIRST <= LAST")
    for j in range(args.first, last + 1):
        print(f"{j} {enumerate_set(j)}", file=out)
    return EXIT_OK


def cmd_closure(args, out) -> int:
    gens = [parse_elem(t) for t in args.elems]
    if not gens:
        raise _Precondition("closure needs at least one generator")
    elems = limit.subalgebra_closure(gens, max_size=args.max_size)
    for x in elems:
        print(format_elem(x), file=out)
    if args.verbose:
        print(f"size {len(elems)}", file=out)
    return EXIT_OK


def cmd_check(args, out) -> int:
    results = checks.run_all(seed=args.seed, cases=args.cases)
    for r in results:
        for line in r.transcript():
            print(line, file=out)
    failed = [r.name for r in results if not r.passed]
    print(f"summary {len(results) - len(failed)}/{len(results)} suites passed", file=out)
    return EXIT_VIOLATION if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-level", type=int, default=tower.DEFAULT_CAP,
                        help="highest tower level any search may reach (default %(default)s)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    common.add_argument("--cases", type=int, default=None,
                        help="sample size override for every randomized suite")
    common.add_argument("--verbose", action="store_true", help="print verification transcripts")

    parser = argparse.ArgumentParser(prog="ecpsl", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a term over limit elements")
    p.add_argument("term")
    p.add_argument("bindings", nargs="*", metavar="NAME=ELEM")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("eq", parents=[common], help="decide equality in the limit")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_eq)

    p = sub.add_parser("witness", parents=[common], help="find an existential-closure witness")
    p.add_argument("axiom", choices=sorted(_WITNESS_ARITY))
    p.add_argument("elems", nargs="*")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("embed", parents=[common], help="lift an element to a higher level")
    p.add_argument("elem")
    p.add_argument("level", type=int)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("dump-level", parents=[common], help="print the bookkeeping of one level")
    p.add_argument("level", type=int)
    p.set_defaults(func=cmd_dump_level)

    p = sub.add_parser("enum", parents=[common], help="list the base enumeration of A")
    p.add_argument("first", type=int)
    p.add_argument("last", type=int, nargs="?")
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("closure", parents=[common], help="generate a finite subalgebra")
    p.add_argument("elems", nargs="+")
    p.add_argument("--max-size", type=int, default=10**5)
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("check", parents=[common], help="run every invariant suite")
    p.set_defaults(func=cmd_check)
    return parser


def run(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_PARSE
    except (PreconditionError, _Precondition) as exc:
        print(f"precondition unmet: {exc}", file=err)
        return EXIT_PRECONDITION
    except LevelCapExceeded as exc:
        print(f"level cap exceeded: {exc}", file=err)
        return EXIT_CAP
    except (ConstructionError, ClosureOverflow) as exc:
        print(f"violation: {exc}", file=err)
        return EXIT_VIOLATION


def main(argv=None) -> None:
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
