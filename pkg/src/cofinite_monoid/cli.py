"""Command line front end.

Elements are accepted in the literal notation (``{3->1|4=>+0}``), as the
names ``I``, ``p``, ``q``, or as expressions such as ``"q * p^-1"``.

Exit status: 0 on success, 1 on malformed input or an invalid element,
2 when ``selftest`` finds a violation (argparse also uses 2 for usage errors).

``rand`` draws the shift uniformly, then the raw tail start, then the number
of exceptional pairs; keys are drawn without replacement from the prefix
before the tail and images without replacement from the free part of the
range.  The same ``--seed`` always reproduces the same elements.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from . import bicyclic, green, solver, topology
from .codec import encode, to_json
from .core import PartialBijection, Profile, random_element
from .errors import InvalidElement, ParseError
from .expr import eval_expr
from .selftest import run_selftest
from .sets import FiniteSet


def _element(text: str) -> PartialBijection:
    return eval_expr(text)


def _fixed(text: str) -> FiniteSet:
    try:
        return FiniteSet.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad fixed set {text!r}: {exc}")


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


class Output:
    def __init__(self, as_json: bool, stream=None):
        self.as_json = as_json
        self.stream = stream or sys.stdout

    def _emit(self, text: str) -> None:
        print(text, file=self.stream)

    def value(self, obj) -> None:
        if self.as_json:
            self._emit(json.dumps(_jsonable(obj)))
        elif isinstance(obj, bool):
            self._emit(str(obj).lower())
        elif isinstance(obj, (list, tuple)):
            for item in obj:
                self._emit(_text(item))
        else:
            self._emit(_text(obj))


def _text(obj) -> str:
    if isinstance(obj, PartialBijection):
        return encode(obj)
    if obj is None:
        return "none"
    return str(obj)


def _jsonable(obj):
    if isinstance(obj, PartialBijection):
        return to_json(obj)
    if isinstance(obj, FiniteSet):
        return list(obj)
    if isinstance(obj, bicyclic.BicyclicWord):
        return {"a": obj.a, "b": obj.b}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    return obj


GREEN = {
    "R": green.is_R,
    "L": green.is_L,
    "H": green.is_H,
    "D": green.is_D,
    "leq": green.nat_leq,
    "meet": green.meet,
    "witness": green.d_witness,
}


def cmd_eval(args, out):
    out.value(_element(args.expr))


def cmd_green(args, out):
    out.value(GREEN[args.relation](_element(args.a), _element(args.b)))


def cmd_solve(args, out):
    fn = solver.solve_right if args.side == "right" else solver.solve_left
    out.value(list(fn(_element(args.a), _element(args.b))))


def cmd_bicyclic(args, out):
    if args.op == "mul":
        a, b, c, d = (int(x) for x in args.args)
        out.value(bicyclic.word_mul(bicyclic.BicyclicWord(a, b), bicyclic.BicyclicWord(c, d)))
    elif args.op == "embed":
        a, b = (int(x) for x in args.args)
        out.value(bicyclic.embed(bicyclic.BicyclicWord(a, b)))
    elif args.op == "recognize":
        out.value(bicyclic.recognize(_element(args.args[0])))
    else:
        out.value(bicyclic.projection_idempotent(_element(args.args[0])))


_BICYCLIC_ARITY = {"mul": 4, "embed": 2, "recognize": 1, "project": 1}


def cmd_sep(args, out):
    out.value(list(topology.separation_witness(_element(args.a), _element(args.b), args.kind)))


def cmd_member(args, out):
    U = topology.BasicNbhd(args.kind, _element(args.center), args.fix)
    out.value(topology.contains(U, _element(args.candidate)))


def cmd_meet_empty(args, out):
    U = topology.BasicNbhd(args.kind, _element(args.a), args.fix_a)
    V = topology.BasicNbhd(args.kind, _element(args.b), args.fix_b)
    witness = topology.intersection_witness(U, V)
    if out.as_json:
        out.value({"empty": witness is None, "witness": _jsonable(witness)})
    else:
        out.value(witness is None)
        if witness is not None:
            out.value(witness)


def cmd_rand(args, out):
    rng = random.Random(args.seed)
    profile = Profile(args.max_exceptions, args.bound, args.min_shift, args.max_shift)
    out.value([random_element(rng, profile) for _ in range(args.count)])


def cmd_selftest(args, out):
    report = run_selftest(args.seed, args.iters)
    if out.as_json:
        out.value(report.to_json())
    else:
        out._emit(report.format())
    print(f"elapsed {report.elapsed:.2f}s", file=sys.stderr)
    return 0 if report.ok else 2


# applied after parsing; set_defaults would leak into the shared parent actions
GLOBAL_DEFAULTS = {"json": False, "seed": 0, "iters": 100}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine readable output")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--iters", type=_positive, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="cofinite-monoid",
        description="Arithmetic in the monoid of co-finite almost monotone partial bijections of N.",
        parents=[common],
        epilog=__doc__.split("\n\n", 2)[2],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate an expression")
    p.add_argument("expr")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("green", parents=[common], help="Green's relations and the semilattice")
    p.add_argument("relation", choices=list(GREEN))
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_green)

    p = sub.add_parser("solve", parents=[common], help="solve a*x=b (right) or x*a=b (left)")
    p.add_argument("side", choices=["left", "right"])
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bicyclic", parents=[common], help="bicyclic words and the shift copy")
    p.add_argument("op", choices=list(_BICYCLIC_ARITY))
    p.add_argument("args", nargs="+")
    p.set_defaults(func=cmd_bicyclic)

    p = sub.add_parser("sep", parents=[common], help="disjoint basic neighbourhoods")
    p.add_argument("kind", choices=["F", "WF"])
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_sep)

    p = sub.add_parser("member", parents=[common], help="basic neighbourhood membership")
    p.add_argument("kind", choices=["F", "WF"])
    p.add_argument("center")
    p.add_argument("candidate")
    p.add_argument("--fix", type=_fixed, default=FiniteSet())
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("meet-empty", parents=[common], help="is U_a(F) ∩ U_b(G) empty?")
    p.add_argument("kind", choices=["F", "WF"])
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--fix-a", type=_fixed, default=FiniteSet())
    p.add_argument("--fix-b", type=_fixed, default=FiniteSet())
    p.set_defaults(func=cmd_meet_empty)

    p = sub.add_parser("rand", parents=[common], help="sample random elements")
    p.add_argument("--count", type=_positive, default=1)
    p.add_argument("--max-exceptions", type=int, default=3)
    p.add_argument("--bound", type=int, default=8)
    p.add_argument("--min-shift", type=int, default=-3)
    p.add_argument("--max-shift", type=int, default=3)
    p.set_defaults(func=cmd_rand)

    p = sub.add_parser("selftest", parents=[common], help="run the seeded property suites")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for key, value in GLOBAL_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    if args.command == "bicyclic" and len(args.args) != _BICYCLIC_ARITY[args.op]:
        parser.error(f"bicyclic {args.op} takes {_BICYCLIC_ARITY[args.op]} argument(s)")
    out = Output(args.json)
    try:
        return args.func(args, out) or 0
    except (ParseError, InvalidElement) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
