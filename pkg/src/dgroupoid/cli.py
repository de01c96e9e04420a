"""The ``dg`` command line tool.

Exit codes: 0 success, 1 a verification or axiom failure, 2 an input or
parse error.
"""
from __future__ import annotations

import argparse
import os
import sys
from typing import List, Optional

FAMILIES = ("coarse", "triple", "ar", "br", "malnormal", "truncated")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"dg: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _read_diagram(name: str) -> str:
    if os.path.exists(name):
        with open(name) as f:
            return f.read()
    from .trefoil import bundled
    try:
        return bundled(os.path.basename(name))
    except (FileNotFoundError, OSError):
        raise FileNotFoundError(f"no such file: {name}") from None


def _presentation(args):
    from .triangulation import delta_presentation, parse_diagram, reduce_presentation
    p = delta_presentation(parse_diagram(_read_diagram(args.file),
                                         allow_free_faces=args.allow_free_faces))
    return reduce_presentation(p) if getattr(args, "reduce", False) else p


def cmd_axioms(args) -> int:
    from .delta import build_example, check_delta, k_identity_failures
    dg = build_example(args.family, args.size)
    rep = check_delta(dg.G, dg.D)
    print(f"== {dg.name or args.family}")
    for line in rep.lines():
        print(line)
    ok = rep.ok
    if ok:
        bad = k_identity_failures(dg)
        print(f"k(xy)=k(k(x)j(y))k(y): {'PASS' if not bad else 'FAIL'}")
        ok = not bad
    return 0 if ok else 1


def cmd_present(args) -> int:
    print(_presentation(args))
    return 0


def cmd_rings(args) -> int:
    from .rings import emit_a, emit_b
    p = _presentation(args)
    print(emit_a(p) if args.functor == "a" else emit_b(p))
    return 0


def cmd_verify(args) -> int:
    from .suites import run_suite, summary
    reports = run_suite(args.suite)
    if args.json:
        print(summary(reports))
    else:
        print("\n".join(r.text() for r in reports))
    return 0 if all(r.ok for r in reports) else 1


def cmd_eval(args) -> int:
    from .rings import evaluate, parse_expr
    from .suites import model
    env, one = model(args.model)
    print(evaluate(parse_expr(args.expr), env, one))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="dg", description="Delta-groupoids, knot rings and their verification")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("axioms", help="check the Delta-groupoid axioms on an example family")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--size", type=int, default=2)
    p.set_defaults(func=cmd_axioms)

    for name, func, helptext in (("present", cmd_present, "print the Delta-presentation"),
                                 ("rings", cmd_rings, "print the A' or B' ring presentation")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("file", help="triangulation file or bundled name (trefoil.tri, fig8.tri)")
        # ring presentations are printed for the reduced Delta-presentation unless --no-reduce
        p.add_argument("--reduce", action=argparse.BooleanOptionalAction, default=name == "rings",
                       help="eliminate product generators")
        p.add_argument("--allow-free-faces", action="store_true")
        if name == "rings":
            p.add_argument("--functor", choices=("a", "b"), required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", choices=("trefoil", "fig8", "m2", "all"))
    p.add_argument("--json", action="store_true", help="machine-readable summary")
    p.set_defaults(func=cmd_verify)

    from .suites import MODELS
    p = sub.add_parser("eval", help="normal form of an expression in a model")
    p.add_argument("--model", choices=MODELS, required=True)
    p.add_argument("expr")
    p.set_defaults(func=cmd_eval)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    from .arith import NotInvertible
    from .rings import MissingAtom, ParseError
    from .triangulation import DiagramError, EliminationError
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, DiagramError, EliminationError, MissingAtom, FileNotFoundError,
            KeyError, ValueError) as exc:
        print(f"dg: error: {exc}", file=sys.stderr)
        return 2
    except NotInvertible as exc:
        print(f"dg: not invertible: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
