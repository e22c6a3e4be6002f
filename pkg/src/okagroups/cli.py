"""Command-line interface.

Every subcommand writes machine-readable key=value lines to stdout, one
datum per line; human-readable context lines are prefixed with `# `.
Exit codes: 0 success, 1 domain error (mathematically invalid input),
2 usage or parse error, 3 search refused because a cost cap would be
exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .abelian import abelian_invariants
from .fibertype import (
    OrbifoldSpec,
    PencilSpec,
    add_generic_fiber,
    oka_join_example,
    orbifold_group,
    pi1_generic_fibers,
    pi1_with_special_fiber,
)
from .finquot import (
    DEFAULT_GENERATOR_CAP,
    DEFAULT_ORDER_CAP,
    SearchCapExceeded,
    count_homomorphisms,
    parse_targets,
)
from .oka import (
    OkaParams,
    SimplifiedParams,
    canonical_form,
    is_isomorphic,
    oka_presentation,
    simplified_presentation,
    structure,
)
from .words import ParseError, parse_presentation, print_presentation

__all__ = ["run", "main"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="okagroups",
        description="Fundamental groups of generic fiber-type plane curve complements.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("present", help="finite presentation of G(p;q;r)")
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)
    sp.add_argument("r", type=int)
    sp.add_argument("--form", choices=["oka", "simplified"], default="oka")

    sp = sub.add_parser("canon", help="canonical representative and invariants")
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)
    sp.add_argument("r", type=int)

    sp = sub.add_parser("iso", help="decide isomorphism of two groups")
    for name in ("p1", "q1", "r1", "p2", "q2", "r2"):
        sp.add_argument(name, type=int)

    sp = sub.add_parser("abelianize", help="abelian invariants of a presentation")
    sp.add_argument("params", type=int, nargs="*", metavar="p q r")
    sp.add_argument("--file", help="presentation file instead of p q r")

    sp = sub.add_parser("homcount", help="count homomorphisms into finite targets")
    sp.add_argument("--file", required=True)
    sp.add_argument("--target", required=True, help="e.g. sym:3,cyclic:4")
    sp.add_argument("--cap", type=int, default=DEFAULT_GENERATOR_CAP,
                    help="generator-count cap")
    sp.add_argument("--order-cap", type=int, default=DEFAULT_ORDER_CAP,
                    help="target-order cap")

    sp = sub.add_parser("pencil", help="group of a choice of pencil fibers")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--fibers", type=int, required=True)
    sp.add_argument("--special", choices=["fkp", "fkq"])

    sp = sub.add_parser("add-fiber", help="adjoin one generic fiber")
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)
    sp.add_argument("r", type=int)

    sp = sub.add_parser("orbifold", help="orbifold group of a marked surface")
    sp.add_argument("--genus", type=int, required=True)
    sp.add_argument("--punctures", type=int, required=True)
    sp.add_argument("--marks", default="", help="comma-separated marks >= 2")

    sp = sub.add_parser("oka-example", help="group of a join-type curve union")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--m1", type=int, required=True)
    sp.add_argument("--m2", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)

    return parser


def _emit_presentation(pres, out) -> None:
    print(f"presentation={print_presentation(pres)}", file=out)
    print(f"generators={len(pres.generators)}", file=out)
    print(f"relators={len(pres.relators)}", file=out)


def _cmd_present(args, out) -> int:
    g = OkaParams(args.p, args.q, args.r)
    if args.form == "simplified":
        st = structure(g)
        h = SimplifiedParams(st.s - 1, g.p // st.s, st.a, st.center_order)
        print(f"# simplified form of {g}", file=out)
        _emit_presentation(simplified_presentation(h), out)
    else:
        print(f"# {g}", file=out)
        _emit_presentation(oka_presentation(g), out)
    return 0


def _cmd_canon(args, out) -> int:
    form = canonical_form(OkaParams(args.p, args.q, args.r))
    print(f"canonical={form.params}", file=out)
    if form.cyclic:
        print("cyclic=true", file=out)
        print(f"order={form.params.p}", file=out)
    else:
        s, center, pair = form.invariant_triple
        print(f"invariants=s:{s},center:{center},factors:{{{pair[0]},{pair[1]}}}",
              file=out)
    return 0


def _cmd_iso(args, out) -> int:
    answer = is_isomorphic(
        OkaParams(args.p1, args.q1, args.r1), OkaParams(args.p2, args.q2, args.r2)
    )
    print(f"isomorphic={'true' if answer else 'false'}", file=out)
    return 0


def _usage_error(message: str) -> int:
    print(f"usage error: {message}", file=sys.stderr)
    return 2


def _cmd_abelianize(args, out) -> int:
    if args.file:
        if args.params:
            return _usage_error("give either p q r or --file, not both")
        pres = parse_presentation(Path(args.file).read_text())
    else:
        if len(args.params) != 3:
            return _usage_error("expected exactly three arguments p q r")
        pres = oka_presentation(OkaParams(*args.params))
    inv = abelian_invariants(pres)
    print(f"free_rank={inv.free_rank}", file=out)
    print("torsion=" + ",".join(str(d) for d in inv.torsion), file=out)
    return 0


def _cmd_homcount(args, out) -> int:
    pres = parse_presentation(Path(args.file).read_text())
    specs = [item for item in args.target.split(",") if item]
    if not specs:
        return _usage_error("no targets given")
    targets = parse_targets(args.target)
    for spec, target in zip(specs, targets):
        count = count_homomorphisms(
            pres, target, generator_cap=args.cap, order_cap=args.order_cap
        )
        print(f"{spec}={count}", file=out)
    return 0


def _cmd_pencil(args, out) -> int:
    spec = PencilSpec(
        p=args.p,
        q=args.q,
        k=args.k,
        fibers=args.fibers,
        include_fkp=args.special == "fkp",
        include_fkq=args.special == "fkq",
    )
    answer = pi1_with_special_fiber(spec) if args.special else pi1_generic_fibers(spec)
    print(f"# {answer.description}", file=out)
    print(f"group={answer.oka}", file=out)
    print(f"generators={len(answer.presentation.generators)}", file=out)
    print(f"relators={len(answer.presentation.relators)}", file=out)
    return 0


def _cmd_add_fiber(args, out) -> int:
    result = add_generic_fiber(OkaParams(args.p, args.q, args.r))
    print(f"group={result}", file=out)
    return 0


def _cmd_orbifold(args, out) -> int:
    marks = tuple(int(m) for m in args.marks.split(",") if m)
    answer = orbifold_group(OrbifoldSpec(args.genus, args.punctures, marks))
    print(f"# {answer.description}", file=out)
    _emit_presentation(answer.presentation, out)
    return 0


def _cmd_oka_example(args, out) -> int:
    result = oka_join_example(args.r, args.m1, args.m2, args.d)
    print(f"group={result}", file=out)
    return 0


_COMMANDS = {
    "present": _cmd_present,
    "canon": _cmd_canon,
    "iso": _cmd_iso,
    "abelianize": _cmd_abelianize,
    "homcount": _cmd_homcount,
    "pencil": _cmd_pencil,
    "add-fiber": _cmd_add_fiber,
    "orbifold": _cmd_orbifold,
    "oka-example": _cmd_oka_example,
}


def run(argv, stdout=None) -> int:
    """Run one subcommand; returns the process exit code."""
    out = sys.stdout if stdout is None else stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return _COMMANDS[args.command](args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except SearchCapExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))
