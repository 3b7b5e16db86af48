"""Command-line front end.

Subcommands read a group file (or '-' for stdin) and print deterministic
text, so outputs can be golden-tested and piped back in:

    decide FILE [--oracle-check]   reduction trace + verdict (exit 0/1/2)
    closure FILE                   brute-force closure, as a group file
    zel FILE                       the zel subgroup, as a group file
    orbits FILE                    one orbit per line
    orb2 FILE                      pair-orbit color matrix
    example1 P | example2 P        fixture groups, as group files
    random --seed S --max-degree N seeded random instance, as a group file

decide exits 0 when the group is 2-closed, 1 when it is not, 2 on any
error (including an oracle disagreement, which would mean a bug here).
"""

from __future__ import annotations

import argparse
import sys

from .decider import (
    ORBIT_REMOVAL,
    SYLOW_SPLIT,
    ZEL_REDUCE,
    PreconditionFailed,
    Step,
    decide_2_closed,
    decide_with_oracle_check,
)
from .coloring import orb2
from .fixtures import (
    NotPrime,
    fixture_example1,
    fixture_example2,
    random_abelian_cyclic,
    random_regular_abelian,
)
from .groupfile import InvalidPermutation, ParseError, parse_group, serialize_group
from .oracle import BudgetExceeded, two_closure
from .perm import CapExceeded, PermGroup
from .reduction import NotNilpotent, zel

__all__ = [
    "main",
    "parse_group",
    "serialize_group",
    "fixture_example1",
    "fixture_example2",
    "random_abelian_cyclic",
    "random_regular_abelian",
]

_DETAIL_LABEL = {
    SYLOW_SPLIT: "primes",
    ZEL_REDUCE: "zel-orbit-sizes",
    ORBIT_REMOVAL: "orbit",
}


def render_step(step: Step) -> str:
    text = f"step {step.kind} degree={step.degree} order={step.order}"
    label = _DETAIL_LABEL.get(step.kind)
    if label is not None:
        text += f" {label}={','.join(map(str, step.detail))}"
    return text


def _verdict_word(closed: bool) -> str:
    return "2-closed" if closed else "not-2-closed"


def _read_group(path: str) -> PermGroup:
    if path == "-":
        return parse_group(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_group(fh.read())


def _print_group(group: PermGroup, cap_comment: bool = True) -> None:
    if cap_comment:
        print(f"# order {group.order()}")
    print(serialize_group(group), end="")


def _cmd_decide(args) -> int:
    group = _read_group(args.file)
    if args.oracle_check:
        report = decide_with_oracle_check(group)
        for step in report.trace.steps:
            print(render_step(step))
        print(f"verdict {_verdict_word(report.decided)}")
        print(f"oracle {_verdict_word(report.oracle)}")
        print(f"agreement {'MISMATCH' if report.mismatch else 'ok'}")
        if report.mismatch:
            return 2
        return 0 if report.decided else 1
    closed, trace = decide_2_closed(group)
    for step in trace.steps:
        print(render_step(step))
    print(f"verdict {_verdict_word(closed)}")
    return 0 if closed else 1


def _cmd_closure(args) -> int:
    _print_group(two_closure(_read_group(args.file)))
    return 0


def _cmd_zel(args) -> int:
    _print_group(zel(_read_group(args.file)))
    return 0


def _cmd_orbits(args) -> int:
    for cls in _read_group(args.file).orbits().classes:
        print(" ".join(map(str, cls)))
    return 0


def _cmd_orb2(args) -> int:
    print(orb2(_read_group(args.file)).render())
    return 0


def _cmd_example1(args) -> int:
    _print_group(fixture_example1(args.p), cap_comment=False)
    return 0


def _cmd_example2(args) -> int:
    _print_group(fixture_example2(args.p), cap_comment=False)
    return 0


def _cmd_random(args) -> int:
    make = random_regular_abelian if args.regular else random_abelian_cyclic
    _print_group(make(args.seed, args.max_degree), cap_comment=False)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twoclosure",
        description="decide 2-closedness of abelian permutation groups "
        "with cyclic transitive constituents",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="run the reduction procedure on a group file")
    p.add_argument("file", help="group file, or - for stdin")
    p.add_argument(
        "--oracle-check",
        action="store_true",
        help="also run the brute-force oracle and compare verdicts",
    )
    p.set_defaults(func=_cmd_decide)

    p = sub.add_parser("closure", help="brute-force pair-orbit closure of a group file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_closure)

    p = sub.add_parser("zel", help="the zel subgroup of an intransitive group")
    p.add_argument("file")
    p.set_defaults(func=_cmd_zel)

    p = sub.add_parser("orbits", help="print the orbits, one per line")
    p.add_argument("file")
    p.set_defaults(func=_cmd_orbits)

    p = sub.add_parser("orb2", help="print the pair-orbit color matrix")
    p.add_argument("file")
    p.set_defaults(func=_cmd_orb2)

    p = sub.add_parser("example1", help="three-orbit fixture of order p^2 on 3p points")
    p.add_argument("p", type=int)
    p.set_defaults(func=_cmd_example1)

    p = sub.add_parser("example2", help="diagonal double of example1 on 6p points")
    p.add_argument("p", type=int)
    p.set_defaults(func=_cmd_example2)

    p = sub.add_parser("random", help="seeded random abelian instance")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument(
        "--regular",
        action="store_true",
        help="a regular (transitive) abelian group instead of a block-shift group",
    )
    p.set_defaults(func=_cmd_random)

    return parser


_EXPECTED_ERRORS = (
    ParseError,
    InvalidPermutation,
    PreconditionFailed,
    CapExceeded,
    BudgetExceeded,
    NotNilpotent,
    NotPrime,
    ValueError,
    OSError,
)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _EXPECTED_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
