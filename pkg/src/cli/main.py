"""Command-line surface: info, classify, decompose, check and random.

Exit codes: 0 success (or compatible), 1 usage/parse/construction error,
2 check ran but the scheme and weight are incompatible.
"""

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

import pandas as pd
from tabulate import tabulate

from src.config.settings import settings
from src.core.errors import GameDecompError
from src.core.game import Game, GameSpace, profile_label, profiles, to_table
from src.core.sampling import make_rng, random_combination, random_game
from src.core.serialization import dumps, encode_rational, game_to_dict, load_game
from src.compat.checker import scheme_cross_witness, theorem_check, theorem_to_dict
from src.inner_products.decompose import decompose, decomposition_to_dict
from src.inner_products.inner import squared_norm, weight_from_descriptor
from src.inner_products.schemes import SchemeName, build_scheme
from src.subspaces import GameClass, class_space, classify, is_member, parse_class
from src.subspaces.classify import symmetric_applicable
from src.utils.logger import log

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INCOMPATIBLE = 2

SCHEME_CHOICES = [s.value for s in SchemeName]
CLASS_CHOICES = [c.value for c in GameClass]


class CommandParser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors with exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_ERROR)


def non_negative_int(text: str) -> int:
    """argparse type for counts that may be zero but not negative."""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


def _format_vector(values) -> str:
    return "[" + ",".join(str(encode_rational(x)) for x in values) + "]"


def _class_flags(g: Game) -> dict[str, Optional[bool]]:
    flags = {}
    for tag in GameClass:
        if tag is GameClass.SYMMETRIC and symmetric_applicable(g.space):
            flags[tag.value] = None
        else:
            flags[tag.value] = is_member(class_space(tag, g.space), g)
    return flags


def payoff_frame(g: Game) -> pd.DataFrame:
    """Payoff table with one row per player and one column per profile."""
    columns = [profile_label(g.space, p) for p in profiles(g.space)]
    rows = [[str(encode_rational(x)) for x in row] for row in to_table(g)]
    return pd.DataFrame(rows, index=[f"V_{i}" for i in range(1, g.space.n + 1)], columns=columns)


def cmd_info(args) -> int:
    """Print the space, payoff vector, payoff table and class membership of a game."""
    g = load_game(args.game)
    flags = _class_flags(g)
    if args.json:
        print(dumps({"space": str(g.space), "payoff_vector": [encode_rational(x) for x in g.v], "classes": flags}))
        return EXIT_OK
    print(f"{g.name or 'game'} in {g.space}  (k={g.space.k}, dim={g.space.dim})")
    print(f"V_G = {_format_vector(g.v)}")
    print()
    print(tabulate(payoff_frame(g), headers="keys", tablefmt="simple"))
    print()
    print(tabulate(
        [[name, "n/a" if flag is None else ("yes" if flag else "no")] for name, flag in flags.items()],
        headers=["class", "member"],
        tablefmt="simple",
    ))
    return EXIT_OK


def cmd_classify(args) -> int:
    """Print the definitional classification with its potential witness as JSON."""
    g = load_game(args.game)
    result = classify(g)
    print(dumps({
        "space": str(g.space),
        "classes": sorted(tag.value for tag in result.classes),
        "potential": None if result.potential is None else [encode_rational(x) for x in result.potential],
        "notes": list(result.notes),
    }))
    return EXIT_OK


def cmd_decompose(args) -> int:
    """Decompose a game along a scheme; JSON to stdout or to --output."""
    g = load_game(args.game)
    ip = weight_from_descriptor(g.space, args.inner)
    scheme = build_scheme(args.scheme, g.space, ip)
    dec = decompose(scheme, ip, g)
    data = decomposition_to_dict(dec)
    data["inner"] = args.inner

    summary = tabulate(
        [[label, part.d, str(encode_rational(squared_norm(ip, c)))]
         for label, part, c in zip(scheme.labels, scheme.parts, dec.components)],
        headers=["part", "dim", "squared norm"],
        tablefmt="simple",
    )
    verdict = f"orthogonal under {args.inner}: {'yes' if dec.orthogonal else 'no'}"
    if args.output:
        Path(args.output).write_text(dumps(data) + "\n")
        log.info(f"wrote {scheme.name.value} decomposition to {args.output}")
        print(summary)
        print(verdict)
    else:
        print(dumps(data))
        sys.stderr.write(summary + "\n" + verdict + "\n")
    return EXIT_OK


def cmd_check(args) -> int:
    """Run the compatibility report and equivalence check; exit 2 when incompatible."""
    space = GameSpace.parse(args.space)
    ip = weight_from_descriptor(space, args.inner)
    report = theorem_check(args.scheme, space, ip, trials=args.trials, seed=args.seed)
    data = theorem_to_dict(report)
    data["weight"] = args.inner
    if not report.orthogonal_weighted:
        data["cross_witness"] = scheme_cross_witness(report.scheme, ip)
    print(dumps(data))
    return EXIT_OK if report.compat.compatible else EXIT_INCOMPATIBLE


def cmd_random(args) -> int:
    """Print a seeded random game, optionally drawn from a class subspace."""
    space = GameSpace.parse(args.space)
    rng = make_rng(args.seed)
    if args.in_class:
        basis = class_space(parse_class(args.in_class), space).basis
        g = Game.from_column(space, random_combination(basis, rng))
    else:
        g = random_game(space, rng)
    print(dumps(game_to_dict(g)))
    return EXIT_OK


def build_parser() -> CommandParser:
    """Argument parser with one subcommand per verb."""
    parser = CommandParser(prog="gamedecomp", description="Exact decomposition of finite games.")
    verbs = parser.add_subparsers(dest="verb", required=True)

    info = verbs.add_parser("info", help="space, payoff vector and class membership of a game")
    info.add_argument("game", help="game JSON file, or - for stdin")
    info.add_argument("--json", action="store_true", help="print the summary as JSON")
    info.set_defaults(handler=cmd_info)

    classify_cmd = verbs.add_parser("classify", help="definitional class tests with a potential witness")
    classify_cmd.add_argument("game", help="game JSON file, or - for stdin")
    classify_cmd.set_defaults(handler=cmd_classify)

    dec = verbs.add_parser("decompose", help="split a game along a decomposition scheme")
    dec.add_argument("game", help="game JSON file, or - for stdin")
    dec.add_argument("--scheme", required=True, choices=SCHEME_CHOICES)
    dec.add_argument("--inner", default="standard", help="standard, candogan or file:Q.json")
    dec.add_argument("-o", "--output", help="write the decomposition JSON here")
    dec.set_defaults(handler=cmd_decompose)

    check = verbs.add_parser("check", help="compatibility report and theorem check")
    check.add_argument("--scheme", required=True, choices=SCHEME_CHOICES)
    check.add_argument("--inner", required=True, help="standard, candogan or file:Q.json")
    check.add_argument("--space", required=True, help="strategy counts k1,...,kn")
    check.add_argument("--trials", type=non_negative_int, default=settings.DEFAULT_TRIALS)
    check.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    check.set_defaults(handler=cmd_check)

    rand = verbs.add_parser("random", help="seeded random game")
    rand.add_argument("--space", required=True, help="strategy counts k1,...,kn")
    rand.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    rand.add_argument("--in-class", choices=CLASS_CHOICES, help="sample inside a game-class subspace")
    rand.set_defaults(handler=cmd_random)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, run the verb and map library errors to exit code 1."""
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (GameDecompError, OSError) as e:
        log.error(f"{args.verb} failed: {e}")
        sys.stderr.write(f"error: {e}\n")
        return EXIT_ERROR
