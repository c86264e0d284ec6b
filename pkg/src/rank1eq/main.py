#!/usr/bin/env python3
"""
rank1eq - exact equilibria of rank-1 bimatrix games.

    rank1eq {solve|enumerate|check|gen|rank|homeo} [flags]

Exit codes: 0 success or equilibrium, 1 negative verdict, 2 input error,
3 game rank above one.
"""

import argparse
import sys
from typing import Callable, List, Optional, Sequence, TextIO, Tuple

import yaml

from .config import load_config
from .core.errors import (
    GameFormatError,
    LimitExceeded,
    NotAnEquilibrium,
    Rank1EqError,
    RankError,
    SumMismatch,
    UnknownFixture,
)
from .core.matrix import RatMatrix, matrix_rank
from .core.models import Game, MixedProfile, as_rank_one
from .core.rational import format_rational, format_vector, parse_vector
from .formats.gamefile import format_game, format_rank_one, read_game
from .formats.reports import (
    CheckReport,
    EnumerationReport,
    EquilibriumReport,
    ErrorReport,
    HomeoReport,
    RankReport,
    SubsetReport,
    qmat,
    qvec,
)
from .generators.games import (
    ExpoParams,
    TradeParams,
    expo_rank_one,
    fixture,
    gen_random_rank1,
    gen_trade,
)
from .homeo.maps import km_forward, km_inverse, psi_forward, psi_inverse
from .oracle.verify import is_nash
from .suite import Rank1Suite
from .utils.logger import get_logger, setup_logging
from .utils.metrics import MetricsExporter, metrics_registry

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_RANK = 3

logger = get_logger(__name__)


class _Output:
    """Writes either a JSON report or aligned text lines."""

    def __init__(self, stream: TextIO, as_json: bool, approx: bool):
        self.stream = stream
        self.as_json = as_json
        self.approx = approx

    def q(self, value) -> str:
        return format_rational(value, self.approx)

    def vec(self, values) -> str:
        return format_vector(values, self.approx)

    def table(self, pairs: Sequence[Tuple[str, str]]) -> None:
        width = max(len(key) for key, _ in pairs)
        for key, value in pairs:
            self.stream.write(f"{key.ljust(width)}  {value}\n")

    def line(self, text: str = "") -> None:
        self.stream.write(text + "\n")

    def report(self, report) -> None:
        self.stream.write(report.to_json() + "\n")


def _load_profile(game: Game, args) -> MixedProfile:
    x = parse_vector(args.x, expected=game.m)
    y = parse_vector(args.y, expected=game.n)
    profile = MixedProfile(x, y)
    if not profile.is_valid():
        raise ValueError("--x and --y must be probability vectors")
    return profile


def cmd_solve(args, suite: Rank1Suite, out: _Output) -> int:
    game = read_game(args.path).to_rank_one()
    record = suite.solve(game)
    if out.as_json:
        out.report(EquilibriumReport.from_record(record))
    else:
        out.table([
            ("x", out.vec(record.profile.x)),
            ("y", out.vec(record.profile.y)),
            ("payoff_1", out.q(record.payoff_1)),
            ("payoff_2", out.q(record.payoff_2)),
            ("lambda", out.q(record.lam)),
            ("iterations", str(record.iterations)),
        ])
    return EXIT_OK


def cmd_enumerate(args, suite: Rank1Suite, out: _Output) -> int:
    game = read_game(args.path).to_rank_one()
    subsets = suite.enumerate(game)
    if out.as_json:
        out.report(EnumerationReport(
            m=game.A.rows, n=game.A.cols, count=len(subsets),
            subsets=[SubsetReport.from_subset(s) for s in subsets],
        ))
        return EXIT_OK
    out.line(f"{len(subsets)} maximal Nash subsets")
    for k, subset in enumerate(subsets, start=1):
        lam = subset.lambda_set
        lam_text = out.q(lam.lower) if lam.is_point() else f"[{out.q(lam.lower)}, {out.q(lam.upper)}]"
        out.line(f"#{k} {subset.kind.value} lambda={lam_text}")
        for x in subset.x_vertices:
            out.line(f"  x {out.vec(x)}")
        for y in subset.y_vertices:
            out.line(f"  y {out.vec(y)}")
    return EXIT_OK


def cmd_check(args, suite: Rank1Suite, out: _Output) -> int:
    game = read_game(args.path).game
    profile = _load_profile(game, args)
    check, qp = suite.check(game, profile)
    if out.as_json:
        out.report(CheckReport.from_check(check, qp))
    else:
        out.table([
            ("equilibrium", "yes" if check else "no"),
            ("u", out.q(check.u)),
            ("v", out.q(check.v)),
            ("qp_value", out.q(qp)),
            ("Ay", out.vec(check.row.payoff_vector)),
            ("B^T x", out.vec(check.col.payoff_vector)),
        ])
    return EXIT_OK if check else EXIT_NEGATIVE


def cmd_rank(args, suite: Rank1Suite, out: _Output) -> int:
    game = read_game(args.path).game
    rank = matrix_rank(game.payoff_sum)
    a = b = None
    if rank <= 1:
        factorization = as_rank_one(game).factorization
        a, b = factorization.a, factorization.b
    if out.as_json:
        out.report(RankReport(
            m=game.m, n=game.n, rank=rank,
            a=None if a is None else qvec(a), b=None if b is None else qvec(b),
        ))
    else:
        pairs = [("rank", str(rank))]
        if a is not None:
            pairs += [("a", out.vec(a)), ("b", out.vec(b))]
        out.table(pairs)
    return EXIT_OK


def _parse_matrix(text: str) -> RatMatrix:
    return RatMatrix.from_rows(parse_vector(row) for row in text.split(";"))


def cmd_gen(args, suite: Rank1Suite, out: _Output) -> int:
    if args.family == "expo":
        text = format_rank_one(expo_rank_one(ExpoParams(args.n, args.p)))
    elif args.family == "trade":
        quality = parse_vector(args.quality)
        quantity = parse_vector(args.quantity)
        prices = (_parse_matrix(args.prices) if args.prices
                  else RatMatrix.zeros(len(quality), len(quantity)))
        params = TradeParams(
            quality, quantity, prices, args.alpha, args.beta,
            gamma=parse_vector(args.gamma) if args.gamma else None,
            delta=parse_vector(args.delta) if args.delta else None,
        )
        full, reduced = gen_trade(params)
        text = format_game(full) if args.full else format_rank_one(reduced)
    elif args.family == "random":
        text = format_rank_one(gen_random_rank1(args.m, args.n, args.bound, args.seed))
    else:
        game = fixture(args.name)
        try:
            text = format_game(game, as_rank_one(game).factorization)
        except RankError:
            text = format_game(game)
    out.stream.write(text)
    return EXIT_OK


def cmd_homeo(args, suite: Rank1Suite, out: _Output) -> int:
    game = read_game(args.path).game
    profile = _load_profile(game, args)
    A, B = game.A, game.B
    M = game.payoff_sum
    if args.map == "psi":
        C, D = psi_inverse(A, B, profile.x, profile.y, M)
        image = psi_forward(C, D, M)
        sum_preserved = (C + D == M) and (image.A + image.B == M)
    else:
        C, D = km_inverse(A, B, profile.x, profile.y)
        image = km_forward(C, D)
        sum_preserved = None
    exact = (image.A, image.B, image.x, image.y) == (A, B, profile.x, profile.y)
    image_ok = bool(is_nash(Game(image.A, image.B), MixedProfile(image.x, image.y)))

    if out.as_json:
        out.report(HomeoReport(
            map=args.map, C=qmat(C), D=qmat(D), A=qmat(image.A), B=qmat(image.B),
            x=qvec(image.x), y=qvec(image.y), round_trip_exact=exact,
            sum_preserved=sum_preserved, image_is_equilibrium=image_ok,
        ))
    else:
        pairs = [("map", args.map)]
        pairs += [(f"C[{i}]", out.vec(C.row(i))) for i in range(C.rows)]
        pairs += [(f"D[{i}]", out.vec(D.row(i))) for i in range(D.rows)]
        pairs.append(("round_trip_exact", "yes" if exact else "no"))
        if sum_preserved is not None:
            pairs.append(("sum_preserved", "yes" if sum_preserved else "no"))
        pairs.append(("image_is_equilibrium", "yes" if image_ok else "no"))
        out.table(pairs)
    ok = exact and image_ok and sum_preserved is not False
    return EXIT_OK if ok else EXIT_NEGATIVE


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="YAML configuration file")
    common.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                        help="override the configured log level")
    common.add_argument("--log-format", choices=["text", "json"], help="log record format")
    common.add_argument("--json", action="store_true", help="print a JSON report")
    common.add_argument("--float", dest="approx", action="store_true",
                        help="append approximate decimals to text output")
    common.add_argument("--metrics", action="store_true", help="dump collected metrics as JSON on stderr")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(prog="rank1eq", description="Exact equilibria of rank-1 bimatrix games")
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", parents=[common], help="find one equilibrium by binary search")
    solve.add_argument("path")
    solve.set_defaults(handler=cmd_solve)

    enum = commands.add_parser("enumerate", parents=[common], help="list all maximal Nash subsets")
    enum.add_argument("path")
    enum.set_defaults(handler=cmd_enumerate)

    check = commands.add_parser("check", parents=[common], help="verify a profile")
    check.add_argument("path")
    check.add_argument("--x", required=True, help="row player's strategy, e.g. '1/4 3/4'")
    check.add_argument("--y", required=True, help="column player's strategy")
    check.set_defaults(handler=cmd_check)

    rank = commands.add_parser("rank", parents=[common], help="rank of A + B and its factorization")
    rank.add_argument("path")
    rank.set_defaults(handler=cmd_rank)

    gen = commands.add_parser("gen", help="write a game file to stdout")
    families = gen.add_subparsers(dest="family", required=True)
    expo = families.add_parser("expo", parents=[common], help="game with 2^n - 1 equilibria")
    expo.add_argument("--n", type=int, required=True)
    expo.add_argument("--p", default="3", help="base, a rational above 2")
    trade = families.add_parser("trade", parents=[common], help="seller/buyer trade game")
    trade.add_argument("--quality", required=True)
    trade.add_argument("--quantity", required=True)
    trade.add_argument("--prices", help="rows separated by ';' (default all zero)")
    trade.add_argument("--alpha", required=True)
    trade.add_argument("--beta", required=True)
    trade.add_argument("--gamma")
    trade.add_argument("--delta")
    trade.add_argument("--full", action="store_true", help="emit the full game instead of the reduced one")
    random_game = families.add_parser("random", parents=[common], help="seeded random rank-1 game")
    random_game.add_argument("--m", type=int, required=True)
    random_game.add_argument("--n", type=int, required=True)
    random_game.add_argument("--bound", type=int, default=9)
    random_game.add_argument("--seed", type=int, default=0)
    fix = families.add_parser("fixture", parents=[common], help="named worked example")
    fix.add_argument("name", help="ex1, ex3 or param-N2(<lambda>)")
    gen.set_defaults(handler=cmd_gen)

    homeo = commands.add_parser("homeo", parents=[common], help="round trip through a homeomorphism")
    homeo.add_argument("map", choices=["psi", "km"])
    homeo.add_argument("path")
    homeo.add_argument("--x", required=True)
    homeo.add_argument("--y", required=True)
    homeo.set_defaults(handler=cmd_homeo)
    return parser


def _fail(out: _Output, error: Exception, code: int) -> int:
    message = str(error)
    sys.stderr.write(f"error: {message}\n")
    if out.as_json:
        out.report(ErrorReport(error=type(error).__name__, message=message, exit_code=code))
    return code


def main(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """Command-line entry point; returns the process exit code."""
    args = build_parser().parse_args(argv)
    out = _Output(stdout or sys.stdout, args.json, args.approx)

    try:
        config = load_config(args.config)
    except (FileNotFoundError, ValueError, yaml.YAMLError) as e:
        return _fail(out, e, EXIT_INPUT)
    setup_logging(args.log_level or config.log_level, args.log_format or config.log_format)
    logger.debug(f"Running {args.command}", extra={'command': args.command})

    handler: Callable = args.handler
    try:
        return handler(args, Rank1Suite(config), out)
    except RankError as e:
        return _fail(out, e, EXIT_RANK)
    except (NotAnEquilibrium, SumMismatch, LimitExceeded) as e:
        return _fail(out, e, EXIT_NEGATIVE)
    except (GameFormatError, UnknownFixture, FileNotFoundError, ValueError) as e:
        return _fail(out, e, EXIT_INPUT)
    except Rank1EqError as e:
        logger.error(f"{args.command} failed: {e}")
        return _fail(out, e, EXIT_NEGATIVE)
    finally:
        if args.metrics:
            sys.stderr.write(MetricsExporter(metrics_registry).export_json() + "\n")


if __name__ == "__main__":
    sys.exit(main())
