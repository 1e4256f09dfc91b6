"""
命令行入口
python -m hedonic_games <check|compare|solve|enumerate|dynamics|reduce|generate> ...

结果写 stdout，诊断与日志写 stderr。
退出码：0 成功/稳定，2 不稳定，3 已证明不存在，1 输入或前置条件错误，4 自检失败
"""

import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional, Sequence

from hedonic_games.config.logging import setup_logging
from hedonic_games.core.cnf import Valuation, parse_dimacs
from hedonic_games.core.container import get_game_service
from hedonic_games.core.dynamics import TerminalKind
from hedonic_games.core.formats import format_game, parse_game, parse_partition
from hedonic_games.core.model import GameInstance, Partition, Variant
from hedonic_games.core.oracle import SearchMode, StabilityConcept
from hedonic_games.core.reductions import ReductionKind
from hedonic_games.core.stability import DeviationKind
from hedonic_games.services.game_service import GeneratorKind, GameService, SolveAlgorithm
from hedonic_games.utils.exceptions import BaseAppException, VerificationError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNSTABLE = 2
EXIT_NOT_EXISTS = 3
EXIT_INTERNAL = 4


def _values(enum_type) -> List[str]:
    return [member.value for member in enum_type]


def _read(path: str) -> str:
    """读取文件，'-' 表示标准输入"""
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _emit(lines: Sequence[str]) -> None:
    for line in lines:
        print(line)


def _load_game(args: argparse.Namespace) -> GameInstance:
    variant = Variant(args.variant) if args.variant else None
    return parse_game(_read(args.game), variant)


def _load_partition(path: str, n: int) -> Partition:
    return parse_partition(_read(path), n)


def cmd_check(args: argparse.Namespace, service: GameService) -> int:
    game = _load_game(args)
    partition = _load_partition(args.partition, game.n)
    report = service.check(game, partition, StabilityConcept(args.concept), cap=args.cap)
    _emit(report.lines())
    return EXIT_OK if report.stable else EXIT_UNSTABLE


def _players(text: str) -> List[int]:
    try:
        return [int(token) for token in text.replace(",", " ").replace("{", " ").replace("}", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected player ids, got `{text}`")


def cmd_compare(args: argparse.Namespace, service: GameService) -> int:
    game = _load_game(args)
    result = service.compare(game, args.player, args.left, args.right)
    print(result.value)
    return EXIT_OK


def cmd_solve(args: argparse.Namespace, service: GameService) -> int:
    game = _load_game(args)
    algorithm = SolveAlgorithm(args.algorithm)
    outcome = service.solve(game, algorithm)
    if outcome.found:
        if outcome.deviations is not None:
            logger.info(f"cis-ir 共执行 {outcome.deviations} 次偏离")
        if outcome.removal_order is not None:
            logger.info(f"is-b 剥离顺序: {outcome.removal_order}")
        print(outcome.partition)
        return EXIT_OK
    if algorithm == SolveAlgorithm.NS_B_UF:
        print("no NS partition exists")
        return EXIT_NOT_EXISTS
    print("no: grand coalition is not NS")
    return EXIT_UNSTABLE


def cmd_enumerate(args: argparse.Namespace, service: GameService) -> int:
    game = _load_game(args)
    outcome = service.enumerate(game, StabilityConcept(args.concept), SearchMode(args.mode), cap=args.cap)
    _emit(outcome.lines())
    return EXIT_OK if outcome.partitions else EXIT_NOT_EXISTS


def cmd_dynamics(args: argparse.Namespace, service: GameService) -> int:
    game = _load_game(args)
    start = _load_partition(args.partition, game.n) if args.partition else Partition.singletons(game.n)
    trace = service.dynamics(game, start, DeviationKind(args.kind.upper()), max_steps=args.max_steps)
    _emit(trace.lines())
    return EXIT_OK if trace.terminal == TerminalKind.STABILIZED else EXIT_UNSTABLE


def cmd_reduce(args: argparse.Namespace, service: GameService) -> int:
    formula = parse_dimacs(_read(args.cnf))
    valuation = Valuation.parse(args.witness, formula.m) if args.witness is not None else None
    outcome = service.reduce(formula, ReductionKind(args.reduction), valuation)
    sys.stdout.write(format_game(outcome.game))
    _emit(outcome.layout.lines())
    if outcome.witness is not None:
        print(f"# witness: {outcome.witness}")
    return EXIT_OK


def cmd_generate(args: argparse.Namespace, service: GameService) -> int:
    tie_probability = 0.0 if args.strict else args.tie_probability
    unacceptability = 0.0 if args.no_unacceptability else args.unacceptability_probability
    game = service.generate(
        GeneratorKind(args.kind),
        variant=Variant(args.variant) if args.variant else Variant.BB,
        n=args.n,
        tie_probability=tie_probability,
        unacceptability_probability=unacceptability,
        seed=args.seed,
        unique_favorite=args.unique_favorite,
    )
    sys.stdout.write(format_game(game))
    return EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace, GameService], int]] = {
    "check": cmd_check,
    "compare": cmd_compare,
    "solve": cmd_solve,
    "enumerate": cmd_enumerate,
    "dynamics": cmd_dynamics,
    "reduce": cmd_reduce,
    "generate": cmd_generate,
}


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _probability(text: str) -> float:
    value = float(text)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"must be within [0, 1], got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hedonic-games",
        description="Hedonic games over player rankings: stability checks, constructions, dynamics and SAT gadgets",
    )
    parser.add_argument("--log-level", default=None, help="overrides LOG_LEVEL")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--variant", choices=_values(Variant), help="override the variant declared in the game file")
    common.add_argument("--cap", type=_positive_int, default=None, help="player cap for exhaustive searches")

    game_input = argparse.ArgumentParser(add_help=False, parents=[common])
    game_input.add_argument("--game", required=True, help="game file, '-' for standard input")

    subparsers = parser.add_subparsers(dest="command", required=True)

    check = subparsers.add_parser("check", parents=[game_input], help="check a partition against a stability concept")
    check.add_argument("--partition", required=True, help="partition file")
    check.add_argument("--concept", choices=_values(StabilityConcept), default=StabilityConcept.NS.value)

    compare = subparsers.add_parser("compare", parents=[game_input], help="compare two coalitions for one player")
    compare.add_argument("--player", type=_positive_int, required=True)
    compare.add_argument("--left", type=_players, required=True, help="coalition such as '1 2 3'")
    compare.add_argument("--right", type=_players, required=True)

    solve = subparsers.add_parser("solve", parents=[game_input], help="run a constructive algorithm")
    solve.add_argument("--algorithm", choices=_values(SolveAlgorithm), required=True)

    enumerate_cmd = subparsers.add_parser("enumerate", parents=[game_input], help="enumerate stable partitions")
    enumerate_cmd.add_argument("--concept", choices=_values(StabilityConcept), default=StabilityConcept.NS.value)
    enumerate_cmd.add_argument("--mode", choices=_values(SearchMode), default=SearchMode.ALL.value)

    dynamics = subparsers.add_parser("dynamics", parents=[game_input], help="run deterministic deviation dynamics")
    dynamics.add_argument("--partition", default=None, help="start partition file (default: all singletons)")
    dynamics.add_argument("--kind", choices=[k.value.lower() for k in DeviationKind], default="is")
    dynamics.add_argument("--max-steps", type=_positive_int, default=None)

    reduce = subparsers.add_parser("reduce", help="compile a CNF formula into a gadget game")
    reduce.add_argument("--cnf", default="-", help="DIMACS file, '-' for standard input")
    reduce.add_argument("--reduction", choices=_values(ReductionKind), required=True)
    reduce.add_argument("--witness", default=None, help="valuation bit string, x1 first")

    generate = subparsers.add_parser("generate", parents=[common], help="generate a game file")
    generate.add_argument("kind", choices=_values(GeneratorKind))
    generate.add_argument("--n", type=_positive_int, default=None)
    generate.add_argument("--seed", type=int, default=None)
    generate.add_argument("--unique-favorite", action="store_true")
    ties = generate.add_mutually_exclusive_group()
    ties.add_argument("--strict", action="store_true", help="no indifference")
    ties.add_argument("--tie-probability", type=_probability, default=None)
    cut = generate.add_mutually_exclusive_group()
    cut.add_argument("--no-unacceptability", action="store_true", help="everyone finds everyone acceptable")
    cut.add_argument("--unacceptability-probability", type=_probability, default=None)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse 在参数错误时以 2 退出，与“不稳定”冲突
        return EXIT_OK if exc.code == 0 else EXIT_ERROR

    setup_logging(args.log_level)
    service = get_game_service()
    try:
        return COMMANDS[args.command](args, service)
    except VerificationError as e:
        logger.error(f"自检失败: {e.message} {e.details}")
        print(f"internal error [{e.error_code}]: {e.message}", file=sys.stderr)
        return EXIT_INTERNAL
    except BaseAppException as e:
        logger.debug(f"{args.command} 失败: {e.error_code} {e.details}")
        print(f"error [{e.error_code}]: {e}", file=sys.stderr)
        if e.details:
            print("details: " + ", ".join(f"{k}={v}" for k, v in e.details.items()), file=sys.stderr)
        return EXIT_ERROR
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
