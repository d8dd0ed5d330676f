"""Command-line front end: game, twin, lottery, verify, enumerate, simulate."""
from __future__ import annotations

import argparse
import json
import os
import sys

from .core import PGame, build_game, parse_free_rep
from .errors import BadInput, OutOfRange, ParsimoniousGameError
from .incidence import IncidenceMatrix, build_incidence_matrix
from .lottery import balanced_lottery, expected_payoffs, simulate_lottery
from .oracle import DEFAULT_MAX_N, enumerate_p_games, full_verify
from .twin import is_self_twin, twin_game

ENV_MAX_N = "PARSIGAME_MAX_N"


def _dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2)


def _resolve_max_n(flag_value: int | None) -> int:
    if flag_value is not None:
        return flag_value
    raw = os.environ.get(ENV_MAX_N)
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError as exc:
        raise BadInput(f"{ENV_MAX_N} must be an integer, got {raw!r}") from exc


def _players_text(span: range) -> str:
    if len(span) == 1:
        return f"player {span[0]}"
    return f"players {span[0]}-{span[-1]}"


def _game_doc(game: PGame, matrix: IncidenceMatrix) -> dict:
    # JSON arrays are 0-based: player j of the text output is position j - 1,
    # and player_types holds positions into type_weights
    return {
        "free_rep": list(game.free_rep.counts),
        "n": game.n,
        "h": game.h,
        "quota": game.quota,
        "total_weight": game.total_weight,
        "type_weights": list(game.type_weights),
        "player_weights": list(game.player_weights),
        "player_types": [t - 1 for t in game.player_type],
        "representation": game.representation,
        "incidence": matrix.to_lists(),
    }


def _game_text(game: PGame, matrix: IncidenceMatrix) -> str:
    lines = [
        game.representation,
        f"free type representation: {game.free_rep}",
        f"n = {game.n}  h = {game.h}  q = {game.quota}  w(N) = {game.total_weight}",
        "types:",
    ]
    for t in range(1, game.h + 1):
        lines.append(
            f"  {t}: weight {game.weight_of_type(t)}, "
            f"{_players_text(game.players_of_type(t))}"
        )
    lines.append("incidence matrix:")
    lines.append(matrix.to_text())
    return "\n".join(lines)


def cmd_game(args: argparse.Namespace) -> int:
    game = build_game(parse_free_rep(args.rep))
    matrix = build_incidence_matrix(game)
    if args.json:
        print(_dumps(_game_doc(game, matrix)))
    else:
        print(_game_text(game, matrix))
    return 0


def cmd_twin(args: argparse.Namespace) -> int:
    game = build_game(parse_free_rep(args.rep))
    pair = twin_game(game)
    self_twin = is_self_twin(game)
    if args.json:
        doc = {
            "game": _game_doc(game, build_incidence_matrix(game)),
            "twin": _game_doc(pair.twin, build_incidence_matrix(pair.twin)),
            "self_twin": self_twin,
            "a_transposed": pair.a_transposed.to_lists(),
            "a_tau": pair.a_tau.to_lists(),
        }
        print(_dumps(doc))
    else:
        lines = [
            f"game: {game.representation}",
            f"twin: {pair.twin.representation}",
            f"twin free type representation: {pair.twin.free_rep}",
            f"self-twin: {'yes' if self_twin else 'no'}",
            "transposed incidence matrix (reversed ordering):",
            pair.a_transposed.to_text(),
            "twin incidence matrix (standard ordering):",
            pair.a_tau.to_text(),
        ]
        print("\n".join(lines))
    return 0


def cmd_lottery(args: argparse.Namespace) -> int:
    game = build_game(parse_free_rep(args.rep))
    lottery = balanced_lottery(game)
    payoffs = expected_payoffs(game, lottery)
    if args.json:
        doc = {
            "representation": game.representation,
            "probs": [str(p) for p in lottery.probs],
            "pi": str(lottery.pi),
            "expected_payoffs": [str(e) for e in payoffs],
        }
        print(_dumps(doc))
    else:
        lines = [
            f"game: {game.representation}",
            "probs: " + ", ".join(str(p) for p in lottery.probs),
            f"pi: {lottery.pi}",
            "expected payoffs: " + ", ".join(str(e) for e in payoffs),
        ]
        print("\n".join(lines))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    bound = _resolve_max_n(args.max_n)
    if args.all_n is None and args.rep is None:
        raise BadInput("give a free type representation or --all-n N")

    if args.all_n is not None:
        top = args.all_n
        if not 4 <= top <= bound:
            raise OutOfRange(f"--all-n must be between 4 and {bound}, got {top}")
        checked = 0
        failures = 0
        for n in range(4, top + 1):
            for rep in enumerate_p_games(n, max_n=bound):
                report = full_verify(build_game(rep))
                checked += 1
                if not report.passed:
                    failures += 1
                if args.json:
                    print(json.dumps(report.to_json_dict()))
                else:
                    status = "ok  " if report.passed else "FAIL"
                    print(f"{status}  {rep}  {report.game}")
        summary = f"checked {checked} games for n = 4..{top}: {failures} failures"
        if args.json:
            print(json.dumps({"checked": checked, "failures": failures}))
        else:
            print(summary)
        return 0 if failures == 0 else 1

    game = build_game(parse_free_rep(args.rep))
    report = full_verify(game)
    if args.json:
        print(_dumps(report.to_json_dict()))
    else:
        print(report.game)
        for name, ok in report.checks.items():
            print(f"{name}: {'pass' if ok else 'FAIL'}")
        print(f"overall: {'pass' if report.passed else 'FAIL'}")
    return 0 if report.passed else 1


def cmd_enumerate(args: argparse.Namespace) -> int:
    bound = _resolve_max_n(args.max_n)
    for rep in enumerate_p_games(args.n, max_n=bound):
        game = build_game(rep)
        self_twin = is_self_twin(game)
        if args.json:
            doc = {
                "free_rep": list(rep.counts),
                "representation": game.representation,
                "quota": game.quota,
                "self_twin": self_twin,
            }
            print(json.dumps(doc))
        else:
            flag = "yes" if self_twin else "no"
            print(f"{rep}\t{game.representation}\tq={game.quota}\tself_twin={flag}")
    return 0


def cmd_simulate(args: argparse.Namespace) -> int:
    game = build_game(parse_free_rep(args.rep))
    result = simulate_lottery(game, draws=args.draws, seed=args.seed)
    draws = result["draws"]
    if args.json:
        doc = {
            "representation": game.representation,
            "seed": result["seed"],
            "draws": draws,
            "pi": str(result["pi"]),
            "membership_frequency": [c / draws for c in result["membership_counts"]],
            "mean_payoffs": [float(p) for p in result["mean_payoffs"]],
            "expected_payoffs": [str(e) for e in result["expected_payoffs"]],
        }
        print(_dumps(doc))
    else:
        lines = [
            f"game: {game.representation}",
            f"draws: {draws}  seed: {result['seed']}",
            f"target membership probability pi: {result['pi']}"
            f" = {float(result['pi']):.6f}",
            "player  freq      mean payoff  expected",
        ]
        for j in range(game.n):
            freq = result["membership_counts"][j] / draws
            mean = float(result["mean_payoffs"][j])
            exact = result["expected_payoffs"][j]
            lines.append(f"{j + 1:>6}  {freq:.6f}  {mean:.6f}     {exact}")
        print("\n".join(lines))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parsigame",
        description=(
            "Exact construction, twinning, balanced lotteries and brute-force "
            "verification of parsimonious games."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", help="emit JSON instead of text"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "game", parents=[common], help="build a game and its incidence matrix"
    )
    p.add_argument("rep", help="free type representation, e.g. 3,1,2,2")
    p.set_defaults(func=cmd_game)

    p = sub.add_parser(
        "twin", parents=[common], help="build the twin game and both transposes"
    )
    p.add_argument("rep", help="free type representation")
    p.set_defaults(func=cmd_twin)

    p = sub.add_parser(
        "lottery", parents=[common], help="balanced lottery and expected payoffs"
    )
    p.add_argument("rep", help="free type representation")
    p.set_defaults(func=cmd_lottery)

    p = sub.add_parser(
        "verify", parents=[common], help="run every check on one game or a sweep"
    )
    p.add_argument("rep", nargs="?", help="free type representation")
    p.add_argument(
        "--all-n", type=int, dest="all_n", metavar="N",
        help="verify every game with 4..N players",
    )
    p.add_argument(
        "--max-n", type=int, dest="max_n", metavar="BOUND",
        help=f"enumeration bound (default {DEFAULT_MAX_N}, or ${ENV_MAX_N})",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "enumerate", parents=[common], help="list every game with n players"
    )
    p.add_argument("n", type=int, help="player count")
    p.add_argument(
        "--max-n", type=int, dest="max_n", metavar="BOUND",
        help=f"enumeration bound (default {DEFAULT_MAX_N}, or ${ENV_MAX_N})",
    )
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser(
        "simulate",
        parents=[common],
        help="seeded Monte-Carlo demo of the draw-and-split mechanism",
    )
    p.add_argument("rep", help="free type representation")
    p.add_argument("--draws", type=int, default=10000, help="number of draws")
    p.add_argument("--seed", type=int, default=0, help="random seed")
    p.set_defaults(func=cmd_simulate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParsimoniousGameError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
