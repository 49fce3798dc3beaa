"""Command-line interface: sequences, outcomes, strategies, audits, play.

Exit codes: 0 success, 1 certified discrepancy (audit), 2 usage error,
3 bound exceeded.
"""

import argparse
import json
import sys

from .core import (
    CompoundMove,
    Ending,
    MoveRule,
    Play,
    VARIANTS,
    Variant,
    format_position,
    parse_position,
)
from .engine import GameState, configured_oracle_bound, engine_move, IllegalMove
from .errors import BoundExceeded, InvalidLength, KaylesError, Unsupported
from .octal import STAR, detect_period, guy_smith_check

EXIT_OK = 0
EXIT_DISCREPANCY = 1
EXIT_USAGE = 2
EXIT_BOUND = 3

SEQUENCE_KINDS = (
    "rho", "fplus", "fminus", "rplus", "rminus", "splus", "sminus",
    "sigma-sel-normal", "sigma-sel-misere", "sigma-ssc-normal", "sigma-ssc-misere",
)


def _sequence_values(kind: str, n: int):
    from . import conjunctive, disjunctive, foreclosed, selective, suspense

    if kind == "rho":
        return [int(v) for v in disjunctive.rho_sequence(n).raw]
    if kind == "fplus":
        seq = foreclosed.fplus_sequence(n)
        return [seq[i] for i in range(n + 1)]
    if kind == "fminus":
        seq = foreclosed.fminus_sequence(n)
        return [seq[i] for i in range(n + 1)]
    if kind in ("rplus", "rminus"):
        play = Play.NORMAL if kind == "rplus" else Play.MISERE
        return [conjunctive.remoteness(i, play) for i in range(n + 1)]
    if kind in ("splus", "sminus"):
        play = Play.NORMAL if kind == "splus" else Play.MISERE
        return [suspense.suspense(i, play) for i in range(n + 1)]
    sigma_kind = {
        "sigma-sel-normal": selective.SigmaKind.SEL_NORMAL,
        "sigma-sel-misere": selective.SigmaKind.SEL_MISERE,
        "sigma-ssc-normal": selective.SigmaKind.SHORT_SEL_NORMAL,
        "sigma-ssc-misere": selective.SigmaKind.SHORT_SEL_MISERE,
    }[kind]
    return [selective.sigma_path(i, sigma_kind) for i in range(n + 1)]


def _fmt_value(v) -> str:
    return "*" if v is STAR else str(v)


def cmd_sequence(args) -> int:
    values = _sequence_values(args.kind, args.n)
    if args.format == "json":
        print(json.dumps([_fmt_value(v) if v is STAR else v for v in values]))
    else:
        print("n,value")
        for i, v in enumerate(values):
            print(f"{i},{_fmt_value(v)}")
    return EXIT_OK


def _outcome_detail(variant: Variant, p) -> tuple[str, str]:
    """(outcome, human detail) for the variant's underlying value."""
    from . import conjunctive, disjunctive, foreclosed, selective, suspense
    from .oracle import Oracle

    rule, ending, play = variant.move_rule, variant.ending, variant.play
    if rule is MoveRule.DISJUNCTIVE and ending is Ending.LONG:
        if play is Play.MISERE:
            oracle = Oracle(bound=configured_oracle_bound())
            return oracle.outcome(p, variant), "oracle"
        return disjunctive.disj_normal_outcome(p), f"rho-xor {disjunctive.rho_xor(p)}"
    if rule is MoveRule.DISJUNCTIVE:
        outcome = foreclosed.ddc_outcome(p, play)
        if play is Play.NORMAL and p and p[-1] <= 3:
            return outcome, "short component, game can be ended now"
        if play is Play.NORMAL:
            return outcome, f"F+-xor {foreclosed._fplus_xor_defined(p)}"
        return outcome, f"F--xor {foreclosed._fminus_xor(p)}"
    if rule is MoveRule.CONJUNCTIVE and ending is Ending.SHORT:
        r = conjunctive.compound_remoteness(p, play)
        return conjunctive.conj_outcome(p, play), f"remoteness {r}"
    if rule is MoveRule.CONJUNCTIVE:
        s = suspense.compound_suspense(p, play)
        return suspense.ccc_outcome(p, play), f"suspense {s}"
    kind = selective._kind(play, ending)
    bits = "".join(str(selective.sigma_path(n, kind)) for n in p)
    return selective.sel_outcome(p, play, ending), f"sigma {bits or '-'}"


def cmd_outcome(args) -> int:
    variant = VARIANTS[args.variant]
    p = parse_position(args.position)
    outcome, detail = _outcome_detail(variant, p)
    print(f"{outcome} ({detail})")
    return EXIT_OK


def _format_move(move: CompoundMove) -> str:
    return " ".join(f"{idx}:{v}" for idx, v in move.choices)


def cmd_best_move(args) -> int:
    from .audit import solver_best_move, solver_outcome

    variant = VARIANTS[args.variant]
    p = parse_position(args.position)
    try:
        outcome = solver_outcome(p, variant)
    except Unsupported:
        from .oracle import Oracle

        oracle = Oracle(bound=configured_oracle_bound())
        outcome = oracle.outcome(p, variant)
        if outcome == "N":
            move = oracle.best_moves(p, variant)[0]
            print(_format_move(move))
            return EXIT_OK
    else:
        if outcome == "N":
            print(_format_move(solver_best_move(p, variant)))
            return EXIT_OK
    print("position is losing; no winning move", file=sys.stderr)
    return EXIT_OK


def cmd_losing_set(args) -> int:
    from .audit import losing_paths

    variant = VARIANTS[args.variant]
    members = sorted(losing_paths(variant, args.n))
    print(",".join(str(n) for n in members))
    return EXIT_OK


def cmd_period_check(args) -> int:
    from . import disjunctive, foreclosed

    seq = {
        "rho": lambda n: disjunctive.rho_sequence(n),
        "fplus": lambda n: foreclosed.fplus_sequence(n),
        "fminus": lambda n: foreclosed.fminus_sequence(n),
    }[args.kind](args.n)
    if args.detect:
        found = detect_period(seq, args.max_period)
        if found is None:
            print("no period detected")
        else:
            print(f"preperiod {found.preperiod} period {found.period}")
        return EXIT_OK
    ok = guy_smith_check(seq, args.period, args.preperiod)
    print("certified" if ok else "not periodic with those parameters")
    return EXIT_OK


def cmd_stats(args) -> int:
    from .foreclosed import StatsRow, fminus_stats

    print(StatsRow.CSV_HEADER)
    print(fminus_stats(args.n).to_csv_row())
    return EXIT_OK


def cmd_audit(args) -> int:
    from .audit import audit_variant
    from .oracle import Oracle

    variant = VARIANTS[args.variant]
    oracle = Oracle(bound=max(args.max_total, configured_oracle_bound(args.max_total)))
    report = audit_variant(variant, args.max_total, oracle)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(report.to_csv())
    print(report.summary())
    if not report.clean:
        return EXIT_DISCREPANCY
    return EXIT_OK


def _render(p) -> str:
    if not p:
        return "  (no vertices left)"
    lines = []
    for idx, n in enumerate(p):
        vertices = " ".join(f"{v}" for v in range(1, n + 1))
        lines.append(f"  component {idx} ({n}): {vertices}")
    return "\n".join(lines)


def _parse_human_move(text: str) -> CompoundMove:
    choices = []
    for tok in text.replace(",", " ").split():
        idx, _, v = tok.partition(":")
        choices.append((int(idx), int(v)))
    return CompoundMove(tuple(sorted(choices)))


def cmd_play(args) -> int:
    variant = VARIANTS[args.variant]
    state = GameState(variant, parse_position(args.position))
    engine_side = args.engine_side
    print(f"playing {variant.name} from {format_position(state.position)}")
    while state.status == "ongoing":
        print(_render(state.position))
        if state.to_move == engine_side:
            move = engine_move(state.position, variant)
            print(f"engine plays {_format_move(move)}")
            state.step(move)
            continue
        try:
            raw = input("your move (component:vertex ...): ")
        except EOFError:
            print("no input; abandoning game", file=sys.stderr)
            return EXIT_USAGE
        try:
            state.step(_parse_human_move(raw))
        except (ValueError, IllegalMove) as exc:
            print(f"illegal move: {exc}")
            continue
    winner = "engine" if state.winner == engine_side else "you"
    print(f"game over: {winner} win{'s' if winner == 'engine' else ''}")
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kayles",
        description="Node-Kayles on unions of paths under Conway's twelve compound conventions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sequence", help="emit a value sequence")
    p.add_argument("--kind", required=True, choices=SEQUENCE_KINDS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("outcome", help="outcome of a position under a variant")
    p.add_argument("--variant", required=True, choices=sorted(VARIANTS))
    p.add_argument("--position", required=True)
    p.set_defaults(func=cmd_outcome)

    p = sub.add_parser("best-move", help="a winning move, if any")
    p.add_argument("--variant", required=True, choices=sorted(VARIANTS))
    p.add_argument("--position", required=True)
    p.set_defaults(func=cmd_best_move)

    p = sub.add_parser("losing-set", help="losing single-path lengths up to n")
    p.add_argument("--variant", required=True, choices=sorted(VARIANTS))
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_losing_set)

    p = sub.add_parser("period-check", help="certify or detect periodicity")
    p.add_argument("--kind", required=True, choices=("rho", "fplus", "fminus"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--period", type=int)
    p.add_argument("--preperiod", type=int)
    p.add_argument("--detect", action="store_true")
    p.add_argument("--max-period", type=int, default=200)
    p.set_defaults(func=cmd_period_check)

    p = sub.add_parser("stats", help="misere foreclosed value statistics")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("audit", help="cross-check a fast solver against the oracle")
    p.add_argument("--variant", required=True, choices=sorted(VARIANTS))
    p.add_argument("--max-total", type=int, default=12)
    p.add_argument("--csv", help="write the discrepancy CSV here")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("play", help="play against the engine in the terminal")
    p.add_argument("--variant", required=True, choices=sorted(VARIANTS))
    p.add_argument("--position", required=True)
    p.add_argument("--engine-side", choices=("first", "second"), default="second")
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("serve", help="start the HTTP play service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    if args.command == "period-check" and not args.detect:
        if args.period is None or args.preperiod is None:
            print("period-check needs --period and --preperiod (or --detect)",
                  file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except BoundExceeded as exc:
        print(f"bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (InvalidLength, ValueError, KeyError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except KaylesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
