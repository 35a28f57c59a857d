"""Command-line interface: one subcommand per solver or translation.

Reports are JSON with sorted keys, so identical inputs give byte-identical
output.  Exit codes: 0 success, 2 validation failure, 3 budget or
enumeration bound exhausted.
"""

import argparse
import json
import sys

from . import bridge, cpnet, oracle, pgame, semiring, serialize, softcsp
from .errors import EnumerationLimitError, OptiformError, ValidationError

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_EXHAUSTED = 3


def _emit(report):
    json.dump(report, sys.stdout, sort_keys=True, indent=2)
    sys.stdout.write("\n")


def _load(path, *kinds):
    kind, obj = serialize.load_path(path)
    if kinds and kind not in kinds:
        raise ValidationError(
            "%s holds a %s document, expected %s" % (path, kind, " or ".join(kinds))
        )
    return kind, obj


def _pref_json(v):
    return serialize._value_to_json(v)


def _payoff_json(game, v):
    return serialize._payoff_to_json(game, v)


# ------------------------------------------------------------------ handlers

def cmd_scsp_solve(args):
    _, problem = _load(args.file, "scsp")
    _emit({
        "command": "scsp-solve",
        "optimal": [
            {"assignment": list(s), "preference": _pref_json(p)}
            for s, p in softcsp.optimal_solutions(problem)
        ],
    })
    return EXIT_OK


def cmd_scsp_join(args):
    _, p1 = _load(args.file, "scsp")
    _, p2 = _load(args.other, "scsp")
    sys.stdout.write(serialize.dumps(softcsp.join(p1, p2)))
    return EXIT_OK


def cmd_cpnet_optimal(args):
    _, net = _load(args.file, "cpnet")
    _emit({
        "command": "cpnet-optimal",
        "eligible": bool(cpnet.optimal_outcomes(net)),
        "optimal": [list(o) for o in cpnet.optimal_outcomes(net)],
    })
    return EXIT_OK


def cmd_cpnet_sweep(args):
    _, net = _load(args.file, "cpnet")
    _emit({"command": "cpnet-sweep", "outcome": list(cpnet.sweep_optimal(net))})
    return EXIT_OK


def cmd_cpnet_eligible(args):
    _, net = _load(args.file, "cpnet")
    _emit({"command": "cpnet-eligible", "eligible": cpnet.is_eligible(net)})
    return EXIT_OK


def cmd_cpnet_opt_constraints(args):
    _, net = _load(args.file, "cpnet")
    sys.stdout.write(serialize.dumps(cpnet.optimality_constraints(net)))
    return EXIT_OK


def cmd_cpnet_reduce(args):
    _, net = _load(args.file, "cpnet")
    sys.stdout.write(serialize.dumps(cpnet.reduce(net)))
    return EXIT_OK


def cmd_cpnet_eliminate(args):
    _, net = _load(args.file, "cpnet")
    trace = []
    final = cpnet.reduce_to_fixpoint(net, args.mode, trace)
    _emit({
        "command": "cpnet-eliminate",
        "mode": args.mode,
        "rounds": [
            {net.variables[i]: r for i, r in enumerate(round_) if r}
            for round_ in trace
        ],
        "domains": {v: list(d) for v, d in zip(final.variables, final.domains)},
        "solved": all(len(d) == 1 for d in final.domains),
        "outcome": [d[0] for d in final.domains]
        if all(len(d) == 1 for d in final.domains) else None,
    })
    return EXIT_OK


def cmd_cpnet_dominates(args):
    _, net = _load(args.file, "cpnet")
    alpha = tuple(args.better.split(","))
    beta = tuple(args.worse.split(","))
    result = cpnet.dominates(net, alpha, beta, args.budget)
    _emit({
        "command": "cpnet-dominates",
        "better": list(alpha),
        "worse": list(beta),
        "result": result if isinstance(result, str) else bool(result),
    })
    return EXIT_EXHAUSTED if result == cpnet.BUDGET_EXHAUSTED else EXIT_OK


def _nash_report_pp(game):
    out = []
    for s in pgame.nash_equilibria_pp(game):
        out.append({
            "joint_strategy": list(s),
            "best_responses": {
                game.players[i]: pgame.best_response(game, i, game.project(i, s))
                for i in range(len(game.players))
            },
        })
    return out


def _nash_report_payoff(game):
    out = []
    for s in pgame.nash_equilibria_payoff(game):
        out.append({
            "joint_strategy": list(s),
            "payoffs": {
                game.players[i]: _payoff_json(game, game.payoff(i, s))
                for i in range(len(game.players))
            },
        })
    return out


def cmd_game_nash(args):
    kind, game = _load(args.file, "ppgame", "payoffgame")
    if kind == "ppgame":
        report = _nash_report_pp(game)
    else:
        report = _nash_report_payoff(game)
    _emit({"command": "game-nash", "game_kind": kind, "nash": report})
    return EXIT_OK


def cmd_game_pareto(args):
    _, game = _load(args.file, "payoffgame")
    _emit({
        "command": "game-pareto",
        "pareto": [
            {
                "joint_strategy": list(s),
                "payoffs": {
                    game.players[i]: _payoff_json(game, game.payoff(i, s))
                    for i in range(len(game.players))
                },
            }
            for s in pgame.pareto_efficient(game)
        ],
    })
    return EXIT_OK


def cmd_game_eliminate(args):
    _, game = _load(args.file, "ppgame")
    trace = []
    final = pgame.reduce_pp_fixpoint(game, args.mode, trace)
    _emit({
        "command": "game-eliminate",
        "mode": args.mode,
        "rounds": [
            {game.players[i]: r for i, r in enumerate(round_) if r}
            for round_ in trace
        ],
        "strategies": {p: list(s) for p, s in zip(final.players, final.strategies)},
        "solved": all(len(s) == 1 for s in final.strategies),
    })
    return EXIT_OK


def cmd_game_hierarchical(args):
    _, game = _load(args.file, "ppgame")
    flag, levels = pgame.is_hierarchical(game)
    _emit({
        "command": "game-hierarchical",
        "hierarchical": flag,
        "levels": None if levels is None
        else {game.players[i]: lv for i, lv in levels.items()},
    })
    return EXIT_OK


def cmd_to_game(args):
    _, net = _load(args.file, "cpnet")
    sys.stdout.write(serialize.dumps(bridge.game_of_cpnet(net)))
    return EXIT_OK


def cmd_to_cpnet(args):
    _, game = _load(args.file, "ppgame")
    sys.stdout.write(serialize.dumps(bridge.cpnet_of_game(game)))
    return EXIT_OK


def cmd_map_local(args):
    _, problem = _load(args.file, "scsp")
    sys.stdout.write(serialize.dumps(bridge.local_map(problem)))
    return EXIT_OK


def cmd_map_global(args):
    _, problem = _load(args.file, "scsp")
    sys.stdout.write(serialize.dumps(bridge.global_map(problem)))
    return EXIT_OK


def cmd_map_to_scsp(args):
    _, game = _load(args.file, "payoffgame")
    sys.stdout.write(serialize.dumps(bridge.scsp_of_game(game, args.offset)))
    return EXIT_OK


def cmd_regret_constraints(args):
    _, game = _load(args.file, "payoffgame")
    sys.stdout.write(serialize.dumps(bridge.regret_constraints(game)))
    return EXIT_OK


def cmd_pareto_nash(args):
    _, game = _load(args.file, "payoffgame")
    _emit({
        "command": "pareto-nash",
        "equilibria": [
            {"joint_strategy": list(s), "preference": _pref_json(p)}
            for s, p in bridge.pareto_nash(game, args.offset)
        ],
    })
    return EXIT_OK


def cmd_tech_game(args):
    _, (graph, _) = _load(args.file, "graph")
    sys.stdout.write(serialize.dumps(pgame.tech_game(graph, args.k)))
    return EXIT_OK


def cmd_well_structured(args):
    _, (graph, levels) = _load(args.file, "graph")
    flag, witness = pgame.is_well_structured(graph, levels)
    _emit({
        "command": "well-structured",
        "well_structured": flag,
        "levels": witness,
    })
    return EXIT_OK


def _parse_seed_range(text):
    if ".." in text:
        lo, hi = text.split("..", 1)
        return range(int(lo), int(hi) + 1)
    return [int(text)]


def cmd_check(args):
    seeds = _parse_seed_range(args.seeds)
    results = oracle.run_suite(args.theorem, seeds)
    failures = {
        seed: v.detail for seed, v in results.items() if not v.ok
    }
    _emit({
        "command": "check",
        "theorem": args.theorem,
        "passed": sum(1 for v in results.values() if v.ok and not v.skipped),
        "skipped": sum(1 for v in results.values() if v.skipped),
        "failed": failures,
    })
    return EXIT_OK if not failures else 1


# --------------------------------------------------------------------- wiring

def build_parser():
    parser = argparse.ArgumentParser(
        prog="optiform",
        description="CP-nets, parametrized-preference games and soft "
        "constraints, with the translations between them.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, handler, *, other=False, mode=False, budget=False,
            offset=False, k=False, outcomes=False, check=False):
        p = sub.add_parser(name)
        if not check:
            p.add_argument("file", help="instance document")
        if other:
            p.add_argument("other", help="second instance document")
        if mode:
            p.add_argument("--mode", choices=("nbr", "s"), default="nbr")
        if budget:
            p.add_argument("--budget", type=int,
                           default=cpnet.DEFAULT_DOMINANCE_BUDGET)
        if offset:
            p.add_argument("--offset", type=str, default=None)
        if k:
            p.add_argument("--k", type=int, required=True)
        if outcomes:
            p.add_argument("--better", required=True,
                           help="comma-separated outcome, e.g. a,b,c,d")
            p.add_argument("--worse", required=True)
        if check:
            p.add_argument("--theorem", required=True,
                           choices=sorted(oracle.THEOREMS))
            p.add_argument("--seeds", default="1..100",
                           help="single seed or inclusive range A..B")
        p.set_defaults(handler=handler)
        return p

    add("scsp-solve", cmd_scsp_solve)
    add("scsp-join", cmd_scsp_join, other=True)
    add("cpnet-optimal", cmd_cpnet_optimal)
    add("cpnet-sweep", cmd_cpnet_sweep)
    add("cpnet-eligible", cmd_cpnet_eligible)
    add("cpnet-opt-constraints", cmd_cpnet_opt_constraints)
    add("cpnet-reduce", cmd_cpnet_reduce)
    add("cpnet-eliminate", cmd_cpnet_eliminate, mode=True)
    add("cpnet-dominates", cmd_cpnet_dominates, budget=True, outcomes=True)
    add("game-nash", cmd_game_nash)
    add("game-pareto", cmd_game_pareto)
    add("game-eliminate", cmd_game_eliminate, mode=True)
    add("game-hierarchical", cmd_game_hierarchical)
    add("to-game", cmd_to_game)
    add("to-cpnet", cmd_to_cpnet)
    add("map-local", cmd_map_local)
    add("map-global", cmd_map_global)
    add("map-to-scsp", cmd_map_to_scsp, offset=True)
    add("regret-constraints", cmd_regret_constraints)
    add("pareto-nash", cmd_pareto_nash, offset=True)
    add("tech-game", cmd_tech_game, k=True)
    add("well-structured", cmd_well_structured)
    add("check", cmd_check, check=True)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except EnumerationLimitError as exc:
        print("bound exhausted: %s" % exc, file=sys.stderr)
        return EXIT_EXHAUSTED
    except OptiformError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INVALID
    except FileNotFoundError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
