"""Brute-force reference implementations, seeded instance generators, and
the theorem check suites that pit them against the main modules.

The brute routines share only the data types with the main modules: every
result here is recomputed from the definitions (nested loops over outcomes,
deviations and pairwise comparisons), never by calling the main solvers.
"""

import itertools
import random
from dataclasses import dataclass, replace
from fractions import Fraction

from . import bridge, cpnet, pgame, semiring, softcsp
from .errors import ValidationError, check_space


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int = 0
    max_vars: int = 4
    max_domain: int = 3
    density: float = 0.5
    carrier: str = "weighted"
    acyclic: bool = False
    graphical: bool = False
    force_consistent: bool = False


@dataclass(frozen=True)
class Verdict:
    ok: bool
    skipped: bool = False
    detail: str = ""


# ---------------------------------------------------------------- brute force

def brute_optimal_outcomes(net):
    """Definition-literal: an outcome is optimal iff no single-variable
    change to a value placed earlier in its selected row exists."""
    out = []
    for o in net.outcomes():
        optimal = True
        for i in range(len(net.variables)):
            order = net.row_for(i, o)
            for v in net.domains[i]:
                if v != o[i] and order.index(v) < order.index(o[i]):
                    optimal = False
        if optimal:
            out.append(o)
    return out


def brute_nash(game):
    out = []
    if isinstance(game, pgame.PPGame):
        for s in game.joint_strategies():
            ok = True
            for i in range(len(game.players)):
                order = game.prefs[i][tuple(s[j] for j in game.neigh[i])]
                for v in game.strategies[i]:
                    if v != s[i] and order.index(v) < order.index(s[i]):
                        ok = False
            if ok:
                out.append(s)
        return out
    for s in game.joint_strategies():
        ok = True
        for i in range(len(game.players)):
            for v in game.strategies[i]:
                dev = s[:i] + (v,) + s[i + 1:]
                if game.payoff_lt(game.payoff(i, s), game.payoff(i, dev)):
                    ok = False
        if ok:
            out.append(s)
    return out


def brute_pareto(game):
    joint = list(game.joint_strategies())
    out = []
    for s in joint:
        dominated = False
        for t in joint:
            weakly_up = all(
                game.payoff_leq(game.payoff(i, s), game.payoff(i, t))
                for i in range(len(game.players))
            )
            strictly = any(
                game.payoff_lt(game.payoff(i, s), game.payoff(i, t))
                for i in range(len(game.players))
            )
            if weakly_up and strictly:
                dominated = True
        if not dominated:
            out.append(s)
    return out


# ----------------------------------------------------------------- generators

def _domains(rng, cfg, n):
    return tuple(
        tuple("v%d" % k for k in range(rng.randint(1, cfg.max_domain)))
        for _ in range(n)
    )


def random_cpnet(cfg):
    rng = random.Random(cfg.seed)
    n = rng.randint(1, cfg.max_vars)
    domains = _domains(rng, cfg, n)
    order = list(range(n))
    rng.shuffle(order)
    tables = []
    parent_pool = {}
    for rank, i in enumerate(order):
        if cfg.acyclic:
            pool = order[:rank]
        else:
            pool = [j for j in range(n) if j != i]
        parent_pool[i] = tuple(sorted(j for j in pool if rng.random() < cfg.density))
    for i in range(n):
        parents = parent_pool[i]
        rows = {}
        for pa in itertools.product(*(domains[p] for p in parents)):
            perm = list(domains[i])
            rng.shuffle(perm)
            rows[pa] = tuple(perm)
        tables.append(cpnet.CPTable(i, parents, rows))
    return cpnet.CPNet(
        tuple("X%d" % i for i in range(n)), domains, tuple(tables)
    )


def _carrier_spec(cfg):
    return {
        "boolean": semiring.BOOLEAN,
        "fuzzy": semiring.FUZZY,
        "weighted": semiring.WEIGHTED,
    }[cfg.carrier]


def _random_value(rng, spec):
    if spec.kind == "boolean":
        return semiring.value(spec, rng.random() < 0.5)
    if spec.kind == "fuzzy":
        return semiring.value(spec, Fraction(rng.randint(0, 10), 10))
    return semiring.value(spec, Fraction(rng.randint(0, 10)))


def random_scsp(cfg):
    rng = random.Random(cfg.seed)
    spec = _carrier_spec(cfg)
    n = rng.randint(1, cfg.max_vars)
    domains = _domains(rng, cfg, n)
    names = tuple("x%d" % i for i in range(n))
    witness = tuple(rng.choice(dom) for dom in domains)
    constraints = []
    for _ in range(rng.randint(1, n + 1)):
        size = rng.randint(1, min(2, n))
        scope = tuple(sorted(rng.sample(range(n), size)))
        table = {}
        for t in itertools.product(*(domains[j] for j in scope)):
            table[t] = _random_value(rng, spec)
        if cfg.force_consistent:
            table[tuple(witness[j] for j in scope)] = semiring.one(spec)
        constraints.append(softcsp.SoftConstraint(scope, table))
    return softcsp.SoftCSP(names, domains, tuple(constraints), spec)


def random_payoff_game(cfg):
    rng = random.Random(cfg.seed)
    n = rng.randint(1, cfg.max_vars)
    strategies = _domains(rng, cfg, n)
    neigh = tuple(
        tuple(sorted(j for j in range(n) if j != i and rng.random() < cfg.density))
        for i in range(n)
    )
    payoffs = []
    for i in range(n):
        scope = tuple(sorted(neigh[i] + (i,)))
        payoffs.append({
            s: Fraction(rng.randint(0, 10))
            for s in itertools.product(*(strategies[j] for j in scope))
        })
    return pgame.PayoffGame(
        tuple("p%d" % i for i in range(n)), strategies, neigh, tuple(payoffs)
    )


def random_ppgame(cfg):
    rng = random.Random(cfg.seed)
    n = rng.randint(1, cfg.max_vars)
    strategies = _domains(rng, cfg, n)
    if cfg.graphical:
        order = list(range(n))
        rng.shuffle(order)
        neigh_sets = {}
        for rank, i in enumerate(order):
            pool = order[:rank] if cfg.acyclic else [j for j in range(n) if j != i]
            neigh_sets[i] = tuple(
                sorted(j for j in pool if rng.random() < cfg.density)
            )
        neigh = tuple(neigh_sets[i] for i in range(n))
    else:
        neigh = pgame.full_neighbourhoods(n)
    prefs = []
    for i in range(n):
        rows = {}
        for s in itertools.product(*(strategies[j] for j in neigh[i])):
            perm = list(strategies[i])
            rng.shuffle(perm)
            rows[s] = tuple(perm)
        prefs.append(rows)
    return pgame.PPGame(
        tuple("p%d" % i for i in range(n)), strategies, neigh, tuple(prefs)
    )


def random_dag(cfg, max_nodes=10):
    rng = random.Random(cfg.seed)
    n = rng.randint(1, max_nodes)
    nodes = tuple("n%d" % i for i in range(n))
    edges = []
    for j in range(1, n):
        # cap in-degree so technology preference tables stay desk-scale
        preds = rng.sample(range(j), min(j, rng.randint(0, 4)))
        edges.extend((nodes[i], nodes[j]) for i in sorted(preds))
    return pgame.DirectedGraph(nodes, tuple(edges))


# ------------------------------------------------------------ theorem checks

def _verdict(ok, detail=""):
    return Verdict(bool(ok), detail="" if ok else detail)


def _check_net_game_equivalence(net):
    left = set(brute_optimal_outcomes(net))
    right = set(brute_nash(bridge.game_of_cpnet(net)))
    return _verdict(left == right, "optimal %r vs nash %r" % (sorted(left), sorted(right)))


def _check_game_net_equivalence(game):
    net = bridge.cpnet_of_game(game)
    left = set(brute_nash(game))
    right = set(brute_optimal_outcomes(net))
    if left != right:
        return _verdict(False, "nash %r vs optimal %r" % (sorted(left), sorted(right)))
    back = bridge.game_of_cpnet(net)
    same = pgame.expand_full(back) == pgame.expand_full(game)
    return _verdict(same, "round-tripping the game through a net changed it")


def _check_parent_reduction(net):
    reduced = cpnet.reduce(net)
    if cpnet.flip_edges(net) != cpnet.flip_edges(reduced):
        return _verdict(False, "flip graphs of N and r(N) differ")
    g1 = pgame.expand_full(bridge.game_of_cpnet(net))
    g2 = pgame.expand_full(bridge.game_of_cpnet(reduced))
    if g1 != g2:
        return _verdict(False, "reduction changed the derived game")
    again = cpnet.reduce(bridge.cpnet_of_game(bridge.game_of_cpnet(reduced)))
    return _verdict(again == reduced, "round-tripping the net through a game changed its reduction")


def _check_elimination_round_game(game):
    for mode in ("nbr", "s"):
        g, before = game, set(brute_nash(game))
        while True:
            nxt = pgame.reduce_pp(g, mode)
            if nxt == g:
                break
            after = set(brute_nash(nxt))
            if before != after:
                return _verdict(False, "mode %s round changed the Nash set" % mode)
            g = nxt
    return _verdict(True)


def _check_elimination_round_net(net):
    for mode in ("nbr", "s"):
        n, before = net, set(brute_optimal_outcomes(net))
        while True:
            picker = cpnet.nbr_elements if mode == "nbr" else cpnet.dominated_elements
            removals = picker(n)
            if not any(removals):
                break
            nxt = cpnet.eliminate(n, removals)
            after = set(brute_optimal_outcomes(nxt))
            if before != after:
                return _verdict(False, "mode %s round changed the optimal set" % mode)
            n = nxt
    return _verdict(True)


def _check_elimination_fixpoint_game(game):
    final = pgame.reduce_pp_fixpoint(game, "nbr")
    if set(brute_nash(game)) != set(brute_nash(final)):
        return _verdict(False, "fixpoint changed the Nash set")
    if all(len(s) == 1 for s in final.strategies):
        only = tuple(s[0] for s in final.strategies)
        return _verdict(brute_nash(game) == [only], "singleton joint strategy is not the unique Nash")
    return _verdict(True)


def _check_elimination_fixpoint_net(net):
    final = cpnet.reduce_to_fixpoint(net, "nbr")
    if set(brute_optimal_outcomes(net)) != set(brute_optimal_outcomes(final)):
        return _verdict(False, "fixpoint changed the optimal set")
    if all(len(d) == 1 for d in final.domains):
        only = tuple(d[0] for d in final.domains)
        return _verdict(
            brute_optimal_outcomes(net) == [only],
            "singleton outcome is not the unique optimum",
        )
    return _verdict(True)


def _check_acyclic_sweep(net):
    final = cpnet.reduce_to_fixpoint(net, "nbr")
    if not all(len(d) == 1 for d in final.domains):
        return _verdict(False, "acyclic net did not reduce to singletons")
    only = tuple(d[0] for d in final.domains)
    if only != cpnet.sweep_optimal(net):
        return _verdict(False, "reduction disagrees with the sweep")
    return _verdict(brute_optimal_outcomes(net) == [only], "not the unique optimum")


def _check_hierarchical_unique(game):
    flag, _ = pgame.is_hierarchical(game)
    if not flag:
        return Verdict(True, skipped=True, detail="instance not hierarchical")
    final = pgame.reduce_pp_fixpoint(game, "nbr")
    if not all(len(s) == 1 for s in final.strategies):
        return _verdict(False, "hierarchical game did not reduce to singletons")
    only = tuple(s[0] for s in final.strategies)
    return _verdict(brute_nash(game) == [only], "not the unique Nash equilibrium")


def _check_strict_monotone(problem):
    if not semiring.is_strictly_monotonic(problem.semiring):
        return Verdict(True, skipped=True, detail="combination not strictly monotonic")
    game = bridge.local_map(problem)
    optimal = {s for s, _ in softcsp.optimal_solutions(problem)}
    nash = set(brute_nash(game))
    pareto = set(brute_pareto(game))
    broken = []
    if not optimal <= nash:
        broken.append("Nash")
    if not optimal <= pareto:
        broken.append("Pareto")
    return _verdict(
        not broken,
        "optimal solutions escape the %s set of the local game: %r"
        % ("+".join(broken), sorted(optimal - (nash & pareto))),
    )


def _check_consistent_csp(problem):
    if problem.semiring.kind != "boolean":
        return Verdict(True, skipped=True, detail="not a boolean problem")
    if not softcsp.is_consistent(problem):
        return Verdict(True, skipped=True, detail="inconsistent instance")
    game = bridge.local_map(problem)
    top = semiring.one(problem.semiring).payload
    solutions = {
        s for s in problem.assignments()
        if softcsp.solution_preference(problem, s).payload == top
    }
    both = set(brute_nash(game)) & set(brute_pareto(game))
    return _verdict(solutions == both, "solutions differ from Nash-and-Pareto of the local game")


def _check_global_map(problem):
    game = bridge.global_map(problem)
    optimal = {s for s, _ in softcsp.optimal_solutions(problem)}
    both = set(brute_nash(game)) & set(brute_pareto(game))
    return _verdict(optimal == both, "optimal differs from Nash-and-Pareto of the global game")


def _check_pareto_frontier(game):
    scsp = bridge.scsp_of_game(game)
    optimal = {s for s, _ in softcsp.optimal_solutions(scsp)}
    pareto = set(brute_pareto(game))
    return _verdict(optimal == pareto, "optimal of the cost-tuple problem differs from the Pareto set")


def _check_regrets(game):
    problem = bridge.regret_constraints(game)
    top = semiring.one(semiring.BOOLEAN).payload
    solutions = {
        s for s in problem.assignments()
        if softcsp.solution_preference(problem, s).payload == top
    }
    return _verdict(solutions == set(brute_nash(game)), "no-regret solutions differ from Nash")


def _check_pareto_nash(game):
    got = {s for s, _ in bridge.pareto_nash(game)}
    nash = brute_nash(game)
    vectors = {s: pgame.payoff_vector(game, s) for s in nash}
    expected = {
        s for s in nash
        if not any(pgame.pareto_less(game, vectors[s], vectors[t]) for t in nash)
    }
    return _verdict(got == expected, "got %r expected %r" % (sorted(got), sorted(expected)))


def _check_tech_adoption(graph):
    game = pgame.tech_game(graph, 2)
    final = pgame.reduce_pp_fixpoint(game, "nbr")
    ok = all(s == ("t1",) for s in final.strategies)
    return _verdict(ok, "technology game did not settle on t1 everywhere")


THEOREMS = {
    "net_game_equivalence": (lambda cfg: random_cpnet(cfg), _check_net_game_equivalence),
    "game_net_equivalence": (lambda cfg: random_ppgame(cfg), _check_game_net_equivalence),
    "parent_reduction": (lambda cfg: random_cpnet(cfg), _check_parent_reduction),
    "elimination_round_game": (lambda cfg: random_ppgame(replace(cfg, graphical=True)), _check_elimination_round_game),
    "elimination_round_net": (lambda cfg: random_cpnet(cfg), _check_elimination_round_net),
    "elimination_fixpoint_game": (lambda cfg: random_ppgame(replace(cfg, graphical=True)), _check_elimination_fixpoint_game),
    "elimination_fixpoint_net": (lambda cfg: random_cpnet(cfg), _check_elimination_fixpoint_net),
    "acyclic_sweep": (lambda cfg: random_cpnet(replace(cfg, acyclic=True)), _check_acyclic_sweep),
    "hierarchical_unique": (
        lambda cfg: random_ppgame(replace(cfg, graphical=True, acyclic=True)),
        _check_hierarchical_unique,
    ),
    "strict_monotone_inclusion": (lambda cfg: random_scsp(cfg), _check_strict_monotone),
    "consistent_csp": (
        lambda cfg: random_scsp(replace(cfg, carrier="boolean", force_consistent=True)),
        _check_consistent_csp,
    ),
    "global_map": (lambda cfg: random_scsp(cfg), _check_global_map),
    "pareto_frontier": (lambda cfg: random_payoff_game(cfg), _check_pareto_frontier),
    "regrets": (lambda cfg: random_payoff_game(cfg), _check_regrets),
    "pareto_nash": (lambda cfg: random_payoff_game(cfg), _check_pareto_nash),
    "tech_adoption": (lambda cfg: random_dag(cfg), _check_tech_adoption),
}


def check_theorem(theorem_id, instance):
    if theorem_id not in THEOREMS:
        raise ValidationError("unknown theorem id %r" % (theorem_id,))
    return THEOREMS[theorem_id][1](instance)


def generate_instance(theorem_id, cfg):
    if theorem_id not in THEOREMS:
        raise ValidationError("unknown theorem id %r" % (theorem_id,))
    return THEOREMS[theorem_id][0](cfg)


def run_suite(theorem_id, seeds, cfg=None):
    """Run one theorem over many seeds; returns {seed: Verdict}."""
    base = cfg or GeneratorConfig()
    results = {}
    for seed in seeds:
        instance = generate_instance(theorem_id, replace(base, seed=seed))
        results[seed] = check_theorem(theorem_id, instance)
    return results
