"""Cross-formalism translations.

CP-net <-> parametrized-preference game, SCSP -> payoff game (local and
global forms), payoff game -> SCSP (per-player cost tuples and no-regret
hard constraints), and the Pareto-efficient-Nash pipeline built from the
last two.
"""

import itertools
from fractions import Fraction

from . import cpnet, pgame, semiring, softcsp
from .errors import ValidationError


def game_of_cpnet(net):
    """Variables become players, CPT rows become parametrized preferences;
    the neighbour function is the parent relation."""
    prefs = tuple(dict(t.rows) for t in net.tables)
    neigh = tuple(t.parents for t in net.tables)
    return pgame.PPGame(net.variables, net.domains, neigh, prefs)


def cpnet_of_game(game):
    """Players become variables with full parent sets; graphical preferences
    are expanded by ignoring the non-neighbour coordinates."""
    n = len(game.players)
    tables = []
    for i in range(n):
        parents = tuple(j for j in range(n) if j != i)
        rows = {}
        for opp in itertools.product(*(game.strategies[j] for j in parents)):
            full = list(opp)
            full.insert(i, None)
            rows[opp] = game.prefs[i][tuple(full[j] for j in game.neigh[i])]
        tables.append(cpnet.CPTable(i, parents, rows))
    return cpnet.CPNet(game.players, game.strategies, tuple(tables))


def _shared_constraint_neighbourhoods(problem):
    n = len(problem.variables)
    neigh = [set() for _ in range(n)]
    for c in problem.constraints:
        for i in c.scope:
            neigh[i].update(j for j in c.scope if j != i)
    return tuple(tuple(sorted(s)) for s in neigh)


def local_map(problem):
    """Each variable becomes a player paid by its incident constraints."""
    if not semiring.is_linear(problem.semiring):
        raise ValidationError("local map needs a linearly ordered carrier")
    neigh = _shared_constraint_neighbourhoods(problem)
    n = len(problem.variables)
    payoffs = []
    for i in range(n):
        incident = [c for c in problem.constraints if i in c.scope]
        scope = tuple(sorted(neigh[i] + (i,)))
        table = {}
        for s in itertools.product(*(problem.domains[j] for j in scope)):
            pos = {j: k for k, j in enumerate(scope)}
            vals = [
                c.table[tuple(s[pos[j]] for j in c.scope)] for c in incident
            ]
            table[s] = semiring.combine_all(problem.semiring, vals)
        payoffs.append(table)
    return pgame.PayoffGame(
        problem.variables, problem.domains, neigh, tuple(payoffs), problem.semiring
    )


def global_map(problem):
    """Every player is paid the full solution preference."""
    if not semiring.is_linear(problem.semiring):
        raise ValidationError("global map needs a linearly ordered carrier")
    n = len(problem.variables)
    neigh = pgame.full_neighbourhoods(n)
    shared = {
        s: softcsp.solution_preference(problem, s)
        for s in itertools.product(*problem.domains)
    }
    payoffs = tuple(dict(shared) for _ in range(n))
    return pgame.PayoffGame(
        problem.variables, problem.domains, neigh, payoffs, problem.semiring
    )


def _rational_payoffs(game):
    if game.carrier is not None:
        raise ValidationError("this mapping needs plain rational payoffs")


def scsp_of_game(game, offset=None):
    """One soft constraint per player over an n-fold weighted product;
    the player's coordinate carries the cost offset - payoff, the rest 0."""
    _rational_payoffs(game)
    n = len(game.players)
    top = max(max(t.values()) for t in game.payoffs)
    m = Fraction(offset) if offset is not None else Fraction(top)
    if m < top:
        raise ValidationError(
            "offset %s is below the maximum payoff %s" % (m, top)
        )
    spec = semiring.product(*(semiring.WEIGHTED for _ in range(n)))
    constraints = []
    for i in range(n):
        scope = game.local_scope(i)
        table = {}
        for s, p in game.payoffs[i].items():
            payload = [Fraction(0)] * n
            payload[i] = m - p
            table[s] = semiring.value(spec, tuple(payload))
        constraints.append(softcsp.SoftConstraint(scope, table))
    return softcsp.SoftCSP(
        game.players, game.strategies, tuple(constraints), spec
    )


def regret_constraints(game):
    """Per player, a hard constraint allowing exactly the local tuples in
    which the player's strategy weakly maximizes its payoff."""
    constraints = []
    for i in range(len(game.players)):
        scope = game.local_scope(i)
        own = scope.index(i)
        table = {}
        for s, p in game.payoffs[i].items():
            ok = all(
                not game.payoff_lt(p, game.payoffs[i][s[:own] + (v,) + s[own + 1:]])
                for v in game.strategies[i]
            )
            table[s] = semiring.value(semiring.BOOLEAN, ok)
        constraints.append(softcsp.SoftConstraint(scope, table))
    return softcsp.SoftCSP(
        game.players, game.strategies, tuple(constraints), semiring.BOOLEAN
    )


def pareto_nash(game, offset=None):
    """Optimal solutions of the cost-tuple problem joined with the no-regret
    constraints, kept only when the preference is above
    the all-infinity bottom: the Pareto-efficient Nash equilibria."""
    merged = softcsp.join(scsp_of_game(game, offset), regret_constraints(game))
    bottom = semiring.zero(merged.semiring)
    return [
        (s, p)
        for s, p in softcsp.optimal_solutions(merged)
        if p.payload != bottom.payload
    ]
