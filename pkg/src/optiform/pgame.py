"""Games with parametrized preferences and graphical payoff games.

A PPGame stores, per player, one strict order over the player's strategies
for every joint strategy of the player's neighbours (a non-graphical game is
the special case where every other player is a neighbour).  A PayoffGame
stores payoff tables over neigh(i) + {i}; payoffs are either plain rationals
(carrier None) or elements of a linearly ordered semiring carrier, compared
by the carrier's preference order.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import semiring
from .errors import ValidationError, check_space


@dataclass(frozen=True)
class PPGame:
    players: tuple
    strategies: tuple  # per-player tuples
    neigh: tuple       # per-player tuples of indices, ascending, i excluded
    prefs: tuple       # per-player dict: neigh joint strategy -> order tuple

    def __post_init__(self):
        n = len(self.players)
        if not (n == len(self.strategies) == len(self.neigh) == len(self.prefs)):
            raise ValidationError("player-indexed fields differ in length")
        for i in range(n):
            if not self.strategies[i]:
                raise ValidationError("player %s has no strategies" % self.players[i])
            if i in self.neigh[i]:
                raise ValidationError("player %s is its own neighbour" % self.players[i])
            expected = set(itertools.product(*(self.strategies[j] for j in self.neigh[i])))
            if set(self.prefs[i]) != expected:
                raise ValidationError(
                    "preference rows of player %s do not cover the neighbour "
                    "joint strategies" % self.players[i]
                )
            for order in self.prefs[i].values():
                if tuple(sorted(order)) != tuple(sorted(self.strategies[i])):
                    raise ValidationError(
                        "%r is not a strict total order over the strategies of %s"
                        % (order, self.players[i])
                    )

    def space_size(self):
        n = 1
        for s in self.strategies:
            n *= len(s)
        return n

    def joint_strategies(self):
        check_space(self.space_size(), "joint strategy space")
        return itertools.product(*self.strategies)

    def project(self, i, s):
        return tuple(s[j] for j in self.neigh[i])


@dataclass(frozen=True)
class PayoffGame:
    players: tuple
    strategies: tuple
    neigh: tuple
    payoffs: tuple     # per-player dict: local joint strategy -> payoff
    carrier: object = None  # SemiringSpec or None for plain rationals

    def __post_init__(self):
        n = len(self.players)
        if not (n == len(self.strategies) == len(self.neigh) == len(self.payoffs)):
            raise ValidationError("player-indexed fields differ in length")
        if self.carrier is not None and not semiring.is_linear(self.carrier):
            raise ValidationError("payoff carrier must be linearly ordered")
        for i in range(n):
            if i in self.neigh[i]:
                raise ValidationError("player %s is its own neighbour" % self.players[i])
            scope = self.local_scope(i)
            expected = set(itertools.product(*(self.strategies[j] for j in scope)))
            if set(self.payoffs[i]) != expected:
                raise ValidationError(
                    "payoff table of player %s is not total over neigh+self"
                    % self.players[i]
                )

    def local_scope(self, i):
        return tuple(sorted(self.neigh[i] + (i,)))

    def space_size(self):
        n = 1
        for s in self.strategies:
            n *= len(s)
        return n

    def joint_strategies(self):
        check_space(self.space_size(), "joint strategy space")
        return itertools.product(*self.strategies)

    def payoff(self, i, s):
        """Canonical extension: project a full joint strategy onto the scope."""
        return self.payoffs[i][tuple(s[j] for j in self.local_scope(i))]

    def payoff_leq(self, a, b):
        if self.carrier is None:
            return a <= b
        return semiring.leq(self.carrier, a, b)

    def payoff_lt(self, a, b):
        if self.carrier is None:
            return a < b
        return semiring.strictly_less(self.carrier, a, b)


def full_neighbourhoods(n):
    return tuple(tuple(j for j in range(n) if j != i) for i in range(n))


def classical_ppgame(players, strategies, orders):
    """A non-graphical PPGame: `orders` maps (i, opponent joint strategy) rows."""
    n = len(players)
    return PPGame(tuple(players), tuple(strategies), full_neighbourhoods(n), tuple(orders))


def expand_full(game):
    """The same PPGame with every other player made an explicit neighbour."""
    n = len(game.players)
    neigh = full_neighbourhoods(n)
    prefs = []
    for i in range(n):
        rows = {}
        for opp in itertools.product(*(game.strategies[j] for j in neigh[i])):
            full = list(opp)
            full.insert(i, None)
            rows[opp] = game.prefs[i][tuple(full[j] for j in game.neigh[i])]
        prefs.append(rows)
    return PPGame(game.players, game.strategies, neigh, tuple(prefs))


def best_response(game, i, s_neigh):
    return game.prefs[i][tuple(s_neigh)][0]


def is_never_best_response(game, i, s_i):
    return all(order[0] != s_i for order in game.prefs[i].values())


def is_strictly_dominated(game, i, s_i):
    for other in game.strategies[i]:
        if other == s_i:
            continue
        if all(
            order.index(other) < order.index(s_i)
            for order in game.prefs[i].values()
        ):
            return True
    return False


def nash_equilibria_pp(game):
    """Joint strategies where each player's strategy tops the selected order."""
    out = []
    for s in game.joint_strategies():
        if all(
            s[i] == best_response(game, i, game.project(i, s))
            for i in range(len(game.players))
        ):
            out.append(s)
    return out


def subgame(game, keep):
    """Restrict each player's strategy set to `keep[i]` (declaration order),
    dropping preference rows that mention a removed neighbour strategy."""
    strategies = []
    for i, kept in enumerate(keep):
        kept = tuple(kept)
        if not kept:
            raise ValidationError(
                "elimination empties the strategy set of %s" % game.players[i]
            )
        strategies.append(kept)
    prefs = []
    for i in range(len(game.players)):
        rows = {}
        for opp in itertools.product(*(strategies[j] for j in game.neigh[i])):
            rows[opp] = tuple(v for v in game.prefs[i][opp] if v in strategies[i])
        prefs.append(rows)
    return PPGame(game.players, tuple(strategies), game.neigh, tuple(prefs))


def removable_strategies(game, mode):
    if mode not in ("nbr", "s"):
        raise ValidationError("mode must be 'nbr' or 's'")
    test = is_never_best_response if mode == "nbr" else is_strictly_dominated
    return [
        {v for v in game.strategies[i] if test(game, i, v)}
        for i in range(len(game.players))
    ]


def reduce_pp(game, mode):
    """One maximal elimination round; returns the game unchanged at a fixpoint."""
    removals = removable_strategies(game, mode)
    if not any(removals):
        return game
    keep = [
        tuple(v for v in game.strategies[i] if v not in removals[i])
        for i in range(len(game.players))
    ]
    return subgame(game, keep)


def reduce_pp_fixpoint(game, mode, trace=None):
    while True:
        removals = removable_strategies(game, mode)
        if not any(removals):
            return game
        if trace is not None:
            trace.append([sorted(r) for r in removals])
        keep = [
            tuple(v for v in game.strategies[i] if v not in removals[i])
            for i in range(len(game.players))
        ]
        game = subgame(game, keep)


def essential_neighbours(game, i):
    """Neighbours whose strategy actually changes some order of player i,
    the game analogue of non-redundant CP-net parents."""
    out = []
    for k, j in enumerate(game.neigh[i]):
        rest = game.neigh[i][:k] + game.neigh[i][k + 1:]
        for a in itertools.product(*(game.strategies[r] for r in rest)):
            orders = {
                game.prefs[i][a[:k] + (v,) + a[k:]]
                for v in game.strategies[j]
            }
            if len(orders) > 1:
                out.append(j)
                break
    return tuple(out)


def is_hierarchical(game):
    """Whether the minimal dependency digraph is acyclic.

    Returns (flag, levels) where levels maps player index to its level
    (dependencies only on strictly lower levels); levels is None when cyclic.
    Players with constant preferences depend on nobody and sit at level 0.
    """
    n = len(game.players)
    deps = [essential_neighbours(game, i) for i in range(n)]
    levels = {}
    remaining = set(range(n))
    level = 0
    while remaining:
        ready = {i for i in remaining if all(j in levels for j in deps[i])}
        if not ready:
            return False, None
        for i in ready:
            levels[i] = level
        remaining -= ready
        level += 1
    return True, levels


def nash_equilibria_payoff(game):
    """Weak-inequality Nash over unilateral deviations (canonical extension)."""
    out = []
    for s in game.joint_strategies():
        ok = True
        for i in range(len(game.players)):
            p = game.payoff(i, s)
            for v in game.strategies[i]:
                if v == s[i]:
                    continue
                if game.payoff_lt(p, game.payoff(i, s[:i] + (v,) + s[i + 1:])):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(s)
    return out


def payoff_vector(game, s):
    return tuple(game.payoff(i, s) for i in range(len(game.players)))


def pareto_less(game, a, b):
    """Componentwise strict Pareto order on payoff vectors."""
    return all(game.payoff_leq(x, y) for x, y in zip(a, b)) and any(
        game.payoff_lt(x, y) for x, y in zip(a, b)
    )


def pareto_efficient(game):
    scored = [(s, payoff_vector(game, s)) for s in game.joint_strategies()]
    vectors = [v for _, v in scored]
    return [s for s, v in scored if not any(pareto_less(game, v, w) for w in vectors)]


@dataclass(frozen=True)
class DirectedGraph:
    nodes: tuple
    edges: tuple  # pairs of node names

    def __post_init__(self):
        known = set(self.nodes)
        for u, v in self.edges:
            if u not in known or v not in known:
                raise ValidationError("edge (%s, %s) mentions unknown node" % (u, v))

    def predecessors(self, node):
        return tuple(u for u, v in self.edges if v == node)


def tech_game(graph, k):
    """The technology-adoption game on a directed graph: k technologies per
    player, each player prefers the technology more of its in-neighbours
    play, ties broken towards the lower technology index."""
    if k < 1:
        raise ValidationError("need at least one technology")
    techs = tuple("t%d" % (K + 1) for K in range(k))
    index = {t: K for K, t in enumerate(techs)}
    n = len(graph.nodes)
    pos = {name: i for i, name in enumerate(graph.nodes)}
    neigh = tuple(
        tuple(sorted(pos[u] for u in graph.predecessors(name)))
        for name in graph.nodes
    )
    prefs = []
    for i in range(n):
        rows = {}
        for s in itertools.product(*(techs for _ in neigh[i])):
            counts = {t: s.count(t) for t in techs}
            rows[s] = tuple(sorted(techs, key=lambda t: (-counts[t], index[t])))
        prefs.append(rows)
    return PPGame(graph.nodes, tuple(techs for _ in range(n)), neigh, tuple(prefs))


def _levels_ok(graph, levels):
    for node in graph.nodes:
        preds = graph.predecessors(node)
        lower = sum(1 for u in preds if levels[u] < levels[node])
        if lower < len(preds) - lower:
            return False
    return True


def is_well_structured(graph, levels=None):
    """Whether levels exist so that each node has at least as many in-edges
    from strictly lower levels as from the rest.

    With `levels` supplied, verifies them.  Otherwise levels are built
    greedily: a node is placeable once at least half of its in-edges come
    from already placed nodes; if a valid assignment exists at all, every
    placeable-by-it node is also greedily placeable, so the greedy fixpoint
    is a complete decision procedure.  Returns (flag, levels-or-None).
    """
    if levels is not None:
        if set(levels) != set(graph.nodes):
            raise ValidationError("level assignment must cover exactly the nodes")
        return (_levels_ok(graph, levels), dict(levels))
    placed = {}
    level = 0
    remaining = set(graph.nodes)
    while remaining:
        ready = set()
        for node in remaining:
            preds = graph.predecessors(node)
            done = sum(1 for u in preds if u in placed)
            if done >= len(preds) - done:
                ready.add(node)
        if not ready:
            return False, None
        for node in ready:
            placed[node] = level
        remaining -= ready
        level += 1
    return True, placed
