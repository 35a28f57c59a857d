"""CP-nets: flips, optimality, optimality constraints, eligibility, sweep,
redundancy reduction, elimination of never-best-response / dominated values,
and bounded dominance search.
"""

import itertools
from collections import deque
from dataclasses import dataclass

from . import semiring, softcsp
from .errors import ValidationError, check_space

#: Result of a dominance query whose step budget tripped.
BUDGET_EXHAUSTED = "budget-exhausted"

DEFAULT_DOMINANCE_BUDGET = 10 ** 5


def check_strict_order(order, domain):
    if tuple(sorted(order)) != tuple(sorted(domain)) or len(set(order)) != len(order):
        raise ValidationError(
            "%r is not a strict total order of domain %r" % (order, domain)
        )


@dataclass(frozen=True)
class CPTable:
    owner: int
    parents: tuple  # variable indices, ordered
    rows: dict      # parent assignment tuple -> order tuple (best first)


@dataclass(frozen=True)
class CPNet:
    variables: tuple
    domains: tuple
    tables: tuple  # one CPTable per variable, positionally aligned

    def __post_init__(self):
        if not (len(self.variables) == len(self.domains) == len(self.tables)):
            raise ValidationError("variables, domains and tables differ in length")
        for i, (dom, t) in enumerate(zip(self.domains, self.tables)):
            if not dom:
                raise ValidationError("empty domain for %s" % self.variables[i])
            if t.owner != i:
                raise ValidationError("table %d owned by variable %d" % (i, t.owner))
            if i in t.parents:
                raise ValidationError("%s is its own parent" % self.variables[i])
            expected = set(itertools.product(*(self.domains[p] for p in t.parents)))
            if set(t.rows) != expected:
                missing = expected - set(t.rows)
                if missing:
                    raise ValidationError(
                        "table of %s misses the row for parent assignment %r"
                        % (self.variables[i], sorted(missing)[0])
                    )
                raise ValidationError("table of %s has spurious rows" % self.variables[i])
            for order in t.rows.values():
                check_strict_order(order, dom)

    def space_size(self):
        n = 1
        for dom in self.domains:
            n *= len(dom)
        return n

    def outcomes(self):
        check_space(self.space_size(), "outcome space")
        return itertools.product(*self.domains)

    def check_outcome(self, o):
        if len(o) != len(self.variables):
            raise ValidationError("outcome has wrong length")
        for name, dom, v in zip(self.variables, self.domains, o):
            if v not in dom:
                raise ValidationError("value %r not in the domain of %s" % (v, name))

    def row_for(self, i, outcome):
        """The unique order for variable i selected by the outcome's parents."""
        t = self.tables[i]
        return t.rows[tuple(outcome[p] for p in t.parents)]


def dependency_graph(net):
    """Edges parent -> child, as a list of index pairs."""
    return [(p, t.owner) for t in net.tables for p in t.parents]


def is_acyclic(net):
    return topological_order(net) is not None


def topological_order(net):
    n = len(net.variables)
    children = {i: [] for i in range(n)}
    indeg = {i: 0 for i in range(n)}
    for p, c in dependency_graph(net):
        children[p].append(c)
        indeg[c] += 1
    ready = deque(i for i in range(n) if indeg[i] == 0)
    order = []
    while ready:
        i = ready.popleft()
        order.append(i)
        for c in children[i]:
            indeg[c] -= 1
            if indeg[c] == 0:
                ready.append(c)
    return order if len(order) == n else None


def improving_flips(net, outcome):
    """All single-variable changes to a strictly better value in the row
    selected by the outcome's parent assignment."""
    net.check_outcome(outcome)
    flips = []
    for i in range(len(net.variables)):
        order = net.row_for(i, outcome)
        pos = order.index(outcome[i])
        for better in order[:pos]:
            flips.append((i, better))
    return flips


def worsening_flips(net, outcome):
    net.check_outcome(outcome)
    flips = []
    for i in range(len(net.variables)):
        order = net.row_for(i, outcome)
        pos = order.index(outcome[i])
        for worse in order[pos + 1:]:
            flips.append((i, worse))
    return flips


def flip_edges(net):
    """The improving-flip relation over all outcomes, as a set of pairs."""
    edges = set()
    for o in net.outcomes():
        for i, v in improving_flips(net, o):
            edges.add((o, o[:i] + (v,) + o[i + 1:]))
    return edges


def is_optimal(net, outcome):
    return not improving_flips(net, outcome)


def optimal_outcomes(net):
    return [o for o in net.outcomes() if is_optimal(net, o)]


def optimality_constraints(net):
    """The boolean problem whose solutions are exactly the optimal outcomes.

    For each variable and each distinct order among its rows: the parent
    assignments selecting that order imply the variable equals its top.
    """
    constraints = []
    for i, t in enumerate(net.tables):
        by_order = {}
        for pa, order in t.rows.items():
            by_order.setdefault(order, set()).add(pa)
        scope = t.parents + (i,)
        for order, pas in sorted(by_order.items()):
            top = order[0]
            table = {}
            for pa in itertools.product(*(net.domains[p] for p in t.parents)):
                for v in net.domains[i]:
                    ok = pa not in pas or v == top
                    table[pa + (v,)] = semiring.value(semiring.BOOLEAN, ok)
            constraints.append(softcsp.SoftConstraint(scope, table))
    return softcsp.SoftCSP(
        net.variables, net.domains, tuple(constraints), semiring.BOOLEAN
    )


def is_eligible(net):
    return softcsp.is_consistent(optimality_constraints(net))


def sweep_optimal(net):
    """Topological sweep through an acyclic net, taking each row's top."""
    order = topological_order(net)
    if order is None:
        raise ValidationError("sweep requires an acyclic net")
    assignment = [None] * len(net.variables)
    for i in order:
        t = net.tables[i]
        row = t.rows[tuple(assignment[p] for p in t.parents)]
        assignment[i] = row[0]
    return tuple(assignment)


def dominates(net, alpha, beta, budget=DEFAULT_DOMINANCE_BUDGET):
    """Whether a chain of worsening flips leads from alpha to beta.

    Breadth-first with a visited set; returns True / False, or
    BUDGET_EXHAUSTED when `budget` nodes were expanded without an answer.
    The chain must be nonempty, so dominates(o, o) is False unless a
    genuine flip cycle returns to o.
    """
    net.check_outcome(alpha)
    net.check_outcome(beta)
    frontier = deque([alpha])
    visited = {alpha}
    expanded = 0
    while frontier:
        if expanded >= budget:
            return BUDGET_EXHAUSTED
        o = frontier.popleft()
        expanded += 1
        for i, v in worsening_flips(net, o):
            succ = o[:i] + (v,) + o[i + 1:]
            if succ == beta:
                return True
            if succ not in visited:
                visited.add(succ)
                frontier.append(succ)
    return False


def redundant_parents(net, i):
    """Parents of variable i whose value never changes the selected order."""
    t = net.tables[i]
    out = set()
    for k, y in enumerate(t.parents):
        rest = t.parents[:k] + t.parents[k + 1:]
        redundant = True
        for a in itertools.product(*(net.domains[p] for p in rest)):
            orders = set()
            for yv in net.domains[y]:
                key = a[:k] + (yv,) + a[k:]
                orders.add(t.rows[key])
            if len(orders) > 1:
                redundant = False
                break
        if redundant:
            out.add(y)
    return out


def _drop_parent(net, i, y):
    t = net.tables[i]
    k = t.parents.index(y)
    rest = t.parents[:k] + t.parents[k + 1:]
    rows = {}
    anchor = net.domains[y][0]
    for a in itertools.product(*(net.domains[p] for p in rest)):
        rows[a] = t.rows[a[:k] + (anchor,) + a[k:]]
    tables = list(net.tables)
    tables[i] = CPTable(i, rest, rows)
    return CPNet(net.variables, net.domains, tuple(tables))


def reduce(net):
    """Remove redundant parents, scanning variables and parents in ascending
    index order, until no variable has a redundant parent."""
    changed = True
    while changed:
        changed = False
        for i in range(len(net.variables)):
            red = redundant_parents(net, i)
            for y in sorted(red):
                net = _drop_parent(net, i, y)
                changed = True
    return net


def is_reduced(net):
    return all(not redundant_parents(net, i) for i in range(len(net.variables)))


def nbr_elements(net):
    """Per-variable sets of values that top no row (never best responses)."""
    out = []
    for i, t in enumerate(net.tables):
        tops = {order[0] for order in t.rows.values()}
        out.append({v for v in net.domains[i] if v not in tops})
    return out


def dominated_elements(net):
    """Per-variable sets of values strictly below some fixed value in every row."""
    out = []
    for i, t in enumerate(net.tables):
        dom = net.domains[i]
        dominated = set()
        for worse in dom:
            for better in dom:
                if better == worse:
                    continue
                if all(
                    order.index(better) < order.index(worse)
                    for order in t.rows.values()
                ):
                    dominated.add(worse)
                    break
        out.append(dominated)
    return out


def eliminate(net, removals):
    """The subnet without the given values (a per-variable collection).

    Rows whose parent assignment mentions a removed value are dropped;
    surviving orders are restricted to surviving values.
    """
    new_domains = []
    for i, dom in enumerate(net.domains):
        kept = tuple(v for v in dom if v not in removals[i])
        if not kept:
            raise ValidationError(
                "removal empties the domain of %s" % net.variables[i]
            )
        new_domains.append(kept)
    tables = []
    for i, t in enumerate(net.tables):
        rows = {}
        for pa in itertools.product(*(new_domains[p] for p in t.parents)):
            order = t.rows[pa]
            rows[pa] = tuple(v for v in order if v in new_domains[i])
        tables.append(CPTable(i, t.parents, rows))
    return CPNet(net.variables, tuple(new_domains), tuple(tables))


def reduce_to_fixpoint(net, mode, trace=None):
    """Iteratively remove all NBR (mode='nbr') or dominated (mode='s')
    elements each round until none remain.  `trace`, if a list, collects the
    per-round removals."""
    if mode not in ("nbr", "s"):
        raise ValidationError("mode must be 'nbr' or 's'")
    picker = nbr_elements if mode == "nbr" else dominated_elements
    while True:
        removals = picker(net)
        if not any(removals):
            return net
        if trace is not None:
            trace.append([sorted(r) for r in removals])
        net = eliminate(net, removals)
