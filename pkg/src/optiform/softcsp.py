"""Soft CSP model: evaluation, optimal-solution enumeration, consistency, join.

A joint assignment is a tuple of values positionally aligned with the
problem's variable list.  Enumeration walks variables by index and domain
values in declaration order, so output is deterministic.
"""

import itertools
from dataclasses import dataclass

from . import semiring
from .errors import CarrierMismatchError, ValidationError, check_space


@dataclass(frozen=True)
class SoftConstraint:
    scope: tuple  # variable indices, ordered
    table: dict   # tuple of values over the scope -> SemiringValue

    def lookup(self, assignment):
        """Table value at the projection of a full assignment onto the scope."""
        return self.table[tuple(assignment[i] for i in self.scope)]


@dataclass(frozen=True)
class SoftCSP:
    variables: tuple   # names
    domains: tuple     # per-variable tuple of values
    constraints: tuple
    semiring: semiring.SemiringSpec

    def __post_init__(self):
        if len(self.variables) != len(self.domains):
            raise ValidationError("variables and domains differ in length")
        if len(set(self.variables)) != len(self.variables):
            raise ValidationError("duplicate variable names")
        for name, dom in zip(self.variables, self.domains):
            if not dom:
                raise ValidationError("empty domain for variable %s" % name)
        for c in self.constraints:
            self._check_constraint(c)

    def _check_constraint(self, c):
        for i in c.scope:
            if not 0 <= i < len(self.variables):
                raise ValidationError("constraint scope mentions unknown variable %d" % i)
        expected = list(itertools.product(*(self.domains[i] for i in c.scope)))
        if set(c.table) != set(expected):
            missing = [t for t in expected if t not in c.table]
            if missing:
                raise ValidationError(
                    "constraint over %s misses tuple %r"
                    % ([self.variables[i] for i in c.scope], missing[0])
                )
            raise ValidationError(
                "constraint over %s has spurious tuples"
                % ([self.variables[i] for i in c.scope],)
            )
        for v in c.table.values():
            if not isinstance(v, semiring.SemiringValue) or v.spec != self.semiring:
                raise CarrierMismatchError(
                    "constraint value %r is not in the problem's carrier" % (v,)
                )

    def space_size(self):
        n = 1
        for dom in self.domains:
            n *= len(dom)
        return n

    def assignments(self):
        check_space(self.space_size())
        return itertools.product(*self.domains)

    def check_assignment(self, s):
        if len(s) != len(self.variables):
            raise ValidationError("assignment has wrong length")
        for name, dom, v in zip(self.variables, self.domains, s):
            if v not in dom:
                raise ValidationError(
                    "value %r not in the domain of variable %s" % (v, name)
                )


def solution_preference(problem, s):
    """Combine the constraint values at s; the empty problem yields 1."""
    problem.check_assignment(s)
    spec = problem.semiring
    acc = semiring.one(spec)
    for c in problem.constraints:
        acc = semiring.combine(spec, acc, c.lookup(s))
    return acc


def optimal_solutions(problem):
    """All assignments whose preference no other assignment strictly exceeds.

    For product carriers this is the Pareto frontier of the partial order.
    Output is sorted by domain-value declaration index per variable.
    """
    spec = problem.semiring
    scored = [(s, solution_preference(problem, s)) for s in problem.assignments()]
    prefs = [p for _, p in scored]
    out = []
    for s, p in scored:
        if not any(semiring.strictly_less(spec, p, q) for q in prefs):
            out.append((s, p))
    return out


def is_consistent(problem):
    """Whether some assignment of a boolean problem has preference 1."""
    if problem.semiring.kind != "boolean":
        raise ValidationError("consistency is defined for boolean problems only")
    top = semiring.one(problem.semiring)
    return any(
        solution_preference(problem, s).payload == top.payload
        for s in problem.assignments()
    )


def lift_boolean(problem, spec):
    """Reinterpret a boolean problem in `spec`, mapping 1 to 1 and 0 to 0."""
    if problem.semiring.kind != "boolean":
        raise ValidationError("only boolean problems can be lifted")
    top, bot = semiring.one(spec), semiring.zero(spec)
    lifted = tuple(
        SoftConstraint(c.scope, {t: top if v.payload else bot for t, v in c.table.items()})
        for c in problem.constraints
    )
    return SoftCSP(problem.variables, problem.domains, lifted, spec)


def join(p1, p2):
    """Concatenate the constraint lists of two problems over the same variables.

    A boolean operand is lifted into the other operand's carrier first.
    """
    if p1.variables != p2.variables or p1.domains != p2.domains:
        raise ValidationError("join requires identical variables and domains")
    if p1.semiring != p2.semiring:
        if p2.semiring.kind == "boolean":
            p2 = lift_boolean(p2, p1.semiring)
        elif p1.semiring.kind == "boolean":
            p1 = lift_boolean(p1, p2.semiring)
        else:
            raise ValidationError("join requires matching semirings")
    return SoftCSP(
        p1.variables, p1.domains, p1.constraints + p2.constraints, p1.semiring
    )
