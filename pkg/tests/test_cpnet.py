import pytest

from optiform import cpnet, softcsp
from optiform.cpnet import BUDGET_EXHAUSTED, CPNet, CPTable
from optiform.errors import ValidationError


def two_var_cycle():
    # Each variable wants to copy the other; (a,b) and (a~,b~) are both stable.
    a, a_, b, b_ = "a", "a~", "b", "b~"
    return CPNet(
        ("A", "B"),
        ((a, a_), (b, b_)),
        (
            CPTable(0, (1,), {(b,): (a, a_), (b_,): (a_, a)}),
            CPTable(1, (0,), {(a,): (b, b_), (a_,): (b_, b)}),
        ),
    )


def test_structure_queries(acyclic4, cyclic4):
    assert cpnet.is_acyclic(acyclic4)
    assert cpnet.topological_order(acyclic4) == [0, 1, 2, 3]
    assert not cpnet.is_acyclic(cyclic4)
    assert set(cpnet.dependency_graph(cyclic4)) == {(3, 0), (0, 1), (1, 2), (2, 3)}


def test_flips(acyclic4):
    worst = ("a~", "b~", "c~", "d")
    # A and B are unconditional (a over a~, b over b~); with parents a~,b~
    # the C row prefers c, and with c~ the D row prefers d~ over the current d.
    assert set(cpnet.improving_flips(acyclic4, worst)) == {
        (0, "a"), (1, "b"), (2, "c"), (3, "d~")
    }
    assert cpnet.worsening_flips(acyclic4, worst) == []
    assert cpnet.worsening_flips(acyclic4, ("a", "b", "c", "d")) == \
        [(0, "a~"), (1, "b~"), (2, "c~"), (3, "d~")]


def test_optimal_outcomes_match_sweep(acyclic4):
    best = cpnet.sweep_optimal(acyclic4)
    assert best == ("a", "b", "c", "d")
    assert cpnet.optimal_outcomes(acyclic4) == [best]
    assert cpnet.is_optimal(acyclic4, best)
    assert not cpnet.is_optimal(acyclic4, ("a~", "b", "c", "d"))


def test_sweep_rejects_cycles(cyclic4):
    with pytest.raises(ValidationError):
        cpnet.sweep_optimal(cyclic4)


def test_cyclic_net_can_have_several_optima():
    net = two_var_cycle()
    assert cpnet.optimal_outcomes(net) == [("a", "b"), ("a~", "b~")]


def test_optimality_constraints_capture_optima(acyclic4, cyclic4):
    for net in (acyclic4, cyclic4, two_var_cycle()):
        problem = cpnet.optimality_constraints(net)
        sols = [
            s for s, p in zip(problem.assignments(),
                              (softcsp.solution_preference(problem, s)
                               for s in problem.assignments()))
        ]
        good = [
            s for s in net.outcomes()
            if softcsp.solution_preference(problem, s).payload
        ]
        assert good == cpnet.optimal_outcomes(net)


def test_eligibility(acyclic4, cyclic2):
    assert cpnet.is_eligible(acyclic4)
    assert cpnet.is_eligible(two_var_cycle())
    # cyclic2 wants to differ from B while B copies A: no stable outcome
    assert cpnet.optimal_outcomes(cyclic2) == []
    assert not cpnet.is_eligible(cyclic2)


def test_dominance(acyclic4):
    best = ("a", "b", "c", "d")
    worst = ("a~", "b~", "c", "d")
    assert cpnet.dominates(acyclic4, best, worst) is True
    assert cpnet.dominates(acyclic4, worst, best) is False
    assert cpnet.dominates(acyclic4, best, best) is False
    assert cpnet.dominates(acyclic4, best, worst, budget=1) == BUDGET_EXHAUSTED


def test_dominance_detects_flip_cycles(cyclic2):
    # cyclic2's flip relation cycles through all four outcomes, so every
    # outcome dominates every outcome, including itself.
    outs = list(cyclic2.outcomes())
    for alpha in outs:
        for beta in outs:
            assert cpnet.dominates(cyclic2, alpha, beta) is True


def test_redundant_parent_removal(redundant3):
    assert cpnet.redundant_parents(redundant3, 2) == {0, 1}
    reduced = cpnet.reduce(redundant3)
    assert cpnet.is_reduced(reduced)
    assert reduced.tables[2].parents == ()
    assert reduced.tables[2].rows == {(): ("c1", "c2")}
    # reduction preserves the flip relation, hence the optima
    assert cpnet.optimal_outcomes(reduced) == cpnet.optimal_outcomes(redundant3)
    assert cpnet.flip_edges(reduced) == cpnet.flip_edges(redundant3)


def test_reduce_keeps_needed_parents(acyclic4):
    assert cpnet.is_reduced(acyclic4)
    assert cpnet.reduce(acyclic4) == acyclic4


def test_nbr_and_dominated_elements(cyclic4):
    # A's two rows both rank a first, so a~ tops no row.
    assert cpnet.nbr_elements(cyclic4) == [{"a~"}, set(), set(), set()]
    assert cpnet.dominated_elements(cyclic4) == [{"a~"}, set(), set(), set()]


def test_elimination_chain(cyclic4):
    trace = []
    fixed = cpnet.reduce_to_fixpoint(cyclic4, "s", trace)
    assert trace == [
        [["a~"], [], [], []],
        [[], ["b~"], [], []],
        [[], [], ["c~"], []],
        [[], [], [], ["d~"]],
    ]
    assert fixed.domains == (("a",), ("b",), ("c",), ("d",))
    assert cpnet.optimal_outcomes(fixed) == [("a", "b", "c", "d")]

    nbr_fixed = cpnet.reduce_to_fixpoint(cyclic4, "nbr")
    assert nbr_fixed.domains == fixed.domains
    with pytest.raises(ValidationError):
        cpnet.reduce_to_fixpoint(cyclic4, "both")


def test_eliminate_rejects_emptying():
    net = two_var_cycle()
    with pytest.raises(ValidationError):
        cpnet.eliminate(net, [{"a", "a~"}, set()])


def test_validation():
    a, a_ = "a", "a~"
    with pytest.raises(ValidationError):
        # row order must be a strict total order of the domain
        CPNet(
            ("A",), ((a, a_),),
            (CPTable(0, (), {(): (a, a)}),),
        )
    with pytest.raises(ValidationError):
        # missing row for a parent assignment
        CPNet(
            ("A", "B"), ((a, a_), ("b", "b~")),
            (
                CPTable(0, (), {(): (a, a_)}),
                CPTable(1, (0,), {(a,): ("b", "b~")}),
            ),
        )
