from pytest import raises

from hlab.core import GroundSet, downward_closure
from hlab.error import ContractError, NoAdmissibleStartError
from hlab.instances import FIGURE1_PI_STAR, CnfFormula
from hlab.problems import FamilyOracle, HcpOracle, MispOracle, SatOracle
from hlab.pyutils.bits import mask_of
from hlab.sequential import (
    FirstFeasiblePolicy,
    GivenOrderPolicy,
    RandomPolicy,
    SequentialTrace,
    TraceStep,
    dump_trace,
    get_policy,
    sequential_build,
    theorem2_check,
)


def test_first_feasible_on_a_path(p3):
    trace = sequential_build(MispOracle(p3), "first-feasible")
    assert [step.snapshot for step in trace.steps] == [0b000, 0b001, 0b101]
    assert [step.cumulative_work for step in trace.steps] == [1, 2, 6]
    assert trace.elements == [0, 2]
    assert trace.outcome == "support"
    assert trace.total_work == 6
    assert theorem2_check(trace)


def test_trace_dump(p3):
    trace = sequential_build(MispOracle(p3))
    assert dump_trace(trace) == (
        "c misp first-feasible\n"
        "0 - start 1\n"
        "1 x1 accept 2\n"
        "2 x2 reject 4\n"
        "3 x3 accept 6\n"
        "c outcome support {x1,x3}\n"
    )


def test_trace_as_dict(p3):
    data = sequential_build(MispOracle(p3)).to_dict()
    assert data["final"] == ["x1", "x3"]
    assert data["queries"] == 4
    assert data["steps"][0]["element"] is None
    assert data["steps"][1] == {
        "element": "x1",
        "cumulative_work": 2,
        "snapshot": ["x1"],
    }


def test_figure1_edge_order_builds_the_first_cycle(figure1):
    trace = sequential_build(HcpOracle(figure1), "given-order", order=list(range(12)))
    accepted = [step.element for step in trace.steps[1:]]
    assert accepted == [e - 1 for e in FIGURE1_PI_STAR]
    assert trace.final == mask_of(e - 1 for e in FIGURE1_PI_STAR)
    assert 4 in [q.element for q in trace.queries if not q.accepted]
    assert theorem2_check(trace)


def test_first_hcp_extension_searches(figure1):
    trace = sequential_build(HcpOracle(figure1))
    assert trace.queries[1].work > 1


def test_cycle_graph_ends_at_the_cycle_under_every_policy(c5):
    for policy in ("first-feasible", "random"):
        assert sequential_build(HcpOracle(c5), policy, seed=3).final == 0b11111
    assert sequential_build(HcpOracle(c5), GivenOrderPolicy([4, 2])).final == 0b11111


def test_families_build_support_solutions():
    # type: () -> None
    family = downward_closure(GroundSet(3), [0b101, 0b010])
    trace = sequential_build(FamilyOracle(family), GivenOrderPolicy([1]))
    assert trace.final == 0b010
    assert trace.outcome == "support"


def test_empty_set_outside_q_has_no_start(p3):
    with raises(NoAdmissibleStartError):
        sequential_build(HcpOracle(p3))
    with raises(NoAdmissibleStartError) as excinfo:
        sequential_build(SatOracle(CnfFormula(1, [[1], [-1]])))
    assert excinfo.value.extensions["work"] >= 1


def test_policies():
    # type: () -> None
    assert FirstFeasiblePolicy().ordering(3) == [0, 1, 2]
    assert GivenOrderPolicy([2]).ordering(4) == [2, 0, 1, 3]
    assert RandomPolicy(5).ordering(6) == RandomPolicy(5).ordering(6)
    assert sorted(RandomPolicy(5).ordering(6)) == list(range(6))
    assert isinstance(get_policy("random", 1), RandomPolicy)


def test_policy_errors():
    # type: () -> None
    with raises(ContractError):
        GivenOrderPolicy([1, 1])
    with raises(ContractError):
        GivenOrderPolicy([7]).ordering(3)
    with raises(ContractError):
        get_policy("given-order")
    with raises(ContractError) as excinfo:
        get_policy("best-first")
    assert "expected one of first-feasible, given-order, random" in excinfo.value.message


def test_every_element_is_offered_once(p3, mocker):
    oracle = MispOracle(p3)
    spy = mocker.spy(oracle, "extend")
    sequential_build(oracle, "random", seed=11)
    assert spy.call_count == p3.n
    assert oracle.queries == p3.n + 1


def test_theorem2_check_on_hand_built_traces():
    # type: () -> None
    assert theorem2_check(SequentialTrace("misp", "first-feasible", 0, [], []))
    steps = [TraceStep(None, 1, 0), TraceStep(0, 3, 1), TraceStep(1, 2, 3)]
    assert not theorem2_check(SequentialTrace("misp", "first-feasible", 2, steps, []))
    steps = [TraceStep(None, 0, 0)]
    assert not theorem2_check(SequentialTrace("misp", "first-feasible", 1, steps, []))
