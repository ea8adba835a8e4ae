import numpy as np
import pytest

from planlearn.errors import BoundViolation
from planlearn.expressiveness import (
    ProgramTrace,
    grounded_twin_pair,
    random_unit_task,
    relaxation_program,
)
from planlearn.graphs import build_slg
from planlearn.heuristics import delete_relax, h_dp
from planlearn.task import StripsAction, StripsTask


def test_goal_in_state_gives_zero():
    task = StripsTask(("p",), (), frozenset({0}), frozenset({0}))
    g = build_slg(task, task.init)
    for which in ("max", "add"):
        assert relaxation_program(g, which, rounds=1, bound=10).value == 0


def test_twin_fixture_matches_dp_exactly():
    p1, _ = grounded_twin_pair()
    g = build_slg(p1, p1.init)
    for which in ("max", "add"):
        oracle = h_dp(p1, p1.init, which)
        got = relaxation_program(g, which, rounds=4, bound=10)
        assert got.value == oracle.value


def test_del_edges_ignored_everywhere():
    """Running on the full graph and on the delete-free subgraph agrees."""
    rng = np.random.default_rng(11)
    for _ in range(40):
        task = random_unit_task(rng)
        relaxed = delete_relax(task)
        g_full = build_slg(task, task.init)
        g_free = build_slg(relaxed, relaxed.init)
        for which in ("max", "add"):
            iters = h_dp(task, task.init, which).iterations
            a = relaxation_program(g_full, which, rounds=iters, bound=64)
            b = relaxation_program(g_free, which, rounds=iters, bound=64)
            assert a == b


def test_random_sweep_equals_dp():
    rng = np.random.default_rng(2)
    for _ in range(100):
        task = random_unit_task(rng)
        g = build_slg(task, task.init)
        for which in ("max", "add"):
            oracle = h_dp(task, task.init, which)
            got = relaxation_program(g, which, rounds=oracle.iterations, bound=64)
            assert got.infinite == oracle.infinite
            if not oracle.infinite:
                assert got.value == oracle.value


def test_unreachable_goal_decodes_to_infinity():
    task = StripsTask(("p", "q"), (StripsAction("a", frozenset({1}), frozenset({0}),
                                                frozenset()),),
                      frozenset(), frozenset({0}))
    g = build_slg(task, task.init)
    out = relaxation_program(g, "max", rounds=2, bound=8)
    assert out.infinite


def test_bound_check_flags_action_overflow():
    """Three unreached preconditions sum past the bound; strict mode raises,
    default mode saturates and still decodes to INFINITY."""
    task = StripsTask(
        ("x", "y", "z", "g"),
        (StripsAction("big", frozenset({0, 1, 2}), frozenset({3}), frozenset()),),
        frozenset(), frozenset({3}))
    g = build_slg(task, task.init)
    assert relaxation_program(g, "add", rounds=2, bound=4).infinite
    with pytest.raises(BoundViolation):
        relaxation_program(g, "add", rounds=2, bound=4, check_bound=True)


def test_trace_records_layer_states():
    p1, _ = grounded_twin_pair()
    g = build_slg(p1, p1.init)
    trace = ProgramTrace(states=[])
    relaxation_program(g, "max", rounds=3, bound=10, trace=trace)
    # embedding + 2 per round + final = 2L + 2 snapshots
    assert len(trace.states) == 2 * 3 + 2
    for state in trace.states:
        assert set(np.unique(state[:, 2])) <= {0.0, 1.0}
        prop_rows = state[:, 2] == 1.0
        assert (state[prop_rows, 0] >= 0).all()
        assert (state[prop_rows, 0] <= 10).all()


def test_rejects_non_propositional_graph(gripper_fdr):
    from planlearn.graphs import build_flg
    g = build_flg(gripper_fdr, gripper_fdr.init)
    with pytest.raises(ValueError):
        relaxation_program(g, "max", rounds=1, bound=8)
