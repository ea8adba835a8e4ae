import numpy as np
import pytest

from planlearn.errors import DimensionMismatch
from planlearn.graphs import LearningGraph, build_slg, flg_kind, llg_kind, slg_kind
from planlearn.nn import forward, forward_batch, init_model
from planlearn.seeding import rng_for


def random_graph(kind, n_nodes, n_edges, seed):
    rng = rng_for(seed, "random-graph")
    features = rng.random((n_nodes, kind.dim))
    edges = []
    used = set()
    labels = kind.labels
    while len(edges) < n_edges:
        u, v = int(rng.integers(n_nodes)), int(rng.integers(n_nodes))
        lab = labels[int(rng.integers(len(labels)))]
        key = (min(u, v), max(u, v), lab)
        if u == v or key in used:
            continue
        used.add(key)
        edges.append((u, v, lab))
    return LearningGraph(kind, features, edges)


def test_zero_edge_graph_matches_closed_form():
    """No neighbors: every layer reduces to relu(W_self h + bias)."""
    kind = slg_kind()
    g = LearningGraph(kind, np.array([[1.0, 0.0, 1.0], [1.0, 1.0, 0.0]]), [])
    for agg in ("mean", "max", "sum"):
        m = init_model(kind, layer_count=3, hidden_dim=7, aggregator=agg, seed=5)
        h = g.features @ m.params["input_proj"].T
        for t in range(3):
            z = h @ m.params[f"layer{t}.self"].T + m.params[f"layer{t}.bias"]
            h = np.maximum(z, 0.0)
        pooled = h.sum(axis=0)
        z1 = np.maximum(m.params["head.w1"] @ pooled + m.params["head.b1"], 0.0)
        expect = float(m.params["head.w2"] @ z1 + m.params["head.b2"][0])
        assert forward(m, g) == pytest.approx(expect, abs=1e-12)


def test_all_zero_parameters_constant_output(gripper_ground):
    task, _ = gripper_ground
    m = init_model(slg_kind(), layer_count=2, hidden_dim=4, seed=0)
    for p in m.params.values():
        p[:] = 0.0
    g1 = build_slg(task, task.init)
    g2 = build_slg(task, frozenset())
    assert forward(m, g1) == forward(m, g2) == 0.0


def test_golden_forward_regression(gripper_ground):
    task, _ = gripper_ground
    model = init_model(slg_kind(), layer_count=8, hidden_dim=64,
                       aggregator="mean", readout="sum", seed=2024)
    value = forward(model, build_slg(task, task.init))
    assert value == pytest.approx(62.68366424786051, rel=1e-12)


def test_batch_of_one_equals_forward(gripper_ground):
    task, _ = gripper_ground
    g = build_slg(task, task.init)
    m = init_model(slg_kind(), layer_count=4, hidden_dim=16, seed=1)
    assert forward_batch(m, [g])[0] == pytest.approx(forward(m, g), abs=1e-6)


def test_batch_identical_graphs(gripper_ground):
    task, _ = gripper_ground
    g = build_slg(task, task.init)
    m = init_model(slg_kind(), layer_count=4, hidden_dim=16, seed=1)
    out = forward_batch(m, [g] * 5)
    assert np.allclose(out, out[0])


def test_batch_permutation_equivariant(gripper_ground):
    task, _ = gripper_ground
    from planlearn.task import apply
    states = [task.init] + [apply(task, task.init, a)
                            for a, in [(i,) for i in range(len(task.actions))]
                            if apply(task, task.init, a) is not None]
    graphs = [build_slg(task, s) for s in states]
    m = init_model(slg_kind(), layer_count=4, hidden_dim=16, seed=1)
    base = forward_batch(m, graphs)
    perm = list(reversed(range(len(graphs))))
    out = forward_batch(m, [graphs[i] for i in perm])
    assert np.allclose(out, base[perm])


def test_batch_pointwise_matches_map(gripper_ground):
    task, _ = gripper_ground
    from planlearn.task import apply
    states = {task.init}
    for a in range(len(task.actions)):
        nxt = apply(task, task.init, a)
        if nxt is not None:
            states.add(nxt)
    graphs = [build_slg(task, s) for s in sorted(states, key=sorted)]
    for agg in ("mean", "max", "sum"):
        m = init_model(slg_kind(), layer_count=4, hidden_dim=16, aggregator=agg, seed=7)
        batched = forward_batch(m, graphs)
        single = [forward(m, g) for g in graphs]
        assert np.allclose(batched, single, atol=1e-6)


@pytest.mark.parametrize("aggregator", ["mean", "max"])
def test_permutation_invariance(aggregator):
    kind = llg_kind(4)
    g = random_graph(kind, 12, 20, seed=42)
    rng = rng_for(43, "perm")
    perm = rng.permutation(12)
    inv = np.argsort(perm)
    permuted = LearningGraph(kind, g.features[inv],
                             [(int(perm[u]), int(perm[v]), lab) for u, v, lab in g.edges])
    m = init_model(kind, layer_count=5, hidden_dim=12, aggregator=aggregator, seed=3)
    assert forward(m, g) == pytest.approx(forward(m, permuted), abs=1e-9)


def test_kind_mismatch_rejected(gripper_ground):
    task, _ = gripper_ground
    g = build_slg(task, task.init)
    m = init_model(flg_kind(), layer_count=2, hidden_dim=4, seed=0)
    with pytest.raises(DimensionMismatch):
        forward(m, g)


def test_mixed_kind_batch_rejected(gripper_ground, gripper_fdr):
    from planlearn.graphs import build_flg
    task, _ = gripper_ground
    slg = build_slg(task, task.init)
    flg = build_flg(gripper_fdr, gripper_fdr.init)
    m = init_model(slg_kind(), layer_count=2, hidden_dim=4, seed=0)
    with pytest.raises(DimensionMismatch):
        forward_batch(m, [slg, flg])


def test_empty_neighborhood_contributes_zero():
    """A node with edges under one label only must see zero from the others;
    checked against a hand-computed single layer."""
    kind = slg_kind()
    features = np.array([[0.0, 0.0, 0.0], [1.0, 1.0, 0.0]])
    g = LearningGraph(kind, features, [(0, 1, "pre")])
    m = init_model(kind, layer_count=1, hidden_dim=3, aggregator="max", seed=8)
    p = m.params
    h0 = features @ p["input_proj"].T
    msg = h0 @ p["layer0.label.pre"].T
    z = h0 @ p["layer0.self"].T + p["layer0.bias"]
    z[0] += msg[1]
    z[1] += msg[0]
    h1 = np.maximum(z, 0.0)
    pooled = h1.sum(axis=0)
    z1 = np.maximum(p["head.w1"] @ pooled + p["head.b1"], 0.0)
    expect = float(p["head.w2"] @ z1 + p["head.b2"][0])
    assert forward(m, g) == pytest.approx(expect, abs=1e-12)
