"""Seeded random micro-tasks for randomized oracle-equivalence sweeps."""

from __future__ import annotations

import numpy as np

from ..task.model import StripsAction, StripsTask


def random_unit_task(rng: np.random.Generator, max_props: int = 8,
                     max_actions: int = 8) -> StripsTask:
    """A small random unit-cost task; may be unsolvable."""
    n_p = int(rng.integers(2, max_props + 1))
    n_a = int(rng.integers(1, max_actions + 1))
    props = tuple(f"p{i}" for i in range(n_p))
    actions = []
    for i in range(n_a):
        pre = rng.choice(n_p, size=int(rng.integers(0, min(3, n_p) + 1)), replace=False)
        add = rng.choice(n_p, size=int(rng.integers(1, min(2, n_p) + 1)), replace=False)
        rest = [p for p in range(n_p) if p not in set(add.tolist())]
        n_del = int(rng.integers(0, min(2, len(rest)) + 1))
        dele = rng.choice(rest, size=n_del, replace=False) if rest and n_del else []
        actions.append(StripsAction(
            f"a{i}",
            frozenset(int(p) for p in pre),
            frozenset(int(p) for p in add),
            frozenset(int(p) for p in dele)))
    init = frozenset(p for p in range(n_p) if rng.random() < 0.3)
    n_goal = int(rng.integers(1, min(3, n_p) + 1))
    goal = frozenset(int(p) for p in rng.choice(n_p, size=n_goal, replace=False))
    return StripsTask(props, tuple(actions), init, goal, name="random")
