"""Hand-built task pairs separating heuristics from what refinement sees.

Each pair is refinement-indistinguishable under the relevant graph
encodings yet differs in exact heuristic value, so together with wl_refine
and the oracles they machine-check the expressiveness boundaries.
"""

from __future__ import annotations

from ..errors import InvalidSize
from ..task.model import (
    Atom,
    LiftedTask,
    Predicate,
    Schema,
    StripsAction,
    StripsTask,
)


def delete_relaxation_gap_task() -> StripsTask:
    """Two propositions, two actions; optimal cost 2 but delete-relaxed
    optimal cost 1, because reaching the second goal fact destroys the first."""
    props = ("p0", "p1")
    a0 = StripsAction("a0", frozenset(), frozenset({1}), frozenset({0}))
    a1 = StripsAction("a1", frozenset(), frozenset({0}), frozenset())
    return StripsTask(props, (a0, a1), frozenset({0}), frozenset({0, 1}),
                      name="relaxation-gap")


def grounded_twin_pair() -> tuple[StripsTask, StripsTask]:
    """Delete-free 4-proposition, 6-action twins: optimal costs 4 versus 3,
    indistinguishable by color refinement. The second task shares achievers
    across the two goals so a single support fact suffices."""
    props = ("p1", "p2", "g3", "g4")
    p1, p2, g3, g4 = range(4)

    def act(name, pre, add):
        return StripsAction(name, frozenset(pre), frozenset(add), frozenset())

    first = (
        act("a1", [], [p1]),
        act("a2", [], [p2]),
        act("a3", [p1], [g3]),
        act("a4", [p1], [g3]),
        act("a5", [p2], [g4]),
        act("a6", [p2], [g4]),
    )
    second = (
        act("a1", [], [p1]),
        act("a2", [], [p2]),
        act("a3", [p1], [g3]),
        act("a4", [p1], [g4]),
        act("a5", [p2], [g3]),
        act("a6", [p2], [g4]),
    )
    goal = frozenset({g3, g4})
    return (StripsTask(props, first, frozenset(), goal, name="twin-1"),
            StripsTask(props, second, frozenset(), goal, name="twin-2"))


def scaling_twin_pair(n: int) -> tuple[StripsTask, StripsTask]:
    """Grid family generalizing the 6-action twins: optimal costs n*n versus
    2n-1, refinement-indistinguishable for every n >= 2."""
    if n < 2:
        raise InvalidSize(f"scaling twins need n >= 2, got {n}")
    prop = {}
    names = []
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            prop[(x, y)] = len(names)
            names.append(f"p({x},{y})")
    goal = frozenset(prop[(n, y)] for y in range(1, n + 1))

    shared = []
    for y in range(1, n + 1):
        shared.append(StripsAction(f"a(1,{y})", frozenset(),
                                   frozenset({prop[(1, y)]}), frozenset()))
    for x in range(2, n):
        for y in range(1, n + 1):
            shared.append(StripsAction(f"a({x},{y})", frozenset({prop[(x - 1, y)]}),
                                       frozenset({prop[(x, y)]}), frozenset()))

    first = list(shared)
    second = list(shared)
    for y in range(1, n + 1):
        for z in range(1, n + 1):
            first.append(StripsAction(f"a1({y},{z})", frozenset({prop[(n - 1, y)]}),
                                      frozenset({prop[(n, y)]}), frozenset()))
            second.append(StripsAction(f"a2({y},{z})", frozenset({prop[(n - 1, z)]}),
                                       frozenset({prop[(n, y)]}), frozenset()))
    return (StripsTask(tuple(names), tuple(first), frozenset(), goal, name=f"scale{n}-1"),
            StripsTask(tuple(names), tuple(second), frozenset(), goal, name=f"scale{n}-2"))


def lifted_twin_pair() -> tuple[LiftedTask, LiftedTask]:
    """Two-object lifted twins differing only in which facts hold initially:
    the first is solvable in one parallel step, the second unsolvable, yet
    their lifted graphs are refinement-indistinguishable."""
    predicates = (Predicate("q", 2), Predicate("w", 2))
    objects = ("o1", "o2")
    schema = Schema(
        "a", ("?x", "?y"),
        pre=frozenset({Atom("q", ("?x", "?y"))}),
        add=frozenset({Atom("w", ("?x", "?y"))}),
        dele=frozenset())
    goal = frozenset({Atom("w", ("o1", "o2")), Atom("w", ("o2", "o1"))})
    init1 = frozenset({Atom("q", ("o1", "o2")), Atom("q", ("o2", "o1"))})
    init2 = frozenset({Atom("q", ("o1", "o1")), Atom("q", ("o2", "o2"))})
    return (LiftedTask(predicates, objects, (schema,), init1, goal),
            LiftedTask(predicates, objects, (schema,), init2, goal))
