"""Task formalisms: lifted, propositional (STRIPS) and finite-domain (FDR).

States are plain values: a frozenset of proposition ids for STRIPS, a tuple
of value indexes (one per variable) for FDR, a frozenset of ground atoms for
lifted tasks. All task objects are immutable after construction and safe to
share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ArityMismatch, UndeclaredSymbol, UnknownActionId


@dataclass(frozen=True)
class Atom:
    """A predicate applied to terms (objects or schema variables)."""

    predicate: str
    args: tuple[str, ...] = ()

    def __str__(self) -> str:
        if not self.args:
            return f"({self.predicate})"
        return f"({self.predicate} {' '.join(self.args)})"


@dataclass(frozen=True)
class Predicate:
    name: str
    arity: int


@dataclass(frozen=True)
class Schema:
    """Action schema: parameters plus precondition/add/delete atom sets.

    Atoms may mention parameters or task objects. Every variable used in the
    body must appear in params.
    """

    name: str
    params: tuple[str, ...]
    pre: frozenset[Atom]
    add: frozenset[Atom]
    dele: frozenset[Atom]
    cost: int = 1


@dataclass(frozen=True)
class LiftedTask:
    predicates: tuple[Predicate, ...]
    objects: tuple[str, ...]
    schemas: tuple[Schema, ...]
    init: frozenset[Atom]
    goal: frozenset[Atom]

    def __post_init__(self):
        arities = {p.name: p.arity for p in self.predicates}
        objs = set(self.objects)
        for where, atoms in (("init", self.init), ("goal", self.goal)):
            for atom in atoms:
                _check_ground_atom(atom, arities, objs, where)
        for schema in self.schemas:
            scope = objs | set(schema.params)
            for atoms in (schema.pre, schema.add, schema.dele):
                for atom in atoms:
                    if atom.predicate not in arities:
                        raise UndeclaredSymbol(
                            f"schema {schema.name} uses undeclared predicate {atom.predicate}")
                    if len(atom.args) != arities[atom.predicate]:
                        raise ArityMismatch(
                            f"{atom} in schema {schema.name}: predicate "
                            f"{atom.predicate} has arity {arities[atom.predicate]}")
                    for term in atom.args:
                        if term not in scope:
                            raise UndeclaredSymbol(
                                f"schema {schema.name} uses unknown term {term} in {atom}")

    def predicate_arity(self, name: str) -> int:
        for p in self.predicates:
            if p.name == name:
                return p.arity
        raise UndeclaredSymbol(f"unknown predicate {name}")


def _check_ground_atom(atom: Atom, arities: dict[str, int], objs: set[str], where: str):
    if atom.predicate not in arities:
        raise UndeclaredSymbol(f"{where} atom {atom}: undeclared predicate {atom.predicate}")
    if len(atom.args) != arities[atom.predicate]:
        raise ArityMismatch(
            f"{where} atom {atom}: predicate {atom.predicate} "
            f"has arity {arities[atom.predicate]}, got {len(atom.args)}")
    for term in atom.args:
        if term not in objs:
            raise UndeclaredSymbol(f"{where} atom {atom}: undeclared object {term}")


@dataclass(frozen=True)
class StripsAction:
    name: str
    pre: frozenset[int]
    add: frozenset[int]
    dele: frozenset[int]
    cost: int = 1

    def __post_init__(self):
        if self.add & self.dele:
            raise ValueError(f"action {self.name}: add and delete sets overlap")
        if self.cost < 0:
            raise ValueError(f"action {self.name}: negative cost")


@dataclass(frozen=True)
class StripsTask:
    """Propositional task. Proposition ids are 0..len(propositions)-1."""

    propositions: tuple[str, ...]
    actions: tuple[StripsAction, ...]
    init: frozenset[int]
    goal: frozenset[int]
    name: str = "strips"

    def __post_init__(self):
        n = len(self.propositions)
        for label, s in (("init", self.init), ("goal", self.goal)):
            if not all(0 <= p < n for p in s):
                raise ValueError(f"{label} mentions proposition id outside 0..{n - 1}")
        for a in self.actions:
            for s in (a.pre, a.add, a.dele):
                if not all(0 <= p < n for p in s):
                    raise ValueError(f"action {a.name} mentions unknown proposition id")

    def action_names(self) -> tuple[str, ...]:
        return tuple(a.name for a in self.actions)


@dataclass(frozen=True)
class FdrVariable:
    name: str
    values: tuple[str, ...]


@dataclass(frozen=True)
class FdrAction:
    """pre and eff map variable index -> value index (partial assignments)."""

    name: str
    pre: tuple[tuple[int, int], ...]
    eff: tuple[tuple[int, int], ...]
    cost: int = 1


@dataclass(frozen=True)
class FdrTask:
    variables: tuple[FdrVariable, ...]
    actions: tuple[FdrAction, ...]
    init: tuple[int, ...]
    goal: tuple[tuple[int, int], ...]
    name: str = "fdr"

    def __post_init__(self):
        n = len(self.variables)
        if len(self.init) != n:
            raise ValueError("init must assign every variable exactly once")
        for v, d in enumerate(self.init):
            if not 0 <= d < len(self.variables[v].values):
                raise ValueError(f"init value out of domain for variable {v}")
        for pairs, label in [(self.goal, "goal")] + [
            (a.pre, f"pre({a.name})") for a in self.actions
        ] + [(a.eff, f"eff({a.name})") for a in self.actions]:
            seen = set()
            for v, d in pairs:
                if not 0 <= v < n:
                    raise ValueError(f"{label}: unknown variable {v}")
                if not 0 <= d < len(self.variables[v].values):
                    raise ValueError(f"{label}: value {d} outside domain of variable {v}")
                if v in seen:
                    raise ValueError(f"{label}: variable {v} assigned twice")
                seen.add(v)


# ── state semantics ───────────────────────────────────────────────────────

def apply_strips(task: StripsTask, state: frozenset[int], action_id: int):
    """Successor state, or None when the action is inapplicable."""
    a = task.actions[action_id]
    if not a.pre <= state:
        return None
    return (state - a.dele) | a.add


def apply_fdr(task: FdrTask, state: tuple[int, ...], action_id: int):
    a = task.actions[action_id]
    for v, d in a.pre:
        if state[v] != d:
            return None
    new = list(state)
    for v, d in a.eff:
        new[v] = d
    return tuple(new)


def apply(task, state, action_id: int):
    """Dispatching successor function; inapplicability is the value None."""
    if isinstance(task, StripsTask):
        return apply_strips(task, state, action_id)
    if isinstance(task, FdrTask):
        return apply_fdr(task, state, action_id)
    raise TypeError(f"no successor semantics for {type(task).__name__}")


def initial_state(task):
    if isinstance(task, StripsTask):
        return task.init
    if isinstance(task, FdrTask):
        return task.init
    raise TypeError(f"no state semantics for {type(task).__name__}")


def is_goal(task, state) -> bool:
    if isinstance(task, StripsTask):
        return task.goal <= state
    if isinstance(task, FdrTask):
        return all(state[v] == d for v, d in task.goal)
    raise TypeError(f"no goal semantics for {type(task).__name__}")


def successors(task, state):
    """All (action_id, successor) pairs applicable in state, in action order."""
    out = []
    for i in range(len(task.actions)):
        nxt = apply(task, state, i)
        if nxt is not None:
            out.append((i, nxt))
    return out


@dataclass(frozen=True)
class PlanCheck:
    valid: bool
    cost: int
    reason: str = ""


def validate_plan(task, plan) -> PlanCheck:
    """Replay the plan from the initial state; valid iff every step applies
    and the final state satisfies the goal. Cost is the sum of action costs."""
    n = len(task.actions)
    for aid in plan:
        if not 0 <= aid < n:
            raise UnknownActionId(f"plan refers to action id {aid}, task has {n} actions")
    state = initial_state(task)
    cost = 0
    for step, aid in enumerate(plan):
        nxt = apply(task, state, aid)
        if nxt is None:
            return PlanCheck(False, cost, f"step {step} ({task.actions[aid].name}) inapplicable")
        cost += task.actions[aid].cost
        state = nxt
    if not is_goal(task, state):
        return PlanCheck(False, cost, "final state does not satisfy the goal")
    return PlanCheck(True, cost)


# ── views between formalisms ──────────────────────────────────────────────

def strips_view(task: FdrTask) -> StripsTask:
    """Propositional view of an FDR task: one proposition per fact <v,d>.

    An effect <v,d> deletes every other fact of v; sound because FDR states
    are total assignments, and it makes the two state spaces isomorphic.
    """
    prop_id: dict[tuple[int, int], int] = {}
    names = []
    for v, var in enumerate(task.variables):
        for d, val in enumerate(var.values):
            prop_id[(v, d)] = len(names)
            names.append(f"{var.name}={val}")
    actions = []
    for a in task.actions:
        pre = frozenset(prop_id[(v, d)] for v, d in a.pre)
        add = frozenset(prop_id[(v, d)] for v, d in a.eff)
        dele = frozenset(
            prop_id[(v, d2)]
            for v, d in a.eff
            for d2 in range(len(task.variables[v].values))
            if d2 != d)
        actions.append(StripsAction(a.name, pre, add, dele, a.cost))
    init = frozenset(prop_id[(v, d)] for v, d in enumerate(task.init))
    goal = frozenset(prop_id[(v, d)] for v, d in task.goal)
    return StripsTask(tuple(names), tuple(actions), init, goal, name=task.name)


def fdr_state_to_strips(task: FdrTask, state: tuple[int, ...]) -> frozenset[int]:
    """Map an FDR state to the corresponding strips_view state."""
    offsets = []
    total = 0
    for var in task.variables:
        offsets.append(total)
        total += len(var.values)
    return frozenset(offsets[v] + d for v, d in enumerate(state))


def binary_fdr_view(task: StripsTask) -> FdrTask:
    """Naive FDR encoding of a propositional task: one binary variable per
    proposition. Successor semantics coincide with the STRIPS ones."""
    variables = tuple(FdrVariable(p, ("false", "true")) for p in task.propositions)
    actions = []
    for a in task.actions:
        pre = tuple(sorted((p, 1) for p in a.pre))
        eff = tuple(sorted([(p, 1) for p in a.add] + [(p, 0) for p in a.dele]))
        actions.append(FdrAction(a.name, pre, eff, a.cost))
    init = tuple(1 if p in task.init else 0 for p in range(len(task.propositions)))
    goal = tuple(sorted((p, 1) for p in task.goal))
    return FdrTask(variables, tuple(actions), init, goal, name=task.name)


def as_lifted(task: StripsTask) -> LiftedTask:
    """Lift a propositional task trivially: every proposition becomes a
    0-ary predicate, every action a parameterless schema."""
    predicates = tuple(Predicate(p, 0) for p in task.propositions)
    atom = [Atom(p) for p in task.propositions]
    schemas = tuple(
        Schema(
            a.name,
            (),
            frozenset(atom[p] for p in a.pre),
            frozenset(atom[p] for p in a.add),
            frozenset(atom[p] for p in a.dele),
            a.cost,
        )
        for a in task.actions)
    return LiftedTask(
        predicates,
        (),
        schemas,
        frozenset(atom[p] for p in task.init),
        frozenset(atom[p] for p in task.goal))


def strips_state_atoms(task: StripsTask, state: frozenset[int]) -> frozenset[Atom]:
    """State of the 0-ary lifting corresponding to a propositional state."""
    return frozenset(Atom(task.propositions[p]) for p in state)
