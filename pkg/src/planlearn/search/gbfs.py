"""Eager greedy best-first search with batched successor evaluation.

Open list is a binary heap keyed (h, insertion sequence): ties resolve
first-in-first-out, so with a zero heuristic the search degenerates to
breadth-first and returns optimal plans under unit costs. Duplicate states
are detected against everything already evaluated; re-opening is disabled.
Every returned plan is validated before the result is handed back.
"""

from __future__ import annotations

import heapq
import math
import time
from dataclasses import dataclass

from ..task.model import initial_state, is_goal, successors, validate_plan
from .heuristics import ConstantHeuristic


@dataclass(frozen=True)
class SearchConfig:
    timeout_s: float = 300.0
    node_cap: int = 10**6       # soft memory cap: states stored, open + closed
    eval_batch: int = 64        # max successor states evaluated per call
    # tie break is always FIFO

    def __post_init__(self):
        if self.timeout_s <= 0:
            raise ValueError("timeout must be positive")
        if self.eval_batch < 1:
            raise ValueError("eval_batch must be >= 1")


@dataclass
class SearchResult:
    status: str                 # solved | exhausted | timeout | node_cap
    plan: list[int] | None
    expansions: int
    evaluations: int
    generated: int
    plan_cost: int | None
    wall_nanos: int
    peak_open_size: int

    def to_json_dict(self, with_timings: bool = False) -> dict:
        d = {
            "status": self.status,
            "plan": self.plan,
            "expansions": self.expansions,
            "evaluations": self.evaluations,
            "generated": self.generated,
            "plan_cost": self.plan_cost,
            "peak_open_size": self.peak_open_size,
        }
        if with_timings:
            d["wall_nanos"] = self.wall_nanos
        return d


def gbfs(task, heuristic, config: SearchConfig | None = None) -> SearchResult:
    config = config or SearchConfig()
    start_ns = time.perf_counter_ns()
    deadline = time.perf_counter() + config.timeout_s

    def result(status, plan=None):
        cost = None
        if plan is not None:
            check = validate_plan(task, plan)
            assert check.valid, f"search produced an invalid plan: {check.reason}"
            cost = check.cost
        return SearchResult(status, plan, expansions, evaluations, generated,
                            cost, time.perf_counter_ns() - start_ns, peak_open)

    expansions = evaluations = generated = peak_open = 0
    root = initial_state(task)
    if is_goal(task, root):
        return result("solved", [])

    seen = {root}
    parents = {root: None}
    open_heap = []
    seq = 0

    def push_evaluated(states):
        nonlocal evaluations, seq, peak_open
        for lo in range(0, len(states), config.eval_batch):
            chunk = states[lo:lo + config.eval_batch]
            values = heuristic.evaluate_batch(chunk)
            evaluations += len(chunk)
            for s, h in zip(chunk, values):
                h = float(h)
                if math.isinf(h):
                    continue  # pruned as a dead end
                heapq.heappush(open_heap, (h, seq, s))
                seq += 1
        peak_open = max(peak_open, len(open_heap))

    push_evaluated([root])
    closed = set()
    while open_heap:
        if time.perf_counter() > deadline:
            return result("timeout")
        if len(seen) > config.node_cap:
            return result("node_cap")
        _, _, state = heapq.heappop(open_heap)
        if state in closed:
            continue
        if is_goal(task, state):
            plan = []
            s = state
            while parents[s] is not None:
                s, aid = parents[s]
                plan.append(aid)
            plan.reverse()
            return result("solved", plan)
        closed.add(state)
        expansions += 1
        fresh = []
        for aid, nxt in successors(task, state):
            generated += 1
            if nxt in seen:
                continue
            seen.add(nxt)
            parents[nxt] = (state, aid)
            fresh.append(nxt)
        push_evaluated(fresh)
    return result("exhausted")


def blind(task, config: SearchConfig | None = None) -> SearchResult:
    """Zero heuristic; FIFO tie-breaking makes this breadth-first search,
    so plan costs are optimal for unit-cost tasks."""
    return gbfs(task, ConstantHeuristic(0.0), config)


def format_plan(task, result: SearchResult) -> str:
    """One action name per line plus a trailing cost comment."""
    assert result.status == "solved" and result.plan is not None
    lines = [task.actions[aid].name for aid in result.plan]
    lines.append(f"; cost = {result.plan_cost} (unit cost)")
    return "\n".join(lines) + "\n"
