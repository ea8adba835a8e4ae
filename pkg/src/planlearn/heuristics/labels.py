"""Training labels from optimal plans: a plan of length g contributes the
states it visits with targets g, g-1, ..., 0."""

from __future__ import annotations

from ..errors import InvalidPlan
from ..task.model import apply, initial_state, validate_plan


def label_dataset(task, plan) -> list[tuple[object, int]]:
    check = validate_plan(task, plan)
    if not check.valid:
        raise InvalidPlan(f"cannot label from an invalid plan: {check.reason}")
    samples = []
    state = initial_state(task)
    g = len(plan)
    for i, aid in enumerate(plan):
        samples.append((state, g - i))
        state = apply(task, state, aid)
    samples.append((state, 0))
    return samples
