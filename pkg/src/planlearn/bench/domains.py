"""Seeded desk-scale instance generators for four benchmark domains.

Each generator emits PDDL text; the returned task is obtained by parsing
that text back, so emitted files round-trip by construction. All instances
are solvable by construction and byte-identical for a fixed (size, seed).
"""

from __future__ import annotations

import numpy as np

from ..errors import InvalidSize
from ..seeding import derive_seed

GRIPPER_DOMAIN = """\
;; Two-room ball-transport domain with a two-gripper robot.
(define (domain gripper)
  (:requirements :strips)
  (:predicates (room ?r) (ball ?b) (gripper ?g)
               (at-robby ?r) (at ?b ?r) (free ?g) (carry ?o ?g))
  (:action move
    :parameters (?from ?to)
    :precondition (and (room ?from) (room ?to) (at-robby ?from))
    :effect (and (at-robby ?to) (not (at-robby ?from))))
  (:action pick
    :parameters (?obj ?room ?gripper)
    :precondition (and (ball ?obj) (room ?room) (gripper ?gripper)
                       (at ?obj ?room) (at-robby ?room) (free ?gripper))
    :effect (and (carry ?obj ?gripper) (not (at ?obj ?room)) (not (free ?gripper))))
  (:action drop
    :parameters (?obj ?room ?gripper)
    :precondition (and (ball ?obj) (room ?room) (gripper ?gripper)
                       (carry ?obj ?gripper) (at-robby ?room))
    :effect (and (at ?obj ?room) (free ?gripper) (not (carry ?obj ?gripper)))))
"""

BLOCKSWORLD_DOMAIN = """\
;; Classic single-arm tower construction.
(define (domain blocksworld)
  (:requirements :strips)
  (:predicates (block ?x) (on ?x ?y) (ontable ?x) (clear ?x) (handempty) (holding ?x))
  (:action pick-up
    :parameters (?x)
    :precondition (and (block ?x) (clear ?x) (ontable ?x) (handempty))
    :effect (and (holding ?x) (not (ontable ?x)) (not (clear ?x)) (not (handempty))))
  (:action put-down
    :parameters (?x)
    :precondition (and (block ?x) (holding ?x))
    :effect (and (ontable ?x) (clear ?x) (handempty) (not (holding ?x))))
  (:action stack
    :parameters (?x ?y)
    :precondition (and (block ?x) (block ?y) (holding ?x) (clear ?y))
    :effect (and (on ?x ?y) (clear ?x) (handempty) (not (holding ?x)) (not (clear ?y))))
  (:action unstack
    :parameters (?x ?y)
    :precondition (and (block ?x) (block ?y) (on ?x ?y) (clear ?x) (handempty))
    :effect (and (holding ?x) (clear ?y) (not (on ?x ?y)) (not (clear ?x)) (not (handempty)))))
"""

VISITALL_DOMAIN = """\
;; Visit every cell of a grid.
(define (domain visitall)
  (:requirements :strips)
  (:predicates (place ?p) (connected ?a ?b) (at-robot ?p) (visited ?p))
  (:action move
    :parameters (?from ?to)
    :precondition (and (place ?from) (place ?to) (at-robot ?from) (connected ?from ?to))
    :effect (and (at-robot ?to) (visited ?to) (not (at-robot ?from)))))
"""

SPANNER_DOMAIN = """\
;; One-way walk collecting single-use spanners to tighten nuts at the gate.
(define (domain spanner)
  (:requirements :strips)
  (:predicates (man ?m) (spanner ?s) (nut ?n) (location ?l)
               (at ?o ?l) (carrying ?m ?s) (useable ?s) (loose ?n) (tightened ?n)
               (link ?a ?b))
  (:action walk
    :parameters (?start ?end ?m)
    :precondition (and (location ?start) (location ?end) (man ?m)
                       (at ?m ?start) (link ?start ?end))
    :effect (and (at ?m ?end) (not (at ?m ?start))))
  (:action pickup
    :parameters (?l ?s ?m)
    :precondition (and (location ?l) (spanner ?s) (man ?m) (at ?m ?l) (at ?s ?l))
    :effect (and (carrying ?m ?s) (not (at ?s ?l))))
  (:action tighten
    :parameters (?l ?s ?m ?n)
    :precondition (and (location ?l) (spanner ?s) (man ?m) (nut ?n)
                       (at ?m ?l) (at ?n ?l) (carrying ?m ?s) (useable ?s) (loose ?n))
    :effect (and (tightened ?n) (not (loose ?n)) (not (useable ?s)))))
"""

DOMAIN_TEXT = {
    "gripper": GRIPPER_DOMAIN,
    "blocksworld": BLOCKSWORLD_DOMAIN,
    "visitall": VISITALL_DOMAIN,
    "spanner": SPANNER_DOMAIN,
}


def gripper_problem(balls: int, seed: int = 0) -> str:
    """All balls start in room a and must reach room b. Deterministic."""
    if balls < 1:
        raise InvalidSize(f"gripper needs at least 1 ball, got {balls}")
    names = [f"ball{i}" for i in range(1, balls + 1)]
    init = ["(room rooma)", "(room roomb)", "(gripper left)", "(gripper right)",
            "(free left)", "(free right)", "(at-robby rooma)"]
    init += [f"(ball {b})" for b in names]
    init += [f"(at {b} rooma)" for b in names]
    goal = [f"(at {b} roomb)" for b in names]
    return _problem_text(f"gripper-{balls}", "gripper",
                         ["rooma", "roomb", "left", "right"] + names, init, goal)


def _stacks_from_permutation(rng: np.random.Generator, blocks: list[str]) -> list[list[str]]:
    """Random permutation dealt into stacks: each block starts a new stack or
    tops an existing one, uniformly over the options."""
    order = list(rng.permutation(blocks))
    stacks: list[list[str]] = []
    for b in order:
        choice = int(rng.integers(0, len(stacks) + 1))
        if choice == len(stacks):
            stacks.append([b])
        else:
            stacks[choice].append(b)
    return stacks


def _stack_atoms(stacks: list[list[str]]) -> list[str]:
    atoms = []
    for stack in stacks:
        atoms.append(f"(ontable {stack[0]})")
        for below, above in zip(stack, stack[1:]):
            atoms.append(f"(on {above} {below})")
        atoms.append(f"(clear {stack[-1]})")
    return atoms


def blocksworld_problem(blocks: int, seed: int = 0) -> str:
    """Random initial and goal stackings; always solvable."""
    if blocks < 2:
        raise InvalidSize(f"blocksworld needs at least 2 blocks, got {blocks}")
    names = [f"b{i}" for i in range(1, blocks + 1)]
    rng = np.random.default_rng(derive_seed(seed, f"blocksworld-{blocks}"))
    init = _stack_atoms(_stacks_from_permutation(rng, names)) + ["(handempty)"]
    init += [f"(block {b})" for b in names]
    goal_stacks = _stacks_from_permutation(rng, names)
    goal = []
    for stack in goal_stacks:
        goal.append(f"(ontable {stack[0]})")
        for below, above in zip(stack, stack[1:]):
            goal.append(f"(on {above} {below})")
    return _problem_text(f"blocksworld-{blocks}", "blocksworld", names, init, goal)


def visitall_problem(n: int, seed: int = 0) -> str:
    """n-by-n grid, 4-neighborhood, robot in the corner, every cell a goal."""
    if n < 2:
        raise InvalidSize(f"visitall needs a grid of at least 2x2, got {n}")
    cells = {(x, y): f"c{x}-{y}" for x in range(n) for y in range(n)}
    init = [f"(place {c})" for c in cells.values()]
    for (x, y), c in cells.items():
        for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1)):
            if (x + dx, y + dy) in cells:
                init.append(f"(connected {c} {cells[(x + dx, y + dy)]})")
    init += ["(at-robot c0-0)", "(visited c0-0)"]
    goal = [f"(visited {c})" for c in cells.values()]
    return _problem_text(f"visitall-{n}", "visitall", list(cells.values()), init, goal)


def spanner_problem(size: int, seed: int = 0, locations: int = 3) -> str:
    """size nuts at the gate, size spanners scattered along the walk."""
    if size < 1:
        raise InvalidSize(f"spanner needs at least 1 nut, got {size}")
    rng = np.random.default_rng(derive_seed(seed, f"spanner-{size}"))
    locs = ["shed"] + [f"loc{i}" for i in range(1, locations + 1)] + ["gate"]
    spanners = [f"spanner{i}" for i in range(1, size + 1)]
    nuts = [f"nut{i}" for i in range(1, size + 1)]
    init = [f"(location {l})" for l in locs]
    init += [f"(link {a} {b})" for a, b in zip(locs, locs[1:])]
    init += ["(man bob)", "(at bob shed)"]
    middle = locs[1:-1]
    for s in spanners:
        where = middle[int(rng.integers(0, len(middle)))]
        init += [f"(spanner {s})", f"(useable {s})", f"(at {s} {where})"]
    for nut in nuts:
        init += [f"(nut {nut})", f"(loose {nut})", f"(at {nut} gate)"]
    goal = [f"(tightened {nut})" for nut in nuts]
    return _problem_text(f"spanner-{size}", "spanner",
                         locs + ["bob"] + spanners + nuts, init, goal)


GENERATORS = {
    "gripper": gripper_problem,
    "blocksworld": blocksworld_problem,
    "visitall": visitall_problem,
    "spanner": spanner_problem,
}


def _problem_text(name: str, domain: str, objects: list[str],
                  init: list[str], goal: list[str]) -> str:
    lines = [f"(define (problem {name})", f"  (:domain {domain})",
             f"  (:objects {' '.join(objects)})", "  (:init"]
    lines += [f"    {atom}" for atom in init]
    lines += ["  )", "  (:goal (and"]
    lines += [f"    {atom}" for atom in goal]
    lines += ["  ))", ")"]
    return "\n".join(lines) + "\n"
