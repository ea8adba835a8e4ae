"""Command-line entry point. See docs/cli.md for the full flag reference.

Every subcommand that writes files takes --out-dir, writes only inside it,
and records the fully resolved configuration in run.json there, so any run
can be reproduced byte-for-byte from that file plus the inputs. All
randomness flows from --seed through tagged substreams. Wall-clock numbers
go to separate timings files; primary outputs are deterministic.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from . import __version__
from .bench import SuiteSpec, build_training_set, default_suite, generate, load_suite, write_suite
from .errors import PlanlearnError
from .expressiveness import run_theory_checks
from .graphs import IndexEncoder, build_flg, build_llg, build_slg, graph_to_dot, graph_to_json
from .heuristics import h_dp, h_ff, h_plus, h_star
from .nn import TrainConfig, load_model, save_model, train
from .search import (
    ConstantHeuristic,
    ModelHeuristic,
    OracleHeuristic,
    SearchConfig,
    blind,
    format_plan,
    gbfs,
    run_experiment,
)
from .task import dump_strips, ground, parse_pddl, parse_sas, strips_view
from .task.ground import ground_state_atoms


class UsageError(Exception):
    pass


def _parse_sizes(text: str) -> tuple[int, ...]:
    """Accepts '1:10' (inclusive range) or '15,20,25'."""
    if ":" in text:
        lo, hi = text.split(":", 1)
        return tuple(range(int(lo), int(hi) + 1))
    return tuple(int(tok) for tok in text.split(",") if tok)


def _read(path: str) -> str:
    return Path(path).read_text()


def _load_tasks(args):
    """(strips_task, grounding_map, lifted_task_or_None, fdr_or_None)."""
    if getattr(args, "sas", None):
        fdr = parse_sas(_read(args.sas))
        return strips_view(fdr), None, None, fdr
    if not args.domain or not args.problem:
        raise UsageError("need --domain and --problem (or --sas)")
    lifted = parse_pddl(_read(args.domain), _read(args.problem))
    strips, gmap = ground(lifted)
    return strips, gmap, lifted, None


def _out_dir(args) -> Path:
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _write_run_json(args, out: Path):
    resolved = {k: v for k, v in sorted(vars(args).items()) if k != "func"}
    payload = {"tool": "planlearn", "version": __version__, "config": resolved}
    (out / "run.json").write_text(json.dumps(payload, indent=1, default=str) + "\n")


# ── subcommands ───────────────────────────────────────────────────────────

def cmd_ground(args) -> int:
    strips, _, _, _ = _load_tasks(args)
    out = _out_dir(args)
    _write_run_json(args, out)
    (out / "task.strips").write_text(dump_strips(strips))
    print(f"{len(strips.propositions)} propositions, {len(strips.actions)} actions, "
          f"{len(strips.goal)} goal facts -> {out / 'task.strips'}")
    return 0


def cmd_graph(args) -> int:
    strips, gmap, lifted, fdr = _load_tasks(args)
    if args.kind == "slg":
        graph = build_slg(strips, strips.init)
    elif args.kind == "flg":
        if fdr is None:
            from .task import binary_fdr_view
            fdr = binary_fdr_view(strips)
        graph = build_flg(fdr, fdr.init)
    else:
        if lifted is None:
            raise UsageError("the lifted encoding needs --domain/--problem input")
        encoder = IndexEncoder(args.index_dim, seed=args.seed)
        graph = build_llg(lifted, ground_state_atoms(gmap, strips.init), encoder)
    out = _out_dir(args)
    _write_run_json(args, out)
    (out / "graph.json").write_text(graph_to_json(graph) + "\n")
    (out / "graph.dot").write_text(graph_to_dot(graph))
    print(f"{args.kind}: {graph.num_nodes} nodes, {graph.num_edges} edges "
          f"{graph.label_counts()} -> {out / 'graph.json'}")
    return 0


def cmd_gen(args) -> int:
    if args.train or args.validate or args.test:
        if not (args.train and args.test):
            raise UsageError("--train and --test must be given together")
        spec = SuiteSpec(args.domain, _parse_sizes(args.train),
                         _parse_sizes(args.validate) if args.validate else (),
                         _parse_sizes(args.test), args.seed)
    else:
        spec = default_suite(args.domain, args.seed)
    suite = generate(spec)
    out = _out_dir(args)
    write_suite(suite, out)
    _write_run_json(args, out)
    print(f"{len(suite.instances)} instances -> {out / 'manifest.json'}")
    return 0


def cmd_train(args) -> int:
    suite = load_suite(args.suite)
    samples = build_training_set(suite.split("train"), args.kind,
                                 encoder_seed=args.seed, index_dim=args.index_dim)
    config = TrainConfig(seed=args.seed, layer_count=args.layers,
                         hidden_dim=args.hidden, aggregator=args.aggregator,
                         readout=args.readout, max_epochs=args.max_epochs)
    model, trace = train(samples, config)
    out = _out_dir(args)
    _write_run_json(args, out)
    save_model(model, out / "model.json")
    (out / "trace.csv").write_text(trace.to_csv())
    (out / "timings.csv").write_text(trace.timings_csv())
    last = trace.rows[-1]
    print(f"{len(samples)} samples, {len(trace.rows)} epochs ({trace.stop_reason}), "
          f"final train MSE {last.train_loss:.4f}, holdout MSE {last.holdout_loss:.4f}")
    print(f"model -> {out / 'model.json'}")
    return 0


def _search_setup(args, strips, gmap, lifted, fdr):
    """Returns (search task, heuristic or None for blind). The search task
    matches what the heuristic evaluates: finite-domain models search the
    finite-domain task, everything else the propositional one."""
    name = args.heuristic
    if name == "blind":
        return strips, None
    if name != "model":
        return strips, OracleHeuristic(strips, name)
    if not args.model:
        raise UsageError("--heuristic model needs --model FILE")
    model = load_model(args.model)
    if model.kind.name == "flg":
        if fdr is None:
            from .task import binary_fdr_view
            fdr = binary_fdr_view(strips)
        return fdr, ModelHeuristic(model, fdr)
    if model.kind.name == "llg":
        if lifted is None:
            raise UsageError("lifted-encoding models need --domain/--problem input")
        # index embeddings must match training: derive from the model's seed
        return strips, ModelHeuristic(model, strips, lifted=lifted, gmap=gmap)
    return strips, ModelHeuristic(model, strips)


def cmd_solve(args) -> int:
    strips, gmap, lifted, fdr = _load_tasks(args)
    config = SearchConfig(timeout_s=args.timeout, node_cap=args.node_cap,
                          eval_batch=args.eval_batch)
    search_task, heuristic = _search_setup(args, strips, gmap, lifted, fdr)
    result = blind(search_task, config) if heuristic is None \
        else gbfs(search_task, heuristic, config)
    out = _out_dir(args)
    _write_run_json(args, out)
    (out / "result.json").write_text(
        json.dumps(result.to_json_dict(), indent=1) + "\n")
    (out / "timings.json").write_text(
        json.dumps({"wall_nanos": result.wall_nanos}) + "\n")
    if result.status == "solved":
        (out / "plan.txt").write_text(format_plan(search_task, result))
        print(f"solved: cost {result.plan_cost}, {result.expansions} expansions, "
              f"{result.evaluations} evaluations -> {out / 'plan.txt'}")
        return 0
    print(f"{result.status}: {result.expansions} expansions, "
          f"{result.evaluations} evaluations")
    return 0 if result.status == "exhausted" else 1


def cmd_oracle(args) -> int:
    strips, _, _, _ = _load_tasks(args)
    start = time.perf_counter_ns()
    if args.heuristic in ("hmax", "hadd"):
        value = h_dp(strips, strips.init, args.heuristic[1:])
    elif args.heuristic == "hff":
        value = h_ff(strips, strips.init)
    elif args.heuristic == "hplus":
        value = h_plus(strips)
    else:
        value = h_star(strips)
    nanos = time.perf_counter_ns() - start
    payload = {
        "heuristic": args.heuristic,
        "value": "inf" if value.infinite else value.value,
        "iterations": value.iterations,
        "nanoseconds": nanos,
    }
    print(json.dumps(payload))
    if args.out_dir:
        out = _out_dir(args)
        _write_run_json(args, out)
        stable = {k: v for k, v in payload.items() if k != "nanoseconds"}
        (out / "oracle.json").write_text(json.dumps(stable, indent=1) + "\n")
    return 0


def cmd_theory(args) -> int:
    verdicts = run_theory_checks(seed=args.seed, models=args.models,
                                 random_tasks=args.random_tasks)
    out = _out_dir(args)
    _write_run_json(args, out)
    (out / "verdicts.json").write_text(
        json.dumps([v.to_json_dict() for v in verdicts], indent=1) + "\n")
    for v in verdicts:
        status = "PASS" if v.passed else "FAIL"
        print(f"{status} {v.check} [{v.graph_kind}] wl_equal={v.wl_equal} "
              f"gap={v.model_gap} h={v.h_values}")
    failed = [v for v in verdicts if not v.passed]
    print(f"{len(verdicts) - len(failed)}/{len(verdicts)} checks passed")
    return 1 if failed else 0


def cmd_experiment(args) -> int:
    suite = load_suite(args.suite)
    instances = suite.split(args.split)
    if not instances:
        raise UsageError(f"split {args.split!r} is empty")
    tasks = []
    grounded = {}
    for inst in instances:
        strips, gmap = ground(inst.task)
        grounded[inst.name] = (strips, gmap, inst.task)
        tasks.append((inst.name, strips))

    factories = []
    for spec in args.heuristics.split(","):
        spec = spec.strip()
        if spec == "blind":
            factories.append(("blind", lambda task: ConstantHeuristic(0.0)))
        elif spec.startswith("model:"):
            model = load_model(spec.split(":", 1)[1])
            if model.kind.name == "flg":
                raise UsageError("experiment sweeps run on the propositional view; "
                                 "solve finite-domain models with the solve subcommand")

            def factory(task, model=model):
                name = next(n for n, (s, _, _) in grounded.items() if s is task)
                strips, gmap, lifted = grounded[name]
                if model.kind.name == "llg":
                    return ModelHeuristic(model, strips, lifted=lifted, gmap=gmap)
                return ModelHeuristic(model, strips)

            factories.append((f"model-{model.kind.name}", factory))
        else:
            factories.append((spec, lambda task, w=spec: OracleHeuristic(task, w)))

    config = SearchConfig(timeout_s=args.timeout, node_cap=args.node_cap,
                          eval_batch=args.eval_batch)
    table = run_experiment(tasks, factories, config, jobs=args.jobs)
    out = _out_dir(args)
    _write_run_json(args, out)
    (out / "results.csv").write_text(table.to_csv())
    (out / "coverage.csv").write_text(table.coverage_csv())
    (out / "timings.csv").write_text(table.timings_csv())
    for name, (solved, total) in sorted(table.coverage().items()):
        print(f"{name}: {solved}/{total} solved")
    print(f"results -> {out / 'results.csv'}")
    return 0



# ── wiring ────────────────────────────────────────────────────────────────

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planlearn",
        description="Graph encodings of planning tasks, learned heuristics, "
                    "search, and expressiveness checks.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=fn)
        p.add_argument("--seed", type=int, default=0)
        return p

    p = add("ground", cmd_ground, "parse and ground a task, dump interchange format")
    p.add_argument("--domain"), p.add_argument("--problem"), p.add_argument("--sas")
    p.add_argument("--out-dir", required=True)

    p = add("graph", cmd_graph, "build a learning graph for the initial state")
    p.add_argument("--domain"), p.add_argument("--problem"), p.add_argument("--sas")
    p.add_argument("--kind", choices=("slg", "flg", "llg"), required=True)
    p.add_argument("--index-dim", type=int, default=4)
    p.add_argument("--out-dir", required=True)

    p = add("gen", cmd_gen, "generate a benchmark suite")
    p.add_argument("--domain", required=True,
                   choices=("gripper", "blocksworld", "visitall", "spanner"))
    p.add_argument("--train"), p.add_argument("--validate"), p.add_argument("--test")
    p.add_argument("--out-dir", required=True)

    p = add("train", cmd_train, "train a model on a suite's train split")
    p.add_argument("--suite", required=True, help="path to manifest.json")
    p.add_argument("--kind", choices=("slg", "flg", "llg"), required=True)
    p.add_argument("--index-dim", type=int, default=4)
    p.add_argument("--layers", type=int, default=8)
    p.add_argument("--hidden", type=int, default=64)
    p.add_argument("--aggregator", choices=("mean", "max", "sum"), default="mean")
    p.add_argument("--readout", choices=("sum", "mean", "max"), default="sum")
    p.add_argument("--max-epochs", type=int, default=10_000)
    p.add_argument("--out-dir", required=True)

    p = add("solve", cmd_solve, "search for a plan")
    p.add_argument("--domain"), p.add_argument("--problem"), p.add_argument("--sas")
    p.add_argument("--heuristic", default="blind",
                   choices=("blind", "hmax", "hadd", "hff", "hplus", "hstar", "model"))
    p.add_argument("--model")
    p.add_argument("--timeout", type=float, default=300.0)
    p.add_argument("--node-cap", type=int, default=10**6)
    p.add_argument("--eval-batch", type=int, default=64)
    p.add_argument("--out-dir", required=True)

    p = add("oracle", cmd_oracle, "print exact heuristic values as JSON")
    p.add_argument("--domain"), p.add_argument("--problem"), p.add_argument("--sas")
    p.add_argument("--heuristic", required=True,
                   choices=("hmax", "hadd", "hff", "hplus", "hstar"))
    p.add_argument("--out-dir", help="also record run.json and oracle.json here")

    p = add("theory", cmd_theory, "run all expressiveness checks")
    p.add_argument("--models", type=int, default=100)
    p.add_argument("--random-tasks", type=int, default=200)
    p.add_argument("--out-dir", required=True)

    p = add("experiment", cmd_experiment, "coverage sweep over a suite split")
    p.add_argument("--suite", required=True)
    p.add_argument("--split", default="test", choices=("train", "validate", "test"))
    p.add_argument("--heuristics", default="blind,hff",
                   help="comma list: blind, hmax, hadd, hff, hplus, hstar, model:PATH")
    p.add_argument("--timeout", type=float, default=300.0)
    p.add_argument("--node-cap", type=int, default=10**6)
    p.add_argument("--eval-batch", type=int, default=64)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out-dir", required=True)

    return parser


def cli_main(argv=None) -> int:
    logging.basicConfig(format="%(levelname)s: %(message)s", level=logging.WARNING)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc} (see docs/cli.md or --help)", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: file not found: {exc.filename}", file=sys.stderr)
        return 1
    except PlanlearnError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
