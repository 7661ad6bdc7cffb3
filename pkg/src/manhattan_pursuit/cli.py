"""Command-line interface.

Subcommands::

    simulate     evaluate a speed assignment on a scenario (exact legs,
                 optionally cross-checked against the step simulator)
    seq-grec     run the two-pass assignment and show per-evader decisions
    brute-force  exhaustive search over extreme speeds
    baseline     random-sampling baseline
    bound        closed-form ceiling: breakdown JSON and optional sweep CSV
    fig3         assignment benchmark over seeded random scenarios -> CSV
    fig4         two-group pursuit vs ceiling over random splits -> CSV
    gen          generate a random scenario JSON

Exit codes: 0 on success, 2 on validation/usage errors, 1 on internal errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .experiments import (
    load_experiment_config,
    load_scenario,
    run_experiment_fig3,
    run_experiment_fig4,
    save_bound_results,
    save_results,
    save_scenario,
)
from .intercept import intercept_time_next, step_simulate, total_intercept_time
from .limits import (
    FIRST_GROUP_FAST,
    FIRST_GROUP_SLOW,
    BoundInputs,
    bound_inputs_from_scenario,
    optimal_nmax,
    upper_bound_time,
)
from .model import (
    ABOVE_RECT,
    IN_RECT,
    ChainState,
    Rectangle,
    SpeedBounds,
    generate_random_scenario,
    scenario_to_dict,
)
from .search import brute_force_extremes, grid_search, random_sampling_baseline
from .strategy import seq_grec


def _parse_speeds(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise ValueError(f"could not parse --speeds {text!r}: {exc}") from exc


def _print_trace(trace) -> None:
    print(f"{'leg':>3}  {'branch':<6}  {'time':>12}  {'cumulative':>12}  intercept")
    for i, leg in enumerate(trace.legs):
        print(f"{i:>3}  {leg.branch:<6}  {leg.leg_time:>12.6f}  "
              f"{leg.cumulative_time:>12.6f}  "
              f"({leg.intercept_point.x:.6f}, {leg.intercept_point.y:.6f})")
    print(f"total time: {trace.total_time:.6f}")


def _cmd_simulate(args) -> int:
    scenario = load_scenario(args.scenario)
    speeds = _parse_speeds(args.speeds)
    trace = total_intercept_time(scenario, speeds)
    if args.json:
        print(json.dumps(trace.to_dict(), indent=2))
    else:
        _print_trace(trace)
    if args.check_dt is not None:
        sim = step_simulate(scenario, speeds, dt=args.check_dt)
        worst = max(abs(a.leg_time - b.leg_time)
                    for a, b in zip(trace.legs, sim.legs))
        print(f"step simulator (dt={args.check_dt:g}): total {sim.total_time:.6f}, "
              f"max per-leg difference {worst:.3e}")
    return 0


def _cmd_seq_grec(args) -> int:
    scenario = load_scenario(args.scenario)
    result = seq_grec(scenario)
    if args.json:
        print(json.dumps(result.to_dict(), indent=2))
        return 0
    fired = {}
    for event in result.pass_log:
        if event.action == "cooperate":
            fired[event.evader_index] = event.case
    bounds = scenario.bounds
    state = ChainState.initial(scenario.pursuer)
    print(f"{'idx':>3}  {'threshold y':>12}  {'case':<6}  {'speed':>6}  label")
    for i, evader in enumerate(scenario.evaders):
        dx = abs(state.position.x - evader.x)
        threshold = state.position.y - bounds.V * (state.elapsed + dx)
        case = fired.get(i, "-")
        speed = result.assignment.speeds[i]
        label = result.assignment.labels[i]
        print(f"{i:>3}  {threshold:>12.6f}  {case:<6}  {speed:>6.3f}  {label}")
        _, _, _, state = intercept_time_next(state, evader, speed)
    print(f"total time: {result.trace.total_time:.6f}")
    return 0


def _cmd_brute_force(args) -> int:
    scenario = load_scenario(args.scenario)
    report = brute_force_extremes(scenario)
    if args.json:
        print(json.dumps({
            "speeds": list(report.best_assignment.speeds),
            "total": report.best_time,
            "evaluations": report.evaluations,
        }, indent=2))
    else:
        print(f"best speeds: {list(report.best_assignment.speeds)}")
        print(f"total time:  {report.best_time:.6f}")
        print(f"evaluations: {report.evaluations}")
    return 0


def _cmd_baseline(args) -> int:
    scenario = load_scenario(args.scenario)
    report = random_sampling_baseline(
        scenario, args.delta, seed=args.seed, num_samples=args.samples,
        cache=not args.no_cache, continuous=args.continuous)
    if args.json:
        print(json.dumps({
            "speeds": list(report.best_assignment.speeds),
            "total": report.best_time,
            "samples": report.samples,
            "evaluations": report.evaluations,
        }, indent=2))
    else:
        print(f"best speeds: {list(report.best_assignment.speeds)}")
        print(f"total time:  {report.best_time:.6f}")
        print(f"samples: {report.samples} (evaluated {report.evaluations})")
    return 0


def _cmd_search(args) -> int:
    scenario = load_scenario(args.scenario)
    if args.method == "extremes":
        report = brute_force_extremes(scenario)
    elif args.method == "grid":
        report = grid_search(scenario, args.points)
    else:
        report = random_sampling_baseline(
            scenario, args.delta, seed=args.seed, num_samples=args.samples,
            cache=not args.no_cache, continuous=args.continuous)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(f"method:      {report.method}")
        print(f"best speeds: {list(report.best_assignment.speeds)}")
        print(f"total time:  {report.best_time:.6f}")
        print(f"evaluations: {report.evaluations}"
              + (f" (of {report.samples} samples)" if report.samples else ""))
    return 0


def _bound_inputs_from_args(args) -> BoundInputs:
    if args.scenario is not None:
        scenario = load_scenario(args.scenario)
        return bound_inputs_from_scenario(
            scenario, n_max=args.n_max, a_max=args.a_max, a_min=args.a_min)
    missing = [name for name, value in
               (("--n", args.n), ("--u-min", args.u_min), ("--u-max", args.u_max))
               if value is None]
    if missing:
        raise ValueError(
            f"bound needs either --scenario or explicit inputs; missing {missing}")
    bounds = SpeedBounds(args.u_min, args.u_max)
    n_max = optimal_nmax(args.n, bounds) if args.n_max is None else args.n_max
    return BoundInputs(
        n=args.n, n_max=n_max,
        a_max=1.0 if args.a_max is None else args.a_max,
        a_min=1.0 if args.a_min is None else args.a_min,
        delta_x=args.dx, delta_y=args.dy, bounds=bounds)


def _cmd_bound(args) -> int:
    inputs = _bound_inputs_from_args(args)
    breakdown = upper_bound_time(inputs, first_group=args.first_group)
    payload = {"n": inputs.n, "n_max": inputs.n_max,
               "a_max": inputs.a_max, "a_min": inputs.a_min,
               "delta_x": inputs.delta_x, "delta_y": inputs.delta_y,
               "u_min": inputs.bounds.u_min, "u_max": inputs.bounds.u_max,
               "optimal_n_max": optimal_nmax(inputs.n, inputs.bounds)}
    payload.update(breakdown.to_dict())
    print(json.dumps(payload, indent=2))
    if args.sweep is not None:
        try:
            with open(args.sweep, "w") as handle:
                handle.write("n_max,total\n")
                for k in range(1, inputs.n):
                    swept = BoundInputs(
                        n=inputs.n, n_max=k, a_max=inputs.a_max, a_min=inputs.a_min,
                        delta_x=inputs.delta_x, delta_y=inputs.delta_y,
                        bounds=inputs.bounds)
                    total = upper_bound_time(swept, first_group=args.first_group).total
                    handle.write(f"{k},{total!r}\n")
        except OSError as exc:
            raise OSError(f"could not write sweep to {args.sweep!r}: {exc}") from exc
        print(f"sweep written to {args.sweep}", file=sys.stderr)
    return 0


def _cmd_fig3(args) -> int:
    config = load_experiment_config(args.config)
    rows, means = run_experiment_fig3(config)
    output = args.output if args.output is not None else config.output_path
    if output is None:
        raise ValueError("no output path: set output_path in the config "
                         "or pass --output")
    save_results(rows, output)
    print(f"{'n':>4}  {'seq_grec':>10}  {'greedy':>10}  {'sampling':>10}  "
          f"{'brute_force':>11}")
    for n in sorted(means):
        entry = means[n]
        brute = f"{entry['brute_force']:>11.4f}" if "brute_force" in entry else "          -"
        print(f"{n:>4}  {entry['seq_grec']:>10.4f}  {entry['greedy']:>10.4f}  "
              f"{entry['sampling']:>10.4f}  {brute}")
    print(f"rows written to {output}")
    return 0


def _cmd_fig4(args) -> int:
    config = load_experiment_config(args.config)
    rows, summary = run_experiment_fig4(config)
    output = args.output if args.output is not None else config.output_path
    if output is None:
        raise ValueError("no output path: set output_path in the config "
                         "or pass --output")
    save_bound_results(rows, output)
    print(f"{'n':>4}  {'realized mean':>13}  {'realized std':>12}  {'bound mean':>10}")
    for n in sorted(summary):
        entry = summary[n]
        print(f"{n:>4}  {entry['realized_mean']:>13.4f}  "
              f"{entry['realized_std']:>12.4f}  {entry['bound_mean']:>10.4f}")
    print(f"rows written to {output}")
    return 0


def _cmd_gen(args) -> int:
    scenario = generate_random_scenario(
        args.n, Rectangle(args.l, args.h), args.mode,
        SpeedBounds(args.u_min, args.u_max), seed=args.seed,
        sort_by_x=args.sort_by_x)
    if args.out is not None:
        save_scenario(scenario, args.out)
        print(f"scenario written to {args.out}", file=sys.stderr)
    else:
        print(json.dumps(scenario_to_dict(scenario), indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="manhattan-pursuit",
        description="Pursuit-evasion engine: exact intercept times, evader "
                    "speed assignment, search baselines, capture-time "
                    "ceilings, and seeded experiments.")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="evaluate a speed assignment on a scenario")
    p.add_argument("scenario", help="scenario JSON file")
    p.add_argument("--speeds", required=True,
                   help="comma-separated per-evader speeds, e.g. 0.2,0.8")
    p.add_argument("--check-dt", type=float, default=None, metavar="DT",
                   help="also run the step simulator with this time step")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("seq-grec", help="two-pass speed assignment")
    p.add_argument("scenario", help="scenario JSON file")
    p.add_argument("--json", action="store_true",
                   help="emit JSON including the pass log")
    p.set_defaults(func=_cmd_seq_grec)

    p = sub.add_parser("brute-force", help="exhaustive search over extreme speeds")
    p.add_argument("scenario", help="scenario JSON file")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.set_defaults(func=_cmd_brute_force)

    p = sub.add_parser("baseline", help="random-sampling baseline")
    p.add_argument("scenario", help="scenario JSON file")
    p.add_argument("--delta", type=float, default=0.1,
                   help="violation probability (default 0.1)")
    p.add_argument("--seed", type=int, default=0, help="sampling seed (default 0)")
    p.add_argument("--samples", type=int, default=None,
                   help="override the sample count")
    p.add_argument("--continuous", action="store_true",
                   help="sample speeds uniformly from [u_min, u_max] instead "
                        "of the two extremes")
    p.add_argument("--no-cache", action="store_true",
                   help="evaluate duplicate samples instead of deduplicating")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.set_defaults(func=_cmd_baseline)

    p = sub.add_parser("search", help="search baselines under one umbrella")
    p.add_argument("scenario", help="scenario JSON file")
    p.add_argument("--method", choices=["extremes", "grid", "sampling"],
                   default="extremes", help="search method (default extremes)")
    p.add_argument("--points", type=int, default=11,
                   help="grid points per evader (grid method, default 11)")
    p.add_argument("--delta", type=float, default=0.1,
                   help="violation probability (sampling method, default 0.1)")
    p.add_argument("--seed", type=int, default=0,
                   help="sampling seed (default 0)")
    p.add_argument("--samples", type=int, default=None,
                   help="override the sample count (sampling method)")
    p.add_argument("--continuous", action="store_true",
                   help="sample speeds uniformly from [u_min, u_max]")
    p.add_argument("--no-cache", action="store_true",
                   help="evaluate duplicate samples instead of deduplicating")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("bound", help="closed-form capture-time ceiling")
    p.add_argument("--scenario", default=None,
                   help="derive inputs from this scenario JSON file")
    p.add_argument("--n", type=int, default=None, help="total evader count")
    p.add_argument("--n-max", type=int, default=None,
                   help="fast-group size (default: optimal split)")
    p.add_argument("--a-max", type=float, default=None, help="fast-group area")
    p.add_argument("--a-min", type=float, default=None, help="slow-group area")
    p.add_argument("--dx", type=float, default=0.0, help="handoff |x| offset")
    p.add_argument("--dy", type=float, default=0.0, help="handoff y offset")
    p.add_argument("--u-min", type=float, default=None, help="slow speed")
    p.add_argument("--u-max", type=float, default=None, help="fast speed")
    p.add_argument("--first-group", choices=[FIRST_GROUP_FAST, FIRST_GROUP_SLOW],
                   default=FIRST_GROUP_FAST,
                   help="which group the pursuer clears first (default u_max)")
    p.add_argument("--sweep", default=None, metavar="PATH",
                   help="also write an (n_max, total) CSV over all split sizes")
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("fig3", help="assignment benchmark -> CSV")
    p.add_argument("--config", required=True, help="experiment config JSON")
    p.add_argument("--output", default=None,
                   help="CSV path (overrides config output_path)")
    p.set_defaults(func=_cmd_fig3)

    p = sub.add_parser("fig4", help="two-group pursuit vs ceiling -> CSV")
    p.add_argument("--config", required=True, help="experiment config JSON")
    p.add_argument("--output", default=None,
                   help="CSV path (overrides config output_path)")
    p.set_defaults(func=_cmd_fig4)

    p = sub.add_parser("gen", help="generate a random scenario JSON")
    p.add_argument("--n", type=int, required=True, help="evader count")
    p.add_argument("--seed", type=int, default=0, help="generator seed (default 0)")
    p.add_argument("--l", type=float, default=1.0, help="rectangle width (default 1)")
    p.add_argument("--h", type=float, default=1.0, help="rectangle height (default 1)")
    p.add_argument("--mode", choices=[IN_RECT, ABOVE_RECT], default=IN_RECT,
                   help="pursuer placement (default InRect)")
    p.add_argument("--u-min", type=float, default=0.2, help="slow speed (default 0.2)")
    p.add_argument("--u-max", type=float, default=0.8, help="fast speed (default 0.8)")
    p.add_argument("--sort-by-x", action="store_true",
                   help="sort evaders by x before numbering")
    p.add_argument("--out", default=None, help="write to this file instead of stdout")
    p.set_defaults(func=_cmd_gen)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
