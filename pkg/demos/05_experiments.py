"""Monte Carlo experiments: algorithm comparison and ceiling tightness.

The first experiment draws random scenarios at several crowd sizes and
compares the mean worst-case capture time found by each speed-assignment
method (greedy, two-pass cooperative, random sampling, and — while it stays
affordable — the exact corner search).  The second draws larger crowds,
assigns the recommended fast/slow split, replays the two-tour pursuit, and
checks the realized time against the closed-form ceiling.

Every cell (n, trial) gets its own seed derived from (master_seed, n,
trial), so adding trials or crowd sizes never changes existing cells, and
two runs with the same config are byte-identical.
"""

import argparse
import pathlib
import tempfile

from manhattan_pursuit import (
    ExperimentConfig,
    Rectangle,
    SpeedBounds,
    run_experiment_fig3,
    run_experiment_fig4,
    save_bound_results,
    save_results,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=20)
    parser.add_argument("--master-seed", type=int, default=0)
    parser.add_argument("--out-dir", type=pathlib.Path, default=None,
                        help="directory for the CSV files (default: a "
                             "temporary directory)")
    args = parser.parse_args()
    out_dir = args.out_dir or pathlib.Path(tempfile.mkdtemp(prefix="pursuit_"))
    out_dir.mkdir(parents=True, exist_ok=True)

    config = ExperimentConfig(
        n_values=(2, 4, 6, 8), trials=args.trials, delta=0.1,
        rect=Rectangle(1.0, 1.0), bounds=SpeedBounds(0.2, 0.8),
        master_seed=args.master_seed,
    )
    rows, means = run_experiment_fig3(config)
    print(f"assignment methods, {args.trials} trials per crowd size "
          f"(mean worst-case capture time):")
    print(f"{'n':>4}  {'greedy':>10}  {'seq_grec':>10}  {'sampling':>10}  "
          f"{'brute':>10}")
    for n in config.n_values:
        entry = means[n]
        brute = f"{entry['brute_force']:>10.4f}" if "brute_force" in entry else f"{'-':>10}"
        print(f"{n:>4}  {entry['greedy']:>10.4f}  {entry['seq_grec']:>10.4f}  "
              f"{entry['sampling']:>10.4f}  {brute}")
    path3 = out_dir / "assignment_comparison.csv"
    save_results(rows, str(path3))
    print(f"rows written to {path3}\n")

    config4 = ExperimentConfig(
        n_values=(25, 50, 100), trials=args.trials,
        rect=Rectangle(1.0, 1.0), bounds=SpeedBounds(0.2, 0.8),
        master_seed=args.master_seed,
    )
    rows4, summary = run_experiment_fig4(config4)
    print(f"two-tour pursuit vs. the closed-form ceiling:")
    print(f"{'n':>4}  {'realized mean':>14}  {'realized std':>13}  "
          f"{'ceiling mean':>13}")
    for n in config4.n_values:
        entry = summary[n]
        print(f"{n:>4}  {entry['realized_mean']:>14.4f}  "
              f"{entry['realized_std']:>13.4f}  {entry['bound_mean']:>13.4f}")
    path4 = out_dir / "ceiling_check.csv"
    save_bound_results(rows4, str(path4))
    print(f"rows written to {path4}")


if __name__ == "__main__":
    main()
