#!/usr/bin/env python3
"""
POISE Simulator

Closed-loop optimization of NMR experiment parameters against a simulated
spectrometer: an optimizer proposes parameters, a spectrum is acquired and
scored by the routine's cost function, and the loop repeats until the
parameters are known to within the routine's tolerances.

Usage:
    python poise_cli.py <command> [options]

Commands:
    run ROUTINE             Optimize a stored routine
    dosy                    Find DOSY gradient amplitude and diffusion delay
    parse-log FILE          Summarize an optimization log
    routines list           List stored routines
    routines validate       Check every stored routine

Examples:
    python poise_cli.py run p1cal --algorithm nm --seed 1
    python poise_cli.py run ernst --region 6,8 --out output/ernst
    python poise_cli.py run p1cal --algorithm grid --max-fev 41
    python poise_cli.py dosy --mode sequential --sim-config sim.cfg
    python poise_cli.py parse-log output/poise.log
"""

import argparse
import os
import sys
from typing import List, Optional

# Add src to path for imports
current_dir = os.path.dirname(__file__)
sys.path.insert(0, current_dir)

from utils import PoiseError, init_logging
from optim import Algorithm
from spectra import Region
from routines import list_routines, validate_routines
from harness import PoiseRun, RunConfig, parse_log, report, resolve_sim_config
from dosydriver import DosyPlan, SequentialDosyDriver, SimultaneousDosyDriver

ALGORITHM_CHOICES = [a.value for a in Algorithm] + ["bobyqa"]


def _add_common_run_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--algorithm",
        "-a",
        choices=ALGORITHM_CHOICES,
        default="tr",
        help="Optimization algorithm (tr is the trust-region method)",
    )
    parser.add_argument("--max-fev", type=int, help="Maximum number of evaluations")
    parser.add_argument("--seed", type=int, help="Noise seed (default: from sim config)")
    parser.add_argument("--sim-config", help="Simulator configuration file")
    parser.add_argument("--out", "-o", default="output", help="Output directory")
    parser.add_argument("--routines-dir", help="Directory holding routine files")
    parser.add_argument("--user-costs", help="Python file registering extra cost functions")
    parser.add_argument("--started", help="Timestamp written to log headers")


def parse_arguments(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse command line arguments."""
    parser = argparse.ArgumentParser(
        description="Optimize NMR experiment parameters on a simulated spectrometer",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__.split("Usage:")[1] if "Usage:" in __doc__ else "",
    )
    parser.add_argument("--verbose", "-v", action="store_true", help="Enable verbose output")
    commands = parser.add_subparsers(dest="command", required=True)

    run_parser = commands.add_parser("run", help="Optimize a stored routine")
    run_parser.add_argument("routine", help="Routine name")
    _add_common_run_options(run_parser)
    run_parser.add_argument(
        "--region", default="whole", help="Spectral region 'lo,hi' in ppm, or 'whole'"
    )
    run_parser.add_argument(
        "--grid-steps",
        type=lambda text: [int(v) for v in text.split(",")],
        help="Comma-separated grid points per parameter (grid algorithm)",
    )

    dosy_parser = commands.add_parser("dosy", help="DOSY parameter search")
    dosy_parser.add_argument(
        "--mode", choices=["sequential", "simultaneous"], default="sequential"
    )
    _add_common_run_options(dosy_parser)
    dosy_parser.add_argument("--delta-init", type=float, default=DosyPlan.delta_init)
    dosy_parser.add_argument("--delta-step", type=float, default=DosyPlan.delta_step)
    dosy_parser.add_argument("--delta-max", type=float, default=DosyPlan.delta_max)

    log_parser = commands.add_parser("parse-log", help="Summarize an optimization log")
    log_parser.add_argument("file", help="Log file")

    routines_parser = commands.add_parser("routines", help="Inspect stored routines")
    routines_parser.add_argument("action", choices=["list", "validate"])
    routines_parser.add_argument("--routines-dir", help="Directory holding routine files")

    return parser.parse_args(argv)


def command_run(args: argparse.Namespace) -> int:
    """Optimize one routine, print the optimum and write result files."""
    cfg = RunConfig(
        routine=args.routine,
        algorithm=args.algorithm,
        max_fev=args.max_fev,
        grid_steps=args.grid_steps,
        region=Region.parse(args.region),
        user_costs=args.user_costs,
        seed=args.seed,
        sim_config=args.sim_config,
        out_dir=args.out,
        routines_dir=args.routines_dir,
        started=args.started,
    )
    poise_run = PoiseRun(cfg)
    result = poise_run.execute()

    print(f"Optimum for {poise_run.routine.name} ({result.termination.value}):")
    for par, value in zip(poise_run.routine.pars, result.x_best):
        print(f"  • {par} = {value:.6g}")
    print(f"  • cost = {result.f_best:.6g}")
    print(f"  • evaluations = {result.nfev}")

    for path in report(result, cfg, poise_run.routine):
        print(f"Written: {path}")
    print(f"Written: {poise_run.log_path}")
    return 0


def command_dosy(args: argparse.Namespace) -> int:
    """Run one of the DOSY drivers."""
    sim = resolve_sim_config(RunConfig(routine="dosy", sim_config=args.sim_config,
                                       seed=args.seed))
    settings = dict(
        sim=sim,
        algorithm=Algorithm.parse(args.algorithm),
        max_fev=args.max_fev,
        routines_dir=args.routines_dir,
        out_dir=args.out,
        started=args.started,
    )

    if args.mode == "sequential":
        plan = DosyPlan(args.delta_init, args.delta_step, args.delta_max)
        driver = SequentialDosyDriver(plan, **settings)
        delta, g_max, result = driver.run()
        for probe_delta, f_att in driver.probes:
            print(f"  probe d20 = {probe_delta:.3f} s: f_att = {f_att:+.4f}")
        print(f"d20 = {delta:.3f} s, gpz1 = {g_max:.2f}% "
              f"(cost {result.f_best:.4g}, {result.nfev} evaluations)")
    else:
        driver = SimultaneousDosyDriver(**settings)
        result = driver.run()
        print(f"gpz1 = {result.x_best[0]:.2f}%, d20 = {result.x_best[1]:.4f} s "
              f"(cost {result.f_best:.4g}, {result.nfev} evaluations)")

    print(f"Acquisitions: {driver.acquisitions}")
    return 0


def command_parse_log(args: argparse.Namespace) -> int:
    """Print a log's header, row count and best row."""
    record = parse_log(args.file)
    for key, value in record.header.items():
        print(f"{key}: {value}")
    print(f"evaluations: {record.nfev}")
    best = record.best
    values = ", ".join(f"{p} = {v:.6g}" for p, v in zip(record.pars, best.values))
    print(f"best: {values}; cost {best.cost:.6g} ({best.termination.value})")
    return 0


def command_routines(args: argparse.Namespace) -> int:
    """List routine names, or validate every routine file."""
    if args.action == "list":
        for name in list_routines(args.routines_dir):
            print(name)
        return 0

    failures = 0
    for name, ok, message in validate_routines(args.routines_dir):
        print(f"{'ok  ' if ok else 'FAIL'} {name}: {message}")
        failures += 0 if ok else 1
    if failures:
        print(f"{failures} routine(s) failed validation")
        return 1
    return 0


COMMANDS = {
    "run": command_run,
    "dosy": command_dosy,
    "parse-log": command_parse_log,
    "routines": command_routines,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point."""
    args = parse_arguments(argv)
    init_logging(args.verbose)

    try:
        return COMMANDS[args.command](args)

    except PoiseError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    except KeyboardInterrupt:
        print("\nOperation cancelled by user", file=sys.stderr)
        return 130
    except Exception as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        if args.verbose:
            import traceback

            traceback.print_exc()
        return 1


if __name__ == "__main__":
    sys.exit(main())
