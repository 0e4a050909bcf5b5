"""Command-line interface: gen, bench, verify, model, plot."""

from __future__ import annotations

import argparse
import json
import platform
import sys
from pathlib import Path

from . import bench, chart, cost_model, datagen, verify
from .fastsorts import FAST_ALGORITHMS, warm_kernels
from .sorts import ALGORITHM_IDS, DEFAULT_CUTOFF


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}") from exc


def _name_list(valid, kind: str):
    def parse(text: str) -> list[str]:
        names = [part for part in text.split(",") if part != ""]
        unknown = [n for n in names if n not in valid]
        if unknown:
            raise argparse.ArgumentTypeError(
                f"unknown {kind}: {', '.join(unknown)} (choose from {', '.join(valid)})"
            )
        return names

    return parse


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rahmanisort",
        description="Instrumented sorting algorithms, benchmark harness, "
                    "cost-model checks, and charts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate dataset files")
    gen.add_argument("--sizes", type=_int_list, default=list(datagen.FULL_SIZES),
                     help="comma-separated element counts (default: the full eight-size roster)")
    gen.add_argument("--seed", type=int, default=42, help="64-bit generator seed")
    gen.add_argument("--range", dest="range_bound", type=int,
                     default=datagen.DEFAULT_RANGE_BOUND,
                     help="exclusive upper bound on generated values")
    gen.add_argument("--cases", type=_name_list(datagen.CASE_KINDS, "cases"),
                     default=list(datagen.CASE_KINDS),
                     help="comma-separated subset of average,best,worst,half_sorted")
    gen.add_argument("--out-dir", type=Path, default=Path("datasets"))

    bn = sub.add_parser("bench", help="run timed trials, write raw and summary CSV")
    bn.add_argument("--sizes", type=_int_list, default=None,
                    help=f"comma-separated sizes (default {','.join(map(str, bench.DEFAULT_BENCH_SIZES))})")
    bn.add_argument("--cases", type=_name_list(datagen.CASE_KINDS, "cases"),
                    default=list(bench.DEFAULT_CASES))
    bn.add_argument("--algorithms", type=_name_list(ALGORITHM_IDS, "algorithms"),
                    default=list(ALGORITHM_IDS))
    bn.add_argument("--trials", type=int, default=None)
    bn.add_argument("--warmups", type=int, default=None)
    bn.add_argument("--seed", type=int, default=42)
    bn.add_argument("--cutoff", type=int, default=DEFAULT_CUTOFF)
    bn.add_argument("--range", dest="range_bound", type=int,
                    default=datagen.DEFAULT_RANGE_BOUND)
    bn.add_argument("--out-dir", type=Path, default=Path("results"))
    bn.add_argument("--full", action="store_true",
                    help="full protocol: the eight-size roster, 10 trials, no warmups")

    vf = sub.add_parser("verify", help="run the correctness property suites")
    vf.add_argument("--samples", type=int, default=1000)
    vf.add_argument("--max-size", type=int, default=1024)
    vf.add_argument("--seed", type=int, default=42)

    md = sub.add_parser("model", help="compare step-count predictions with instrumented runs")
    md.add_argument("--sizes", type=_int_list, default=[10, 100, 1000])
    md.add_argument("--cases", type=_name_list(cost_model.CASE_KINDS, "cases"),
                    default=list(cost_model.CASE_KINDS))
    md.add_argument("--tolerance", type=float, default=0.5)
    md.add_argument("--seed", type=int, default=42)
    md.add_argument("--out", type=Path, default=None, help="reconciliation CSV path")

    pl = sub.add_parser("plot", help="render an SVG line chart from a summary CSV")
    pl.add_argument("--summary", type=Path, required=True)
    pl.add_argument("--case", required=True)
    pl.add_argument("--out", type=Path, required=True)

    return parser


def _cmd_gen(args) -> int:
    if args.seed < 0 or args.seed >= 2**64:
        print("error: seed must fit in 64 unsigned bits", file=sys.stderr)
        return 2
    if any(size < 0 for size in args.sizes):
        print("error: sizes must be non-negative", file=sys.stderr)
        return 2
    if not 1 <= args.range_bound <= 2**31:
        print("error: --range must be in [1, 2**31]", file=sys.stderr)
        return 2
    args.out_dir.mkdir(parents=True, exist_ok=True)
    for size in args.sizes:
        average = datagen.gen_average(size, args.seed, args.range_bound)
        chain = {"average": average}
        if "best" in args.cases or "worst" in args.cases:
            chain["best"] = datagen.derive_best(average)
        if "worst" in args.cases:
            chain["worst"] = datagen.derive_worst(chain["best"])
        if "half_sorted" in args.cases:
            chain["half_sorted"] = datagen.derive_half_sorted(average)
        for case in args.cases:
            dataset = chain[case]
            path = args.out_dir / f"{case}-{size}.txt"
            datagen.write_dataset(dataset, path)
            print(f"wrote {path} case={case} size={size} "
                  f"seed={args.seed} range={args.range_bound}")
    return 0


def _resolve_bench_config(args) -> bench.BenchConfig:
    """Fold the --full preset and the plain defaults into a BenchConfig;
    explicit flags always win over the preset."""
    sizes = args.sizes
    trials = args.trials
    warmups = args.warmups
    if args.full:
        sizes = sizes if sizes is not None else list(datagen.FULL_SIZES)
        trials = trials if trials is not None else 10
        warmups = warmups if warmups is not None else 0
    return bench.BenchConfig(
        sizes=tuple(sizes if sizes is not None else bench.DEFAULT_BENCH_SIZES),
        trials=trials if trials is not None else bench.DEFAULT_TRIALS,
        warmups=warmups if warmups is not None else bench.DEFAULT_WARMUPS,
        seed=args.seed,
        algorithms=tuple(args.algorithms),
        cases=tuple(args.cases),
        cutoff=args.cutoff,
        range_bound=args.range_bound,
    )


def _cmd_bench(args) -> int:
    cfg = _resolve_bench_config(args)
    try:
        cfg.validate()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    args.out_dir.mkdir(parents=True, exist_ok=True)
    try:
        records = bench.run_suite(cfg)
    except bench.TrialVerificationError as exc:
        print(f"benchmark aborted: {exc}", file=sys.stderr)
        return 1
    raw_path = args.out_dir / "raw.csv"
    summary_path = args.out_dir / "summary.csv"
    bench.write_records_csv(records, raw_path)
    bench.write_summary_csv(bench.summarize(records), summary_path)
    meta = {
        "config": {
            "sizes": list(cfg.sizes),
            "trials": cfg.trials,
            "warmups": cfg.warmups,
            "seed": cfg.seed,
            "algorithms": list(cfg.algorithms),
            "cases": list(cfg.cases),
            "cutoff": cfg.cutoff,
            "range_bound": cfg.range_bound,
        },
        "timer": "time.perf_counter_ns (monotonic)",
        "environment": {
            "python": platform.python_version(),
            "platform": platform.platform(),
        },
        "note": "wall-clock results are machine- and load-sensitive; "
                "no CPU pinning or priority elevation is attempted",
    }
    meta_path = args.out_dir / "run-meta.json"
    meta_path.write_text(json.dumps(meta, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {raw_path} ({len(records)} trials)")
    print(f"wrote {summary_path}")
    print(f"wrote {meta_path}")
    return 0


def _cmd_verify(args) -> int:
    if args.samples < 0 or args.max_size < 0:
        print("error: --samples and --max-size must be non-negative", file=sys.stderr)
        return 2
    report = verify.run_verification(args.samples, args.max_size, args.seed)
    for check in report.checks:
        marker = "ok " if check.passed else "FAIL"
        detail = f": {check.detail}" if check.detail else ""
        print(f"{marker} {check.name}{detail}")
    if report.ok:
        print("all checks passed")
        return 0
    print("verification failed", file=sys.stderr)
    return 1


def _cmd_model(args) -> int:
    if args.tolerance < 0:
        print("error: --tolerance must be non-negative", file=sys.stderr)
        return 2
    if any(n < 0 for n in args.sizes):
        print("error: sizes must be non-negative", file=sys.stderr)
        return 2
    warm_kernels()
    reports = []
    for n in args.sizes:
        for case in args.cases:
            if case == "best":
                canonical = list(range(n))
            elif case == "worst":
                canonical = list(range(n - 1, -1, -1))
            else:
                canonical = datagen.gen_average(n, args.seed).values
            for alg, predictor in (
                ("insertion", cost_model.predict_insertion),
                ("rahmani-faithful", cost_model.predict_rahmani),
            ):
                work = list(canonical)
                stats = FAST_ALGORITHMS[alg](work, DEFAULT_CUTOFF)
                reports.append(cost_model.reconcile(predictor(n, case), stats, args.tolerance))
    print(f"{'algorithm':<18} {'case':<8} {'n':>7} {'step':<5} "
          f"{'predicted':>14} {'measured':>12} {'mode':<10} verdict")
    for report in reports:
        for row in report.rows:
            verdict = "pass" if row.passed else "FAIL"
            predicted = cost_model.format_count(row.predicted)
            print(f"{report.algorithm:<18} {report.case:<8} {report.n:>7} {row.step:<5} "
                  f"{predicted:>14} {row.measured:>12} {row.mode:<10} {verdict}")
    if args.out is not None:
        cost_model.write_report_csv(reports, args.out)
        print(f"wrote {args.out}")
    return 0


def _cmd_plot(args) -> int:
    try:
        rows = bench.read_summary_csv(args.summary)
    except FileNotFoundError:
        print(f"error: no such file: {args.summary}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        chart.write_chart(rows, args.case, args.out)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {args.out}")
    return 0


_COMMANDS = {
    "gen": _cmd_gen,
    "bench": _cmd_bench,
    "verify": _cmd_verify,
    "model": _cmd_model,
    "plot": _cmd_plot,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    return _COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
