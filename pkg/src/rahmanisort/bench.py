"""Timing harness: monotonic nanosecond clock around the sort call only.

The protocol is strictly sequential; trials never overlap. Each trial
copies the dataset into a fresh working array before the clock starts, so
no trial ever benchmarks a previously sorted array, and the sorted output
is verified after the clock stops. Wall-clock numbers are sensitive to
machine and load; counters are deterministic.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from . import datagen
from .fastsorts import FAST_ALGORITHMS, warm_kernels
from .sorts import ALGORITHM_IDS, DEFAULT_CUTOFF
from .stats import SortStats

DEFAULT_BENCH_SIZES = (500, 2500, 5000, 50000)
DEFAULT_TRIALS = 10
DEFAULT_WARMUPS = 2
DEFAULT_CASES = ("best", "average", "worst")

RAW_CSV_HEADER = (
    "algorithm,case,size,trial,elapsed_ns,key_comparisons,element_moves,"
    "isearch_calls,isearch_probes,early_continues"
)
SUMMARY_CSV_HEADER = "algorithm,case,size,min_ns,median_ns,mean_ns,max_ns"


class TrialVerificationError(RuntimeError):
    """A sort produced out-of-order output; the benchmark must abort."""

    def __init__(self, algorithm: str, detail: str):
        super().__init__(f"verification failed for {algorithm}: {detail}")
        self.algorithm = algorithm


@dataclass(frozen=True)
class BenchConfig:
    sizes: tuple[int, ...] = DEFAULT_BENCH_SIZES
    trials: int = DEFAULT_TRIALS
    warmups: int = DEFAULT_WARMUPS
    seed: int = 42
    algorithms: tuple[str, ...] = ALGORITHM_IDS
    cases: tuple[str, ...] = DEFAULT_CASES
    cutoff: int = DEFAULT_CUTOFF
    range_bound: int = datagen.DEFAULT_RANGE_BOUND

    def validate(self) -> None:
        if not self.sizes:
            raise ValueError("sizes must be non-empty")
        if any(s < 0 for s in self.sizes):
            raise ValueError("sizes must be non-negative")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.warmups < 0:
            raise ValueError("warmups must be >= 0")
        if self.cutoff < 0:
            raise ValueError("cutoff must be >= 0")
        unknown = [a for a in self.algorithms if a not in ALGORITHM_IDS]
        if unknown:
            raise ValueError(f"unknown algorithms: {unknown}")
        bad = [c for c in self.cases if c not in datagen.CASE_KINDS]
        if bad:
            raise ValueError(f"unknown cases: {bad}")


@dataclass(frozen=True)
class BenchmarkRecord:
    algorithm: str
    case: str
    size: int
    trial: int
    elapsed_ns: int
    stats: SortStats


@dataclass(frozen=True)
class SummaryRow:
    algorithm: str
    case: str
    size: int
    min_ns: int
    median_ns: int
    mean_ns: float
    max_ns: int


def run_trial(alg: str, dataset: datagen.Dataset, cutoff: int = DEFAULT_CUTOFF,
              trial: int = 1, algorithms=None) -> BenchmarkRecord:
    """Time one sort of a fresh copy of the dataset.

    Only the sort call sits between the two clock reads; copying in and
    verification happen outside the window.
    """
    registry = FAST_ALGORITHMS if algorithms is None else algorithms
    fn = registry[alg]
    work = np.array(dataset.values, dtype=np.int32)
    start = time.perf_counter_ns()
    stats = fn(work, cutoff)
    stop = time.perf_counter_ns()
    if work.shape[0] != dataset.size:
        raise TrialVerificationError(alg, f"output length {work.shape[0]} != {dataset.size}")
    if work.shape[0] > 1 and not bool(np.all(work[:-1] <= work[1:])):
        bad = int(np.flatnonzero(work[:-1] > work[1:])[0])
        raise TrialVerificationError(
            alg, f"output not non-decreasing at index {bad} "
            f"(case={dataset.case}, size={dataset.size})"
        )
    return BenchmarkRecord(alg, dataset.case, dataset.size, trial, stop - start, stats)


def _build_datasets(cfg: BenchConfig) -> dict[tuple[str, int], datagen.Dataset]:
    # one derivation chain per size, shared by every algorithm and trial
    built: dict[tuple[str, int], datagen.Dataset] = {}
    for size in cfg.sizes:
        average = datagen.gen_average(size, cfg.seed, cfg.range_bound)
        chain = {"average": average}
        if "best" in cfg.cases or "worst" in cfg.cases:
            chain["best"] = datagen.derive_best(average)
        if "worst" in cfg.cases:
            chain["worst"] = datagen.derive_worst(chain["best"])
        if "half_sorted" in cfg.cases:
            chain["half_sorted"] = datagen.derive_half_sorted(average)
        for case in cfg.cases:
            built[(case, size)] = chain[case]
    return built


def run_suite(cfg: BenchConfig, algorithms=None) -> list[BenchmarkRecord]:
    """Run the full (case, size, algorithm, trial) grid, strictly sequentially.

    Datasets are generated once per size from cfg.seed; every algorithm
    sees identical inputs. Warmup runs execute untimed before the
    recorded trials. Records are returned in (case, size, algorithm,
    trial) order.
    """
    cfg.validate()
    if algorithms is None:
        # compile outside any timed window, even when warmups are 0
        warm_kernels()
    datasets = _build_datasets(cfg)
    records = []
    for case in cfg.cases:
        for size in cfg.sizes:
            dataset = datasets[(case, size)]
            for alg in cfg.algorithms:
                for _ in range(cfg.warmups):
                    run_trial(alg, dataset, cfg.cutoff, trial=0, algorithms=algorithms)
                for trial in range(1, cfg.trials + 1):
                    records.append(
                        run_trial(alg, dataset, cfg.cutoff, trial=trial, algorithms=algorithms)
                    )
    return records


def summarize(records: list[BenchmarkRecord]) -> list[SummaryRow]:
    """One row per (algorithm, case, size); median is the lower-middle
    element for even trial counts."""
    groups: dict[tuple[str, str, int], list[int]] = {}
    for record in records:
        groups.setdefault((record.algorithm, record.case, record.size), []).append(
            record.elapsed_ns
        )
    rows = []
    for (alg, case, size), elapsed in groups.items():
        ordered = sorted(elapsed)
        rows.append(
            SummaryRow(
                algorithm=alg,
                case=case,
                size=size,
                min_ns=ordered[0],
                median_ns=ordered[(len(ordered) - 1) // 2],
                mean_ns=sum(ordered) / len(ordered),
                max_ns=ordered[-1],
            )
        )
    return rows


def write_records_csv(records: list[BenchmarkRecord], destination) -> None:
    lines = [RAW_CSV_HEADER]
    for r in records:
        s = r.stats
        lines.append(
            f"{r.algorithm},{r.case},{r.size},{r.trial},{r.elapsed_ns},"
            f"{s.key_comparisons},{s.element_moves},{s.isearch_calls},"
            f"{s.isearch_probes},{s.early_continues}"
        )
    with open(destination, "w", encoding="utf-8", newline="") as fh:
        fh.write("\n".join(lines) + "\n")


def write_summary_csv(rows: list[SummaryRow], destination) -> None:
    lines = [SUMMARY_CSV_HEADER]
    for r in rows:
        lines.append(
            f"{r.algorithm},{r.case},{r.size},{r.min_ns},{r.median_ns},"
            f"{r.mean_ns:.1f},{r.max_ns}"
        )
    with open(destination, "w", encoding="utf-8", newline="") as fh:
        fh.write("\n".join(lines) + "\n")


def read_summary_csv(source) -> list[SummaryRow]:
    """Parse a summary CSV produced by write_summary_csv."""
    with open(source, "r", encoding="utf-8") as fh:
        lines = [line.rstrip("\n") for line in fh if line.strip()]
    if not lines or lines[0] != SUMMARY_CSV_HEADER:
        raise ValueError(f"not a summary CSV (bad header): {source}")
    rows = []
    for line in lines[1:]:
        alg, case, size, min_ns, median_ns, mean_ns, max_ns = line.split(",")
        rows.append(
            SummaryRow(alg, case, int(size), int(min_ns), int(median_ns),
                       float(mean_ns), int(max_ns))
        )
    return rows
