"""Self-check suites behind the `verify` CLI command.

Four gates (known example, randomized oracle equivalence, counter
exactness on canonical inputs, binary-search probe bounds) plus the
stability suite. rahmani-faithful is expected to be unstable; the suite
passes when its instability witness reproduces exactly and flags the
variant in the report detail.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from . import cost_model
from .fastsorts import FAST_ALGORITHMS, warm_kernels
from .sorts import ALGORITHM_IDS, TaggedRecord, isearch, isearch_stable, rahmani_sort, sort_tagged
from .stats import SortStats

EXAMPLE_INPUT = [13, 4, 1, 45, 30, 8, 10, 7, 5]
EXAMPLE_SORTED = [1, 4, 5, 7, 8, 10, 13, 30, 45]

STABLE_ALGORITHMS = ("rahmani-stable", "insertion", "bubble", "merge")

WITNESS_INPUT = (
    TaggedRecord(5, 0),
    TaggedRecord(5, 1),
    TaggedRecord(9, 2),
    TaggedRecord(5, 3),
)
# the late duplicate is sent to the front by the <= front guard
WITNESS_FAITHFUL_OUTPUT = (
    TaggedRecord(5, 3),
    TaggedRecord(5, 0),
    TaggedRecord(5, 1),
    TaggedRecord(9, 2),
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)


def _preview(values, limit: int = 24) -> str:
    if len(values) <= limit:
        return repr(list(values))
    return repr(list(values[:limit]))[:-1] + f", ... {len(values)} items]"


def _check_known_example(registry) -> CheckResult:
    for alg in ALGORITHM_IDS:
        work = list(EXAMPLE_INPUT)
        registry[alg](work, 16)
        if list(work) != EXAMPLE_SORTED:
            return CheckResult(
                "known-example", False,
                f"{alg} produced {work} for {EXAMPLE_INPUT}"
            )
    return CheckResult("known-example", True, f"{len(ALGORITHM_IDS)} algorithms")


def _random_values(rng: random.Random, n: int, duplicate_heavy: bool) -> list[int]:
    if duplicate_heavy:
        bound = max(1, n // 4)
        return [rng.randrange(bound) for _ in range(n)]
    return [rng.randrange(2**31 - 1) for _ in range(n)]


def _check_oracle(registry, samples: int, max_size: int, seed: int) -> CheckResult:
    rng = random.Random(seed)
    for index in range(samples):
        n = rng.randint(0, max_size)
        values = _random_values(rng, n, duplicate_heavy=index % 2 == 0)
        expected = sorted(values)
        for alg in ALGORITHM_IDS:
            work = list(values)
            registry[alg](work, 16)
            if work != expected:
                return CheckResult(
                    "oracle-equivalence", False,
                    f"sample {index}: {alg} mis-sorted n={n}, input={_preview(values)}"
                )
    return CheckResult(
        "oracle-equivalence", True,
        f"{samples} seeded arrays, n in [0, {max_size}], all {len(ALGORITHM_IDS)} algorithms"
    )


def _check_counters(registry) -> CheckResult:
    for n in (10, 100, 1000):
        ascending = list(range(n))
        descending = list(range(n - 1, -1, -1))
        plans = [
            ("rahmani-faithful", cost_model.predict_rahmani, ascending, "best"),
            ("rahmani-faithful", cost_model.predict_rahmani, descending, "worst"),
            ("rahmani-stable", cost_model.predict_rahmani, ascending, "best"),
            ("rahmani-stable", cost_model.predict_rahmani, descending, "worst"),
            ("insertion", cost_model.predict_insertion, ascending, "best"),
            ("insertion", cost_model.predict_insertion, descending, "worst"),
        ]
        for alg, predictor, canonical, case in plans:
            work = list(canonical)
            stats = registry[alg](work, 16)
            report = cost_model.reconcile(predictor(n, case), stats)
            bad = [r for r in report.rows if not r.passed]
            if bad:
                row = bad[0]
                return CheckResult(
                    "counter-exactness", False,
                    f"{alg} {case} n={n}: {row.step} predicted {row.predicted}, "
                    f"measured {row.measured}"
                )
    return CheckResult("counter-exactness", True, "best/worst canonical inputs, n in {10, 100, 1000}")


def _probe_budget(n: int) -> float:
    return sum(math.log2(i) for i in range(2, n + 1))


def _check_probe_bound(seed: int, n: int = 1000) -> CheckResult:
    rng = random.Random(seed)
    keys = rng.sample(range(10 * n), n)
    prefix = sorted(keys)
    for m in range(1, n):
        segment = prefix[:m]
        limit = math.floor(math.log2(m)) + 1
        for key in (segment[0] - 1, segment[-1] + 1, segment[m // 2], rng.randrange(10 * n)):
            for search in (isearch, isearch_stable):
                stats = SortStats()
                search(segment, 0, m - 1, key, stats)
                if stats.isearch_probes > limit:
                    return CheckResult(
                        "probe-bound", False,
                        f"{search.__name__} used {stats.isearch_probes} probes on "
                        f"segment length {m} (limit {limit}, key {key})"
                    )
    run_stats = rahmani_sort(list(keys), "faithful")
    budget = _probe_budget(n)
    if not 0.5 * budget <= run_stats.isearch_probes <= 1.5 * budget:
        return CheckResult(
            "probe-bound", False,
            f"total probes {run_stats.isearch_probes} outside +/-50% of {budget:.1f}"
        )
    return CheckResult(
        "probe-bound", True,
        f"per-call bound on every segment length up to {n - 1}; "
        f"total {run_stats.isearch_probes} within +/-50% of {budget:.1f}"
    )


def _stable_oracle(records) -> list[TaggedRecord]:
    return sorted(records, key=lambda r: r.key)


def _check_stability(samples: int, seed: int) -> CheckResult:
    witness = sort_tagged("rahmani-faithful", WITNESS_INPUT)
    if tuple(witness) != WITNESS_FAITHFUL_OUTPUT:
        return CheckResult(
            "stability", False,
            f"rahmani-faithful witness mismatch: got {witness}"
        )
    rng = random.Random(seed)
    rounds = min(200, samples) if samples else 0
    for index in range(rounds):
        n = rng.randint(0, 48)
        bound = max(1, n // 3)
        records = [TaggedRecord(rng.randrange(bound), arrival) for arrival in range(n)]
        expected = _stable_oracle(records)
        for alg in STABLE_ALGORITHMS:
            result = sort_tagged(alg, records)
            if result != expected:
                return CheckResult(
                    "stability", False,
                    f"sample {index}: {alg} broke arrival order on "
                    f"{_preview([(r.key, r.arrival) for r in records])}"
                )
    return CheckResult(
        "stability", True,
        f"{', '.join(STABLE_ALGORITHMS)} stable on {rounds} duplicate-heavy inputs; "
        "rahmani-faithful not stable (witness reproduced, as constructed)"
    )


def run_verification(samples: int = 1000, max_size: int = 1024, seed: int = 42,
                     algorithms=None) -> VerificationReport:
    """Run every suite; `algorithms` overrides the sort registry (test hook)."""
    if samples < 0:
        raise ValueError("samples must be non-negative")
    if max_size < 0:
        raise ValueError("max_size must be non-negative")
    registry = FAST_ALGORITHMS if algorithms is None else algorithms
    if algorithms is None:
        warm_kernels()
    checks = [
        _check_known_example(registry),
        _check_oracle(registry, samples, max_size, seed),
        _check_counters(registry),
        _check_probe_bound(seed),
        _check_stability(samples, seed),
    ]
    return VerificationReport(tuple(checks))
