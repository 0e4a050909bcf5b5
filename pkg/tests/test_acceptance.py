"""Acceptance suite: one test per criterion, each printing a pass line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines and timings. Criteria with a stated runtime budget assert it; the
kernels are compiled by the session fixture first so no budget pays for
JIT work.
"""

import csv
import math
import random
import time
import xml.etree.ElementTree as ET

from rahmanisort import (
    ALGORITHM_IDS,
    BenchConfig,
    FAST_ALGORITHMS,
    PYTHON_ALGORITHMS,
    TaggedRecord,
    predict_insertion,
    predict_rahmani,
    rahmani_sort,
    read_dataset,
    reconcile,
    render_line_chart,
    run_suite,
    shift_moves,
    sort_tagged,
    summarize,
    write_dataset,
    write_records_csv,
    write_summary_csv,
)
import rahmanisort.sorts as sorts_module
from rahmanisort.bench import RAW_CSV_HEADER, SUMMARY_CSV_HEADER
from rahmanisort.datagen import CASE_KINDS, dataset_for


def _report(number: int, label: str, started: float, budget: float | None = None):
    elapsed = time.perf_counter() - started
    if budget is not None:
        assert elapsed < budget, f"criterion {number} took {elapsed:.2f}s, budget {budget}s"
    print(f"criterion {number} ({label}): PASS [{elapsed:.2f}s]")


def test_criterion_01_oracle_correctness():
    started = time.perf_counter()
    rng = random.Random(20240601)
    for index in range(1000):
        n = rng.randint(0, 1024)
        if index % 2 == 0:
            values = [rng.randrange(max(1, n // 4)) for _ in range(n)]  # duplicate-heavy
        else:
            values = [rng.randrange(2**31 - 1) for _ in range(n)]
        expected = sorted(values)
        for alg in ALGORITHM_IDS:
            work = list(values)
            FAST_ALGORITHMS[alg](work, 16)
            assert work == expected, (alg, index)
    _report(1, "oracle correctness, 1000 arrays x 7 algorithms", started, budget=10.0)


def test_criterion_02_known_example():
    started = time.perf_counter()
    source = [13, 4, 1, 45, 30, 8, 10, 7, 5]
    expected = [1, 4, 5, 7, 8, 10, 13, 30, 45]
    for registry in (FAST_ALGORITHMS, PYTHON_ALGORITHMS):
        for alg in ALGORITHM_IDS:
            work = list(source)
            registry[alg](work, 16)
            assert work == expected, alg
    _report(2, "known example through every algorithm", started)


def test_criterion_03_best_case_exactness():
    started = time.perf_counter()
    for n in (500, 2500, 5000):
        ascending = list(range(n))
        for alg in ("rahmani-faithful", "rahmani-stable"):
            stats = FAST_ALGORITHMS[alg](list(ascending), 16)
            assert stats.element_moves == 0
            assert stats.isearch_calls == 0
            assert stats.early_continues == n - 1
            assert stats.key_comparisons == n - 1
    # spot-check the reference engine at the smallest size
    stats = rahmani_sort(list(range(500)), "faithful")
    assert (stats.element_moves, stats.isearch_calls) == (0, 0)
    _report(3, "best-case counter exactness", started, budget=1.0)


def test_criterion_04_worst_case_exactness():
    started = time.perf_counter()
    for n in (10, 100, 1000):
        descending = list(range(n - 1, -1, -1))
        rahmani_stats = FAST_ALGORITHMS["rahmani-faithful"](list(descending), 16)
        assert rahmani_stats.isearch_calls == 0
        assert shift_moves(rahmani_stats) == n * (n - 1) // 2
        insertion_stats = FAST_ALGORITHMS["insertion"](list(descending), 16)
        assert shift_moves(insertion_stats) == n * (n - 1) // 2
    _report(4, "worst-case counter exactness", started, budget=1.0)


def test_criterion_05_probe_bound(monkeypatch):
    started = time.perf_counter()
    calls = []
    real_core = sorts_module._isearch_core

    def recording_core(a, lower, upper, key):
        j, probes = real_core(a, lower, upper, key)
        calls.append((upper - lower + 1, probes))
        return j, probes

    monkeypatch.setattr(sorts_module, "_isearch_core", recording_core)
    n = 1000
    rng = random.Random(77)
    values = rng.sample(range(2**31 - 1), n)
    stats = rahmani_sort(list(values), "faithful")
    assert calls, "random input must exercise the search"
    for segment_length, probes in calls:
        assert probes <= math.floor(math.log2(segment_length)) + 1
    budget = sum(math.log2(i) for i in range(2, n + 1))
    assert 0.5 * budget <= stats.isearch_probes <= 1.5 * budget
    _report(5, "probe bound per call and in total", started, budget=1.0)


def test_criterion_06_comparison_dominance():
    started = time.perf_counter()
    rng = random.Random(9090)
    for n in (500, 5000):
        for _ in range(25):
            values = rng.sample(range(2**31 - 1), n)
            rahmani_stats = FAST_ALGORITHMS["rahmani-faithful"](list(values), 16)
            insertion_stats = FAST_ALGORITHMS["insertion"](list(values), 16)
            assert (
                rahmani_stats.key_comparisons + rahmani_stats.isearch_probes
                < insertion_stats.key_comparisons
            )
    _report(6, "comparison dominance on 50 random instances", started, budget=5.0)


def test_criterion_07_stability():
    started = time.perf_counter()
    witness = [TaggedRecord(5, 0), TaggedRecord(5, 1), TaggedRecord(9, 2), TaggedRecord(5, 3)]
    out = sort_tagged("rahmani-faithful", witness)
    assert out == [TaggedRecord(5, 3), TaggedRecord(5, 0), TaggedRecord(5, 1), TaggedRecord(9, 2)]
    rng = random.Random(555)
    for _ in range(200):
        n = rng.randint(0, 48)
        bound = max(1, n // 3)
        records = [TaggedRecord(rng.randrange(bound), arrival) for arrival in range(n)]
        expected = sorted(records, key=lambda r: r.key)
        for alg in ("rahmani-stable", "insertion", "bubble", "merge"):
            assert sort_tagged(alg, records) == expected, alg
    _report(7, "stability of the stable four plus the instability witness", started)


def test_criterion_08_cost_model_reconciliation():
    started = time.perf_counter()
    for n in (10, 100, 1000):
        ascending = list(range(n))
        descending = list(range(n - 1, -1, -1))
        for alg in ("rahmani-faithful", "rahmani-stable"):
            assert reconcile(predict_rahmani(n, "best"),
                             FAST_ALGORITHMS[alg](list(ascending), 16)).ok
            assert reconcile(predict_rahmani(n, "worst"),
                             FAST_ALGORITHMS[alg](list(descending), 16)).ok
        assert reconcile(predict_insertion(n, "best"),
                         FAST_ALGORITHMS["insertion"](list(ascending), 16)).ok
        assert reconcile(predict_insertion(n, "worst"),
                         FAST_ALGORITHMS["insertion"](list(descending), 16)).ok
    _report(8, "cost model exact on canonical inputs", started, budget=1.0)


def test_criterion_09_bench_pipeline(tmp_path):
    started = time.perf_counter()
    cfg = BenchConfig(
        sizes=(50000,),
        trials=10,
        warmups=2,
        seed=42,
        algorithms=("rahmani-faithful", "bubble"),
        cases=("average",),
    )
    records = run_suite(cfg)
    assert len(records) == 20
    rows = summarize(records)
    medians = {row.algorithm: row.median_ns for row in rows}
    assert medians["bubble"] >= 5 * medians["rahmani-faithful"], medians
    raw_path = tmp_path / "raw.csv"
    summary_path = tmp_path / "summary.csv"
    write_records_csv(records, raw_path)
    write_summary_csv(rows, summary_path)
    raw_lines = raw_path.read_text().splitlines()
    assert raw_lines[0] == RAW_CSV_HEADER and len(raw_lines) == 21
    assert summary_path.read_text().splitlines()[0] == SUMMARY_CSV_HEADER
    assert len(list(csv.DictReader(raw_path.open()))) == 20
    for case in cfg.cases:
        svg = render_line_chart(rows, case)
        root = ET.fromstring(svg)
        polylines = root.findall(".//{http://www.w3.org/2000/svg}polyline")
        assert len(polylines) == len(cfg.algorithms)
        (tmp_path / f"chart-{case}.svg").write_text(svg)
    _report(9, "bench pipeline with >=5x rahmani-over-bubble margin", started, budget=120.0)


def test_criterion_10_dataset_determinism(tmp_path):
    started = time.perf_counter()
    first_dir = tmp_path / "first"
    second_dir = tmp_path / "second"
    first_dir.mkdir()
    second_dir.mkdir()
    for size in (500, 2500, 5000):
        for case in CASE_KINDS:
            name = f"{case}-{size}.txt"
            a = dataset_for(case, size, 42)
            b = dataset_for(case, size, 42)
            write_dataset(a, first_dir / name)
            write_dataset(b, second_dir / name)
            assert (first_dir / name).read_bytes() == (second_dir / name).read_bytes()
            assert read_dataset(first_dir / name) == a
    _report(10, "dataset determinism and round-trip identity", started, budget=1.0)
