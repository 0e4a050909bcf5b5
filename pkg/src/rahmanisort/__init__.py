"""Instrumented sorting algorithms with a cost model and benchmark harness.

The centrepiece is Rahmani sort, a binary-search insertion sort that
skips already-placed elements; it ships in two flavours (the classical
formulation and a stabilized one) next to the five comparison sorts it is
measured against, all with exact operation counters.
"""

from .bench import (
    BenchConfig,
    BenchmarkRecord,
    SummaryRow,
    TrialVerificationError,
    run_suite,
    run_trial,
    summarize,
    write_records_csv,
    write_summary_csv,
)
from .chart import render_line_chart, write_chart
from .cost_model import (
    ReconciliationReport,
    StepCountVector,
    predict_insertion,
    predict_rahmani,
    reconcile,
)
from .datagen import (
    Dataset,
    DatasetFormatError,
    dataset_for,
    derive_best,
    derive_half_sorted,
    derive_worst,
    gen_average,
    read_dataset,
    write_dataset,
)
from .fastsorts import FAST_ALGORITHMS, fast_sort, warm_kernels
from .sorts import (
    ALGORITHM_IDS,
    DEFAULT_CUTOFF,
    PYTHON_ALGORITHMS,
    TaggedRecord,
    bubble_sort,
    insertion_sort,
    isearch,
    isearch_stable,
    merge_sort,
    quick_sort,
    rahmani_sort,
    selection_sort,
    sort_tagged,
)
from .stats import SortStats, placement_moves, shift_moves
from .verify import VerificationReport, run_verification

__version__ = "0.1.0"

__all__ = [
    "ALGORITHM_IDS",
    "BenchConfig",
    "BenchmarkRecord",
    "Dataset",
    "DatasetFormatError",
    "DEFAULT_CUTOFF",
    "FAST_ALGORITHMS",
    "PYTHON_ALGORITHMS",
    "ReconciliationReport",
    "SortStats",
    "StepCountVector",
    "SummaryRow",
    "TaggedRecord",
    "TrialVerificationError",
    "VerificationReport",
    "bubble_sort",
    "dataset_for",
    "derive_best",
    "derive_half_sorted",
    "derive_worst",
    "fast_sort",
    "gen_average",
    "insertion_sort",
    "isearch",
    "isearch_stable",
    "merge_sort",
    "placement_moves",
    "predict_insertion",
    "predict_rahmani",
    "quick_sort",
    "rahmani_sort",
    "read_dataset",
    "reconcile",
    "render_line_chart",
    "run_suite",
    "run_trial",
    "run_verification",
    "selection_sort",
    "shift_moves",
    "sort_tagged",
    "summarize",
    "warm_kernels",
    "write_chart",
    "write_dataset",
    "write_records_csv",
    "write_summary_csv",
]
