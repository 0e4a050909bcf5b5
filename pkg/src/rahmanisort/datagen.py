"""Reproducible benchmark datasets and their on-disk format.

The derivation chain is fixed: a uniform-random draw is the average case,
its ascending sort the best case, the reversal of that the worst case,
and sorting just the first half of the random draw gives the
approximately-half-sorted case. Everything is a pure function of
(case, size, seed, range_bound).

The generator is CPython's random.Random (Mersenne Twister); randrange
performs unbiased rejection sampling into [0, range_bound).

File format v1, line-oriented text:
    line 1:       # rahmani-dataset v1 case=<case> size=<N> seed=<S> range=<R>
    lines 2..N+1: one base-10 integer per line, newline-terminated
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from pathlib import Path

CASE_KINDS = ("average", "best", "worst", "half_sorted")

PARENT_CASE = {"average": None, "best": "average", "worst": "best", "half_sorted": "average"}

DEFAULT_RANGE_BOUND = 2147483647

FULL_SIZES = (500, 2500, 5000, 50000, 100000, 625000, 1250000, 2500000)

_MAX_SEED = 2**64
_KEY_MIN = -(2**31)
_KEY_MAX = 2**31 - 1


class DatasetFormatError(ValueError):
    """A dataset file failed to parse; the message names the line."""


@dataclass
class Dataset:
    case: str
    size: int
    seed: int
    range_bound: int
    values: list[int]
    derived_from: str | None = field(default=None)

    def __post_init__(self):
        if self.derived_from is None:
            self.derived_from = PARENT_CASE[self.case]


def _check_params(size: int, seed: int, range_bound: int) -> None:
    if size < 0:
        raise ValueError("size must be non-negative")
    if not 0 <= seed < _MAX_SEED:
        raise ValueError("seed must fit in 64 unsigned bits")
    if not 1 <= range_bound <= _KEY_MAX + 1:
        raise ValueError("range_bound must be in [1, 2**31]")


def gen_average(size: int, seed: int, range_bound: int = DEFAULT_RANGE_BOUND) -> Dataset:
    """Draw size values independently uniform in [0, range_bound)."""
    _check_params(size, seed, range_bound)
    rng = random.Random(seed)
    values = [rng.randrange(range_bound) for _ in range(size)]
    return Dataset("average", size, seed, range_bound, values)


def _check_parent(d: Dataset, expected_case: str) -> None:
    if d.case != expected_case:
        raise ValueError(f"expected a {expected_case} dataset, got case={d.case!r}")


def derive_best(d: Dataset) -> Dataset:
    """Ascending sort of an average dataset."""
    _check_parent(d, "average")
    return Dataset("best", d.size, d.seed, d.range_bound, sorted(d.values))


def derive_worst(d: Dataset) -> Dataset:
    """Exact reversal of a best dataset."""
    _check_parent(d, "best")
    return Dataset("worst", d.size, d.seed, d.range_bound, d.values[::-1])


def derive_half_sorted(d: Dataset) -> Dataset:
    """Sort the first ceil(size/2) positions of an average dataset, keep the rest."""
    _check_parent(d, "average")
    half = (d.size + 1) // 2
    values = sorted(d.values[:half]) + d.values[half:]
    return Dataset("half_sorted", d.size, d.seed, d.range_bound, values)


def dataset_for(case: str, size: int, seed: int,
                range_bound: int = DEFAULT_RANGE_BOUND) -> Dataset:
    """Run the derivation chain up to the requested case."""
    if case not in CASE_KINDS:
        raise ValueError(f"unknown case {case!r}; expected one of {CASE_KINDS}")
    average = gen_average(size, seed, range_bound)
    if case == "average":
        return average
    if case == "half_sorted":
        return derive_half_sorted(average)
    best = derive_best(average)
    if case == "best":
        return best
    return derive_worst(best)


# ---------------------------------------------------------------------------
# Persistence
# ---------------------------------------------------------------------------

_HEADER_RE = re.compile(
    r"# rahmani-dataset v1 case=(average|best|worst|half_sorted) "
    r"size=(\d+) seed=(\d+) range=(\d+)"
)
_VALUE_RE = re.compile(r"-?\d+")


def format_header(d: Dataset) -> str:
    return (
        f"# rahmani-dataset v1 case={d.case} size={d.size} "
        f"seed={d.seed} range={d.range_bound}"
    )


def write_dataset(d: Dataset, destination) -> None:
    """Write d in format v1; byte-identical output for equal datasets."""
    path = Path(destination)
    with path.open("w", encoding="utf-8", newline="") as fh:
        fh.write(format_header(d) + "\n")
        for value in d.values:
            fh.write(f"{value}\n")


def _parse_values(lines: list[str], size: int, range_bound: int, case: str) -> list[int]:
    values = []
    for lineno, line in enumerate(lines, start=2):
        if len(values) == size:
            raise DatasetFormatError(
                f"line {lineno}: {len(lines)} value lines but header says size={size}"
            )
        if not _VALUE_RE.fullmatch(line):
            raise DatasetFormatError(f"line {lineno}: not a base-10 integer: {line!r}")
        value = int(line)
        if not 0 <= value < range_bound:
            raise DatasetFormatError(
                f"line {lineno}: value {value} outside [0, {range_bound})"
            )
        values.append(value)
    if len(values) != size:
        raise DatasetFormatError(
            f"line {len(lines) + 2}: expected {size} values, found {len(values)}"
        )
    if case == "best":
        for k in range(1, size):
            if values[k] < values[k - 1]:
                raise DatasetFormatError(f"line {k + 2}: case=best values not non-decreasing")
    elif case == "worst":
        for k in range(1, size):
            if values[k] > values[k - 1]:
                raise DatasetFormatError(f"line {k + 2}: case=worst values not non-increasing")
    return values


def read_dataset(source) -> Dataset:
    """Parse a format-v1 file; raises DatasetFormatError naming the bad line."""
    path = Path(source)
    lines = path.read_text(encoding="utf-8").splitlines()
    if not lines:
        raise DatasetFormatError("line 1: empty file, missing header")
    match = _HEADER_RE.fullmatch(lines[0])
    if not match:
        raise DatasetFormatError(f"line 1: malformed header: {lines[0]!r}")
    case = match.group(1)
    size = int(match.group(2))
    seed = int(match.group(3))
    range_bound = int(match.group(4))
    try:
        _check_params(size, seed, range_bound)
    except ValueError as exc:
        raise DatasetFormatError(f"line 1: {exc}") from exc
    values = _parse_values(lines[1:], size, range_bound, case)
    return Dataset(case, size, seed, range_bound, values)
