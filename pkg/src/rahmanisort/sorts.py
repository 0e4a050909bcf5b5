"""Reference implementations of the instrumented sorting algorithms.

These operate on plain Python lists and accept any mutually comparable
elements, which is what lets the tagged stability harness reuse the exact
control flow of the integer sorts. The numba kernels in fastsorts mirror
these loops statement for statement; the cross-engine tests hold the two
in lockstep.

Index convention: the classical descriptions of these algorithms are
1-based; everything here is 0-based. The translation is uniform (position
p becomes p - 1), so "search the sorted prefix at positions 1..i-1"
becomes isearch(a, 0, i - 1, key) for the 0-based outer index i.
"""

from __future__ import annotations

from dataclasses import dataclass

from .stats import SortStats

ALGORITHM_IDS = (
    "bubble",
    "selection",
    "insertion",
    "merge",
    "quick",
    "rahmani-faithful",
    "rahmani-stable",
)

SORT_VARIANTS = ("faithful", "stable")

DEFAULT_CUTOFF = 16


# ---------------------------------------------------------------------------
# Binary insertion-point search
# ---------------------------------------------------------------------------

def _check_segment(a, lower: int, upper: int) -> None:
    if lower > upper:
        raise ValueError(f"empty search segment: lower={lower} > upper={upper}")
    if lower < 0 or upper >= len(a):
        raise ValueError(f"segment [{lower}, {upper}] outside array of length {len(a)}")
    # O(segment) scan, debug builds only
    assert all(
        not (a[k + 1] < a[k]) for k in range(lower, upper)
    ), "search segment is not sorted"


def _isearch_core(a, lower: int, upper: int, key) -> tuple[int, int]:
    probes = 0
    while True:
        # midpoint written this way so fixed-width index arithmetic cannot
        # overflow near the top of the range
        mid = lower + (upper - lower) // 2
        probes += 1
        if key == a[mid]:
            lower = mid + 1
            break
        if key < a[mid]:
            upper = mid - 1
        else:
            lower = mid + 1
        if lower > upper or key == a[mid]:
            break
    return lower, probes


def _isearch_stable_core(a, lower: int, upper: int, key) -> tuple[int, int]:
    probes = 0
    while lower <= upper:
        mid = lower + (upper - lower) // 2
        probes += 1
        if a[mid] > key:
            upper = mid - 1
        else:
            lower = mid + 1
    return lower, probes


def isearch(a, lower: int, upper: int, key, stats: SortStats | None = None) -> int:
    """Find an insertion index for key in the sorted segment a[lower..upper].

    Returns j with lower <= j <= upper + 1 such that a[j-1] <= key <= a[j]
    (reading a[lower-1] as -inf and a[upper+1] as +inf). When a probed
    element equals key the search exits early with that position + 1, which
    is what makes this variant unstable: it may land in the middle of a run
    of equal keys. Each loop iteration probes exactly one midpoint; when a
    stats object is given the call and its probes are recorded there.

    The loop keeps the classical do-while shape, including the guard's
    re-test of the already-probed midpoint: that clause is always true by
    the time it is evaluated (an equal probe would have returned), so only
    the bracketing postcondition above is promised.
    """
    _check_segment(a, lower, upper)
    j, probes = _isearch_core(a, lower, upper, key)
    if stats is not None:
        stats.isearch_calls += 1
        stats.isearch_probes += probes
    return j


def isearch_stable(a, lower: int, upper: int, key, stats: SortStats | None = None) -> int:
    """Find the upper-bound insertion index for key in a[lower..upper].

    Returns the smallest j in [lower, upper + 1] with a[j] > key (reading
    a[upper+1] as +inf). Equal keys are never jumped over, so inserting at
    j places the key after every equal one already present.
    """
    _check_segment(a, lower, upper)
    j, probes = _isearch_stable_core(a, lower, upper, key)
    if stats is not None:
        stats.isearch_calls += 1
        stats.isearch_probes += probes
    return j


# ---------------------------------------------------------------------------
# Rahmani sort
# ---------------------------------------------------------------------------

def rahmani_sort(a, variant: str = "faithful") -> SortStats:
    """Binary-search insertion sort, in place.

    Each outer step first checks whether a[i] already extends the sorted
    prefix (the early continue that makes sorted input linear). Otherwise
    the insertion index comes from a front-of-array guard or the binary
    search, the prefix tail is shifted right one slot at a time, and the
    key is placed.

    The faithful variant keeps the classical guards (front guard uses <=,
    search exits early on an equal probe) and is not stable. The stable
    variant tightens the front guard to < and uses the upper-bound search,
    so equal keys keep their arrival order.
    """
    if variant not in SORT_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {SORT_VARIANTS}")
    stable = variant == "stable"
    stats = SortStats()
    n = len(a)
    for i in range(1, n):
        stats.outer_iterations += 1
        stats.key_comparisons += 1
        if a[i] >= a[i - 1]:
            stats.early_continues += 1
            continue
        key = a[i]
        stats.key_comparisons += 1
        at_front = (key < a[0]) if stable else (key <= a[0])
        if at_front:
            j = 0
        else:
            core = _isearch_stable_core if stable else _isearch_core
            j, probes = core(a, 0, i - 1, key)
            stats.isearch_calls += 1
            stats.isearch_probes += probes
        k = i
        while k > j:
            a[k] = a[k - 1]
            k -= 1
        stats.element_moves += (i - j) + 1
        a[j] = key
    return stats


# ---------------------------------------------------------------------------
# Classical comparison sorts
# ---------------------------------------------------------------------------

def insertion_sort(a) -> SortStats:
    """Classical insertion sort with a sequential backward scan, in place.

    An iteration whose first guard test already fails (the key extends the
    sorted prefix) performs no relocation and is counted as an early
    continue, mirroring the skip step of rahmani_sort; its placement is a
    no-op and not counted as a move.
    """
    stats = SortStats()
    n = len(a)
    for i in range(1, n):
        stats.outer_iterations += 1
        key = a[i]
        j = i - 1
        comparisons = 0
        while j >= 0:
            comparisons += 1
            if key < a[j]:
                a[j + 1] = a[j]
                j -= 1
            else:
                break
        stats.key_comparisons += comparisons
        shifts = (i - 1) - j
        if shifts == 0:
            stats.early_continues += 1
        else:
            stats.element_moves += shifts + 1
        a[j + 1] = key
    return stats


def bubble_sort(a) -> SortStats:
    """Bubble sort with the early-exit flag, in place.

    Each pass bubbles the largest remaining element to the end; a pass
    with no swap terminates the sort. One swap counts as two element
    moves (both keys relocate).
    """
    stats = SortStats()
    n = len(a)
    for i in range(1, n):
        stats.outer_iterations += 1
        swapped = False
        moves = 0
        for j in range(0, n - i):
            if a[j] > a[j + 1]:
                a[j], a[j + 1] = a[j + 1], a[j]
                moves += 2
                swapped = True
        stats.key_comparisons += n - i
        stats.element_moves += moves
        if not swapped:
            break
    return stats


def _selection_range(a, lo: int, hi: int, stats: SortStats) -> None:
    # selection sort on the half-open range [lo, hi)
    for i in range(lo, hi - 1):
        stats.outer_iterations += 1
        smallest = i
        for j in range(i + 1, hi):
            if a[j] < a[smallest]:
                smallest = j
        stats.key_comparisons += hi - 1 - i
        if smallest != i:
            a[i], a[smallest] = a[smallest], a[i]
            stats.element_moves += 2


def selection_sort(a) -> SortStats:
    """Selection sort, in place. Comparison count is input-oblivious:
    always n(n-1)/2. A pass whose minimum is already in place performs
    no swap."""
    stats = SortStats()
    _selection_range(a, 0, len(a), stats)
    return stats


def _alloc_buffer(n: int) -> list:
    """Auxiliary-buffer accounting seam: merge sort's single allocation
    goes through here so tests can assert the in-place sorts never ask
    for one."""
    return [0] * n


def _merge_rec(a, aux, lo: int, hi: int, cutoff: int, stats: SortStats) -> None:
    # sorts the half-open range [lo, hi)
    n = hi - lo
    if n <= 1:
        return
    if n <= cutoff:
        _selection_range(a, lo, hi, stats)
        return
    mid = lo + n // 2
    _merge_rec(a, aux, lo, mid, cutoff, stats)
    _merge_rec(a, aux, mid, hi, cutoff, stats)
    for k in range(lo, hi):
        aux[k] = a[k]
    i = lo
    j = mid
    comparisons = 0
    for k in range(lo, hi):
        if i >= mid:
            a[k] = aux[j]
            j += 1
        elif j >= hi:
            a[k] = aux[i]
            i += 1
        else:
            comparisons += 1
            if aux[j] < aux[i]:
                a[k] = aux[j]
                j += 1
            else:
                a[k] = aux[i]
                i += 1
    stats.key_comparisons += comparisons
    stats.element_moves += n


def merge_sort(a, cutoff: int = DEFAULT_CUTOFF) -> SortStats:
    """Top-down merge sort; subarrays of size <= cutoff go to selection
    sort. cutoff=0 gives the pure algorithm. Ties merge from the left, so
    the pure algorithm is stable. Uses one reusable auxiliary buffer of n
    keys (the only sort here that is not in place)."""
    if cutoff < 0:
        raise ValueError("cutoff must be non-negative")
    stats = SortStats()
    n = len(a)
    if n <= 1:
        return stats
    aux = _alloc_buffer(n)
    _merge_rec(a, aux, 0, n, cutoff, stats)
    return stats


def _quick_rec(a, lo: int, hi: int, cutoff: int, stats: SortStats) -> None:
    # sorts the inclusive range [lo, hi]
    while lo < hi:
        size = hi - lo + 1
        if size <= cutoff:
            _selection_range(a, lo, hi + 1, stats)
            return
        mid = lo + (hi - lo) // 2
        x = a[lo]
        y = a[mid]
        z = a[hi]
        # median of three by value
        comparisons = 1
        if x < y:
            comparisons += 1
            if y < z:
                pivot = y
            else:
                comparisons += 1
                pivot = z if x < z else x
        else:
            comparisons += 1
            if x < z:
                pivot = x
            else:
                comparisons += 1
                pivot = z if y < z else y
        # Hoare partition around the pivot value
        i = lo - 1
        j = hi + 1
        moves = 0
        while True:
            i += 1
            while a[i] < pivot:
                comparisons += 1
                i += 1
            comparisons += 1
            j -= 1
            while a[j] > pivot:
                comparisons += 1
                j -= 1
            comparisons += 1
            if i >= j:
                break
            a[i], a[j] = a[j], a[i]
            moves += 2
        stats.key_comparisons += comparisons
        stats.element_moves += moves
        # recurse into the smaller side, loop on the larger: stack depth
        # stays logarithmic even on adversarial input
        if j - lo < hi - j:
            _quick_rec(a, lo, j, cutoff, stats)
            lo = j + 1
        else:
            _quick_rec(a, j + 1, hi, cutoff, stats)
            hi = j


def quick_sort(a, cutoff: int = DEFAULT_CUTOFF) -> SortStats:
    """Quicksort with median-of-three pivot and Hoare partitioning, in
    place; subarrays of size <= cutoff go to selection sort, cutoff=0
    gives the pure algorithm."""
    if cutoff < 0:
        raise ValueError("cutoff must be non-negative")
    stats = SortStats()
    if len(a) > 1:
        _quick_rec(a, 0, len(a) - 1, cutoff, stats)
    return stats


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

def _run(alg: str, a, cutoff: int) -> SortStats:
    if alg == "bubble":
        return bubble_sort(a)
    if alg == "selection":
        return selection_sort(a)
    if alg == "insertion":
        return insertion_sort(a)
    if alg == "merge":
        return merge_sort(a, cutoff)
    if alg == "quick":
        return quick_sort(a, cutoff)
    if alg == "rahmani-faithful":
        return rahmani_sort(a, "faithful")
    if alg == "rahmani-stable":
        return rahmani_sort(a, "stable")
    raise ValueError(f"unknown algorithm {alg!r}")


def _make_entry(alg):
    def run(a, cutoff: int = DEFAULT_CUTOFF) -> SortStats:
        return _run(alg, a, cutoff)

    run.__name__ = f"python_{alg.replace('-', '_')}"
    return run


PYTHON_ALGORITHMS = {alg: _make_entry(alg) for alg in ALGORITHM_IDS}


# ---------------------------------------------------------------------------
# Tagged records for stability testing
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TaggedRecord:
    """A key plus its zero-based input ordinal, for observing stability."""

    key: int
    arrival: int


class _Keyed:
    """Comparison proxy: orders by key only, carries the arrival tag."""

    __slots__ = ("key", "arrival")

    def __init__(self, key, arrival):
        self.key = key
        self.arrival = arrival

    def __lt__(self, other):
        return self.key < other.key

    def __le__(self, other):
        return self.key <= other.key

    def __gt__(self, other):
        return self.key > other.key

    def __ge__(self, other):
        return self.key >= other.key

    def __eq__(self, other):
        return self.key == other.key

    __hash__ = None


def sort_tagged(alg: str, records) -> list[TaggedRecord]:
    """Sort tagged records by key only, through the real algorithm code.

    merge and quick run in their pure form (cutoff 0): the selection-sort
    leaves of the hybrids would destroy the very ordering this harness
    exists to observe. Comparisons never see the arrival ordinals.
    """
    if alg not in ALGORITHM_IDS:
        raise ValueError(f"unknown algorithm {alg!r}")
    records = list(records)
    arrivals = [r.arrival for r in records]
    if len(set(arrivals)) != len(arrivals):
        raise ValueError("arrival ordinals must be unique")
    items = [_Keyed(r.key, r.arrival) for r in records]
    _run(alg, items, 0)
    return [TaggedRecord(it.key, it.arrival) for it in items]
