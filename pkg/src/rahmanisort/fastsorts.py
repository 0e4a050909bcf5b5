"""Compiled counterparts of the reference sorts.

Same algorithms, same counter arithmetic, jitted for int32 arrays so the
benchmark harness times the algorithms rather than the interpreter. Every
kernel mirrors its twin in sorts.py statement for statement; the
cross-engine tests assert counter-exact agreement on seeded inputs.

Counters travel as an int64 array indexed by the C_* constants below, in
SortStats field order.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from . import sorts
from .stats import SortStats

C_COMPARISONS = 0
C_MOVES = 1
C_ISEARCH_CALLS = 2
C_ISEARCH_PROBES = 3
C_EARLY_CONTINUES = 4
C_OUTER = 5


@njit(cache=True)
def _isearch(a, lower, upper, key):
    probes = 0
    while True:
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


@njit(cache=True)
def _isearch_stable(a, lower, upper, key):
    probes = 0
    while lower <= upper:
        mid = lower + (upper - lower) // 2
        probes += 1
        if a[mid] > key:
            upper = mid - 1
        else:
            lower = mid + 1
    return lower, probes


@njit(cache=True)
def _rahmani(a, stable, ctr):
    n = a.shape[0]
    for i in range(1, n):
        ctr[C_OUTER] += 1
        ctr[C_COMPARISONS] += 1
        if a[i] >= a[i - 1]:
            ctr[C_EARLY_CONTINUES] += 1
            continue
        key = a[i]
        ctr[C_COMPARISONS] += 1
        if stable:
            at_front = key < a[0]
        else:
            at_front = key <= a[0]
        if at_front:
            j = 0
        else:
            if stable:
                j, probes = _isearch_stable(a, 0, i - 1, key)
            else:
                j, probes = _isearch(a, 0, i - 1, key)
            ctr[C_ISEARCH_CALLS] += 1
            ctr[C_ISEARCH_PROBES] += probes
        k = i
        while k > j:
            a[k] = a[k - 1]
            k -= 1
        ctr[C_MOVES] += (i - j) + 1
        a[j] = key


@njit(cache=True)
def _insertion(a, ctr):
    n = a.shape[0]
    for i in range(1, n):
        ctr[C_OUTER] += 1
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
        ctr[C_COMPARISONS] += comparisons
        shifts = (i - 1) - j
        if shifts == 0:
            ctr[C_EARLY_CONTINUES] += 1
        else:
            ctr[C_MOVES] += shifts + 1
        a[j + 1] = key


@njit(cache=True)
def _bubble(a, ctr):
    n = a.shape[0]
    for i in range(1, n):
        ctr[C_OUTER] += 1
        swapped = False
        moves = 0
        for j in range(0, n - i):
            if a[j] > a[j + 1]:
                t = a[j]
                a[j] = a[j + 1]
                a[j + 1] = t
                moves += 2
                swapped = True
        ctr[C_COMPARISONS] += n - i
        ctr[C_MOVES] += moves
        if not swapped:
            break


@njit(cache=True)
def _selection_range(a, lo, hi, ctr):
    for i in range(lo, hi - 1):
        ctr[C_OUTER] += 1
        smallest = i
        for j in range(i + 1, hi):
            if a[j] < a[smallest]:
                smallest = j
        ctr[C_COMPARISONS] += hi - 1 - i
        if smallest != i:
            t = a[i]
            a[i] = a[smallest]
            a[smallest] = t
            ctr[C_MOVES] += 2


@njit(cache=True)
def _merge_rec(a, aux, lo, hi, cutoff, ctr):
    n = hi - lo
    if n <= 1:
        return
    if n <= cutoff:
        _selection_range(a, lo, hi, ctr)
        return
    mid = lo + n // 2
    _merge_rec(a, aux, lo, mid, cutoff, ctr)
    _merge_rec(a, aux, mid, hi, cutoff, ctr)
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
    ctr[C_COMPARISONS] += comparisons
    ctr[C_MOVES] += n


@njit(cache=True)
def _quick_rec(a, lo, hi, cutoff, ctr):
    while lo < hi:
        size = hi - lo + 1
        if size <= cutoff:
            _selection_range(a, lo, hi + 1, ctr)
            return
        mid = lo + (hi - lo) // 2
        x = a[lo]
        y = a[mid]
        z = a[hi]
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
            t = a[i]
            a[i] = a[j]
            a[j] = t
            moves += 2
        ctr[C_COMPARISONS] += comparisons
        ctr[C_MOVES] += moves
        if j - lo < hi - j:
            _quick_rec(a, lo, j, cutoff, ctr)
            lo = j + 1
        else:
            _quick_rec(a, j + 1, hi, cutoff, ctr)
            hi = j


def _dispatch(alg: str, arr: np.ndarray, cutoff: int, ctr: np.ndarray) -> None:
    n = arr.shape[0]
    if alg == "bubble":
        _bubble(arr, ctr)
    elif alg == "selection":
        _selection_range(arr, 0, n, ctr)
    elif alg == "insertion":
        _insertion(arr, ctr)
    elif alg == "merge":
        if n > 1:
            aux = np.empty(n, dtype=arr.dtype)
            _merge_rec(arr, aux, 0, n, cutoff, ctr)
    elif alg == "quick":
        if n > 1:
            _quick_rec(arr, 0, n - 1, cutoff, ctr)
    elif alg == "rahmani-faithful":
        _rahmani(arr, False, ctr)
    elif alg == "rahmani-stable":
        _rahmani(arr, True, ctr)
    else:
        raise ValueError(f"unknown algorithm {alg!r}")


def fast_sort(alg: str, values, cutoff: int = sorts.DEFAULT_CUTOFF) -> SortStats:
    """Sort values in place with the compiled kernel for alg.

    Accepts either a contiguous int32 ndarray (sorted in place) or a list
    of ints (converted, sorted, written back). Returns the same counters
    the reference implementation would.
    """
    if cutoff < 0:
        raise ValueError("cutoff must be non-negative")
    ctr = np.zeros(6, dtype=np.int64)
    if isinstance(values, np.ndarray):
        if values.dtype != np.int32 or not values.flags.c_contiguous:
            raise TypeError("ndarray input must be contiguous int32")
        _dispatch(alg, values, cutoff, ctr)
    else:
        arr = np.array(values, dtype=np.int32)
        _dispatch(alg, arr, cutoff, ctr)
        values[:] = arr.tolist()
    return SortStats(*(int(c) for c in ctr))


def _make_entry(alg):
    def run(values, cutoff: int = sorts.DEFAULT_CUTOFF) -> SortStats:
        return fast_sort(alg, values, cutoff)

    run.__name__ = f"fast_{alg.replace('-', '_')}"
    return run


FAST_ALGORITHMS = {alg: _make_entry(alg) for alg in sorts.ALGORITHM_IDS}


def warm_kernels() -> None:
    """Compile every kernel on a tiny input so timed runs never pay for it."""
    for alg in sorts.ALGORITHM_IDS:
        for cutoff in (0, sorts.DEFAULT_CUTOFF):
            fast_sort(alg, np.array([3, 1, 2, 2], dtype=np.int32), cutoff)
