"""Dataset generation, derivation chain, and the v1 file format."""

import pytest

from rahmanisort import (
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
from rahmanisort.datagen import CASE_KINDS, DEFAULT_RANGE_BOUND, FULL_SIZES


def test_full_size_roster():
    assert FULL_SIZES == (500, 2500, 5000, 50000, 100000, 625000, 1250000, 2500000)


def test_gen_average_in_range_and_reproducible():
    d1 = gen_average(500, 42)
    d2 = gen_average(500, 42)
    assert d1.size == len(d1.values) == 500
    assert d1.range_bound == DEFAULT_RANGE_BOUND
    assert all(0 <= v <= 2147483646 for v in d1.values)
    assert d1 == d2
    assert gen_average(500, 43).values != d1.values


def test_gen_average_empty():
    d = gen_average(0, 7)
    assert d.values == []
    assert d.derived_from is None


def test_gen_average_does_not_deduplicate():
    d = gen_average(50, 3, range_bound=2)
    assert len(d.values) == 50
    assert len(set(d.values)) <= 2


def test_gen_average_rejects_bad_params():
    with pytest.raises(ValueError):
        gen_average(-1, 0)
    with pytest.raises(ValueError):
        gen_average(1, -1)
    with pytest.raises(ValueError):
        gen_average(1, 2**64)
    with pytest.raises(ValueError):
        gen_average(1, 0, range_bound=0)
    with pytest.raises(ValueError):
        gen_average(1, 0, range_bound=2**31 + 1)


def test_derive_best_sorts():
    base = gen_average(5000, 42)
    best = derive_best(base)
    assert best.case == "best"
    assert best.derived_from == "average"
    assert best.values == sorted(base.values)
    assert best.values != base.values  # vanishingly unlikely to be pre-sorted


def test_derive_worst_reverses_exactly():
    best = derive_best(gen_average(5000, 42))
    worst = derive_worst(best)
    n = best.size
    assert all(worst.values[i] == best.values[n - 1 - i] for i in range(n))
    assert sorted(worst.values) == best.values
    assert all(worst.values[i] >= worst.values[i + 1] for i in range(n - 1))


def test_derive_half_sorted_prefix_and_suffix():
    base = gen_average(1000, 9)
    half = derive_half_sorted(base)
    prefix = half.values[:500]
    assert prefix == sorted(base.values[:500])
    assert half.values[500:] == base.values[500:]


def test_derive_half_sorted_small_examples():
    d = Dataset("average", 4, 0, 10, [4, 1, 3, 2])
    assert derive_half_sorted(d).values == [1, 4, 3, 2]
    empty = Dataset("average", 0, 0, 10, [])
    assert derive_half_sorted(empty).values == []


def test_derivations_reject_wrong_parent():
    best = derive_best(gen_average(10, 1))
    with pytest.raises(ValueError):
        derive_best(best)
    with pytest.raises(ValueError):
        derive_worst(gen_average(10, 1))
    with pytest.raises(ValueError):
        derive_half_sorted(best)


def test_dataset_for_matches_manual_chain():
    average = gen_average(200, 5)
    assert dataset_for("average", 200, 5) == average
    assert dataset_for("best", 200, 5) == derive_best(average)
    assert dataset_for("worst", 200, 5) == derive_worst(derive_best(average))
    assert dataset_for("half_sorted", 200, 5) == derive_half_sorted(average)


# ---------------------------------------------------------------------------
# File format
# ---------------------------------------------------------------------------

def test_header_line_format(tmp_path):
    d = gen_average(3, 42)
    path = tmp_path / "d.txt"
    write_dataset(d, path)
    first = path.read_text().splitlines()[0]
    assert first == "# rahmani-dataset v1 case=average size=3 seed=42 range=2147483647"


@pytest.mark.parametrize("case", CASE_KINDS)
def test_round_trip_identity(case, tmp_path):
    d = dataset_for(case, 100, 13)
    path = tmp_path / f"{case}.txt"
    write_dataset(d, path)
    assert read_dataset(path) == d


def test_write_is_byte_deterministic(tmp_path):
    d = dataset_for("worst", 250, 8)
    p1 = tmp_path / "a.txt"
    p2 = tmp_path / "b.txt"
    write_dataset(d, p1)
    write_dataset(d, p2)
    assert p1.read_bytes() == p2.read_bytes()


def test_size_zero_round_trip(tmp_path):
    d = gen_average(0, 1)
    path = tmp_path / "empty.txt"
    write_dataset(d, path)
    assert path.read_text() == "# rahmani-dataset v1 case=average size=0 seed=1 range=2147483647\n"
    assert read_dataset(path) == d


def _write(tmp_path, text):
    path = tmp_path / "bad.txt"
    path.write_text(text)
    return path


def test_missing_value_lines(tmp_path):
    path = _write(tmp_path, "# rahmani-dataset v1 case=average size=3 seed=0 range=10\n1\n2\n")
    with pytest.raises(DatasetFormatError, match="line 4"):
        read_dataset(path)


def test_extra_value_lines(tmp_path):
    path = _write(tmp_path, "# rahmani-dataset v1 case=average size=1 seed=0 range=10\n1\n2\n")
    with pytest.raises(DatasetFormatError, match="line 3"):
        read_dataset(path)


def test_non_integer_line(tmp_path):
    path = _write(tmp_path, "# rahmani-dataset v1 case=average size=2 seed=0 range=10\n1\nabc\n")
    with pytest.raises(DatasetFormatError, match="line 3"):
        read_dataset(path)


def test_malformed_header(tmp_path):
    path = _write(tmp_path, "size=2 seed=0\n1\n2\n")
    with pytest.raises(DatasetFormatError, match="line 1"):
        read_dataset(path)


def test_empty_file(tmp_path):
    path = _write(tmp_path, "")
    with pytest.raises(DatasetFormatError, match="line 1"):
        read_dataset(path)


def test_value_out_of_range(tmp_path):
    path = _write(tmp_path, "# rahmani-dataset v1 case=average size=1 seed=0 range=10\n10\n")
    with pytest.raises(DatasetFormatError, match="line 2"):
        read_dataset(path)
    path = _write(tmp_path, "# rahmani-dataset v1 case=average size=1 seed=0 range=10\n-1\n")
    with pytest.raises(DatasetFormatError, match="line 2"):
        read_dataset(path)


def test_order_violation_for_best_case(tmp_path):
    path = _write(tmp_path, "# rahmani-dataset v1 case=best size=3 seed=0 range=10\n2\n1\n3\n")
    with pytest.raises(DatasetFormatError, match="line 3"):
        read_dataset(path)
