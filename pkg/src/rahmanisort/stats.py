"""Operation counters shared by every instrumented sort."""

from __future__ import annotations

from dataclasses import dataclass, fields


@dataclass
class SortStats:
    """Exact counts of the work one sort call performed.

    key_comparisons counts key-vs-key comparisons made outside the binary
    search; comparisons inside the search are reported separately as
    isearch_probes (one probe = one inspection of a midpoint element).
    element_moves counts assignments that relocate a key: every one-slot
    shift plus each placement that lands a key somewhere other than where
    it started. Field order matters: the fast kernels return counters as a
    positional tuple in exactly this order.
    """

    key_comparisons: int = 0
    element_moves: int = 0
    isearch_calls: int = 0
    isearch_probes: int = 0
    early_continues: int = 0
    outer_iterations: int = 0

    def validate(self) -> None:
        for f in fields(self):
            value = getattr(self, f.name)
            if value < 0:
                raise ValueError(f"{f.name} is negative: {value}")
        if self.isearch_calls > 0 and self.isearch_probes < self.isearch_calls:
            raise ValueError("isearch_probes < isearch_calls")
        if self.early_continues > self.outer_iterations:
            raise ValueError("early_continues > outer_iterations")


def placement_moves(stats: SortStats) -> int:
    """Placements that relocated a key.

    Meaningful for the insertion-family sorts (rahmani-*, insertion): each
    outer iteration either skips early or places its key exactly once.
    """
    return stats.outer_iterations - stats.early_continues


def shift_moves(stats: SortStats) -> int:
    """One-slot right-shifts alone, excluding final placements.

    Same applicability caveat as placement_moves.
    """
    return stats.element_moves - placement_moves(stats)
