"""Representation counts d(n) for all n up to a limit, by dynamic programming.

Counts are positional: (1, 1) has two coordinates even though the values
coincide, so d(n) = n + 1 for that tuple.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import GeneratorTuple, LimitTooLarge, tuple_sum

DEFAULT_MAX_ENTRIES = 1 << 28
# Largest cap for which residue-class cumsums cannot overflow int64 at the default budget.
MAX_CAP = 1 << 30


@dataclass(frozen=True, eq=False)
class DenumerantSeries:
    tuple: GeneratorTuple
    limit: int
    cap: int
    counts: np.ndarray
    positive: bool = False

    def __getitem__(self, n: int) -> int:
        return int(self.counts[n])

    def __len__(self) -> int:
        return self.limit + 1

    def tolist(self) -> list[int]:
        return [int(c) for c in self.counts]


def _check_args(limit: int, cap: int, max_entries: int) -> None:
    if limit < 0:
        raise ValueError(f"limit must be >= 0, got {limit}")
    if not 1 <= cap <= MAX_CAP:
        raise ValueError(f"cap must be in [1, {MAX_CAP}], got {cap}")
    if limit + 1 > max_entries:
        raise LimitTooLarge(f"limit {limit} exceeds the table budget of {max_entries} entries")


def _residue_cumsum(arr: np.ndarray, a: int, cap: int) -> None:
    # In place: arr[n] += arr[n - a] for ascending n, saturating at cap.
    for r in range(min(a, len(arr))):
        view = arr[r::a]
        np.cumsum(view, out=view)
        np.minimum(view, cap, out=view)


def denumerant_table(
    t: GeneratorTuple, limit: int, cap: int, max_entries: int = DEFAULT_MAX_ENTRIES
) -> DenumerantSeries:
    """Saturated counts min(cap, d(n)) for n = 0..limit."""
    _check_args(limit, cap, max_entries)
    counts = np.zeros(limit + 1, dtype=np.int64)
    counts[0] = 1
    for a in t:
        _residue_cumsum(counts, a, cap)
    counts.flags.writeable = False
    return DenumerantSeries(t, limit, cap, counts)


def positive_denumerant_table(
    t: GeneratorTuple, limit: int, cap: int, max_entries: int = DEFAULT_MAX_ENTRIES
) -> DenumerantSeries:
    """Saturated counts of strictly positive representations, n = 0..limit.

    Built by its own recurrence (each coordinate contributes a*x with x >= 1),
    not by shifting the nonnegative table.
    """
    _check_args(limit, cap, max_entries)
    counts = np.zeros(limit + 1, dtype=np.int64)
    counts[0] = 1
    for a in t:
        shifted = np.zeros_like(counts)
        if a <= limit:
            shifted[a:] = counts[:-a]
        _residue_cumsum(shifted, a, cap)
        counts = shifted
    counts.flags.writeable = False
    return DenumerantSeries(t, limit, cap, counts, positive=True)


def exact_counts(t: GeneratorTuple, limit: int) -> list[int]:
    """Unsaturated d(0..limit) as Python ints."""
    counts = [1] + [0] * limit
    for a in t:
        for m in range(a, limit + 1):
            counts[m] += counts[m - a]
    return counts


def denumerant(t: GeneratorTuple, n: int) -> int:
    """Exact number of nonnegative representations of n."""
    if n < 0:
        return 0
    return exact_counts(t, n)[n]


def positive_denumerant(t: GeneratorTuple, n: int) -> int:
    """Exact number of representations of n with every coordinate >= 1."""
    K = tuple_sum(t)
    return denumerant(t, n - K) if n >= K else 0
