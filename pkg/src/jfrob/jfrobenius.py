"""Direct computation of g_j and f_j from denumerant tables.

The scan runs upward until ``a_min`` consecutive integers all have more than
J representations.  Adding a_min to a representation is injective, so every
larger integer also has more than J and nothing beyond the window can have
exactly j <= J representations.

Internally each j gets an *extended* value: the greatest integer of any sign
with exactly j representations, treating d(n) = 0 for n < 0.  That is -1 for
j = 0 when every positive integer is representable, and 0 for j = 1 when no
positive integer has a unique representation.  The reduction identities are
exact on extended values; the public g_j/f_j are the positive ones only.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .core import (
    F_KIND,
    G_KIND,
    GeneratorTuple,
    HardLimitExceeded,
    JFrobeniusValue,
    tuple_sum,
)
from .denumerant import DEFAULT_MAX_ENTRIES, denumerant_table, positive_denumerant_table

HARD_LIMIT_ENV = "JFROB_HARD_LIMIT"


@dataclass(frozen=True)
class GSequenceResult:
    tuple: GeneratorTuple
    max_j: int
    values: tuple[JFrobeniusValue, ...]
    scan_limit: int
    method: str
    extended: tuple[Optional[int], ...] = ()

    def __getitem__(self, j: int) -> JFrobeniusValue:
        return self.values[j]


def default_hard_limit(t: GeneratorTuple, J: int) -> int:
    env = os.environ.get(HARD_LIMIT_ENV)
    if env:
        return int(env)
    return 4 * (J + 2) * t.a_max ** 2 + tuple_sum(t)


def find_window(counts: np.ndarray, width: int, J: int) -> Optional[int]:
    """End index of the first run of ``width`` consecutive counts > J, or None."""
    above = counts > J
    if width == 1:
        hits = np.flatnonzero(above)
        return int(hits[0]) if hits.size else None
    # run length ending at each index, computed from positions of the last failure
    idx = np.arange(len(counts))
    last_fail = np.where(~above, idx, -1)
    np.maximum.accumulate(last_fail, out=last_fail)
    hits = np.flatnonzero(idx - last_fail >= width)
    return int(hits[0]) if hits.size else None


def _last_positions(counts: np.ndarray, end: int, J: int) -> list[Optional[int]]:
    """Greatest n <= end with counts[n] == j, for j = 0..J."""
    out: list[Optional[int]] = [None] * (J + 1)
    window = counts[: end + 1]
    # reversed first-occurrence gives last occurrence
    vals, first_rev = np.unique(window[::-1], return_index=True)
    for v, i in zip(vals.tolist(), first_rev.tolist()):
        if v <= J:
            out[v] = end - i
    return out


def _scan(t, J, hard_limit, max_entries, build):
    """Grow the table until the stopping window appears; return (extended, W)."""
    limit = min(hard_limit, max(64, (J + 2) * t.a_min * t.a_max + 2 * tuple_sum(t)))
    while True:
        series = build(t, limit, J + 1, max_entries)
        W = find_window(series.counts, t.a_min, J)
        if W is not None:
            return _last_positions(series.counts, W, J), W
        if limit >= hard_limit:
            raise HardLimitExceeded(
                f"no window of {t.a_min} integers with > {J} representations "
                f"below {hard_limit} for {t}"
            )
        limit = min(hard_limit, 2 * limit)


def extended_g_sequence(
    t: GeneratorTuple,
    J: int,
    hard_limit: Optional[int] = None,
    max_entries: int = DEFAULT_MAX_ENTRIES,
) -> tuple[list[Optional[int]], int]:
    """Extended g values for j = 0..J plus the scan stop point."""
    t.require_coprime()
    if J < 0:
        raise ValueError(f"J must be >= 0, got {J}")
    if t.k == 1:
        # t == (1,): d(n) = 1 for all n >= 0, so only j = 0 has a greatest element (-1).
        return [-1] + [None] * J, 0
    if hard_limit is None:
        hard_limit = default_hard_limit(t, J)
    last, W = _scan(t, J, hard_limit, max_entries, denumerant_table)
    if last[0] is None:
        last[0] = -1
    return last, W


def g_sequence(
    t: GeneratorTuple,
    J: int,
    hard_limit: Optional[int] = None,
    max_entries: int = DEFAULT_MAX_ENTRIES,
) -> GSequenceResult:
    ext, W = extended_g_sequence(t, J, hard_limit, max_entries)
    values = tuple(JFrobeniusValue.from_extended(v, j, G_KIND) for j, v in enumerate(ext))
    return GSequenceResult(t, J, values, W, "dp", tuple(ext))


def g_j(t: GeneratorTuple, j: int, hard_limit: Optional[int] = None) -> JFrobeniusValue:
    return g_sequence(t, j, hard_limit).values[j]


def extended_f_sequence(
    t: GeneratorTuple,
    J: int,
    hard_limit: Optional[int] = None,
    max_entries: int = DEFAULT_MAX_ENTRIES,
) -> tuple[list[Optional[int]], int]:
    """Greatest n >= 0 with exactly j positive representations, j = 0..J."""
    t.require_coprime()
    if J < 0:
        raise ValueError(f"J must be >= 0, got {J}")
    if t.k == 1:
        # t == (1,): every n >= 1 has exactly one positive representation.
        return [0] + [None] * J, 0
    if hard_limit is None:
        hard_limit = default_hard_limit(t, J) + tuple_sum(t)
    return _scan(t, J, hard_limit, max_entries, positive_denumerant_table)


def f_sequence(
    t: GeneratorTuple,
    J: int,
    hard_limit: Optional[int] = None,
    max_entries: int = DEFAULT_MAX_ENTRIES,
) -> GSequenceResult:
    ext, W = extended_f_sequence(t, J, hard_limit, max_entries)
    values = tuple(JFrobeniusValue.from_extended(v, j, F_KIND) for j, v in enumerate(ext))
    return GSequenceResult(t, J, values, W, "dp", tuple(ext))


def f_j(t: GeneratorTuple, j: int, hard_limit: Optional[int] = None) -> JFrobeniusValue:
    return f_sequence(t, j, hard_limit).values[j]


def as_ints(values: Sequence[JFrobeniusValue]) -> list[int]:
    """Paper-style rendering with 0 for absent entries."""
    return [v.as_int() for v in values]
