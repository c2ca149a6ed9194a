"""Brute-force enumeration of representations.

Deliberately naive and independent of the DP engine: only the core types are
shared, so agreement between the two is evidence rather than tautology.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .core import (
    F_KIND,
    G_KIND,
    GeneratorTuple,
    HardLimitExceeded,
    JFrobeniusValue,
    OracleTooExpensive,
    RepVector,
)

DEFAULT_MAX_WORK = 5_000_000


@dataclass(frozen=True)
class RepresentationList:
    target: int
    tuple: GeneratorTuple
    reps: tuple[RepVector, ...]

    def __len__(self) -> int:
        return len(self.reps)

    def coefficients(self) -> list[tuple[int, ...]]:
        return [r.coefficients for r in self.reps]


def _estimate_work(t: GeneratorTuple, n: int) -> int:
    work = 1
    for a in t.generators[:-1]:
        work *= n // a + 1
    return work


def _iter_reps(gens: tuple[int, ...], n: int, lo: int) -> Iterator[tuple[int, ...]]:
    a = gens[0]
    if len(gens) == 1:
        if n % a == 0 and n // a >= lo:
            yield (n // a,)
        return
    rest = gens[1:]
    min_rest = lo * sum(rest)
    x = lo
    while a * x + min_rest <= n:
        for tail in _iter_reps(rest, n - a * x, lo):
            yield (x,) + tail
        x += 1


def _reps(t: GeneratorTuple, n: int, positive_only: bool, max_work: int):
    if n < 0:
        return iter(())
    if _estimate_work(t, n) > max_work:
        raise OracleTooExpensive(f"enumerating representations of {n} by {t} is too costly")
    return _iter_reps(t.generators, n, 1 if positive_only else 0)


def enumerate_representations(
    t: GeneratorTuple, n: int, positive_only: bool = False, max_work: int = DEFAULT_MAX_WORK
) -> RepresentationList:
    reps = tuple(RepVector(c, n) for c in _reps(t, n, positive_only, max_work))
    return RepresentationList(n, t, reps)


def count_representations(
    t: GeneratorTuple, n: int, positive_only: bool = False, max_work: int = DEFAULT_MAX_WORK
) -> int:
    return sum(1 for _ in _reps(t, n, positive_only, max_work))


def _oracle_scan(t, j, scan_to, positive_only, kind) -> JFrobeniusValue:
    t.require_coprime()
    if t.k == 1:
        return JFrobeniusValue.absent(j, kind)
    bounded = scan_to is not None
    if not bounded:
        scan_to = 4 * (j + 2) * t.a_max ** 2 + 2 * sum(t.generators)
    best: Optional[int] = None
    run = 0
    n = 0
    while True:
        if n > scan_to:
            if bounded:
                break
            raise HardLimitExceeded(f"oracle scan of {t} for j={j} passed {scan_to} without a stop window")
        c = count_representations(t, n, positive_only)
        if c == j and n >= 1:
            best = n
        run = run + 1 if c > j else 0
        if run >= t.a_min:
            break
        n += 1
    return JFrobeniusValue.absent(j, kind) if best is None else JFrobeniusValue.present(best, j, kind)


def oracle_g_j(t: GeneratorTuple, j: int, scan_to: Optional[int] = None) -> JFrobeniusValue:
    """Greatest positive n with exactly j representations, by exhaustive counting."""
    return _oracle_scan(t, j, scan_to, False, G_KIND)


def oracle_f_j(t: GeneratorTuple, j: int, scan_to: Optional[int] = None) -> JFrobeniusValue:
    return _oracle_scan(t, j, scan_to, True, F_KIND)


@dataclass(frozen=True)
class LemmaCheck:
    """Outcome of searching for x_i > 0 (i != pivot) with sum a_i x_i = f_j."""

    status: str  # "found" | "failed" | "not_applicable"
    j: int
    f_value: int
    pivot: int
    witness: Optional[RepVector] = None

    @property
    def ok(self) -> bool:
        return self.status != "failed"


def verify_lemma_witness(
    t: GeneratorTuple, j: int, pivot: int = 0, f_value: Optional[JFrobeniusValue] = None
) -> LemmaCheck:
    if f_value is None:
        f_value = oracle_f_j(t, j)
    if not f_value.exists or t.k < 2:
        return LemmaCheck("not_applicable", j, f_value.as_int(), pivot)
    sub = t.drop(pivot)
    for coeffs in _reps(sub, f_value.value, True, DEFAULT_MAX_WORK):
        return LemmaCheck("found", j, f_value.value, pivot, RepVector(coeffs, f_value.value))
    return LemmaCheck("failed", j, f_value.value, pivot)
