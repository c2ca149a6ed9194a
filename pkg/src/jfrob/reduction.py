"""gcd reduction of generator tuples and the value maps it induces.

If d = gcd of every generator except a pivot p, then
    g_j(t) = d * g_j(t') + (d - 1) * p      and      f_j(t) = d * f_j(t'),
where t' keeps p and divides the others by d.  Both hold exactly on the
extended values of :mod:`jfrob.jfrobenius`, which is how they are applied
here; a reduced tuple whose g_0 is -1 can still map to a positive g_0.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .core import (
    F_KIND,
    G_KIND,
    GeneratorTuple,
    InvalidShift,
    JFrobeniusValue,
    KTooSmall,
    NotCoprime,
    PivotOutOfRange,
    make_tuple,
)
from . import jfrobenius


@dataclass(frozen=True)
class ReductionStep:
    pivot_index: int
    pivot_value: int
    divisor: int
    source: GeneratorTuple
    reduced_tuple: GeneratorTuple

    @property
    def offset(self) -> int:
        return (self.divisor - 1) * self.pivot_value

    def apply(self, v: int) -> int:
        """Map a g value of the reduced tuple to one of the source tuple."""
        return self.divisor * v + self.offset

    def __str__(self) -> str:
        return (
            f"pivot {self.pivot_index} (a={self.pivot_value}), d={self.divisor}: "
            f"{self.source} -> {self.reduced_tuple}, v -> {self.divisor}v+{self.offset}"
        )


@dataclass(frozen=True)
class ReductionChain:
    original: GeneratorTuple
    steps: tuple[ReductionStep, ...]
    reduced: GeneratorTuple
    scale: int
    offset: int

    def apply(self, v: int) -> int:
        return self.scale * v + self.offset

    def apply_f(self, v: int) -> int:
        return self.scale * v

    @property
    def trivial(self) -> bool:
        return not self.steps


def find_reduction(t: GeneratorTuple, pivot: int) -> Optional[ReductionStep]:
    t.require_coprime()
    if t.k < 2:
        raise KTooSmall(f"reduction needs k >= 2, got {t}")
    if not 0 <= pivot < t.k:
        raise PivotOutOfRange(f"pivot {pivot} not in [0, {t.k})")
    gens = t.generators
    d = gcd(*(a for i, a in enumerate(gens) if i != pivot))
    if d == 1:
        return None
    reduced = make_tuple(a if i == pivot else a // d for i, a in enumerate(gens))
    return ReductionStep(pivot, gens[pivot], d, t, reduced)


def reduce_fully(t: GeneratorTuple) -> ReductionChain:
    """Apply the largest-divisor step (lowest pivot on ties) until none remains."""
    t.require_coprime()
    steps: list[ReductionStep] = []
    scale, offset = 1, 0
    cur = t
    while cur.k >= 2:
        best: Optional[ReductionStep] = None
        for p in range(cur.k):
            step = find_reduction(cur, p)
            if step is not None and (best is None or step.divisor > best.divisor):
                best = step
        if best is None:
            break
        steps.append(best)
        offset += scale * best.offset
        scale *= best.divisor
        cur = best.reduced_tuple
    return ReductionChain(t, tuple(steps), cur, scale, offset)


def g_sequence_reduced(t: GeneratorTuple, J: int, hard_limit: Optional[int] = None):
    chain = reduce_fully(t)
    ext, W = jfrobenius.extended_g_sequence(chain.reduced, J, hard_limit)
    mapped = [None if v is None else chain.apply(v) for v in ext]
    values = tuple(JFrobeniusValue.from_extended(v, j, G_KIND) for j, v in enumerate(mapped))
    return jfrobenius.GSequenceResult(t, J, values, W, "reduced", tuple(mapped))


def f_sequence_reduced(t: GeneratorTuple, J: int, hard_limit: Optional[int] = None):
    chain = reduce_fully(t)
    ext, W = jfrobenius.extended_f_sequence(chain.reduced, J, hard_limit)
    mapped = [None if v is None else chain.apply_f(v) for v in ext]
    values = tuple(JFrobeniusValue.from_extended(v, j, F_KIND) for j, v in enumerate(mapped))
    return jfrobenius.GSequenceResult(t, J, values, W, "reduced", tuple(mapped))


def g_j_reduced(t: GeneratorTuple, j: int, hard_limit: Optional[int] = None) -> JFrobeniusValue:
    return g_sequence_reduced(t, j, hard_limit).values[j]


def f_j_reduced(t: GeneratorTuple, j: int, hard_limit: Optional[int] = None) -> JFrobeniusValue:
    return f_sequence_reduced(t, j, hard_limit).values[j]


def f_from_g(g: JFrobeniusValue, K: int) -> JFrobeniusValue:
    if not g.exists:
        return JFrobeniusValue.absent(g.j, F_KIND)
    return JFrobeniusValue.present(g.value + K, g.j, F_KIND)


def g_from_f(f: JFrobeniusValue, K: int) -> JFrobeniusValue:
    if not f.exists:
        return JFrobeniusValue.absent(f.j, G_KIND)
    if f.value <= K:
        raise InvalidShift(f"f value {f.value} <= K = {K} has no positive g counterpart")
    return JFrobeniusValue.present(f.value - K, f.j, G_KIND)


def corollary_triple(a1: int, a2: int, m: int, j: int) -> JFrobeniusValue:
    """g_j(a1, a2, m*a1*a2) in closed form where one is known.

    j <= m gives (j+1)*a1*a2 - a1 - a2, j = m+1 is absent, j = m+2 gives
    (m+2)*a1*a2 - a1 - a2.  A non-positive formula value (only j = 0 with
    a1 or a2 equal to 1) is reported absent.  Larger j falls back to the
    general solver.
    """
    if a1 < 1 or a2 < 1 or m < 1 or j < 0:
        raise ValueError("a1, a2, m must be positive and j nonnegative")
    if gcd(a1, a2) != 1:
        raise NotCoprime(f"gcd({a1}, {a2}) = {gcd(a1, a2)}")
    if j <= m:
        return JFrobeniusValue.from_extended((j + 1) * a1 * a2 - a1 - a2, j)
    if j == m + 1:
        return JFrobeniusValue.absent(j)
    if j == m + 2:
        return JFrobeniusValue.from_extended((m + 2) * a1 * a2 - a1 - a2, j)
    return g_j_reduced(make_tuple([a1, a2, m * a1 * a2]), j)


def g_sequence_auto(t: GeneratorTuple, J: int, hard_limit: Optional[int] = None):
    """Reduced solver when a nontrivial reduction exists, plain DP otherwise."""
    if t.k >= 2 and not reduce_fully(t).trivial:
        return g_sequence_reduced(t, J, hard_limit)
    return jfrobenius.g_sequence(t, J, hard_limit)
