"""Seeded pseudo-random tuple corpora for identity checks and experiments."""
from __future__ import annotations

import random
from math import gcd

from .core import GeneratorTuple, make_tuple


def random_tuples(count: int, max_gen: int, ks=(2, 3, 4), seed: int = 0) -> list[GeneratorTuple]:
    """Tuples with gcd 1 and entries drawn uniformly from [1, max_gen]."""
    rng = random.Random(seed)
    out: list[GeneratorTuple] = []
    while len(out) < count:
        k = rng.choice(ks)
        gens = [rng.randint(1, max_gen) for _ in range(k)]
        if gcd(*gens) == 1:
            out.append(make_tuple(gens))
    return out


def random_reducible_tuples(
    count: int, max_gen: int = 60, ks=(3, 4), seed: int = 0
) -> list[GeneratorTuple]:
    """Tuples with gcd 1 where some pivot's complement has gcd > 1.

    A pivot p and divisor d are drawn, the other generators are multiples of
    d, and positions are shuffled so the pivot is not always first.
    """
    rng = random.Random(seed)
    out: list[GeneratorTuple] = []
    while len(out) < count:
        k = rng.choice(ks)
        d = rng.randint(2, max_gen // 2)
        p = rng.randint(1, max_gen)
        gens = [p] + [d * rng.randint(1, max_gen // d) for _ in range(k - 1)]
        if gcd(*gens) != 1:
            continue
        rng.shuffle(gens)
        out.append(make_tuple(gens))
    return out
