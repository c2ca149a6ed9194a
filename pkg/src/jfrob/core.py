"""Shared types and validation for generator tuples and j-Frobenius values."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, Optional


class FrobeniusError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInput(FrobeniusError, ValueError):
    """The caller supplied arguments outside an operation's domain."""


class EmptyTuple(InvalidInput):
    pass


class NonPositiveGenerator(InvalidInput):
    pass


class GcdNotOne(InvalidInput):
    pass


class PivotOutOfRange(InvalidInput):
    pass


class KTooSmall(InvalidInput):
    pass


class NotCoprime(InvalidInput):
    pass


class InvalidShift(InvalidInput):
    pass


class LimitTooLarge(InvalidInput):
    pass


class OracleTooExpensive(InvalidInput):
    pass


class HardLimitExceeded(FrobeniusError, RuntimeError):
    """No stopping window was found below the hard scan limit."""


@dataclass(frozen=True)
class GeneratorTuple:
    """Ordered positive generators a_1..a_k; duplicates count as distinct coordinates."""

    generators: tuple[int, ...]

    def __iter__(self) -> Iterator[int]:
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __getitem__(self, i: int) -> int:
        return self.generators[i]

    def __str__(self) -> str:
        return "(" + ", ".join(map(str, self.generators)) + ")"

    @property
    def k(self) -> int:
        return len(self.generators)

    @property
    def gcd(self) -> int:
        return gcd(*self.generators)

    @property
    def a_min(self) -> int:
        return min(self.generators)

    @property
    def a_max(self) -> int:
        return max(self.generators)

    def require_coprime(self) -> None:
        if self.gcd != 1:
            raise GcdNotOne(f"gcd{self} = {self.gcd}, expected 1")

    def drop(self, index: int) -> "GeneratorTuple":
        """Sub-tuple with one position removed (gcd may exceed 1)."""
        gens = self.generators[:index] + self.generators[index + 1:]
        return make_tuple(gens)


def make_tuple(values: Iterable[int]) -> GeneratorTuple:
    vals = tuple(values)
    if not vals:
        raise EmptyTuple("generator tuple must be non-empty")
    for v in vals:
        if isinstance(v, bool) or int(v) != v:
            raise NonPositiveGenerator(f"generator {v!r} is not an integer")
        if v <= 0:
            raise NonPositiveGenerator(f"generator {v} is not positive")
    return GeneratorTuple(tuple(int(v) for v in vals))


def parse_tuple(text: str) -> GeneratorTuple:
    """Parse the comma-separated form used on the command line, e.g. ``3,5,8``."""
    parts = [p.strip() for p in text.split(",")]
    if parts == [""]:
        raise EmptyTuple("generator tuple must be non-empty")
    try:
        vals = [int(p) for p in parts]
    except ValueError:
        raise NonPositiveGenerator(f"malformed tuple {text!r}") from None
    return make_tuple(vals)


def tuple_sum(t: GeneratorTuple) -> int:
    return sum(t.generators)


@dataclass(frozen=True)
class RepVector:
    coefficients: tuple[int, ...]
    target: int

    @property
    def positive(self) -> bool:
        return all(x >= 1 for x in self.coefficients)

    def check(self, t: GeneratorTuple) -> bool:
        return (
            len(self.coefficients) == t.k
            and all(x >= 0 for x in self.coefficients)
            and sum(a * x for a, x in zip(t, self.coefficients)) == self.target
        )


G_KIND = "g"
F_KIND = "f"


@dataclass(frozen=True)
class JFrobeniusValue:
    """g_j or f_j of some tuple: a positive integer, or absent (rendered as 0)."""

    j: int
    kind: str = G_KIND
    value: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind not in (G_KIND, F_KIND):
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.value is not None and self.value < 1:
            raise ValueError(f"present value must be positive, got {self.value}")

    @property
    def exists(self) -> bool:
        return self.value is not None

    def as_int(self) -> int:
        return 0 if self.value is None else self.value

    @classmethod
    def present(cls, value: int, j: int, kind: str = G_KIND) -> "JFrobeniusValue":
        return cls(j, kind, value)

    @classmethod
    def absent(cls, j: int, kind: str = G_KIND) -> "JFrobeniusValue":
        return cls(j, kind, None)

    @classmethod
    def from_extended(cls, ext: Optional[int], j: int, kind: str = G_KIND) -> "JFrobeniusValue":
        # Extended values may be 0 or -1 (greatest integer overall); only positive ones count.
        if ext is None or ext < 1:
            return cls(j, kind, None)
        return cls(j, kind, ext)

    def __str__(self) -> str:
        return str(self.as_int())
