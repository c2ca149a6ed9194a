"""Exhaustive searches over tuple space: order inversions and the g_1 > g_0 question."""
from __future__ import annotations

import csv
import io
import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Iterable, Iterator, Optional

from .core import GeneratorTuple, make_tuple
from .reduction import g_sequence_auto


@dataclass(frozen=True)
class InversionRecord:
    tuple: GeneratorTuple
    j: int
    g_j: int
    g_j_plus_1: int

    def __post_init__(self) -> None:
        if not 0 < self.g_j_plus_1 < self.g_j:
            raise ValueError(f"not an inversion: {self}")

    def as_dict(self) -> dict:
        return {
            "tuple": list(self.tuple.generators),
            "j": self.j,
            "g_j": self.g_j,
            "g_j_plus_1": self.g_j_plus_1,
        }


@dataclass(frozen=True)
class Counterexample:
    tuple: GeneratorTuple
    g_0: int
    g_1: int

    def as_dict(self) -> dict:
        return {"tuple": list(self.tuple.generators), "g_0": self.g_0, "g_1": self.g_1}


@dataclass
class SearchReport:
    kind: str
    k: int
    max_gen: int
    max_j: int
    inversions: list[InversionRecord] = field(default_factory=list)
    counterexamples: list[Counterexample] = field(default_factory=list)
    # first inverting j for each tuple that has one
    min_inverting_j: list[tuple[GeneratorTuple, int]] = field(default_factory=list)
    tuples_scanned: int = 0
    elapsed: float = 0.0  # wall time; never serialized

    def summary(self) -> dict:
        return {
            "record": "summary",
            "search": self.kind,
            "k": self.k,
            "max_gen": self.max_gen,
            "max_j": self.max_j,
            "tuples_scanned": self.tuples_scanned,
            "inversions": len(self.inversions),
            "tuples_with_inversion": len(self.min_inverting_j),
            "counterexamples": len(self.counterexamples),
        }

    def to_json_lines(self) -> str:
        lines = [json.dumps(self.summary(), separators=(",", ":"))]
        for r in self.inversions:
            lines.append(json.dumps({"record": "inversion", **r.as_dict()}, separators=(",", ":")))
        for c in self.counterexamples:
            lines.append(json.dumps({"record": "counterexample", **c.as_dict()}, separators=(",", ":")))
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        # header plain, data rows quote only the tuple field
        w = csv.writer(buf, lineterminator="\n", quoting=csv.QUOTE_NONNUMERIC)
        if self.kind == "conjecture":
            buf.write("tuple,g_0,g_1\n")
            for c in self.counterexamples:
                w.writerow([_tuple_field(c.tuple), c.g_0, c.g_1])
        else:
            buf.write("tuple,j,g_j,g_j_plus_1\n")
            for r in self.inversions:
                w.writerow([_tuple_field(r.tuple), r.j, r.g_j, r.g_j_plus_1])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [
            f"{self.kind} search: k={self.k} max_gen={self.max_gen} max_j={self.max_j}",
            f"tuples scanned: {self.tuples_scanned}",
        ]
        if self.kind == "conjecture":
            if self.counterexamples:
                lines.append(f"COUNTEREXAMPLES FOUND: {len(self.counterexamples)}")
                lines += [f"  {c.tuple}: g_0={c.g_0} g_1={c.g_1}" for c in self.counterexamples]
            else:
                lines.append("counterexamples: none (g_1 > g_0 wherever both exist)")
        else:
            lines.append(f"inversions: {len(self.inversions)} in {len(self.min_inverting_j)} tuples")
            lines += [f"  {r.tuple} j={r.j}: g_j={r.g_j} > g_(j+1)={r.g_j_plus_1}" for r in self.inversions]
        return "\n".join(lines) + "\n"


def _tuple_field(t: GeneratorTuple) -> str:
    return " ".join(map(str, t.generators))


def scan_inversions(t: GeneratorTuple, J: int) -> list[InversionRecord]:
    """Every j <= J with 0 < g_{j+1} < g_j."""
    vals = g_sequence_auto(t, J + 1).values
    out = []
    for j in range(J + 1):
        a, b = vals[j], vals[j + 1]
        if a.exists and b.exists and b.value < a.value:
            out.append(InversionRecord(t, j, a.value, b.value))
    return out


def enumerate_tuples(k: int, max_gen: int) -> Iterator[GeneratorTuple]:
    """Nondecreasing tuples with entries in [1, max_gen] and gcd 1, lexicographically."""
    for combo in itertools.combinations_with_replacement(range(1, max_gen + 1), k):
        if gcd(*combo) == 1:
            yield make_tuple(combo)


def _inversions_task(args: tuple[tuple[int, ...], int]) -> list[InversionRecord]:
    gens, J = args
    return scan_inversions(make_tuple(gens), J)


def _conjecture_task(gens: tuple[int, ...]) -> tuple[Optional[int], Optional[int]]:
    vals = g_sequence_auto(make_tuple(gens), 1).values
    return vals[0].value, vals[1].value


def _ordered_map(fn: Callable, items: Iterable, workers: int) -> Iterator:
    # Executor.map yields in submission order, so output never depends on scheduling.
    if workers <= 1:
        yield from map(fn, items)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(fn, items, chunksize=16)


def search_inversions(k: int, max_gen: int, max_j: int, workers: int = 1) -> SearchReport:
    start = time.perf_counter()
    report = SearchReport("inversions", k, max_gen, max_j)
    tuples = list(enumerate_tuples(k, max_gen))
    jobs = [(t.generators, max_j) for t in tuples]
    for t, recs in zip(tuples, _ordered_map(_inversions_task, jobs, workers)):
        report.tuples_scanned += 1
        report.inversions.extend(recs)
        if recs:
            report.min_inverting_j.append((t, recs[0].j))
    report.elapsed = time.perf_counter() - start
    return report


def conjecture_g1_gt_g0(
    k: int, max_gen: int, out: Optional[Callable[[str], None]] = None, workers: int = 1
) -> SearchReport:
    """Check g_1 > g_0 on every tuple where both exist; counterexamples are recorded, not raised."""
    start = time.perf_counter()
    report = SearchReport("conjecture", k, max_gen, 1)
    tuples = list(enumerate_tuples(k, max_gen))
    results = _ordered_map(_conjecture_task, [t.generators for t in tuples], workers)
    for t, (g0, g1) in zip(tuples, results):
        report.tuples_scanned += 1
        if g0 is not None and g1 is not None and not g1 > g0:
            report.counterexamples.append(Counterexample(t, g0, g1))
    report.elapsed = time.perf_counter() - start
    if out is not None:
        out(report.to_text())
    return report
