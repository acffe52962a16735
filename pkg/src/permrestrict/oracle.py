"""
Brute-force oracle: deterministic enumeration of S_n and of the sets
selected by a restriction spec.

`satisfies` is the reference predicate (depth-first counting with caps and
short-circuiting); `members` and `count` enumerate with it.  `count_many`
and `members_many` answer many specs in one sweep by tabulating, for every
permutation of [n] at once, the exact occurrence counts of all six
length-3 patterns as numpy arrays.  The batch path is cross-checked
against the reference predicate by the test suite; both are exact.

Enumeration order is lexicographic everywhere, so member lists are stable
and diff-able.  A hard limit (default n = 10) guards against accidentally
asking for a 40-billion-row sweep; pass max_n to raise it deliberately.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Iterator, Sequence

import numpy as np

from .perms import PATTERNS_3, Perm, _count_upto, count_occurrences
from .restrictions import RestrictionSpec

DEFAULT_MAX_N = 10


class LimitError(RuntimeError):
    """Raised when an enumeration would exceed the configured hard limit."""


def _check_limit(n: int, max_n: int) -> None:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n > max_n:
        raise LimitError(
            f"n = {n} exceeds the hard limit {max_n} "
            f"({n}! permutations); pass max_n to raise it")


def iter_sn(n: int, max_n: int = DEFAULT_MAX_N) -> Iterator[Perm]:
    """Yield all n! permutations of [n] in lexicographic order."""
    _check_limit(n, max_n)
    return itertools.permutations(range(1, n + 1))


def satisfies(pi: Sequence[int], spec: RestrictionSpec) -> bool:
    """
    True when pi avoids every avoid-pattern and contains each contain-pattern
    exactly as often as required.

    Avoid checks run first (a single found occurrence rejects, so they are
    cheapest), then each contain check stops after multiplicity + 1 finds.
    """
    for p in sorted(spec.avoid, key=len):
        if _count_upto(pi, p, 1):
            return False
    for p, m in sorted(spec.contain, key=lambda e: len(e[0])):
        got = count_occurrences(pi, p, cap=m)
        if got.capped or got.value != m:
            return False
    return True


def members(n: int, spec: RestrictionSpec, workers: int | None = None,
            max_n: int = DEFAULT_MAX_N) -> list[Perm]:
    """
    All pi in S_n satisfying the spec, in lexicographic order.

    With ``workers``, first-element blocks are scanned concurrently and the
    per-block lists concatenate in block order, which reproduces the serial
    lexicographic output exactly.
    """
    _check_limit(n, max_n)
    if workers is not None and workers > 1 and n > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            blocks = pool.map(lambda v: _member_block(n, v, spec),
                              range(1, n + 1))
            return [pi for block in blocks for pi in block]
    return [pi for pi in iter_sn(n, max_n) if satisfies(pi, spec)]


def _member_block(n: int, first: int, spec: RestrictionSpec) -> list[Perm]:
    rest = [v for v in range(1, n + 1) if v != first]
    return [(first, *tail) for tail in itertools.permutations(rest)
            if satisfies((first, *tail), spec)]


def _count_block(n: int, first: int, spec: RestrictionSpec) -> int:
    rest = [v for v in range(1, n + 1) if v != first]
    return sum(1 for tail in itertools.permutations(rest)
               if satisfies((first, *tail), spec))


def count(n: int, spec: RestrictionSpec, workers: int | None = None,
          max_n: int = DEFAULT_MAX_N) -> int:
    """
    |S_n(spec)| by direct enumeration.

    With ``workers``, the space is partitioned by first element into n
    independent blocks evaluated concurrently; block tallies merge by
    addition, so the result is identical to the serial sweep.
    """
    _check_limit(n, max_n)
    if workers is not None and workers > 1 and n > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            tallies = pool.map(lambda v: _count_block(n, v, spec), range(1, n + 1))
            return sum(tallies)
    return sum(1 for pi in iter_sn(n, max_n) if satisfies(pi, spec))


def perm_matrix(n: int, max_n: int = DEFAULT_MAX_N) -> np.ndarray:
    """
    All permutations of [n] as an (n!, n) int8 matrix, rows in
    lexicographic order (row r equals the r-th yield of `iter_sn`).
    """
    _check_limit(n, max_n)
    out = np.zeros((1, 0), dtype=np.int8)
    for m in range(1, n + 1):
        rows = out.shape[0]
        block = np.empty((rows * m, m), dtype=np.int8)
        values = np.arange(1, m + 1, dtype=np.int8)
        for j in range(m):
            rest = np.delete(values, j)
            seg = block[j * rows:(j + 1) * rows]
            seg[:, 0] = values[j]
            if m > 1:
                # relabel the lex-ordered perms of [m-1] over the leftover values
                seg[:, 1:] = rest[out - 1]
        out = block
    return out


def pattern_tally(mat: np.ndarray) -> dict[Perm, np.ndarray]:
    """
    Per-row exact occurrence counts of all six length-3 patterns.

    One pass over the C(n, 3) position triples; each triple is classified
    by three pairwise comparisons and added into the per-pattern tallies.
    Counts fit in uint8 since C(n, 3) <= 220 for n <= 12.
    """
    rows, n = mat.shape
    tallies = {p: np.zeros(rows, dtype=np.uint8) for p in PATTERNS_3}
    for i, j, k in itertools.combinations(range(n), 3):
        a = mat[:, i] < mat[:, j]
        b = mat[:, j] < mat[:, k]
        c = mat[:, i] < mat[:, k]
        na, nb, nc = ~a, ~b, ~c
        tallies[1, 2, 3] += a & b
        tallies[1, 3, 2] += a & nb & c
        tallies[2, 1, 3] += na & b & c
        tallies[2, 3, 1] += a & nb & nc
        tallies[3, 1, 2] += na & b & nc
        tallies[3, 2, 1] += nb & na
    return tallies


def _census_mask(spec: RestrictionSpec,
                 tallies: dict[Perm, np.ndarray], rows: int) -> np.ndarray:
    mask = np.ones(rows, dtype=bool)
    for p in spec.avoid:
        mask &= tallies[p] == 0
    for p, m in spec.contain:
        mask &= tallies[p] == m
    return mask


def _all_len3(spec: RestrictionSpec) -> bool:
    return all(len(p) == 3 for p in spec.avoid) and \
        all(len(p) == 3 for p, _ in spec.contain)


def count_many(n: int, specs: Sequence[RestrictionSpec],
               max_n: int = DEFAULT_MAX_N) -> list[int]:
    """
    Count every spec over the same S_n in one enumeration sweep.

    Specs whose patterns all have length 3 share the census; any other
    spec falls back to the reference `count`.
    """
    _check_limit(n, max_n)
    out: list[int | None] = [None] * len(specs)
    census_idx = [i for i, s in enumerate(specs) if _all_len3(s)]
    if census_idx:
        mat = perm_matrix(n, max_n)
        tallies = pattern_tally(mat)
        for i in census_idx:
            out[i] = int(_census_mask(specs[i], tallies, mat.shape[0]).sum())
    for i, spec in enumerate(specs):
        if out[i] is None:
            out[i] = count(n, spec, max_n=max_n)
    return out  # type: ignore[return-value]


def members_many(n: int, specs: Sequence[RestrictionSpec],
                 max_n: int = DEFAULT_MAX_N) -> list[list[Perm]]:
    """Member lists for every spec from one sweep; each list lexicographic."""
    _check_limit(n, max_n)
    out: list[list[Perm] | None] = [None] * len(specs)
    census_idx = [i for i, s in enumerate(specs) if _all_len3(s)]
    if census_idx:
        mat = perm_matrix(n, max_n)
        tallies = pattern_tally(mat)
        for i in census_idx:
            mask = _census_mask(specs[i], tallies, mat.shape[0])
            out[i] = [tuple(row) for row in mat[mask].tolist()]
    for i, spec in enumerate(specs):
        if out[i] is None:
            out[i] = members(n, spec, max_n=max_n)
    return out  # type: ignore[return-value]


@dataclass(frozen=True)
class SequenceRecord:
    """A computed stretch of the counting sequence of one spec."""

    spec: RestrictionSpec
    n_min: int
    n_max: int
    values: tuple[int, ...]
    method: str
    produced_at: str

    def __post_init__(self):
        if self.n_min > self.n_max:
            raise ValueError(f"empty range {self.n_min}..{self.n_max}")
        if len(self.values) != self.n_max - self.n_min + 1:
            raise ValueError("values length does not match the n range")
        if any(v < 0 for v in self.values):
            raise ValueError("counts cannot be negative")
        if self.method not in ("brute", "formula", "generator"):
            raise ValueError(f"unknown method {self.method!r}")

    def as_json(self) -> dict:
        return {
            "spec": self.spec.as_json(),
            "range": [self.n_min, self.n_max],
            "values": list(self.values),
            "method": self.method,
        }


def sequence(spec: RestrictionSpec, n_min: int, n_max: int,
             max_n: int = DEFAULT_MAX_N) -> SequenceRecord:
    """Brute-force counts for each n in [n_min, n_max]."""
    if n_min > n_max:
        raise ValueError(f"empty range {n_min}..{n_max}")
    _check_limit(n_max, max_n)
    values = tuple(count_many(n, [spec], max_n)[0] for n in range(n_min, n_max + 1))
    return SequenceRecord(
        spec=spec, n_min=n_min, n_max=n_max, values=values, method="brute",
        produced_at=datetime.now(timezone.utc).isoformat(timespec="seconds"))
