"""
The closed-form ledger: every known exact formula for the counting
sequences of length-3 restriction specs, keyed by symmetry orbit.

Entries cover single-pattern avoidance (Catalan), pair avoidance, single
exact containment, the ten avoid-one-contain-one classes A..E, and the
ten contain-two classes F..J.  Each entry records the specs it covers (an
orbit under reversal/complementation/inverse, or a union of orbits when
two orbits share one formula), a validity threshold, explicit small-n
exception values, and an exact rational closed form.

Evaluation is exact: formulas with fractional powers of two in their
literal form (n * 2^(n-5) at n = 4, for instance) are computed over
rationals and asserted integral.  Below the validity range with no listed
exception, the value is reported unknown (None) and callers fall back to
the brute-force oracle.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Mapping

from .restrictions import RestrictionSpec, avoid_all, contain_each_once, ordered_pair
from .symmetry import orbit


class FormulaIntegrityError(ArithmeticError):
    """A closed form produced a non-integral or negative value in range."""


@dataclass(frozen=True, eq=False)
class FormulaEntry:
    class_id: str
    aliases: tuple[str, ...]
    members: frozenset[RestrictionSpec]
    display: str
    valid_from: int
    exceptions: tuple[tuple[int, int], ...]
    func: Callable[[int], Fraction]

    def exception_at(self, n: int) -> int | None:
        for m, v in self.exceptions:
            if m == n:
                return v
        return None

    def as_json(self) -> dict:
        return {
            "class_id": self.class_id,
            "aliases": list(self.aliases),
            "members": sorted(s.text() for s in self.members),
            "formula": self.display,
            "valid_from": self.valid_from,
            "exceptions": {str(n): v for n, v in sorted(self.exceptions)},
        }


def evaluate(entry: FormulaEntry, n: int) -> int | None:
    """
    The entry's value at n: listed exceptions first, then the closed form
    for n >= valid_from, else None (unknown; use the oracle).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    exc = entry.exception_at(n)
    if exc is not None:
        return exc
    if n < entry.valid_from:
        return None
    value = entry.func(n)
    if value.denominator != 1 or value < 0:
        raise FormulaIntegrityError(
            f"{entry.class_id} evaluates to {value} at n={n}; "
            f"the ledger entry is mis-transcribed")
    return int(value)


def _comb0(a: int, b: int) -> int:
    """Binomial coefficient extended by zero outside 0 <= b <= a."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def _pow2(k: int) -> Fraction:
    return Fraction(2) ** k


#: Trivially, a contain-two-distinct-patterns spec is empty for n <= 3
#: (a 3-letter word realizes exactly one length-3 pattern).
_SHORT_ZEROS = ((1, 0), (2, 0), (3, 0))

_P = {
    "123": (1, 2, 3), "132": (1, 3, 2), "213": (2, 1, 3),
    "231": (2, 3, 1), "312": (3, 1, 2), "321": (3, 2, 1),
}


def _union_orbits(*specs: RestrictionSpec) -> frozenset[RestrictionSpec]:
    out: set[RestrictionSpec] = set()
    for s in specs:
        out |= orbit(s)
    return frozenset(out)


@lru_cache(maxsize=None)
def known_table() -> tuple[FormulaEntry, ...]:
    """All ledger entries; member orbits come from the symmetry group."""
    entries = (
        FormulaEntry(
            class_id="SINGLE_AVOID", aliases=("catalan",),
            members=_union_orbits(avoid_all(_P["123"]), avoid_all(_P["132"])),
            display="C(2n,n)/(n+1)", valid_from=1, exceptions=(),
            func=lambda n: Fraction(comb(2 * n, n), n + 1)),
        FormulaEntry(
            class_id="SS_2A", aliases=("2.1", "2.1(1)"),
            members=_union_orbits(avoid_all(_P["123"], _P["132"]),
                                  avoid_all(_P["132"], _P["213"]),
                                  avoid_all(_P["132"], _P["231"])),
            display="2^(n-1)", valid_from=2, exceptions=((1, 1),),
            func=lambda n: _pow2(n - 1)),
        FormulaEntry(
            class_id="SS_2B", aliases=("2.1", "2.1(2)"),
            members=_union_orbits(avoid_all(_P["123"], _P["231"])),
            display="C(n,2)+1", valid_from=1, exceptions=(),
            func=lambda n: Fraction(comb(n, 2) + 1)),
        FormulaEntry(
            class_id="SS_2C", aliases=("2.1", "2.1(3)"),
            members=_union_orbits(avoid_all(_P["123"], _P["321"])),
            display="0", valid_from=5, exceptions=(),
            func=lambda n: Fraction(0)),
        FormulaEntry(
            class_id="SINGLE_CONTAIN_123", aliases=(),
            members=_union_orbits(contain_each_once(_P["123"])),
            display="(3/n)*C(2n,n+3)", valid_from=1, exceptions=(),
            func=lambda n: Fraction(3, n) * comb(2 * n, n + 3)),
        FormulaEntry(
            class_id="SINGLE_CONTAIN_132", aliases=(),
            members=_union_orbits(contain_each_once(_P["132"])),
            display="C(2n-3,n-3)", valid_from=1, exceptions=(),
            func=lambda n: Fraction(_comb0(2 * n - 3, n - 3))),
        FormulaEntry(
            class_id="A", aliases=(),
            members=_union_orbits(ordered_pair(_P["123"], _P["321"])),
            display="0", valid_from=6, exceptions=(),
            func=lambda n: Fraction(0)),
        FormulaEntry(
            class_id="B", aliases=("4.1",),
            members=_union_orbits(ordered_pair(_P["123"], _P["132"]),
                                  ordered_pair(_P["132"], _P["123"])),
            display="(n-2)*2^(n-3)", valid_from=3, exceptions=(),
            func=lambda n: (n - 2) * _pow2(n - 3)),
        FormulaEntry(
            class_id="C", aliases=("4.2", "4.5"),
            members=_union_orbits(ordered_pair(_P["123"], _P["231"]),
                                  ordered_pair(_P["132"], _P["321"])),
            display="2n-5", valid_from=3, exceptions=(),
            func=lambda n: Fraction(2 * n - 5)),
        FormulaEntry(
            class_id="D", aliases=("4.3",),
            members=_union_orbits(ordered_pair(_P["132"], _P["213"])),
            display="n*2^(n-5)", valid_from=4, exceptions=((3, 1),),
            func=lambda n: n * _pow2(n - 5)),
        FormulaEntry(
            class_id="E", aliases=("4.4",),
            members=_union_orbits(ordered_pair(_P["132"], _P["231"])),
            display="2^(n-3)", valid_from=3, exceptions=(),
            func=lambda n: _pow2(n - 3)),
        FormulaEntry(
            class_id="F", aliases=(),
            members=_union_orbits(contain_each_once(_P["123"], _P["321"])),
            display="0", valid_from=6, exceptions=_SHORT_ZEROS,
            func=lambda n: Fraction(0)),
        FormulaEntry(
            class_id="G", aliases=("5.2",),
            members=_union_orbits(contain_each_once(_P["123"], _P["231"])),
            display="2n-5", valid_from=5, exceptions=_SHORT_ZEROS + ((4, 2),),
            func=lambda n: Fraction(2 * n - 5)),
        FormulaEntry(
            class_id="H", aliases=("5.1",),
            members=_union_orbits(contain_each_once(_P["123"], _P["132"])),
            display="(n-3)*(n-4)*2^(n-5)", valid_from=5, exceptions=_SHORT_ZEROS,
            func=lambda n: (n - 3) * (n - 4) * _pow2(n - 5)),
        FormulaEntry(
            class_id="I", aliases=("5.3",),
            members=_union_orbits(contain_each_once(_P["132"], _P["213"])),
            display="(n^2+21n-28)*2^(n-9)", valid_from=7,
            exceptions=_SHORT_ZEROS + ((4, 3), (5, 6), (6, 17)),
            func=lambda n: (n * n + 21 * n - 28) * _pow2(n - 9)),
        FormulaEntry(
            class_id="J", aliases=("5.4",),
            members=_union_orbits(contain_each_once(_P["132"], _P["231"])),
            display="2^(n-3)", valid_from=4, exceptions=_SHORT_ZEROS,
            func=lambda n: _pow2(n - 3)),
    )
    return entries


#: The ten entry ids for the two headline families of classes.
ORDERED_CLASS_IDS = ("A", "B", "C", "D", "E")
MULTISET_CLASS_IDS = ("F", "G", "H", "I", "J")


@lru_cache(maxsize=None)
def _index() -> Mapping[RestrictionSpec, FormulaEntry]:
    idx: dict[RestrictionSpec, FormulaEntry] = {}
    for entry in known_table():
        for spec in entry.members:
            idx[spec] = entry
    return idx


def lookup(spec: RestrictionSpec) -> FormulaEntry | None:
    """The entry covering the spec, or None if no formula is known."""
    return _index().get(spec)


def entry_by_id(class_id: str) -> FormulaEntry:
    for entry in known_table():
        if entry.class_id == class_id:
            return entry
    raise KeyError(class_id)


def resolve_selectors(selectors: str) -> tuple[FormulaEntry, ...]:
    """
    Turn a comma-separated selector string into ledger entries.

    "all" selects everything; otherwise each token matches a class id
    (case-insensitive) or one of its aliases, e.g. "B", "5.3", "catalan".
    """
    table = known_table()
    if selectors.strip().lower() == "all":
        return table
    chosen: list[FormulaEntry] = []
    for token in selectors.split(","):
        token = token.strip()
        if not token:
            continue
        hits = [e for e in table
                if e.class_id.lower() == token.lower() or token in e.aliases]
        if not hits:
            raise ValueError(f"no ledger entry matches selector {token!r}")
        for e in hits:
            if e not in chosen:
                chosen.append(e)
    if not chosen:
        raise ValueError("no ledger entries selected")
    return tuple(chosen)


def ledger_json() -> str:
    """The whole ledger as a JSON document (used by verify reports)."""
    return json.dumps([e.as_json() for e in known_table()], indent=2)
