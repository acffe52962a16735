"""
Empirical classification of restriction specs by their counting sequences.

Two specs land in the same class when their counts agree at every n in the
chosen window.  Equality over a finite window is evidence, not proof, so
reports carry the "empirical over window" note.  `reconcile` compares an
empirical partition against the closed-form ledger: every ledger entry
should land inside one empirical class, classes may legitimately fuse
several entries (identical formulas), and any disagreement comes back as a
discrepancy message rather than an exception.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from . import oracle
from .formulas import evaluate, known_table
from .restrictions import RestrictionSpec
from .symmetry import orbit

CountsFn = Callable[[int, Sequence[RestrictionSpec]], Sequence[int]]


@dataclass(frozen=True)
class ClassGroup:
    """One empirical class: members sharing a witness sequence."""

    representative: RestrictionSpec
    members: tuple[RestrictionSpec, ...]
    sequence: tuple[int, ...]


@dataclass(frozen=True)
class ClassReport:
    n_min: int
    n_max: int
    classes: tuple[ClassGroup, ...]
    note: str = "empirical over window"

    def as_json(self) -> dict:
        return {
            "window": [self.n_min, self.n_max],
            "note": self.note,
            "classes": [
                {
                    "representative": g.representative.text(),
                    "members": [s.text() for s in g.members],
                    "sequence": list(g.sequence),
                }
                for g in self.classes
            ],
        }


def classify(specs: Iterable[RestrictionSpec], n_min: int, n_max: int,
             counts: CountsFn | None = None,
             max_n: int = oracle.DEFAULT_MAX_N) -> ClassReport:
    """
    Partition the specs by exact equality of counts over [n_min, n_max].

    Counts come from the brute-force oracle unless a provider is given
    (the command-line layer passes a cache-backed one).  Formula values
    are never used here; they are what classification gets checked
    against.  Output is deterministic: classes are ordered by their
    lexicographically least member, independent of input order.
    """
    unique = sorted(set(specs))
    if not unique:
        raise ValueError("nothing to classify: no specs given")
    if n_min > n_max:
        raise ValueError(f"empty window {n_min}..{n_max}")
    if counts is None:
        counts = lambda n, batch: oracle.count_many(n, batch, max_n=max_n)
    sequences: dict[RestrictionSpec, list[int]] = {s: [] for s in unique}
    for n in range(n_min, n_max + 1):
        for spec, value in zip(unique, counts(n, unique)):
            sequences[spec].append(int(value))
    buckets: dict[tuple[int, ...], list[RestrictionSpec]] = {}
    for spec in unique:
        buckets.setdefault(tuple(sequences[spec]), []).append(spec)
    groups = sorted(
        (ClassGroup(representative=min(ms), members=tuple(sorted(ms)), sequence=seq)
         for seq, ms in buckets.items()),
        key=lambda g: g.representative)
    return ClassReport(n_min=n_min, n_max=n_max, classes=tuple(groups))


@dataclass(frozen=True)
class ClassMatch:
    """How one empirical class lines up with the formula ledger."""

    group: ClassGroup
    matched_ids: tuple[str, ...]
    exact: bool
    fused_beyond_orbit: bool


@dataclass(frozen=True)
class ReconcileReport:
    matches: tuple[ClassMatch, ...]
    discrepancies: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def as_json(self) -> dict:
        return {
            "ok": self.ok,
            "discrepancies": list(self.discrepancies),
            "matches": [
                {
                    "representative": m.group.representative.text(),
                    "matched_ids": list(m.matched_ids),
                    "exact": m.exact,
                    "fused_beyond_orbit": m.fused_beyond_orbit,
                }
                for m in self.matches
            ],
        }


def reconcile(report: ClassReport) -> ReconcileReport:
    """
    Match each empirical class against the ledger entries it overlaps.

    A class is exact when it equals the union of its matched entries
    (restricted to the classified specs).  The fused flag marks classes
    strictly larger than a single symmetry orbit, i.e. equalities the
    group action alone does not explain.  Splitting a ledger entry across
    classes, or a witness value disagreeing with its entry's formula,
    produces a discrepancy message.
    """
    classified: set[RestrictionSpec] = set()
    for g in report.classes:
        classified.update(g.members)
    problems: list[str] = []
    matches: list[ClassMatch] = []
    for g in report.classes:
        group_set = set(g.members)
        ids: list[str] = []
        covered: set[RestrictionSpec] = set()
        for entry in known_table():
            overlap = entry.members & classified
            if not overlap or not (overlap & group_set):
                continue
            ids.append(entry.class_id)
            covered |= overlap
            if not overlap <= group_set:
                split = sorted(s.text() for s in overlap - group_set)
                problems.append(
                    f"ledger class {entry.class_id} splits across empirical "
                    f"classes (strays: {', '.join(split)})")
            for offset, value in enumerate(g.sequence):
                n = report.n_min + offset
                expected = evaluate(entry, n)
                if expected is not None and expected != value:
                    problems.append(
                        f"witness of {g.representative.text()} disagrees with "
                        f"{entry.class_id} at n={n}: {value} != {expected}")
        exact = bool(ids) and covered == group_set
        if not ids:
            problems.append(
                f"no ledger entry covers empirical class of "
                f"{g.representative.text()}")
        orbit_within = orbit(g.representative) & classified
        matches.append(ClassMatch(
            group=g,
            matched_ids=tuple(ids),
            exact=exact,
            fused_beyond_orbit=orbit_within < group_set))
    return ReconcileReport(matches=tuple(matches), discrepancies=tuple(problems))
