"""
Restriction specs: an avoid-set R and a contain-multiset T with exact
required multiplicities.

``RestrictionSpec`` is the key of the counting problem "permutations of [n]
avoiding every pattern in R and containing each pattern of T exactly as
often as its multiplicity".  Instances canonicalize on construction (sorted
avoid set, contain multiset folded and sorted) so that equal specs compare
and hash equal, which the symmetry orbits and the formula table rely on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .perms import Perm, compact_word, parse_word, pattern

ContainEntry = tuple[Perm, int]
_ContainInput = Union[Iterable[int], tuple]


def _normalize_contain(entries: Iterable[_ContainInput]) -> tuple[ContainEntry, ...]:
    """Fold (pattern, multiplicity) entries; bare patterns count once."""
    folded: dict[Perm, int] = {}
    for entry in entries:
        if (isinstance(entry, tuple) and len(entry) == 2
                and isinstance(entry[0], tuple) and isinstance(entry[1], int)):
            patt, mult = pattern(entry[0]), entry[1]
        else:
            patt, mult = pattern(entry), 1
        if mult < 1:
            raise ValueError(f"contain multiplicity must be >= 1, got {mult}")
        folded[patt] = folded.get(patt, 0) + mult
    return tuple(sorted(folded.items()))


@dataclass(frozen=True, order=True)
class RestrictionSpec:
    """Canonical (R; T) pair.  Construct via the fields or `parse`."""

    avoid: tuple[Perm, ...] = ()
    contain: tuple[ContainEntry, ...] = ()

    def __post_init__(self):
        avoid = tuple(sorted({pattern(p) for p in self.avoid}))
        contain = _normalize_contain(self.contain)
        overlap = set(avoid) & {p for p, _ in contain}
        if overlap:
            raise ValueError(
                f"patterns cannot be both avoided and contained: "
                f"{sorted(compact_word(p) for p in overlap)}")
        object.__setattr__(self, "avoid", avoid)
        object.__setattr__(self, "contain", contain)

    @property
    def is_trivial(self) -> bool:
        return not self.avoid and not self.contain

    def text(self) -> str:
        """
        Canonical one-line form ``<avoid>;<contain>``, e.g. "123;312",
        ";123,312", "123,321;", ";132^2".
        """
        left = ",".join(compact_word(p) for p in self.avoid)
        right = ",".join(
            compact_word(p) + (f"^{m}" if m > 1 else "")
            for p, m in self.contain)
        return f"{left};{right}"

    @classmethod
    def parse(cls, text: str) -> "RestrictionSpec":
        """Parse the `text()` form (the semicolon is required)."""
        if ";" not in text:
            raise ValueError(f"restriction text needs one ';': {text!r}")
        left, _, right = text.partition(";")
        avoid = tuple(parse_word(t) for t in left.split(",") if t.strip())
        contain = []
        for tok in right.split(","):
            tok = tok.strip()
            if not tok:
                continue
            if "^" in tok:
                word, _, mult = tok.partition("^")
                contain.append((parse_word(word), int(mult)))
            else:
                contain.append((parse_word(tok), 1))
        return cls(avoid=avoid, contain=tuple(contain))

    def __str__(self) -> str:
        return f"({self.text()})"

    def as_json(self) -> dict:
        """The JSON shape used by the command-line reports."""
        return {
            "avoid": [compact_word(p) for p in self.avoid],
            "contain": [{"pattern": compact_word(p), "count": m}
                        for p, m in self.contain],
        }


def ordered_pair(alpha: Iterable[int], beta: Iterable[int]) -> RestrictionSpec:
    """The spec "avoid alpha, contain beta exactly once"."""
    return RestrictionSpec(avoid=(tuple(alpha),), contain=((tuple(beta), 1),))


def contain_each_once(*patterns: Iterable[int]) -> RestrictionSpec:
    """The spec "contain each given pattern exactly once" (empty avoid set)."""
    return RestrictionSpec(contain=tuple((tuple(p), 1) for p in patterns))


def avoid_all(*patterns: Iterable[int]) -> RestrictionSpec:
    """The spec "avoid every given pattern" (empty contain multiset)."""
    return RestrictionSpec(avoid=tuple(tuple(p) for p in patterns))
