"""
Direct recursive constructions for the five families that admit one.

Two lifting maps drive every rule.  `shift_append_one` sends a word of
length m-1 to length m by adding one to every value and appending 1;
`append_max` simply appends the new maximum m.  Three families grow by
shift_append_one plus two explicitly constructed extra words per step
(sizes 2n-5); the other two grow by applying both maps to every member
(sizes 2^(n-3)).

Each rule starts from a small base set and walks up one length at a time.
The tests check the output against the brute-force oracle member lists,
so the word templates below are pinned to the enumerated truth.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import oracle
from .perms import Perm
from .restrictions import RestrictionSpec


def shift_append_one(pi: Sequence[int]) -> Perm:
    """
    >>> shift_append_one((3, 1, 2))
    (4, 2, 3, 1)
    >>> shift_append_one(())
    (1,)
    """
    return tuple(v + 1 for v in pi) + (1,)


def append_max(pi: Sequence[int]) -> Perm:
    """
    >>> append_max((3, 1, 2, 4))
    (3, 1, 2, 4, 5)
    >>> append_max(())
    (1,)
    """
    return tuple(pi) + (len(pi) + 1,)


def _down(hi: int, lo: int) -> tuple[int, ...]:
    """Descending run hi, hi-1, ..., lo (empty when hi < lo)."""
    return tuple(range(hi, lo - 1, -1))


def _extras_avoid123_contain312(n: int) -> list[Perm]:
    # 3 1 n (n-1) ... 4 2   and   (n-2) (n-3) ... 2 n 1 (n-1)
    return [(3, 1) + _down(n, 4) + (2,),
            _down(n - 2, 2) + (n, 1, n - 1)]


def _extras_avoid312_contain123(n: int) -> list[Perm]:
    # 1 (n-1) n (n-2) ... 2   and   (n-2) (n-1) (n-3) ... 2 1 n
    return [(1, n - 1, n) + _down(n - 2, 2),
            (n - 2, n - 1) + _down(n - 3, 2) + (1, n)]


def _extras_contain123_312(n: int) -> list[Perm]:
    # 1 n (n-2) (n-1) (n-3) ... 2   and   (n-1) (n-3) (n-2) (n-4) ... 2 1 n
    return [(1, n, n - 2, n - 1) + _down(n - 3, 2),
            (n - 1, n - 3, n - 2) + _down(n - 4, 2) + (1, n)]


@dataclass(frozen=True)
class FamilyRule:
    """One generated family: its spec, base set, and growth step."""

    key: str
    spec: RestrictionSpec
    base_n: int
    base: tuple[Perm, ...] | None  # None: seed from the oracle at base_n
    extras: Callable[[int], list[Perm]] | None  # None: doubling rule

    def seed(self) -> list[Perm]:
        if self.base is not None:
            return list(self.base)
        return oracle.members(self.base_n, self.spec)

    def step(self, n: int, current: Iterable[Perm]) -> list[Perm]:
        lifted = [shift_append_one(p) for p in current]
        if self.extras is not None:
            return lifted + self.extras(n)
        return lifted + [append_max(p) for p in current]


FAMILIES: dict[str, FamilyRule] = {
    rule.key: rule for rule in (
        FamilyRule(
            key="123;312",
            spec=RestrictionSpec.parse("123;312"),
            base_n=3, base=((3, 1, 2),),
            extras=_extras_avoid123_contain312),
        FamilyRule(
            key="312;123",
            spec=RestrictionSpec.parse("312;123"),
            base_n=3, base=((1, 2, 3),),
            extras=_extras_avoid312_contain123),
        FamilyRule(
            key=";123,312",
            spec=RestrictionSpec.parse(";123,312"),
            base_n=5, base=None,  # the rule needs the full n=5 set to start
            extras=_extras_contain123_312),
        FamilyRule(
            key="132;312",
            spec=RestrictionSpec.parse("132;312"),
            base_n=4, base=((3, 1, 2, 4), (4, 2, 3, 1)),
            extras=None),
        FamilyRule(
            key=";132,312",
            spec=RestrictionSpec.parse(";132,312"),
            base_n=4, base=((2, 4, 1, 3), (3, 1, 4, 2)),
            extras=None),
    )
}


def family_for(spec: RestrictionSpec) -> FamilyRule | None:
    """The generating rule for a spec, if one exists."""
    return FAMILIES.get(spec.text())


def _resolve(family: str | RestrictionSpec | FamilyRule) -> FamilyRule:
    if isinstance(family, FamilyRule):
        return family
    if isinstance(family, RestrictionSpec):
        rule = family_for(family)
        if rule is None:
            raise ValueError(f"no generating rule for spec {family.text()!r}")
        return rule
    if family in FAMILIES:
        return FAMILIES[family]
    rule = family_for(RestrictionSpec.parse(family))
    if rule is None:
        raise ValueError(f"no generating rule for family {family!r}")
    return rule


def generate(family: str | RestrictionSpec | FamilyRule, n: int) -> list[Perm]:
    """
    The full member set of the family at size n, built from the base by
    iterating the growth rule; sorted lexicographically.

    >>> sorted(generate("123;312", 4))
    [(2, 4, 1, 3), (3, 1, 4, 2), (4, 2, 3, 1)]
    """
    rule = _resolve(family)
    if n < rule.base_n:
        raise ValueError(
            f"family {rule.key!r} starts at n = {rule.base_n}, got n = {n}")
    current = rule.seed()
    for m in range(rule.base_n + 1, n + 1):
        current = rule.step(m, current)
    return sorted(current)
