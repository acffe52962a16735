"""Spec collections shared across test modules."""

import itertools

from permrestrict.perms import PATTERNS_3
from permrestrict.restrictions import avoid_all, contain_each_once, ordered_pair

#: All 30 avoid-one-contain-one specs (alpha; beta), alpha != beta.
ORDERED_30 = tuple(ordered_pair(a, b)
                   for a, b in itertools.permutations(PATTERNS_3, 2))

#: All 15 contain-both specs (0; {alpha, beta}), alpha != beta.
MULTISET_15 = tuple(contain_each_once(a, b)
                    for a, b in itertools.combinations(PATTERNS_3, 2))

SINGLE_AVOID_6 = tuple(avoid_all(p) for p in PATTERNS_3)
PAIR_AVOID_15 = tuple(avoid_all(a, b)
                      for a, b in itertools.combinations(PATTERNS_3, 2))
SINGLE_CONTAIN_6 = tuple(contain_each_once(p) for p in PATTERNS_3)

ALL_SPECS = (ORDERED_30 + MULTISET_15 + SINGLE_AVOID_6
             + PAIR_AVOID_15 + SINGLE_CONTAIN_6)
