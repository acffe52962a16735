"""
Permutations as words, pattern occurrences, and occurrence counting.

A permutation of [n] = {1, 2, ..., n} is stored as a tuple of ints in
one-line (word) notation, e.g. ``(3, 1, 4, 2)``.  A pattern is simply a
permutation of [k]; a permutation pi contains the pattern alpha when some
index set i_1 < ... < i_k picks out values whose relative order matches
alpha.  Values and positions are 1-based throughout, matching the usual
word notation.

Two counting kernels are provided: a depth-first subsequence search with
pruning and early exit (`count_occurrences`, works for any pattern length)
and a quadratic prefix/suffix-tally kernel for length-3 patterns
(`count_len3_fast`), which the tests check against the naive search.
"""

from __future__ import annotations

import itertools
from math import comb
from typing import Iterable, NamedTuple, Sequence

Perm = tuple[int, ...]

#: The six length-3 patterns, in lexicographic order.
PATTERNS_3: tuple[Perm, ...] = (
    (1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1),
)


class OccurrenceCount(NamedTuple):
    """Result of an occurrence count.

    ``value`` is exact when ``capped`` is False; otherwise counting stopped
    early and ``value`` equals the cap while the true count is larger.
    """

    value: int
    capped: bool


def is_permutation(word: Sequence[int]) -> bool:
    """
    Check that word contains each of 1..len(word) exactly once.

    >>> [is_permutation(w) for w in [(1,), (3, 1, 2), (1, 1, 2), (0, 1)]]
    [True, True, False, False]
    """
    n = len(word)
    return sorted(word) == list(range(1, n + 1))


def permutation(word: Iterable[int]) -> Perm:
    """Validate and freeze a word as a permutation of [n], n >= 1."""
    w = tuple(word)
    if len(w) == 0:
        raise ValueError("empty word is not a permutation")
    if not is_permutation(w):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w}")
    return w


#: A pattern is structurally a permutation; the alias marks intent.
pattern = permutation


def standardize(word: Sequence[int]) -> Perm:
    """
    Replace each entry by its rank among the entries (the flattening map).

    >>> standardize((4, 3, 5))
    (2, 1, 3)
    >>> standardize((9, 1, 7))
    (3, 1, 2)
    >>> standardize((1, 2, 3))
    (1, 2, 3)
    """
    if len(word) == 0:
        raise ValueError("cannot standardize an empty word")
    if len(set(word)) != len(word):
        raise ValueError(f"cannot standardize a word with repeats: {tuple(word)}")
    order = sorted(word)
    return tuple(order.index(v) + 1 for v in word)


def parse_word(text: str) -> Perm:
    """
    Parse a permutation or pattern from text.

    Accepts whitespace- or comma-separated decimal tokens ("3 1 4 2",
    "3,1,4,2") and, when every value is a single digit 1..9, a compact
    digit string ("3142").  The result is validated.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty permutation text")
    if "," in s or any(ch.isspace() for ch in s):
        tokens = [t for t in s.replace(",", " ").split() if t]
    elif s.isdigit():
        tokens = list(s)  # compact form, one digit per value
    else:
        tokens = [s]
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise ValueError(f"bad permutation text: {text!r}") from None
    return permutation(values)


def format_word(word: Sequence[int]) -> str:
    """Emit the token form: ``format_word((3, 1, 4, 2)) == '3 1 4 2'``."""
    return " ".join(str(v) for v in word)


def compact_word(word: Sequence[int]) -> str:
    """Digit-string form when all values are single digits, else token form."""
    if word and max(word) <= 9:
        return "".join(str(v) for v in word)
    return format_word(word)


def _count_upto(word: Sequence[int], patt: Sequence[int], limit: int | None) -> int:
    """
    Count occurrences of patt in word by depth-first subsequence search,
    returning as soon as `limit` occurrences have been found.

    A partial choice is extended only while enough positions remain and the
    new value's rank among the chosen values matches the pattern's rank at
    that slot, so mismatching branches die immediately.
    """
    n, k = len(word), len(patt)
    if k > n or (limit is not None and limit <= 0):
        return 0
    ranks = tuple(1 + sum(p < patt[t] for p in patt[:t]) for t in range(k))
    found = 0
    chosen: list[int] = []

    def walk(start: int, slot: int) -> bool:
        nonlocal found
        for idx in range(start, n - (k - slot) + 1):
            v = word[idx]
            if 1 + sum(c < v for c in chosen) != ranks[slot]:
                continue
            if slot + 1 == k:
                found += 1
                if limit is not None and found >= limit:
                    return True
            else:
                chosen.append(v)
                stop = walk(idx + 1, slot + 1)
                chosen.pop()
                if stop:
                    return True
        return False

    walk(0, 0)
    return found


def count_occurrences(pi: Sequence[int], alpha: Sequence[int],
                      cap: int | None = None) -> OccurrenceCount:
    """
    Count index sets i_1 < ... < i_k in pi whose values standardize to alpha.

    With ``cap`` set, counting stops after finding cap + 1 occurrences, so
    the result is ``(min(exact, cap), exact > cap)``.  A pattern longer
    than pi yields 0.

    >>> count_occurrences((1, 2, 3, 4, 5), (1, 2, 3))
    OccurrenceCount(value=10, capped=False)
    >>> count_occurrences((1, 2, 4, 6, 3, 5), (3, 2, 1))
    OccurrenceCount(value=0, capped=False)
    >>> count_occurrences((1, 2, 3, 4, 5), (1, 2, 3), cap=4)
    OccurrenceCount(value=4, capped=True)
    """
    if cap is not None and cap < 1:
        raise ValueError(f"cap must be a positive integer, got {cap}")
    limit = None if cap is None else cap + 1
    found = _count_upto(pi, alpha, limit)
    if cap is not None and found > cap:
        return OccurrenceCount(cap, True)
    return OccurrenceCount(found, False)


def avoids(pi: Sequence[int], alpha: Sequence[int]) -> bool:
    """
    True when pi contains no occurrence of alpha.

    >>> avoids((1, 2, 4, 6, 3, 5), (3, 2, 1))
    True
    >>> avoids((3, 1, 2), (1, 2, 3))
    True
    """
    return _count_upto(pi, alpha, 1) == 0


def contains_exactly(pi: Sequence[int], alpha: Sequence[int], r: int = 1) -> bool:
    """
    True when pi contains exactly r occurrences of alpha (r >= 1).

    The scan never enumerates more than r + 1 occurrences.
    """
    if r < 1:
        raise ValueError(f"required multiplicity must be >= 1, got {r}")
    got = count_occurrences(pi, alpha, cap=r)
    return got.value == r and not got.capped


def len3_counts(pi: Sequence[int]) -> dict[Perm, int]:
    """
    Exact occurrence counts of all six length-3 patterns in quadratic time.

    One pass over position pairs (i, j): the pair fixes the first two
    pattern letters, and a suffix tally of how many later values lie below
    any threshold resolves the third letter in O(1).
    """
    n = len(pi)
    t123 = t132 = t213 = t231 = t312 = t321 = 0
    if n >= 3:
        # suffix_less[j][v] = number of positions k > j with pi[k] < v
        suffix_less: list[list[int]] = [[] for _ in range(n)]
        present = [0] * (n + 1)
        for j in range(n - 1, -1, -1):
            row = [0] * (n + 2)
            run = 0
            for v in range(1, n + 2):
                row[v] = run
                if v <= n:
                    run += present[v]
            suffix_less[j] = row
            present[pi[j]] = 1
        for i in range(n - 2):
            vi = pi[i]
            for j in range(i + 1, n - 1):
                vj = pi[j]
                row = suffix_less[j]
                after = n - 1 - j
                if vi < vj:
                    t123 += after - row[vj]
                    t132 += row[vj] - row[vi]
                    t231 += row[vi]
                else:
                    t213 += after - row[vi]
                    t312 += row[vi] - row[vj]
                    t321 += row[vj]
    return {
        (1, 2, 3): t123, (1, 3, 2): t132, (2, 1, 3): t213,
        (2, 3, 1): t231, (3, 1, 2): t312, (3, 2, 1): t321,
    }


def count_len3_fast(pi: Sequence[int], alpha: Sequence[int]) -> OccurrenceCount:
    """
    Exact count of a length-3 pattern via the quadratic tally kernel.

    Never capped; agrees with count_occurrences (the tests enforce this
    exhaustively for small n and on random permutations up to n = 12).
    """
    a = tuple(alpha)
    if len(a) != 3 or not is_permutation(a):
        raise ValueError(f"expected a length-3 pattern, got {a}")
    return OccurrenceCount(len3_counts(pi)[a], False)


def max_occurrences(n: int, k: int) -> int:
    """Upper bound C(n, k) on the number of occurrences."""
    return comb(n, k) if 0 <= k <= n else 0


def all_occurrences(pi: Sequence[int], alpha: Sequence[int]):
    """Yield each occurrence as a tuple of 0-based index positions."""
    k = len(alpha)
    a = tuple(alpha)
    for idx in itertools.combinations(range(len(pi)), k):
        if standardize([pi[i] for i in idx]) == a:
            yield idx
