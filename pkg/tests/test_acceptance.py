"""
Acceptance suite: every exit criterion at its stated (exact) tolerance.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS/FAIL
line per criterion.  All comparisons are exact integer equality; the
brute-force side comes from full enumeration of S_n.
"""

import itertools
import random
from math import factorial

import pytest

from permrestrict import oracle
from permrestrict.classify import classify, reconcile
from permrestrict.formulas import entry_by_id, evaluate, lookup
from permrestrict.generators import FAMILIES, generate
from permrestrict.perms import (PATTERNS_3, count_occurrences, len3_counts,
                                standardize)
from permrestrict.restrictions import RestrictionSpec
from permrestrict.symmetry import GROUP, apply, complement, invert, reverse
from specsets import (MULTISET_15, ORDERED_30, PAIR_AVOID_15,
                      SINGLE_AVOID_6, SINGLE_CONTAIN_6)


def report(number: int, title: str, failures: list, checked: int) -> None:
    status = "PASS" if not failures else "FAIL"
    print(f"[acceptance] criterion {number} ({title}): {status} "
          f"({checked} exact checks)")
    assert not failures, f"criterion {number}: {failures[:10]}"


def ledger_vs_brute(specs, n_lo, n_hi, brute_counts):
    failures, checked, skipped = [], 0, []
    for spec in specs:
        entry = lookup(spec)
        if entry is None:
            failures.append((spec.text(), "no ledger entry"))
            continue
        for n in range(n_lo, n_hi + 1):
            expected = evaluate(entry, n)
            if expected is None:
                skipped.append((spec.text(), n))
                continue
            checked += 1
            got = brute_counts[spec, n]
            if got != expected:
                failures.append((spec.text(), n, got, expected))
    return failures, checked, skipped


def test_criterion_1_ordered_pair_theorems(brute_counts):
    failures, checked, skipped = ledger_vs_brute(ORDERED_30, 3, 9, brute_counts)
    # the ledger is silent only for the zero class below n = 6
    zero_class = entry_by_id("A").members
    assert all(RestrictionSpec.parse(t) in zero_class and n <= 5
               for t, n in skipped)
    assert checked == 30 * 7 - 2 * 3
    # the stated small-n exception is part of the sweep
    assert brute_counts[RestrictionSpec.parse("132;213"), 3] == 1
    report(1, "avoid-one-contain-one formulas, n=3..9", failures, checked)


def test_criterion_2_multiset_theorems(brute_counts):
    failures, checked, skipped = ledger_vs_brute(MULTISET_15, 4, 9, brute_counts)
    silent = {(t, n) for t, n in skipped}
    assert silent == {(";123,321", 4), (";123,321", 5),
                      (";123,132", 4), (";123,213", 4),
                      (";231,321", 4), (";312,321", 4)}
    assert checked == 15 * 6 - 6
    # stated exceptions covered by the sweep
    assert brute_counts[RestrictionSpec.parse(";123,312"), 4] == 2
    assert brute_counts[RestrictionSpec.parse(";132,213"), 4] == 3
    assert brute_counts[RestrictionSpec.parse(";132,213"), 5] == 6
    assert brute_counts[RestrictionSpec.parse(";132,213"), 6] == 17
    report(2, "contain-both formulas, n=4..9", failures, checked)


def test_criterion_3_background_formulas(brute_counts):
    background = SINGLE_AVOID_6 + PAIR_AVOID_15 + SINGLE_CONTAIN_6
    failures, checked, skipped = ledger_vs_brute(background, 1, 9, brute_counts)
    # only the zero pair-avoid class is silent below its range
    assert all(t == "123,321;" and n <= 4 for t, n in skipped)
    assert checked == 27 * 9 - 4
    report(3, "single-avoid, pair-avoid, single-contain formulas, n<=9",
           failures, checked)


def test_criterion_4_generator_completeness():
    failures, checked = [], 0
    for key in sorted(FAMILIES):
        rule = FAMILIES[key]
        ns = range(rule.base_n, 10)
        brute = oracle.members_many(9, [rule.spec])  # warm check at the top end
        for n in ns:
            built = generate(rule, n)
            want = oracle.members_many(n, [rule.spec])[0]
            checked += 1
            if built != want:
                failures.append((key, n, "member mismatch"))
            expected_size = 2 ** (n - 3) if rule.extras is None else 2 * n - 5
            if len(built) != expected_size:
                failures.append((key, n, "cardinality", len(built)))
        assert brute[0] == generate(rule, 9)
    report(4, "generating rules equal brute force, base..9", failures, checked)


def test_criterion_5_mixed_restriction_equivalences(brute_counts):
    failures, checked = [], 0
    pairs = [("123;312", ";123,312", 5), ("132;231", ";132,231", 4)]
    for left_text, right_text, n_lo in pairs:
        left = RestrictionSpec.parse(left_text)
        right = RestrictionSpec.parse(right_text)
        for n in range(n_lo, 10):
            checked += 1
            if brute_counts[left, n] != brute_counts[right, n]:
                failures.append((left_text, right_text, n))
    report(5, "mixed-restriction equivalences", failures, checked)


def test_criterion_6_classification():
    failures = []
    ordered = classify(ORDERED_30, 3, 9)
    if sorted(len(g.members) for g in ordered.classes) != [2, 4, 8, 8, 8]:
        failures.append(("ordered sizes",
                         [len(g.members) for g in ordered.classes]))
    outcome = reconcile(ordered)
    ids = {m.matched_ids for m in outcome.matches}
    if not outcome.ok or ids != {("A",), ("B",), ("C",), ("D",), ("E",)}:
        failures.append(("ordered ids", ids, outcome.discrepancies))
    for m in outcome.matches:
        want = entry_by_id(m.matched_ids[0]).members if m.matched_ids else set()
        if set(m.group.members) != want:
            failures.append(("ordered members", m.matched_ids))

    multis = classify(MULTISET_15, 4, 9)
    if sorted(len(g.members) for g in multis.classes) != [1, 2, 4, 4, 4]:
        failures.append(("multiset sizes",
                         [len(g.members) for g in multis.classes]))
    outcome = reconcile(multis)
    ids = {m.matched_ids for m in outcome.matches}
    if not outcome.ok or ids != {("F",), ("G",), ("H",), ("I",), ("J",)}:
        failures.append(("multiset ids", ids, outcome.discrepancies))
    for m in outcome.matches:
        want = entry_by_id(m.matched_ids[0]).members if m.matched_ids else set()
        if set(m.group.members) != want:
            failures.append(("multiset members", m.matched_ids))
    report(6, "empirical classification reproduces the class table",
           failures, 10)


class TestCriterion7Properties:
    """Property suites: symmetry equivariance, involutions, kernels, parallelism."""

    def test_equivariance_exhaustive(self):
        failures, checked = [], 0
        for n in range(1, 7):
            base = {}
            for pi in itertools.permutations(range(1, n + 1)):
                base[pi] = {a: count_occurrences(pi, a).value
                            for a in PATTERNS_3}
            for op in GROUP:
                alpha_image = {a: apply(op, a) for a in PATTERNS_3}
                for pi, counts in base.items():
                    image = apply(op, pi)
                    for alpha in PATTERNS_3:
                        checked += 1
                        if base[image][alpha_image[alpha]] != counts[alpha]:
                            failures.append((op.value, pi, alpha))
        report(7, "occurrence equivariance, exhaustive n<=6", failures, checked)

    def test_involutions_and_commutation(self):
        failures, checked = [], 0
        for pi in itertools.permutations(range(1, 6)):
            checked += 4
            if reverse(reverse(pi)) != pi:
                failures.append(("rr", pi))
            if complement(complement(pi)) != pi:
                failures.append(("cc", pi))
            if invert(invert(pi)) != pi:
                failures.append(("ii", pi))
            if reverse(complement(pi)) != complement(reverse(pi)):
                failures.append(("rc=cr", pi))
        report(7, "involution and commutation laws", failures, checked)

    def test_standardize_idempotent(self):
        rng = random.Random(23)
        failures, checked = [], 0
        for _ in range(2000):
            k = rng.randint(1, 10)
            word = rng.sample(range(-1000, 1000), k)
            once = standardize(word)
            checked += 1
            if standardize(once) != once:
                failures.append(tuple(word))
        report(7, "standardize idempotence", failures, checked)

    def test_fast_kernel_exhaustive_to_7(self):
        failures, checked = [], 0
        for n in range(1, 8):
            for pi in itertools.permutations(range(1, n + 1)):
                profile = len3_counts(pi)
                for alpha in PATTERNS_3:
                    checked += 1
                    if profile[alpha] != count_occurrences(pi, alpha).value:
                        failures.append((pi, alpha))
        report(7, "fast kernel == naive, exhaustive n<=7", failures, checked)

    def test_fast_kernel_randomized_to_12(self):
        rng = random.Random(57)
        failures, checked = [], 0
        for _ in range(1000):
            n = rng.randint(8, 12)
            pi = tuple(rng.sample(range(1, n + 1), n))
            profile = len3_counts(pi)
            for alpha in PATTERNS_3:
                checked += 1
                if profile[alpha] != count_occurrences(pi, alpha).value:
                    failures.append((pi, alpha))
        report(7, "fast kernel == naive, randomized n=8..12", failures, checked)

    def test_parallel_equals_serial(self):
        failures, checked = [], 0
        specs = [RestrictionSpec.parse("123;312"),
                 RestrictionSpec.parse(";132,213"),
                 RestrictionSpec.parse("132,213;"),
                 RestrictionSpec()]
        for spec in specs:
            serial = oracle.count(7, spec)
            if spec.is_trivial and serial != factorial(7):
                failures.append(("serial sanity", spec.text()))
            for workers in (2, 3, 7, 12):
                checked += 1
                if oracle.count(7, spec, workers=workers) != serial:
                    failures.append((spec.text(), workers))
        report(7, "partitioned parallel count == serial", failures, checked)


def test_acceptance_footer(brute_counts):
    # every criterion above ran against the same exact count table
    assert len(brute_counts) == len(set(brute_counts)) == 72 * 9
    print("[acceptance] all criteria evaluated at exact tolerance")
