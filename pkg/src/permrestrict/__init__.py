"""
permrestrict: exact counting and enumeration of permutations restricted by
pattern avoidance and exact pattern containment.

The library is organized around a few small pieces: permutation words and
occurrence counting (`perms`), restriction specs (`restrictions`), the
order-8 symmetry group (`symmetry`), a brute-force enumeration oracle
(`oracle`), the closed-form ledger (`formulas`), recursive family
constructions (`generators`), and empirical sequence classification
(`classify`).  Everything is exact integer arithmetic; every closed form
is checked against the oracle in the test suite.
"""

from .classify import ClassGroup, ClassReport, ReconcileReport, classify, reconcile
from .formulas import (FormulaEntry, FormulaIntegrityError, evaluate,
                       known_table, ledger_json, lookup)
from .generators import FAMILIES, FamilyRule, append_max, generate, shift_append_one
from .oracle import (DEFAULT_MAX_N, LimitError, SequenceRecord, count,
                     count_many, iter_sn, members, members_many, satisfies,
                     sequence)
from .perms import (PATTERNS_3, OccurrenceCount, Perm, avoids,
                    contains_exactly, count_len3_fast, count_occurrences,
                    format_word, len3_counts, parse_word, pattern,
                    permutation, standardize)
from .restrictions import (RestrictionSpec, avoid_all, contain_each_once,
                           ordered_pair)
from .symmetry import (GROUP, SymmetryOp, apply, apply_to_spec, complement,
                       compose, invert, op_inverse, orbit, parse_op, reverse)

__version__ = "0.1.0"

__all__ = [
    "ClassGroup", "ClassReport", "ReconcileReport", "classify", "reconcile",
    "FormulaEntry", "FormulaIntegrityError", "evaluate", "known_table",
    "ledger_json", "lookup",
    "FAMILIES", "FamilyRule", "append_max", "generate", "shift_append_one",
    "DEFAULT_MAX_N", "LimitError", "SequenceRecord", "count", "count_many",
    "iter_sn", "members", "members_many", "satisfies", "sequence",
    "PATTERNS_3", "OccurrenceCount", "Perm", "avoids", "contains_exactly",
    "count_len3_fast", "count_occurrences", "format_word", "len3_counts",
    "parse_word", "pattern", "permutation", "standardize",
    "RestrictionSpec", "avoid_all", "contain_each_once", "ordered_pair",
    "GROUP", "SymmetryOp", "apply", "apply_to_spec", "complement", "compose",
    "invert", "op_inverse", "orbit", "parse_op", "reverse",
    "__version__",
]
