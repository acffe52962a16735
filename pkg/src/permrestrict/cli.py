"""
Command-line entry point.

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 verification mismatch or data-integrity failure, 2 usage or parse error.
Brute-force counts computed by `sequence`, `verify`, and `classify` are
kept in a JSON cache (project-local by default, overridable with --cache
or the PERMRESTRICT_CACHE environment variable).
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone
from typing import Sequence

from . import generators, oracle
from .classify import classify as classify_specs
from .classify import reconcile
from .cache import CacheConflictError, CacheStore
from .formulas import (FormulaIntegrityError, evaluate, known_table, lookup,
                       resolve_selectors)
from .perms import count_occurrences, format_word, parse_word
from .restrictions import RestrictionSpec
from .symmetry import apply, apply_to_spec, orbit, parse_op


def _split_tokens(chunks: Sequence[str] | None) -> list[str]:
    out = []
    for chunk in chunks or []:
        out.extend(t.strip() for t in chunk.split(",") if t.strip())
    return out


def _spec_from_args(args) -> RestrictionSpec:
    avoid = tuple(parse_word(t) for t in _split_tokens(args.avoid))
    contain = []
    for tok in _split_tokens(args.contain):
        if "^" in tok:
            word, _, mult = tok.partition("^")
            try:
                m = int(mult)
            except ValueError:
                raise ValueError(f"bad multiplicity in {tok!r}") from None
            contain.append((parse_word(word), m))
        else:
            contain.append((parse_word(tok), 1))
    return RestrictionSpec(avoid=avoid, contain=tuple(contain))


def _add_spec_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--avoid", action="append", metavar="PATTERNS",
                   help="patterns to avoid (comma-separated, repeatable)")
    p.add_argument("--contain", action="append", metavar="PATTERNS",
                   help="patterns to contain exactly once; use P^m for "
                        "multiplicity m (repeatable)")


def _add_cache_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--cache", metavar="PATH", default=None,
                   help="cache file (default: $PERMRESTRICT_CACHE or "
                        "./.permrestrict_cache.json)")
    p.add_argument("--no-cache", action="store_true",
                   help="do not read or write the count cache")


def _add_limit_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-n", type=int, default=oracle.DEFAULT_MAX_N,
                   help=f"hard enumeration limit (default "
                        f"{oracle.DEFAULT_MAX_N})")


class _Counts:
    """Brute-force counts with an optional write-through cache."""

    def __init__(self, store: CacheStore | None, max_n: int):
        self.store = store
        self.max_n = max_n

    def get_many(self, n: int, specs: Sequence[RestrictionSpec]) -> list[int]:
        out: list[int | None] = [None] * len(specs)
        missing: list[int] = []
        for i, spec in enumerate(specs):
            hit = self.store.get(spec.text(), n) if self.store is not None else None
            if hit is None:
                missing.append(i)
            else:
                out[i] = hit
        if missing:
            fresh = oracle.count_many(n, [specs[i] for i in missing], self.max_n)
            for i, value in zip(missing, fresh):
                out[i] = value
                if self.store is not None:
                    self.store.put(specs[i].text(), n, value)
        return out  # type: ignore[return-value]

    def close(self) -> None:
        if self.store is not None:
            self.store.save()


def _make_counts(args) -> _Counts:
    store = None if args.no_cache else CacheStore(args.cache)
    return _Counts(store, args.max_n)


def cmd_count(args) -> int:
    pi = parse_word(args.perm)
    alpha = parse_word(args.pattern)
    print(count_occurrences(pi, alpha).value)
    return 0


def cmd_enumerate(args) -> int:
    spec = _spec_from_args(args)
    for pi in oracle.members_many(args.n, [spec], args.max_n)[0]:
        print(format_word(pi))
    return 0


def _formula_values(spec, counts: _Counts, n_lo: int, n_hi: int) -> list[int]:
    entry = lookup(spec)
    if entry is None:
        raise ValueError(
            f"no closed form is known for {spec.text()!r}; use --method brute")
    values = []
    for n in range(n_lo, n_hi + 1):
        v = evaluate(entry, n)
        if v is None:  # below the stated validity range: the oracle fills in
            v = counts.get_many(n, [spec])[0]
        values.append(v)
    return values


def _generator_values(spec, n_lo: int, n_hi: int) -> list[int]:
    rule = generators.family_for(spec)
    if rule is None:
        raise ValueError(f"no generating rule exists for {spec.text()!r}")
    return [len(generators.generate(rule, n)) for n in range(n_lo, n_hi + 1)]


def cmd_sequence(args) -> int:
    spec = _spec_from_args(args)
    if args.n_min > args.n_max:
        raise ValueError(f"empty range {args.n_min}..{args.n_max}")
    counts = _make_counts(args)
    try:
        if args.method == "brute":
            values = [counts.get_many(n, [spec])[0]
                      for n in range(args.n_min, args.n_max + 1)]
        elif args.method == "formula":
            values = _formula_values(spec, counts, args.n_min, args.n_max)
        else:
            values = _generator_values(spec, args.n_min, args.n_max)
        if args.check:
            failures = _cross_check(spec, counts, args.n_min, args.n_max)
            if failures:
                for line in failures:
                    print(line, file=sys.stderr)
                return 1
    finally:
        counts.close()
    record = oracle.SequenceRecord(
        spec=spec, n_min=args.n_min, n_max=args.n_max, values=tuple(values),
        method=args.method,
        produced_at=datetime.now(timezone.utc).isoformat(timespec="seconds"))
    if args.format == "json":
        print(json.dumps(record.as_json()))
    else:
        print("n,count")
        for n, v in zip(range(args.n_min, args.n_max + 1), values):
            print(f"{n},{v}")
    return 0


def _cross_check(spec, counts: _Counts, n_lo: int, n_hi: int) -> list[str]:
    """Compare every applicable method; one message per disagreeing n."""
    brute = [counts.get_many(n, [spec])[0] for n in range(n_lo, n_hi + 1)]
    failures = []
    entry = lookup(spec)
    if entry is not None:
        for i, n in enumerate(range(n_lo, n_hi + 1)):
            want = evaluate(entry, n)
            if want is not None and want != brute[i]:
                failures.append(
                    f"check failed at n={n}: brute={brute[i]} formula={want}")
    rule = generators.family_for(spec)
    if rule is not None:
        for i, n in enumerate(range(n_lo, n_hi + 1)):
            if n < rule.base_n:
                continue
            got = len(generators.generate(rule, n))
            if got != brute[i]:
                failures.append(
                    f"check failed at n={n}: brute={brute[i]} generator={got}")
    return failures


def cmd_verify(args) -> int:
    entries = resolve_selectors(args.theorems)
    counts = _make_counts(args)
    results = []
    any_fail = False
    try:
        for entry in entries:
            ns = [n for n in range(1, args.nmax + 1)
                  if evaluate(entry, n) is not None]
            specs = sorted(entry.members)
            failures = []
            checked = 0
            for n in ns:
                got = counts.get_many(n, specs)
                want = evaluate(entry, n)
                for spec, value in zip(specs, got):
                    checked += 1
                    if value != want:
                        failures.append(
                            {"spec": spec.text(), "n": n,
                             "brute": value, "formula": want})
            status = "PASS" if not failures else "FAIL"
            any_fail = any_fail or bool(failures)
            results.append({
                "class_id": entry.class_id,
                "formula": entry.display,
                "specs": len(specs),
                "checked": checked,
                "n_checked": ns,
                "status": status,
                "failures": failures,
            })
    finally:
        counts.close()
    if args.format == "json":
        doc = {"nmax": args.nmax, "ok": not any_fail,
               "ledger": [e.as_json() for e in entries], "results": results}
        print(json.dumps(doc, indent=2))
    else:
        for r in results:
            span = (f"n={r['n_checked'][0]}..{r['n_checked'][-1]}"
                    if r["n_checked"] else "no n in range")
            print(f"{r['status']}  {r['class_id']:<19} {r['formula']:<22} "
                  f"{span}  {r['specs']} specs, {r['checked']} checks")
            for f in r["failures"]:
                print(f"      mismatch {f['spec']} n={f['n']}: "
                      f"brute={f['brute']} formula={f['formula']}")
        verdict = "FAIL" if any_fail else "PASS"
        print(f"{verdict}: {len(results)} ledger entries verified "
              f"up to n={args.nmax}")
    return 1 if any_fail else 0


def _class_specs(kind: str) -> list[RestrictionSpec]:
    ids = {"ordered": ("A", "B", "C", "D", "E"),
           "multiset": ("F", "G", "H", "I", "J")}[kind]
    specs: set[RestrictionSpec] = set()
    for entry in known_table():
        if entry.class_id in ids:
            specs |= entry.members
    return sorted(specs)


def cmd_classify(args) -> int:
    kinds = ["ordered", "multiset"] if args.kind == "both" else [args.kind]
    counts = _make_counts(args)
    sections = {}
    code = 0
    try:
        for kind in kinds:
            lo = args.n_min if args.n_min is not None else (3 if kind == "ordered" else 4)
            hi = args.n_max if args.n_max is not None else 9
            report = classify_specs(
                _class_specs(kind), lo, hi,
                counts=counts.get_many, max_n=args.max_n)
            outcome = reconcile(report)
            sections[kind] = (report, outcome)
            if not outcome.ok:
                code = 1
    finally:
        counts.close()
    if args.format == "json":
        doc = {kind: {"report": rep.as_json(), "reconcile": out.as_json()}
               for kind, (rep, out) in sections.items()}
        print(json.dumps(doc, indent=2))
        return code
    for kind, (report, outcome) in sections.items():
        title = ("avoid-one-contain-one pairs" if kind == "ordered"
                 else "contain-both multisets")
        print(f"== {title}: {len(report.classes)} classes over "
              f"n={report.n_min}..{report.n_max} ({report.note}) ==")
        displays = {e.class_id: e.display for e in known_table()}
        for match in outcome.matches:
            g = match.group
            label = "+".join(match.matched_ids) or "?"
            formula = " = ".join(dict.fromkeys(
                displays[cid] for cid in match.matched_ids)) or "(none)"
            fused = "  [fused beyond one orbit]" if match.fused_beyond_orbit else ""
            print(f"{label:<6} s_n = {formula:<22} "
                  f"counts {' '.join(map(str, g.sequence))}{fused}")
            print(f"       members {' '.join(s.text() for s in g.members)}")
        for msg in outcome.discrepancies:
            print(f"discrepancy: {msg}", file=sys.stderr)
    return code


def cmd_orbit(args) -> int:
    spec = _spec_from_args(args)
    if args.ledger_class:
        entry = lookup(spec)
        if entry is None:
            raise ValueError(f"{spec.text()!r} is not in the formula ledger")
        group = sorted(entry.members)
    else:
        group = sorted(orbit(spec))
    for s in group:
        print(s.text())
    return 0


def cmd_apply(args) -> int:
    op = parse_op(args.op)
    if args.perm:
        print(format_word(apply(op, parse_word(args.perm))))
    else:
        spec = _spec_from_args(args)
        if spec.is_trivial:
            raise ValueError("give --perm or a spec (--avoid/--contain)")
        print(apply_to_spec(op, spec).text())
    return 0


def cmd_generate(args) -> int:
    if args.family:
        rule = generators._resolve(args.family)
    else:
        spec = _spec_from_args(args)
        rule = generators.family_for(spec)
        if rule is None:
            raise ValueError(f"no generating rule exists for {spec.text()!r}")
    for pi in generators.generate(rule, args.n):
        print(format_word(pi))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permrestrict",
        description="Count and enumerate permutations restricted by pattern "
                    "avoidance and exact pattern containment.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="occurrences of a pattern in a permutation")
    p.add_argument("perm", help="permutation, e.g. '1 2 4 6 3 5' or 124635")
    p.add_argument("pattern", help="pattern, e.g. 213")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list members of S_n(avoid; contain)")
    p.add_argument("--n", type=int, required=True)
    _add_spec_flags(p)
    _add_limit_flag(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("sequence", help="counting sequence over a range of n")
    _add_spec_flags(p)
    p.add_argument("--from", dest="n_min", type=int, required=True)
    p.add_argument("--to", dest="n_max", type=int, required=True)
    p.add_argument("--method", choices=("brute", "formula", "generator"),
                   default="brute")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--check", action="store_true",
                   help="cross-check every applicable method; "
                        "exit nonzero on disagreement")
    _add_cache_flags(p)
    _add_limit_flag(p)
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("verify",
                       help="check the closed-form ledger against brute force")
    p.add_argument("--nmax", type=int, default=8)
    p.add_argument("--theorems", default="all", metavar="IDS",
                   help="comma-separated rule ids (class ids or aliases "
                        "such as 4.2, 5.3, catalan); default all")
    p.add_argument("--format", choices=("text", "json"), default="text")
    _add_cache_flags(p)
    _add_limit_flag(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify",
                       help="group specs by equality of counting sequences")
    p.add_argument("--kind", choices=("ordered", "multiset", "both"),
                   default="both")
    p.add_argument("--from", dest="n_min", type=int, default=None)
    p.add_argument("--to", dest="n_max", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    _add_cache_flags(p)
    _add_limit_flag(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("orbit", help="symmetry orbit of a restriction spec")
    _add_spec_flags(p)
    p.add_argument("--ledger-class", action="store_true",
                   help="print the whole formula-ledger class instead "
                        "(classes may fuse several orbits)")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("apply", help="apply a symmetry op (id, r, c, rc, i, "
                                     "ri, ci, rci) to a permutation or spec")
    p.add_argument("--op", required=True)
    p.add_argument("--perm", default=None)
    _add_spec_flags(p)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("generate", help="build a family by its generating rule")
    p.add_argument("--family", default=None, metavar="KEY",
                   help="family key, e.g. '123;312' or ';132,312'")
    p.add_argument("--n", type=int, required=True)
    _add_spec_flags(p)
    p.set_defaults(func=cmd_generate)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, oracle.LimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (CacheConflictError, FormulaIntegrityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
