# The brute-force oracle against the closed-form ledger.

from permrestrict import (RestrictionSpec, count, count_many, evaluate,
                          known_table, lookup, members, sequence)

# The oracle enumerates S_n and tests every permutation.  Everything about
# it is exact and deterministic; member lists come out lexicographic.
spec = RestrictionSpec.parse("132;312")   # avoid 132, contain 312 once
print("S_4(132;312) =", members(4, spec))
print("counts n=4..9:", sequence(spec, 4, 9).values)

# Each spec with a known closed form resolves to a ledger entry.
entry = lookup(spec)
print(f"\nledger entry {entry.class_id}: s_n = {entry.display} "
      f"for n >= {entry.valid_from}")
for n in range(4, 10):
    print(f"  n={n}: formula {evaluate(entry, n)}  brute {count(n, spec)}")

# Formulas are evaluated over exact rationals, so validity ranges with
# fractional powers of two still come out as integers.
d = lookup(RestrictionSpec.parse("132;213"))
print(f"\nentry {d.class_id}: s_n = {d.display}, s_4 = {evaluate(d, 4)} "
      f"(4 * 2^-1), s_3 = {evaluate(d, 3)} (listed exception)")

# Below a validity range with no listed exception the ledger says "unknown"
a = lookup(RestrictionSpec.parse("123;321"))
print(f"entry {a.class_id}: value at n=5 is {evaluate(a, 5)} "
      f"(oracle gives {count(5, RestrictionSpec.parse('123;321'))})")

# The whole ledger, verified in one sweep at n = 8.
print("\nledger sweep at n=8:")
for entry in known_table():
    want = evaluate(entry, 8)
    if want is None:
        continue
    got = count_many(8, sorted(entry.members))
    flag = "ok" if all(v == want for v in got) else "MISMATCH"
    print(f"  {entry.class_id:<19} {entry.display:<22} -> {want:>5}  [{flag}]")
