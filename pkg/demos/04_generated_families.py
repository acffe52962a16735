# Recursive constructions: building restricted sets without enumeration.

from permrestrict import (FAMILIES, append_max, generate, members,
                          shift_append_one)

# Two lifting maps do all the work.  shift_append_one bumps every value and
# appends 1; append_max appends a new maximum.
print("shift_append_one(312) =", shift_append_one((3, 1, 2)))
print("append_max(3124)      =", append_max((3, 1, 2, 4)))

# Three families grow by shift_append_one plus two hand-built extra words
# per step (their sizes follow 2n-5); two families apply both maps to every
# member and double each step (sizes 2^(n-3)).
for key, rule in sorted(FAMILIES.items()):
    kind = "doubling" if rule.extras is None else "lift + 2 extras"
    print(f"\nfamily {key!r} ({kind}), base at n={rule.base_n}:")
    for n in range(rule.base_n, rule.base_n + 3):
        built = generate(rule, n)
        print(f"  n={n}: {len(built):>2} members  {built if n <= 5 else '...'}")

# The rules are complete: at every size they reproduce exactly the set the
# brute-force oracle finds.
rule = FAMILIES["123;312"]
for n in range(3, 9):
    assert generate(rule, n) == members(n, rule.spec)
print("\nrule output equals oracle members for (123;312), n=3..8")

# The five generated families also witness the two known equalities between
# an avoid-one-contain-one spec and a pure containment spec: both sides of
# each pair grow by the same rule shape carrying different bases.
for left, right in (("123;312", ";123,312"), ("132;312", ";132,312")):
    ln = [len(generate(left, n)) for n in range(FAMILIES[left].base_n, 10)]
    rn = [len(generate(right, n)) for n in range(FAMILIES[right].base_n, 10)]
    print(f"sizes {left}: {ln}")
    print(f"sizes {right}: {rn}")
