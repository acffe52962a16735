# The reversal / complementation / inverse group and its action on specs.

from permrestrict import (GROUP, RestrictionSpec, apply, apply_to_spec,
                          compose, count_occurrences, op_inverse, orbit,
                          parse_op, parse_word)

pi = parse_word("1342")

# The three generators: r reverses the word, c flips values v -> n+1-v,
# i is the group-theoretic inverse.  Together they generate 8 elements.
print("images of", pi)
for op in GROUP:
    print(f"  {op.value:>3}: {apply(op, pi)}")

# The composition table closes on those 8 elements.
print("\ncomposition table (row op applied after column op):")
header = "      " + " ".join(f"{g.value:>3}" for g in GROUP)
print(header)
for g in GROUP:
    row = " ".join(f"{compose(g, h).value:>3}" for h in GROUP)
    print(f"  {g.value:>3} {row}")
print("inverses:", {g.value: op_inverse(g).value for g in GROUP})

# Occurrence counts are preserved: g(pi) contains g(alpha) exactly as often
# as pi contains alpha.  That makes whole restriction specs transportable.
alpha = parse_word("132")
for op in GROUP:
    before = count_occurrences(pi, alpha).value
    after = count_occurrences(apply(op, pi), apply(op, alpha)).value
    assert before == after

spec = RestrictionSpec.parse("123;231")
print("\norbit of (123;231):")
for s in sorted(orbit(spec)):
    print("  ", s.text())

# A multiset fixed by every symmetry has a one-element orbit.
print("orbit of (;123,321):",
      [s.text() for s in orbit(RestrictionSpec.parse(";123,321"))])

# Applying one op to a spec re-canonicalizes the result:
rc = parse_op("rc")
print("rc applied to (123;132):",
      apply_to_spec(rc, RestrictionSpec.parse("123;132")).text())
