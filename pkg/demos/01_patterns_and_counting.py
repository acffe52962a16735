# Patterns, occurrences, and the two counting kernels.

from permrestrict import (avoids, contains_exactly, count_len3_fast,
                          count_occurrences, len3_counts, parse_word,
                          standardize)

# A permutation is a word over 1..n.  A pattern occurrence is a subsequence
# whose relative order matches the pattern after standardizing (replacing
# each value by its rank among the chosen values).
tau = parse_word("124635")
print("tau =", tau)
print("standardize(4, 3, 5) =", standardize((4, 3, 5)))   # -> 213

# tau contains 213 through the subsequence 4 3 5, and that is the only one
print("count of 213 in tau:", count_occurrences(tau, parse_word("213")))
print("tau avoids 321?", avoids(tau, parse_word("321")))
print("tau contains 213 exactly once?", contains_exactly(tau, parse_word("213"), 1))

# Counting caps let membership tests stop early: asking "exactly once?"
# never enumerates more than two occurrences.
print("capped count of 123 in 12345:",
      count_occurrences(parse_word("12345"), parse_word("123"), cap=2))

# For length-3 patterns there is a quadratic kernel built on prefix/suffix
# rank tallies.  It agrees with the search kernel everywhere.
pi = parse_word("4 7 1 6 2 5 3")
print("\nall six length-3 counts of", pi)
for patt, value in len3_counts(pi).items():
    fast = count_len3_fast(pi, patt).value
    naive = count_occurrences(pi, patt).value
    print(f"  {patt}: fast={fast} naive={naive}")
    assert fast == naive == value
