"""A tour of the binary-code layer.

A collection of k disjoint nodal curves on a surface determines a binary
code of length k: the relations their classes satisfy modulo 2 in the
Picard group.  This script builds the two families that matter most — the
doubled even-weight codes and the simplex code — and shows the analysis
tools: weight enumerators, divisibility tests, support reduction,
permutation equivalence, and exhaustive enumeration.
"""

from nodalcodes.gf2 import (
    de,
    enumerate_codes,
    equivalent,
    format_code,
    is_doubly_even,
    make_code,
    permute,
    recognize_de,
    reduce,
    simplex,
    weight_enumerator,
    word_to_string,
)

print("== the doubled even-weight family ==")
for n in range(1, 6):
    code = de(n)
    print(f"de({n}): length {code.length}, dim {code.dim}, "
          f"weights {weight_enumerator(code)}")

print()
print("== the simplex code on 7 coordinates ==")
s = simplex(3)
print(format_code(s).rstrip())
print(f"weights: {weight_enumerator(s)}")
print(f"doubly even: {is_doubly_even(s)}")

print()
print("== support reduction and recognition ==")
# embed de(2) into 6 coordinates with two dead ones in the middle, then
# shuffle; the analysis still sees a doubled code on 4 coordinates
words = [word_to_string(g, 4) for g in de(2).generators]
padded = make_code([w[:2] + "00" + w[2:] for w in words], 6)
shuffled = permute(padded, (5, 0, 3, 1, 4, 2))
rcode, support = reduce(shuffled)
print(f"reduced length: {rcode.length}, live coordinates: {support}")
print(f"recognized as de(n) with n = {recognize_de(shuffled)}")

print()
print("== permutation equivalence ==")
a = de(3)
b = permute(a, (4, 2, 0, 5, 3, 1))
witness = equivalent(a, b)
print(f"codes equivalent: {witness is not None}, witness: {witness}")
print(f"witness checks out: {permute(a, witness) == b}")

print()
print("== exhaustive enumeration ==")
# every code on 7 coordinates whose nonzero words all have weight 4,
# one representative per permutation class
reps = enumerate_codes(7, "4", 1, 7)
for code in reps:
    gens = [word_to_string(g, 7) for g in code.generators]
    print(f"dim {code.dim}: {gens}")
print(f"{len(reps)} classes in total; the dim-3 one is the simplex code: "
      f"{equivalent(reps[-1], simplex(3)) is not None}")
