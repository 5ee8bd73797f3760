"""Factorizations, denumerants and maximal-length factorizations.

Run with ``python demos/01_factorizations.py``.
"""
from maxdenum import (
    NumericalSemigroup,
    apery_set,
    denumerant,
    dmax_element,
    factorizations,
    frobenius_number,
    is_maximally_reduced,
    maximal_factorizations,
    reduce_to_maximally_reduced,
)

# Redundant and repeated generators are dropped; coefficients always refer to
# the minimal generators.
S = NumericalSemigroup([13, 7, 8, 21, 8])
print("S =", S, " multiplicity", S.multiplicity, " embedding dimension", S.embedding_dimension)

# Membership goes through the Apery set of the multiplicity.
print("Apery set:", apery_set(S))
print("Frobenius number:", frobenius_number(S))
print(48 in S, 23 in S)

# 48 has three factorizations; two of them have the maximal length 6.
for f in factorizations(S, 48):
    print(f, "length", f.length)
print("denumerant:", denumerant(S, 48))
print("maximal:", [str(f) for f in maximal_factorizations(S, 48)], "dmax:", dmax_element(S, 48))

# Each generator is avoided by some maximal factorization, so 48 is
# maximally reduced.  Adding a generator breaks that, and reducing strips the
# shared part again.
print(is_maximally_reduced(S, 48), is_maximally_reduced(S, 48 + 7))
print(reduce_to_maximally_reduced(S, 48 + 7))
