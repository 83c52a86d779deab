"""Generalized Catalan numbers and their reciprocal Hankel matrices.

Run with:  python demos/01_sequences_and_hankel.py
"""

from gencatalan import GCParams, catalan_numbers, gen_catalan, hankel_G
from gencatalan.sequences import check_shift_recurrences

# g^(-3/2) is the Catalan sequence times -2 with a leading 1
catbert = GCParams(p=2, q=-3, a=1)
print("g^(-3/2):", gen_catalan(catbert, 8).terms)
print("Catalan: ", catalan_numbers(8))

# g^(-1/2) gives the central binomial coefficients
print("g^(-1/2):", gen_catalan(GCParams(2, -1), 8).terms)

# a family with odd p and positive q
print("g^(2/3): ", gen_catalan(GCParams(3, 2), 8).terms)

# neighbouring families are tied together by shift identities
print(check_shift_recurrences(GCParams(3, 2), 30).summary())

print("\nG^(1,-3/2)(4):")
for row in hankel_G(catbert, 4).to_strings():
    print("  ", " ".join(f"{x:>7}" for x in row))
