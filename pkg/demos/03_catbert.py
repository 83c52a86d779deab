"""The Catbert matrix: reciprocal Catalan numbers with an integer inverse."""

from gencatalan import catbert_det_formula, catbert_inverse, catbert_matrix, det_oracle
from gencatalan.catbert import catbert_det_sequence, load_snapshot, oeis_compare
from gencatalan.numbertheory import build_divisibility_certificate
from gencatalan.params import CATBERT

n = 4
print("C(4) =")
for row in catbert_matrix(n).matrix.to_strings():
    print("  ", row)
print("C(4)^-1 =")
for row in catbert_inverse(n).to_strings():
    print("  ", row)

for k in range(1, 7):
    print(f"det C({k})^-1 = {catbert_det_formula(k)}  (elimination: {det_oracle(catbert_inverse(k))})")

print("\nb-file comparison:", oeis_compare(catbert_det_sequence(12), load_snapshot()))

# which factor of each summand carries the prime 3
certs = build_divisibility_certificate(CATBERT, 3, 3)
for c in certs[:6]:
    print(f"entry {c.entry} summand i={c.summand}: {c.witness.value} = {c.witnessed_value}")
