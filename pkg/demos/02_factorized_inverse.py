"""The L^T M K factorization of G(n)^-1, checked against elimination."""

from gencatalan import GCParams, factorize, hankel_G, invert_oracle, is_integer_matrix
from gencatalan import factorization as fz

params = GCParams(p=3, q=2, a=1)
n = 5

bundle = factorize(params, n)  # also cross-checks N L = M K
print("L =")
for row in bundle.L.to_strings():
    print("  ", row)
print("M diagonal:", [str(m) for m in bundle.Mdiag])

G = hankel_G(params, n)
inv = fz.inverse_via_LMK(params, n)
print("\nG^-1 =")
for row in inv.to_strings():
    print("  ", row)
print("matches elimination:", inv == invert_oracle(G))
print("integer entries (|q| = 2):", is_integer_matrix(inv)[0])

# three-term recurrence and orthogonality
print(fz.verify_three_term(params, 10).summary())
print(fz.verify_orthogonality(params, 10).summary())
print(fz.verify_norm(params, 10).summary())

# with q = 7 only q * G^-1 is integral
wide = GCParams(2, 7, 0)
print("\nq=7 plain inverse integral:", is_integer_matrix(fz.inverse_via_LMK(wide, 4))[0])
print("q=7 scaled inverse integral:", is_integer_matrix(fz.scaled_inverse(wide, 4))[0])
