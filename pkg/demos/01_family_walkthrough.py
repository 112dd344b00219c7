"""Walk through the family: the elliptic curve, the degree-7 map and one genus-3 member."""

from fractions import Fraction

from rm3 import family, geometry
from rm3.exact import format_poly

t0 = Fraction(-2)

# the elliptic curve E_t with its rational 7-torsion point S = (0, 0)
E = family.build_E(t0)
print("E_t at t = -2:", E)

# the three sigma values come from the y-discriminant of the quotient curve
print("sigma(-2) =", family.build_sigmas(t0))

# u_t has degree 7 and is invariant under translation by S
for p in (5, 13, 29):
    n = family.translation_invariance(t0, p)
    print(f"u(x(P+S)) = u(x(P)) on {n} affine points mod {p}")

# over a prime where the cubic splits, each branch value has profile 2,2,2,1
for prof in geometry.u_branch_profiles(t0, 13):
    print("fibre over", prof.branch_value, "->", prof)

# Riemann-Hurwitz bookkeeping for the three covers in play
for cert in geometry.standard_certificates():
    print(cert)

# one member of the family, with a genus certificate computed mod a large prime
curve = family.build_curve(Fraction(0), t0)
print("genus", curve.genus_certificate.genus, "certified mod", curve.irreducibility_prime)
print(format_poly(curve.defining)[:300], "...")
