"""Count points on the plane quartic, assemble zeta numerators and split them over O_K."""

from rm3.curves import default_quartic, load_table
from rm3.rmfield import OKElem, canonical, expand_factor, rm_factor
from rm3.zeta import count_points, count_points_naive, zeta_numerator

X = default_quartic()

# brute force and the fast counter agree over F_5
print("N1 over F_5:", count_points_naive(X, 5), count_points(X, 5))

# N1, N2, N3 determine h_p; N4 is then a free check
counts, h = zeta_numerator(X, 11)
print("p = 11 counts", counts, "h =", h.coefficients())
print("predicted N4:", h.predicted_counts(4)[3], "counted:", count_points(X, 11, 4))

# h_p = g * g^s * g^{s^2} with g = 1 + alpha x + p x^2, alpha in O_K
table = load_table()
for p in (5, 13, 17, 23):
    _, h = zeta_numerator(X, p)
    f = rm_factor(h)
    row = table[p]
    same = canonical(OKElem(*row.alpha)) == canonical(f.alpha)
    print(f"p = {p}: {f}   table agrees: {same}")

# going the other way: the conjugate product of 1 - t x + 5 x^2
print("expand(-t, 5) =", expand_factor(-OKElem.t(), 5).coefficients())
