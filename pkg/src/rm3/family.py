"""The 7-torsion construction: E_t, its quotient, the degree-7 map u_t and the
two-parameter family f_s(y) = u_t(x).

Symbolic objects are :class:`~rm3.exact.MultiPoly` / :class:`~rm3.exact.RatFunc`
values over Q.  Functions taking a parameter accept ``None`` for the
symbolic parameter or a rational number to specialise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import DegenerateError, InputError, PreconditionError
from .exact import MultiPoly, RatFunc, parse_poly, substitute
from .finitefield import is_prime, make_field

T_RING = ("t",)
X_RING = ("x", "t")

# printed degree-7 numerator of u_t
W_TEXT = """
x^7 - 2*(t-1)*t*(1+t)*x^6 + (t-1)*t*(1 - 7t + 5t^2 - 3t^3 + 2t^4 + t^5)*x^5
- (t-1)^2*t^3*(-1 - 13t + 12t^2 - 9t^3 + 6t^4)*x^4
+ (t-1)^3*t^4*(-1 - 7t - 8t^2 + 4t^3 + t^4 + t^5)*x^3
- (t-1)^4*t^6*(1+t)*(-3 - 5t + 3t^2)*x^2
+ (t-1)^5*t^8*(-3 - 3t + t^2)*x + (t-1)^6*t^10
"""

A_TEXT = "-5*(t-1)*t*(1 - t + t^2)*(1 - 5t + 2t^2 + t^3)"
B_TEXT = ("-(t-1)*t*(1 - 18t + 76t^2 - 182t^3 + 211t^4 - 132t^5 + 70t^6 - 37t^7"
          " + 9t^8 + t^9)")

SIGMA_TEXT = (
    "1/4*(-1 - 2t - 3t^2 + 6t^3 - t^4)",
    "1/4*(-20t^7 + 142t^5 - 284t^4 + 280t^3 - 138t^2 + 20t)",
    "1/4*(4t^11 + 32t^10 - 184t^9 + 428t^8 - 808t^7 + 1371t^6 - 1570t^5 + 1031t^4"
    " - 376t^3 + 76t^2 - 4t)",
)

STEP2_RING = ("z", "m", "n", "p", "a")
STEP2_ALPHA = """
(m^2 n^2 p + 2 a m^2 n^2 p - a m^2 n p^2 - m n^2 p^2 - a m n^2 p^2)
+ (-3 m^2 n p - 3 a m^2 n p - 3 a m n^2 p + 3 m n p^2 + 6 a m n p^2) z
+ (m^2 n - m n^2 + 2 m^2 p + 3 a m^2 p + n^2 p + 3 a n^2 p - 2 m p^2 - 3 a m p^2
   - n p^2 - 3 a n p^2) z^2
+ (-m^2 - a m^2 + m n + 2 a m n - a n^2 - a m p - n p - a n p + p^2 + 2 a p^2) z^3
"""
# {MPZ} is "m p^2 z" as printed, or "m p^2" after correction
STEP2_BETA = """
(m^2 n^2 + 2 a m^2 n^2 - m^2 n p - a m^2 n p - a m n^2 p - a m^2 p^2 + m n p^2
   + 2 a m n p^2 - n^2 p^2 - a n^2 p^2)
+ (-m^2 n - 3 a m^2 n - 2 m n^2 - 3 a m n^2 + m^2 p + 3 a m^2 p + 2 n^2 p
   + 3 a n^2 p - {MPZ} + n p^2) z
+ (3 m n + 6 a m n - 3 a m p - 3 n p - 3 a n p) z^2
+ (-m - a m - a n + p + 2 a p) z^3
"""

FS_RING = ("y", "s", "m", "n", "p")
STEP3_ALPHA = """
(2 m^3 n^3 p - 2 m^3 n^2 p^2 - 2 m^2 n^3 p^2 + 2 m^3 n p^3 - 2 m^2 n^2 p^3 + 2 m n^3 p^3)
+ (-m^3 n^2 p - m^2 n^3 p - m^3 n p^2 + 6 m^2 n^2 p^2 - m n^3 p^2 - m^2 n p^3 - m n^2 p^3) s
+ (-3 m^3 n^2 p - 3 m^2 n^3 p - 3 m^3 n p^2 + 18 m^2 n^2 p^2 - 3 m n^3 p^2 - 3 m^2 n p^3
   - 3 m n^2 p^3) y
+ (6 m^3 n p - 6 m^2 n^2 p + 6 m n^3 p - 6 m^2 n p^2 - 6 m n^2 p^2 + 6 m n p^3) s y
+ (6 m^3 n p - 6 m^2 n^2 p + 6 m n^3 p - 6 m^2 n p^2 - 6 m n^2 p^2 + 6 m n p^3) y^2
+ (-3 m^3 n + 6 m^2 n^2 - 3 m n^3 - 3 m^3 p - 3 n^3 p + 6 m^2 p^2 + 6 n^2 p^2 - 3 m p^3
   - 3 n p^3) s y^2
+ (-m^3 n + 2 m^2 n^2 - m n^3 - m^3 p - n^3 p + 2 m^2 p^2 + 2 n^2 p^2 - m p^3 - n p^3) y^3
+ (2 m^3 - 2 m^2 n - 2 m n^2 + 2 n^3 - 2 m^2 p + 6 m n p - 2 n^2 p - 2 m p^2 - 2 n p^2
   + 2 p^3) s y^3
"""
STEP3_BETA = """
(2 m^3 n^3 - 2 m^3 n^2 p - 2 m^2 n^3 p - 2 m^3 n p^2 + 6 m^2 n^2 p^2 - 2 m n^3 p^2
   + 2 m^3 p^3 - 2 m^2 n p^3 - 2 m n^2 p^3 + 2 n^3 p^3)
+ (-m^3 n^2 - m^2 n^3 + 2 m^3 n p + 2 m n^3 p - m^3 p^2 - n^3 p^2 - m^2 p^3 + 2 m n p^3
   - n^2 p^3) s
+ (-3 m^3 n^2 - 3 m^2 n^3 + 6 m^3 n p + 6 m n^3 p - 3 m^3 p^2 - 3 n^3 p^2 - 3 m^2 p^3
   + 6 m n p^3 - 3 n^2 p^3) y
+ (6 m^2 n^2 - 6 m^2 n p - 6 m n^2 p + 6 m^2 p^2 - 6 m n p^2 + 6 n^2 p^2) s y
+ (6 m^2 n^2 - 6 m^2 n p - 6 m n^2 p + 6 m^2 p^2 - 6 m n p^2 + 6 n^2 p^2) y^2
+ (-3 m^2 n - 3 m n^2 - 3 m^2 p + 18 m n p - 3 n^2 p - 3 m p^2 - 3 n p^2) s y^2
+ (-m^2 n - m n^2 - m^2 p + 6 m n p - n^2 p - m p^2 - n p^2) y^3
+ (2 m^2 - 2 m n + 2 n^2 - 2 m p - 2 n p + 2 p^2) s y^3
"""

SIGMA_RING = ("y", "s", "s1", "s2", "s3")
STEP4_ALPHA = """
y^3 (s (2 s1^3 - 8 s2 s1 + 18 s3) - s2 s1^2 - 3 s3 s1 + 4 s2^2)
+ y^2 (s (-3 s2 s1^2 - 9 s3 s1 + 12 s2^2) + 6 s3 s1^2 - 18 s2 s3)
+ y (s (6 s1^2 s3 - 18 s2 s3) + 27 s3^2 - 3 s1 s2 s3)
+ s (9 s3^2 - s1 s2 s3) - 6 s1 s3^2 + 2 s2^2 s3
"""
STEP4_BETA = """
y^3 (s (2 s1^2 - 6 s2) - s1 s2 + 9 s3)
+ y^2 (s (27 s3 - 3 s1 s2) + 6 s2^2 - 18 s1 s3)
+ y (s (6 s2^2 - 18 s1 s3) + 12 s3 s1^2 - 3 s2^2 s1 - 9 s2 s3)
+ s (4 s3 s1^2 - s2^2 s1 - 3 s2 s3) + 2 s2^3 + 18 s3^2 - 8 s1 s2 s3
"""

# permutations of (m, n, p) and the printed Mobius action on a
S3_TABLE = (
    (("n", "m", "p"), "-1 - a", "1"),
    (("p", "n", "m"), "-a", "1 + 3a"),
    (("m", "p", "n"), "-(1 + 2a)", "2 + 3a"),
    (("p", "m", "n"), "-1 - a", "2 + 3a"),
    (("n", "p", "m"), "-(1 + 2a)", "1 + 3a"),
)


def _t_value(t):
    if t is None:
        return None
    t = Fraction(t)
    if t in (0, 1):
        raise DegenerateError(f"t = {t} is a cusp of the family")
    return t


def _spec_t(P, t):
    """Specialise t in a polynomial/ratfunc, or return it unchanged when t is None."""
    if t is None:
        return P
    return P.specialize({"t": t})


# ---------------------------------------------------------------------------
# elliptic curves


@dataclass(frozen=True)
class EllipticModel:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.

    Coefficients are polynomials in t, or rationals for a specialised model.
    """

    a1: object
    a2: object
    a3: object
    a4: object
    a6: object
    torsion_point: tuple = (0, 0)

    @property
    def coefficients(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def b_invariants(self):
        a1, a2, a3, a4, a6 = self.coefficients
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    def discriminant(self):
        b2, b4, b6, b8 = self.b_invariants()
        return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def specialize(self, t):
        t = _t_value(t)
        vals = [c.specialize({"t": t}) if isinstance(c, MultiPoly) else c
                for c in self.coefficients]
        model = EllipticModel(*vals, torsion_point=self.torsion_point)
        if model.discriminant() == 0:
            raise DegenerateError(f"singular fibre at t = {t}")
        return model

    def y_discriminant(self, ring=("x", "t")):
        """(a1 x + a3)^2 + 4(x^3 + a2 x^2 + a4 x + a6) as a polynomial in x (and t)."""
        x = MultiPoly.var("x", ring)
        lift = (lambda c: c.embed(ring)) if isinstance(self.a1, MultiPoly) else (
            lambda c: MultiPoly.constant(c, ring))
        a1, a2, a3, a4, a6 = (lift(c) for c in self.coefficients)
        return (a1 * x + a3) ** 2 + 4 * (x ** 3 + a2 * x ** 2 + a4 * x + a6)

    def reduce_mod(self, p):
        """Coefficients in GF(p) for a specialised rational model."""
        out = []
        for c in self.coefficients:
            c = Fraction(c)
            if c.denominator % p == 0:
                raise PreconditionError(f"coefficient {c} not integral at {p}")
            out.append(c.numerator * pow(c.denominator, -1, p) % p)
        if Fraction(self.discriminant()).numerator % p == 0:
            raise PreconditionError(f"bad reduction at p={p}")
        return out


def _tpoly(text):
    return parse_poly(text, T_RING)


def build_E(t=None):
    """The universal curve with a point S = (0, 0) of order 7."""
    tt = MultiPoly.var("t", T_RING)
    a1 = 1 + tt - tt ** 2
    a23 = tt ** 2 - tt ** 3
    zero = MultiPoly.constant(0, T_RING)
    model = EllipticModel(a1, a23, a23, zero, zero)
    return model if t is None else model.specialize(t)


def build_quotient(t=None):
    """The quotient of E_t by the subgroup generated by S."""
    tt = MultiPoly.var("t", T_RING)
    model = EllipticModel(1 + tt - tt ** 2, tt ** 2 - tt ** 3, tt ** 2 - tt ** 3,
                          _tpoly(A_TEXT), _tpoly(B_TEXT), torsion_point=None)
    return model if t is None else model.specialize(t)


@lru_cache(maxsize=None)
def w_poly():
    return parse_poly(W_TEXT, X_RING)


def u_denominator():
    x, t = (MultiPoly.var(v, X_RING) for v in X_RING)
    return (-t + t ** 2 - x) ** 2 * (-t ** 2 + t ** 3 - x) ** 2 * x ** 2


def build_u(t=None, w=None):
    """u_t = w_t(x) / [(-t+t^2-x)^2 (-t^2+t^3-x)^2 x^2]; ``w`` overrides the numerator."""
    t = _t_value(t)
    num = w if w is not None else w_poly()
    u = RatFunc(num, u_denominator(), normalize=False)
    if t is None:
        return u
    return RatFunc(num.specialize({"t": t}), u_denominator().specialize({"t": t}))


def subgroup_polynomial():
    """x (x - t^3 + t^2)(x - t^2 + t), whose roots are x(S), x(2S), x(3S)."""
    x, t = (MultiPoly.var(v, X_RING) for v in X_RING)
    return x * (x - t ** 3 + t ** 2) * (x - t ** 2 + t)


def build_hyperelliptic(s=None, t=None):
    """Numerator of y^2 - u_t(x) + s after clearing the denominator of u_t."""
    ring = ("x", "y", "s", "t")
    y = MultiPoly.var("y", ring)
    s_ = MultiPoly.var("s", ring)
    den = u_denominator().embed(ring)
    w = w_poly().embed(ring)
    F = y ** 2 * den - w + s_ * den
    bind = {}
    if s is not None:
        bind["s"] = Fraction(s)
    if t is not None:
        bind["t"] = _t_value(t)
    return F.specialize(bind) if bind else F


# ---------------------------------------------------------------------------
# group law


def weierstrass_add(P, Q, coeffs):
    """Sum on y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6; None is the identity.

    Works for any field-like values supporting + - * / and ==.
    """
    a1, a2, a3, a4, a6 = coeffs
    if P is None:
        return Q
    if Q is None:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if y1 + y2 + a1 * x2 + a3 == 0:
            return None
        lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / (2 * y1 + a1 * x1 + a3)
    else:
        lam = (y2 - y1) / (x2 - x1)
    nu = y1 - lam * x1
    x3 = lam * lam + a1 * lam - a2 - x1 - x2
    y3 = -(lam + a1) * x3 - nu - a3
    return (x3, y3)


def weierstrass_neg(P, coeffs):
    if P is None:
        return None
    a1, _, a3, _, _ = coeffs
    x, y = P
    return (x, -y - a1 * x - a3)


def on_curve(P, coeffs):
    if P is None:
        return True
    a1, a2, a3, a4, a6 = coeffs
    x, y = P
    return y * y + a1 * x * y + a3 * y == x ** 3 + a2 * x * x + a4 * x + a6


def _field_model(model, p):
    F = make_field(p)
    return F, tuple(F(c) for c in model.reduce_mod(p))


def torsion_multiples_symbolic():
    """x(S), x(2S), x(3S) over Q(t) from the group law."""
    E = build_E()
    coeffs = tuple(RatFunc(c, MultiPoly.constant(1, T_RING)) for c in E.coefficients)
    zero = RatFunc.constant(0, T_RING)
    S = (zero, zero)
    S2 = weierstrass_add(S, S, coeffs)
    S3 = weierstrass_add(S2, S, coeffs)
    return [S[0], S2[0], S3[0]]


def verify_seven_torsion(t0, p):
    """S has order exactly 7 mod p and x(S), x(2S), x(3S) match the subgroup equation."""
    if not is_prime(p) or p < 5:
        raise InputError(f"{p} must be a prime >= 5")
    t0 = Fraction(t0)
    if t0 in (0, 1):
        raise PreconditionError(f"t = {t0} is a cusp")
    if t0.denominator % p == 0:
        raise PreconditionError(f"t = {t0} is not integral at {p}")
    E = build_E()
    tv = t0.numerator * pow(t0.denominator, -1, p) % p
    Fp = make_field(p)
    coeffs = tuple(Fp(int(c.evaluate({"t": tv})) % p) for c in E.coefficients)
    if int(E.discriminant().evaluate({"t": tv})) % p == 0:
        raise PreconditionError(f"bad reduction of E at t={t0}, p={p}")
    S = (Fp(0), Fp(0))
    multiples = [S]
    for _ in range(6):
        multiples.append(weierstrass_add(multiples[-1], S, coeffs))
    if any(M is None for M in multiples[:6]) or multiples[6] is not None:
        return False
    xs = sorted(int(M[0].coeffs[0]) for M in multiples[:3])
    t = Fp(tv)
    expected = sorted(int(v.coeffs[0]) for v in (Fp(0), t ** 3 - t ** 2, t ** 2 - t))
    return xs == expected


def affine_points(coeffs, F):
    """All affine points over GF(p) of a model with GF(p) coefficients."""
    a1, a2, a3, a4, a6 = coeffs
    pts = []
    for xi in range(F.p):
        x = F(xi)
        rhs = x ** 3 + a2 * x * x + a4 * x + a6
        for yi in range(F.p):
            y = F(yi)
            if y * y + a1 * x * y + a3 * y == rhs:
                pts.append((x, y))
    return pts


def _u_mod(p, t0, w=None):
    """(num, den) of u_{t0} reduced mod p, as functions on GF(p)."""
    w = (w if w is not None else w_poly()).specialize({"t": t0})
    d = u_denominator().specialize({"t": t0})
    wn = [int(c) % p for c in _int_coeffs(w, p)]
    dn = [int(c) % p for c in _int_coeffs(d, p)]
    return wn, dn


def _int_coeffs(P, p):
    out = []
    for c in P.univariate_coeffs("x"):
        if c.denominator % p == 0:
            raise PreconditionError(f"coefficient {c} not integral at {p}")
        out.append(c.numerator * pow(c.denominator, -1, p) % p)
    return out


def _peval(coeffs, x, p):
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc


def translation_invariance(t0, p, w=None):
    """Check u(x(P+S)) = u(x(P)) on P^1(GF(p)) for every affine point P.

    ``w`` overrides the numerator of u.  Returns the number of points
    checked; raises VerificationError on failure.
    """
    from .errors import VerificationError
    t0 = Fraction(t0)
    E = build_E(t0)
    F, coeffs = _field_model(E, p)
    wn, dn = _u_mod(p, t0, w)
    S = (F(0), F(0))
    checked = 0
    for P in affine_points(coeffs, F):
        Q = weierstrass_add(P, S, coeffs)
        if Q is None:
            continue
        x1, x2 = int(P[0].coeffs[0]), int(Q[0].coeffs[0])
        n1, d1 = _peval(wn, x1, p), _peval(dn, x1, p)
        n2, d2 = _peval(wn, x2, p), _peval(dn, x2, p)
        if (n1, d1) == (0, 0) or (n2, d2) == (0, 0):
            raise VerificationError(f"u has a base point at p={p}")
        if (n1 * d2 - n2 * d1) % p:
            raise VerificationError(f"u(x(P+S)) != u(x(P)) at P={P}, p={p}")
        checked += 1
    return checked


def isogeny_consistency(t0, p):
    """u maps x-coordinates of E(GF(p)) to x-coordinates of E'(GF(p)), and #E = #E'.

    Returns (#E(F_p), #E'(F_p)) including the point at infinity.
    """
    from .errors import VerificationError
    t0 = Fraction(t0)
    E, Eq = build_E(t0), build_quotient(t0)
    F, c1 = _field_model(E, p)
    _, c2 = _field_model(Eq, p)
    wn, dn = _u_mod(p, t0)
    a1, a2, a3, a4, a6 = (int(c.coeffs[0]) for c in c2)
    pts = affine_points(c1, F)
    for P in pts:
        x = int(P[0].coeffs[0])
        d = _peval(dn, x, p)
        if d == 0:
            continue
        z = _peval(wn, x, p) * pow(d, -1, p) % p
        disc = ((a1 * z + a3) ** 2 + 4 * (z ** 3 + a2 * z * z + a4 * z + a6)) % p
        if disc and pow(disc, (p - 1) // 2, p) != 1:
            raise VerificationError(f"u(x(P)) is not an x-coordinate on E' at p={p}")
    n1 = len(pts) + 1
    n2 = len(affine_points(c2, F)) + 1
    if n1 != n2:
        raise VerificationError(f"#E = {n1} but #E' = {n2} at p={p}")
    return n1, n2


# ---------------------------------------------------------------------------
# the degree-3 covering and its symmetrisation


def build_T(a=None):
    """T(y) = ((1+2a) y^3 + (-1-3a) y^2) / (y - 1 - a)."""
    if a is None:
        ring = ("y", "a")
        y, av = (MultiPoly.var(v, ring) for v in ring)
        return RatFunc((1 + 2 * av) * y ** 3 + (-1 - 3 * av) * y ** 2, y - 1 - av)
    a = Fraction(a)
    if a == Fraction(-1, 2):
        raise DegenerateError("a = -1/2 makes T degenerate")
    y = MultiPoly.var("y", ("y",))
    num = (1 + 2 * a) * y ** 3 + (-1 - 3 * a) * y ** 2
    den = y - 1 - a
    T = RatFunc(num, den)
    if T.num.degree("y") < 3 and T.den.degree("y") < 1:
        raise DegenerateError(f"T is not a degree-3 covering at a = {a}")
    return T


def mobius(var, ring):
    """(v - m)(p - n) / ((v - p)(m - n)), sending v = m, n, p to 0, 1, infinity."""
    v, m, n, p = (MultiPoly.var(name, ring) for name in (var, "m", "n", "p"))
    return RatFunc((v - m) * (p - n), (v - p) * (m - n), normalize=False)


def recompose_step2():
    """S(z) from T(y(z)) = T_moebius(S): returns a normalised RatFunc in STEP2_RING."""
    ring = STEP2_RING
    T = build_T().embed(("y", "a")).subs({"y": mobius("z", ring)}, ring)
    m, n, p = (MultiPoly.var(v, ring) for v in ("m", "n", "p"))
    # T = (S - m)(p - n) / ((S - p)(m - n))  =>  S = (T p (m-n) - m (p-n)) / (T (m-n) - (p-n))
    return (T * (p * (m - n)) - m * (p - n)) / (T * (m - n) - (p - n))


def printed_step2(corrected=True):
    """(alpha(z), beta(z)) of the step-2 display; ``corrected`` drops the stray z."""
    beta = STEP2_BETA.replace("{MPZ}", "m p^2" if corrected else "m p^2 z")
    return parse_poly(STEP2_ALPHA, STEP2_RING), parse_poly(beta, STEP2_RING)


def a_param():
    """a(m, n, p, s) = ((mn - 2mp + np) + (m - 2n + p) s) / (3 (m - n)(p - s))."""
    ring = ("m", "n", "p", "s")
    m, n, p, s = (MultiPoly.var(v, ring) for v in ring)
    return RatFunc((m * n - 2 * m * p + n * p) + (m - 2 * n + p) * s, 3 * (m - n) * (p - s))


def s3_transformations():
    """[(permuted (m, n, p), b(a) as a RatFunc in a)] for the printed table."""
    out = []
    for perm, num, den in S3_TABLE:
        out.append((perm, RatFunc(parse_poly(num, ("a",)), parse_poly(den, ("a",)))))
    return out


def f_general(corrected=True):
    """f(a, m, n, p, y) = alpha(y)/beta(y) from step 2, in ring (y, m, n, p, a)."""
    alpha, beta = printed_step2(corrected)
    # same variable order with z renamed to y
    ring = ("y", "m", "n", "p", "a")
    alpha = MultiPoly(ring, alpha.terms)
    beta = MultiPoly(ring, beta.terms)
    return RatFunc(alpha, beta, normalize=False)


def build_fs(route="printed", s=None):
    """f_s as a RatFunc in (y, s, m, n, p).

    ``route`` selects the construction: ``"raw"`` substitutes a(m,n,p,s) into
    the step-2 map, ``"printed"`` uses the expanded step-3 display and
    ``"sigma"`` the step-4 form with sigma_i the elementary symmetric
    polynomials of m, n, p.
    """
    ring = FS_RING
    if route == "raw":
        f = f_general()
        a = a_param().embed(("m", "n", "p", "s"))
        out = substitute(f, {"a": a}, ("y", "m", "n", "p", "s"), normalize=False)
        out = RatFunc(MultiPoly(ring, _reorder(out.num, ring)),
                      MultiPoly(ring, _reorder(out.den, ring)), normalize=False)
    elif route == "printed":
        out = RatFunc(parse_poly(STEP3_ALPHA, ring), parse_poly(STEP3_BETA, ring),
                      normalize=False)
    elif route == "sigma":
        m, n, p = (MultiPoly.var(v, ring) for v in ("m", "n", "p"))
        sig = {"s1": m + n + p, "s2": m * n + n * p + p * m, "s3": m * n * p}
        alpha, beta = step4_polys()
        out = RatFunc(alpha.subs(sig, ring), beta.subs(sig, ring), normalize=False)
    else:
        raise InputError(f"unknown route {route!r}")
    if s is not None:
        out = RatFunc(out.num.specialize({"s": Fraction(s)}),
                      out.den.specialize({"s": Fraction(s)}), normalize=False)
    return out


def _reorder(P, ring):
    return P.embed(ring).terms


def step4_polys():
    return parse_poly(STEP4_ALPHA, SIGMA_RING), parse_poly(STEP4_BETA, SIGMA_RING)


@dataclass(frozen=True)
class SigmaTriple:
    sigma1: MultiPoly
    sigma2: MultiPoly
    sigma3: MultiPoly
    signs: tuple = (1, 1, 1)

    def cubic(self, ring=("x", "t")):
        """X^3 - sigma1 X^2 + sigma2 X - sigma3."""
        x = MultiPoly.var("x", ring)
        s1, s2, s3 = (c.embed(ring) for c in (self.sigma1, self.sigma2, self.sigma3))
        return x ** 3 - s1 * x ** 2 + s2 * x - s3

    def at(self, t0):
        return tuple(c.evaluate({"t": Fraction(t0)}) for c in
                     (self.sigma1, self.sigma2, self.sigma3))


def build_sigmas(t=None):
    """The printed sigma_1, sigma_2, sigma_3 (polynomials in t, or values at t)."""
    trip = SigmaTriple(*(_tpoly(txt) for txt in SIGMA_TEXT))
    if t is None:
        return trip
    return trip.at(t)


def sigma_sign_pattern():
    """Signs (e1, e2, e3) with monic y-discriminant of E' = X^3 - e1 s1 X^2 + e2 s2 X - e3 s3.

    Returns None when no sign pattern makes the printed sigma_i match.
    """
    disc = build_quotient().y_discriminant(("x", "t"))
    co = disc.coefficients("x")
    lead = co[3]
    if lead != 4:
        return None
    trip = build_sigmas()
    zero = MultiPoly.constant(0, ("x", "t"))
    c2, c1, c0 = (co.get(k, zero) * Fraction(1, 4) for k in (2, 1, 0))
    s1, s2, s3 = (c.embed(("x", "t")) for c in (trip.sigma1, trip.sigma2, trip.sigma3))
    signs = []
    for coef, sig, base in ((c2, s1, -1), (c1, s2, 1), (c0, s3, -1)):
        if coef == base * sig:
            signs.append(1)
        elif coef == -base * sig:
            signs.append(-1)
        else:
            return None
    return tuple(signs)


# ---------------------------------------------------------------------------
# the family


@dataclass
class FamilyCurve:
    """alpha_s(y) * den_t(x) - w_t(x) * beta_s(y) = 0."""

    defining: MultiPoly
    s: object = None
    t: object = None
    genus_certificate: object = None
    irreducibility_prime: int = None
    notes: list = field(default_factory=list)

    @property
    def variables(self):
        return self.defining.variables


@lru_cache(maxsize=None)
def _fs_in_t():
    """alpha_s, beta_s in ring (x, y, s, t) with sigma_i = sigma_i(t)."""
    ring = ("x", "y", "s", "t")
    trip = build_sigmas()
    sig = {"s1": trip.sigma1.embed(ring), "s2": trip.sigma2.embed(ring),
           "s3": trip.sigma3.embed(ring)}
    alpha, beta = step4_polys()
    return alpha.subs(sig, ring), beta.subs(sig, ring)


def family_polynomial(s=None, t=None):
    """The defining polynomial in (x, y, s, t), with s and/or t specialised."""
    ring = ("x", "y", "s", "t")
    alpha, beta = _fs_in_t()
    den = u_denominator().embed(ring)
    w = w_poly().embed(ring)
    bind = {}
    if s is not None:
        bind["s"] = Fraction(s)
    if t is not None:
        bind["t"] = _t_value(t)
    if bind:
        alpha, beta = alpha.specialize(bind), beta.specialize(bind)
        den, w = den.specialize(bind), w.specialize(bind)
    return alpha * den - w * beta


def build_curve(s=None, t=None, certify=True):
    """The family member X_{s,t}; specialised members are checked for degeneracy."""
    if t is not None:
        _t_value(t)
    F = family_polynomial(s, t)
    if s is None or t is None:
        return FamilyCurve(F, s, t)
    F = F.primitive()
    curve = FamilyCurve(F, Fraction(s), Fraction(t))
    if certify:
        from .geometry import family_genus_certificate
        prime, cert = family_genus_certificate(Fraction(s), Fraction(t), F)
        curve.genus_certificate = cert
        curve.irreducibility_prime = prime
    return curve


def fs_specialized(s0, t0):
    """alpha, beta of f_s at (s0, t0) as univariate polynomials in y."""
    alpha, beta = _fs_in_t()
    bind = {"s": Fraction(s0), "t": Fraction(t0)}
    ring = ("y",)
    return _drop(alpha.specialize(bind), ring), _drop(beta.specialize(bind), ring)


def _drop(P, ring):
    used = P.used_variables()
    if any(v not in ring for v in used):
        raise InputError(f"unexpected variables {used}")
    keep = [P.variables.index(v) for v in ring]
    return MultiPoly(ring, {tuple(e[i] for i in keep): c for e, c in P.terms.items()})


def permutations_of_mnp():
    return list(itertools.permutations(("m", "n", "p")))
