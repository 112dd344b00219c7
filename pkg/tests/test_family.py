from fractions import Fraction

import pytest

from rm3 import family
from rm3.errors import DegenerateError, PreconditionError
from rm3.exact import MultiPoly, RatFunc


def test_E_symbolic_and_at_minus_two():
    E = family.build_E()
    t = MultiPoly.var("t", ("t",))
    assert E.coefficients[0] == 1 + t - t ** 2
    assert E.coefficients[1] == t ** 2 - t ** 3 == E.coefficients[2]
    assert family.build_E(-2).coefficients == (-5, 12, 12, 0, 0)
    assert E.discriminant().degree("t") == 17


@pytest.mark.parametrize("t0", [0, 1])
def test_cusps_rejected(t0):
    with pytest.raises(DegenerateError):
        family.build_E(t0)
    with pytest.raises(DegenerateError):
        family.build_curve(0, t0)


@pytest.mark.parametrize("p", [5, 13])
def test_seven_torsion(p):
    assert family.verify_seven_torsion(-2, p)


def test_seven_torsion_at_cusp():
    with pytest.raises(PreconditionError):
        family.verify_seven_torsion(1, 5)


def test_torsion_multiples_symbolic():
    xs = family.torsion_multiples_symbolic()
    t = MultiPoly.var("t", ("t",))
    want = [0 * t, t ** 3 - t ** 2, t ** 2 - t]
    assert all(a.same_as(RatFunc(b, MultiPoly.constant(1, ("t",)))) for a, b in zip(xs, want))


def test_quotient_printed_coefficients():
    Eq = family.build_quotient()
    t = MultiPoly.var("t", ("t",))
    assert Eq.coefficients[3] == -5 * (t - 1) * t * (1 - t + t ** 2) * (1 - 5 * t + 2 * t ** 2 + t ** 3)
    assert Eq.coefficients[4].degree("t") == 11


def test_u_numerator_and_denominator():
    w = family.w_poly()
    co = w.coefficients("x")
    assert co[7] == 1
    t = MultiPoly.var("t", family.X_RING)
    assert co[0] == (t - 1) ** 6 * t ** 10
    den = family.build_u(-2).den
    X = MultiPoly.var("x", den.variables)
    assert den.monic() == (X * (X - 6) * (X + 12)) ** 2


@pytest.mark.parametrize("p,n", [(5, 5), (13, 12), (29, 33)])
def test_translation_invariance(p, n):
    assert family.translation_invariance(-2, p) == n


@pytest.mark.parametrize("p,n", [(5, 7), (13, 14), (29, 35)])
def test_isogeny_preserves_point_count(p, n):
    assert family.isogeny_consistency(-2, p) == (n, n)


def test_hyperelliptic_model():
    F = family.build_hyperelliptic()
    assert F.degree("y") == 2
    G = family.build_hyperelliptic(0, -2)
    assert G.used_variables() == ("x", "y")


def test_T_branching():
    T = family.build_T(3)
    assert T.specialize({"y": 0}) == 0 and T.diff("y").specialize({"y": 0}) == 0
    assert T.specialize({"y": 1}) == 1 and T.diff("y").specialize({"y": 1}) == 0
    with pytest.raises(DegenerateError):
        family.build_T(Fraction(-1, 2))


def test_step2_typo_detected():
    S = family.recompose_step2()
    corrected = RatFunc(*family.printed_step2(True), normalize=False)
    literal = RatFunc(*family.printed_step2(False), normalize=False)
    assert S.same_as(corrected)
    assert not S.same_as(literal)


def test_a_param_swap():
    A = family.a_param()
    ring = A.variables
    m, n = MultiPoly.var("m", ring), MultiPoly.var("n", ring)
    swapped = A.subs({"m": n, "n": m}, ring)
    assert swapped.same_as(-1 - A)


def test_fs_routes_agree():
    printed = family.build_fs("printed")
    assert printed.same_as(family.build_fs("sigma"))
    assert printed.same_as(family.build_fs("raw"))


def test_fs_beta_cubic_coefficient():
    _, beta = family.step4_polys()
    ring = beta.variables
    s, s1, s2, s3 = (MultiPoly.var(v, ring) for v in ("s", "s1", "s2", "s3"))
    assert beta.coefficients("y")[3] == s * (2 * s1 ** 2 - 6 * s2) - s1 * s2 + 9 * s3


def test_sigmas():
    assert family.sigma_sign_pattern() == (1, 1, 1)
    assert family.build_sigmas(-2) == (Fraction(-73, 4), Fraction(-2340), Fraction(122394))
    assert family.build_sigmas().sigma3.degree("t") == 11


def test_family_member_degrees():
    F = family.family_polynomial()
    assert F.degree("y") == 3 and F.degree("x") <= 13
    curve = family.build_curve(0, -2)
    assert curve.defining.degree("y") == 3 and curve.defining.degree("x") == 7
    assert curve.genus_certificate.genus == 3
    assert all(Fraction(c).denominator == 1 for c in curve.defining.terms.values())
