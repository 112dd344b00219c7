from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rm3 import family, geometry
from rm3.errors import DegenerateError, InputError, VerificationError
from rm3.exact import MultiPoly, RatFunc, parse_poly
from rm3.geometry import INF, RamificationProfile

XYZ = ("x", "y", "z")


@pytest.mark.parametrize("args,g", [((7, 0, 12), 0), ((3, 0, 10), 3), ((2, 0, 8), 3),
                                    ((2, 0, 6), 2), ((1, 1, 0), 1)])
def test_riemann_hurwitz(args, g):
    assert geometry.riemann_hurwitz(*args) == g


def test_riemann_hurwitz_inconsistent():
    with pytest.raises(VerificationError):
        geometry.riemann_hurwitz(2, 0, 3)
    with pytest.raises(VerificationError):
        geometry.riemann_hurwitz(7, 0, 2)


@given(st.integers(1, 60), st.integers(1, 60))
def test_disk_components_lcm(n, d):
    e = geometry.disk_components(n, d)
    assert e * (n * d // e) == n * d
    assert geometry.disk_components(n, n) == n


def test_pullback_profiles():
    branch = RamificationProfile(None, (2, 2, 2, 1))
    pulled = geometry.pullback_profile(branch, 2)
    assert pulled.ramification == 1
    assert pulled.multiplicities == (2, 1, 1, 1, 1, 1, 1)
    assert geometry.pullback_profile(branch, 1).multiplicities == (1,) * 4
    generic = RamificationProfile(None, (1,) * 7)
    assert geometry.pullback_profile(generic, 2).ramification == 7


def test_standard_certificates():
    certs = geometry.standard_certificates()
    assert [(c.map_degree, c.total_ramification, c.genus) for c in certs] == [
        (7, 12, 0), (3, 10, 3), (2, 8, 3)]
    assert all(c.check() for c in certs)


def test_fiber_profiles_over_Q():
    u = family.build_u(-2)
    assert geometry.fiber_profile(u, INF).multiplicities == (2, 2, 2, 1)
    assert geometry.fiber_profile(u, Fraction(3, 7)).multiplicities == (1,) * 7


def test_fiber_profile_constant_map():
    c = RatFunc.constant(3, ("x",))
    with pytest.raises(InputError):
        geometry.fiber_profile(c, 1)


def test_fiber_profile_over_Q_records_factor_degrees():
    X = MultiPoly.var("x", ("x",))
    u = RatFunc(X ** 2 * (X ** 2 + 1), MultiPoly.constant(1, ("x",)))
    prof = geometry.fiber_profile(u, 0)
    assert prof.multiplicities == (2, 1, 1)
    assert sorted(prof.factor_degrees) == [(1, 2), (2, 1)]
    # a polynomial map of degree 4 is totally ramified over infinity
    assert geometry.fiber_profile(u, INF).multiplicities == (4,)


def test_sampled_branch_profiles():
    rows = geometry.sampled_branch_profiles(20)
    assert len(rows) == 20
    assert all(r["ok"] for r in rows)
    assert {r["total"] for r in rows} == {12}


def test_branch_profiles_in_extension_fields():
    for p in (11, 13, 17):
        profiles = geometry.u_branch_profiles(-2, p)
        assert [pr.multiplicities for pr in profiles] == [(2, 2, 2, 1)] * 4


def test_u_certificate():
    assert geometry.u_certificate().genus == 0


def test_family_certificate():
    p, cert = geometry.family_genus_certificate(0, -2)
    assert p > 10 ** 4 and cert.genus == 3 and cert.total_ramification == 10


def test_family_certificate_rejects_reducible_model():
    F = family.family_polynomial(0, -2).primitive()
    y = MultiPoly.var("y", F.variables)
    with pytest.raises(DegenerateError):
        geometry.family_genus_certificate(0, -2, F * (y - 1), attempts=2)


def test_quartic_bad_primes(quartic):
    from rm3.finitefield import is_prime
    bad = [p for p in range(3, 1000) if is_prime(p) and not geometry.quartic_smooth_mod_p(quartic, p)]
    assert bad == [3, 7, 73, 109, 829, 967]


def test_fermat_quartic_smooth():
    F = parse_poly("x^4 + y^4 + z^4", XYZ)
    assert all(geometry.quartic_smooth_mod_p(F, p) for p in (3, 5, 7, 13))


def test_singular_quartics():
    node = parse_poly("x^4 + y^4 - x^2 z^2 - y^2 z^2", XYZ)
    assert not geometry.quartic_smooth_mod_p(node, 5)
    # singular point defined only over GF(p^2): conjugate nodes at (+-i : 1 : 0) mod 7
    conj = parse_poly("(x^2 + y^2)^2 + z^4 + x z^3", XYZ)
    assert not geometry.quartic_smooth_mod_p(conj, 7)
    found = geometry.singular_points_search(conj, 7, 2)
    assert found and {k for k, _ in found} == {2}


@pytest.mark.parametrize("p,k", [(5, 2), (7, 2), (11, 2), (13, 1)])
def test_resultant_method_agrees_with_search(quartic, p, k):
    found = geometry.singular_points_search(quartic, p, k)
    assert geometry.quartic_smooth_mod_p(quartic, p) == (not found)


def test_smoothness_input_errors():
    F = parse_poly("7 x^4 + 7 y^4", XYZ)
    with pytest.raises(InputError):
        geometry.quartic_smooth_mod_p(F, 7)
    with pytest.raises(InputError):
        geometry.quartic_smooth_mod_p(F, 2)
