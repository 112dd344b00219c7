import pytest
from hypothesis import given, settings, strategies as st

from rm3.curves import PlaneCurve, load_curve
from rm3.errors import CountingError, InputError, PreconditionError, VerificationError
from rm3.exact import parse_poly
from rm3.zeta import (ZetaNumerator, count_points, count_points_naive, newton_assemble,
                      satisfies_weil, verify_functional_equation, weil_bound_ok, zeta_numerator)

# counts N_1, N_2, N_3 frozen from the kernel and confirmed by the naive oracle where feasible
COUNTS = {5: [7, 51, 115], 11: [13, 183, 1303], 13: [24, 210, 1965], 41: [66, 1736, 67506]}
NUMERATORS = {5: (1, 13, 9), 11: (1, 31, 21), 13: (10, 70, 289), 41: (24, 315, 2480)}


@pytest.mark.parametrize("p,nu", [(5, 1), (5, 2), (5, 3), (11, 1), (11, 2), (13, 2)])
def test_kernel_matches_naive_oracle(quartic, p, nu):
    assert count_points(quartic, p, nu) == count_points_naive(quartic, p, nu)


@pytest.mark.parametrize("p", sorted(COUNTS))
def test_counts_frozen(quartic, p):
    assert [count_points(quartic, p, nu) for nu in (1, 2, 3)] == COUNTS[p]


@pytest.mark.parametrize("p", sorted(COUNTS))
def test_newton_assemble(p):
    h = newton_assemble(p, COUNTS[p])
    assert (h.a, h.b, h.c) == NUMERATORS[p]
    assert h.predicted_counts(3) == COUNTS[p]
    assert verify_functional_equation(h)


def test_threads_do_not_change_counts(quartic):
    assert count_points(quartic, 13, 2, threads=3) == count_points(quartic, 13, 2)


def test_counting_refuses_bad_primes(quartic):
    with pytest.raises(PreconditionError):
        count_points(quartic, 7)
    with pytest.raises(PreconditionError):
        zeta_numerator(quartic, 73)


def test_counting_input_errors(quartic):
    with pytest.raises(InputError):
        count_points(quartic, 9)
    with pytest.raises(InputError):
        count_points(quartic, 5, 5)
    cubic = PlaneCurve.from_poly(parse_poly("x^3 + y^3 + z^3", ("x", "y", "z")))
    with pytest.raises(InputError):
        count_points(cubic, 5)


def test_fermat_quartic_counts():
    F = PlaneCurve.from_poly(parse_poly("x^4 + y^4 + z^4", ("x", "y", "z")))
    # over GF(5) every nonzero fourth power is 1, and 1 + 1 + 1 = 3 != 0 in every pattern
    assert count_points(F, 5) == count_points_naive(F, 5) == 0
    assert count_points(F, 13, 2) == count_points_naive(F, 13, 2)


def test_n4_prediction(quartic):
    h = newton_assemble(5, COUNTS[5])
    assert verify_functional_equation(h, count_points(quartic, 5, 4))
    with pytest.raises(VerificationError):
        verify_functional_equation(h, 564)


def test_newton_rejects_impossible_counts():
    with pytest.raises(CountingError):
        newton_assemble(5, [100, 51, 115])
    with pytest.raises(CountingError):
        newton_assemble(5, [7, 52, 115])
    with pytest.raises(InputError):
        newton_assemble(5, [7, 51])


def test_weil_bounds():
    assert weil_bound_ok(5, 1, 7)
    assert not weil_bound_ok(5, 1, 6 + 6 * 3 + 1)
    assert satisfies_weil(ZetaNumerator(5, 1, 13, 9))
    assert not satisfies_weil(ZetaNumerator(5, 0, 40, 0))


@settings(max_examples=40, deadline=None)
@given(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4))
def test_weil_products_roundtrip(x1, x2, x3):
    # product of (1 + a_i x + 7 x^2) with |a_i| <= 2 sqrt(7)
    p = 7
    a, b, c = (x1 + x2 + x3, x1 * x2 + x1 * x3 + x2 * x3 + 3 * p,
               x1 * x2 * x3 + 2 * p * (x1 + x2 + x3))
    h = ZetaNumerator(p, a, b, c)
    assert satisfies_weil(h)
    assert newton_assemble(p, h.predicted_counts(3)) == h


def test_curve_file_content_is_normalised(tmp_path):
    path = tmp_path / "c.txt"
    path.write_text("# scaled Fermat quartic\n3*x^4 + 3*y^4 + 3*z^4\n")
    curve = load_curve(path)
    assert curve.form == parse_poly("x^4 + y^4 + z^4", ("x", "y", "z"))
