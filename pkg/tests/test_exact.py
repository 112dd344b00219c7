from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from rm3.errors import DegenerateError, InputError, StructureError
from rm3.exact import (MultiPoly, RatFunc, count_real_roots, exact_div, format_poly,
                       parse_poly, parse_rational, poly_gcd, resultant, squarefree_decomposition,
                       squarefree_part, substitute)

XY = ("x", "y")
x, y = (MultiPoly.var(v, XY) for v in XY)

small = st.integers(min_value=-5, max_value=5)


@st.composite
def polys(draw, ring=XY, max_terms=4, max_deg=3):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        e = tuple(draw(st.integers(0, max_deg)) for _ in ring)
        terms[e] = draw(small)
    return MultiPoly(ring, terms)


def test_parse_implicit_multiplication_and_powers():
    f = parse_poly("2xy^2 - (x+1)(x-1) + 3/4", XY)
    assert f == 2 * x * y ** 2 - x ** 2 + 1 + Fraction(3, 4)


def test_parse_equation_reads_as_difference():
    assert parse_poly("y^2 = x^3 + 1", XY) == y ** 2 - x ** 3 - 1


def test_parse_rejects_unknown_variable():
    with pytest.raises(InputError):
        parse_poly("x + q", XY)


def test_format_roundtrip():
    f = 3 * x ** 2 * y - Fraction(5, 7) * y + 1
    assert parse_poly(format_poly(f), XY) == f


def test_parse_rational():
    assert parse_rational("-3/12") == Fraction(-1, 4)


@settings(max_examples=60, deadline=None)
@given(polys(), polys())
def test_ring_axioms(f, g):
    assert f * g == g * f
    assert (f + g) * (f - g) == f * f - g * g


@settings(max_examples=40, deadline=None)
@given(polys(), polys())
def test_exact_division_recovers_factor(f, g):
    if not g:
        return
    assert exact_div(f * g, g) == f


@settings(max_examples=40, deadline=None)
@given(polys(max_terms=3, max_deg=2), polys(max_terms=3, max_deg=2), polys(max_terms=3, max_deg=2))
def test_gcd_contains_common_factor(a, b, c):
    if not a or not b or not c:
        return
    g = poly_gcd(a * c, b * c)
    assert exact_div(a * c, g) is not None
    # the common factor divides the gcd
    exact_div(g, c.primitive() if c.degree() > 0 else g)


def test_gcd_known():
    f = (x + y) ** 2 * (x - 2)
    g = (x + y) * (x + 3)
    assert poly_gcd(f, g).primitive() == (x + y).primitive()


def test_mismatched_rings_raise():
    with pytest.raises(StructureError):
        _ = x + MultiPoly.var("z", ("z",))


def test_squarefree_decomposition_univariate():
    X = MultiPoly.var("x", ("x",))
    f = (X ** 2 + 1) * (X + 2) ** 2 * (X - 1) ** 3
    parts = {m: g.monic() for g, m in squarefree_decomposition(f, "x")}
    assert parts == {1: (X ** 2 + 1), 2: X + 2, 3: X - 1}


def test_resultant_detects_common_root():
    X = MultiPoly.var("x", XY)
    Y = MultiPoly.var("y", XY)
    r = resultant(X ** 2 - Y, X - 2, "x")
    # x = 2 is a common root exactly when y = 4
    assert r.specialize({"y": 4}) == 0
    assert r.specialize({"y": 5}) != 0


def test_resultant_of_linear_forms():
    X = MultiPoly.var("x", ("x",))
    assert resultant(X - 3, X - 5, "x").constant_value() == -2 or \
        resultant(X - 3, X - 5, "x").constant_value() == 2


def test_ratfunc_normalises_sign_and_common_factor():
    a = MultiPoly.var("a", ("a",))
    assert str(RatFunc(-a, -a)) == "1"
    r = RatFunc((a - 1) * (a + 2), 2 * (a - 1))
    assert r.same_as(RatFunc(a + 2, MultiPoly.constant(2, ("a",))))
    assert r.den.is_constant()


def test_ratfunc_arithmetic_and_derivative():
    f = RatFunc(x, y)
    g = RatFunc(y, x)
    assert (f * g).same_as(RatFunc.constant(1, XY))
    d = RatFunc(x ** 2, x + 1).diff("x")
    assert d.same_as(RatFunc(x ** 2 + 2 * x, (x + 1) ** 2))


def test_ratfunc_zero_denominator():
    with pytest.raises(DegenerateError):
        RatFunc(x, MultiPoly.constant(0, XY))
    with pytest.raises(DegenerateError):
        RatFunc(x, y - 1).specialize({"y": 1})


def test_substitute_rational_function():
    f = x ** 2 + y
    out = substitute(f, {"x": RatFunc(y, y + 1)}, XY)
    assert out.same_as(RatFunc(y ** 2 + y * (y + 1) ** 2, (y + 1) ** 2))


def test_specialize_to_number():
    assert (x ** 2 * y + 1).specialize({"x": 2, "y": Fraction(1, 4)}) == 2


def test_sturm_counts():
    # (w - 1)(w - 2)(w + 3)
    f = [Fraction(6), Fraction(-7), Fraction(0), Fraction(1)]
    assert count_real_roots(f, 0, 4) == 2
    assert count_real_roots(f, -10, 10) == 3
    assert count_real_roots(f, 1, 2) == 2


def test_squarefree_part_drops_repeats():
    f = [Fraction(c) for c in (1, -2, 1)]  # (w - 1)^2
    assert len(squarefree_part(f)) == 2
