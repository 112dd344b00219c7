import math

import pytest
from hypothesis import given, strategies as st

from rm3.curves import load_table
from rm3.errors import InputError, RMFailure
from rm3.rmfield import (OKElem, canonical, coordinate_bounds, expand_factor, galois_sigma,
                         matching_relations, rm_factor, verify_table_row)
from rm3.zeta import ZetaNumerator

coord = st.integers(-20, 20)
elems = st.builds(OKElem, coord, coord, coord)
t = OKElem.t()


def test_minimal_polynomial():
    assert t ** 3 + t ** 2 - 2 * t - 1 == OKElem(0, 0, 0)


def test_sigma_of_t():
    assert galois_sigma(t) == OKElem(-2, 0, 1)
    s = galois_sigma(t)
    assert s ** 3 + s ** 2 - 2 * s - 1 == 0


@given(elems, elems)
def test_sigma_is_ring_automorphism(a, b):
    assert galois_sigma(a * b) == galois_sigma(a) * galois_sigma(b)
    assert galois_sigma(a + b) == galois_sigma(a) + galois_sigma(b)
    assert galois_sigma(galois_sigma(galois_sigma(a))) == a


@given(elems)
def test_trace_and_norm_are_rational(a):
    c1, c2, c3 = a.conjugates()
    total = c1 + c2 + c3
    assert total == OKElem(a.trace(), 0, 0)
    prod = c1 * c2 * c3
    assert prod.v == 0 and prod.w == 0 and prod.u == a.norm()


def test_trace_norm_of_t():
    assert t.trace() == -1 and t.norm() == 1
    assert t.charpoly() == (-1, -2, 1)


def test_embeddings():
    vals = t.embeddings()
    assert math.isclose(vals[0], 2 * math.cos(2 * math.pi / 7))
    assert math.isclose(sum(vals), -1)


def test_matching_relations_symbolic():
    rel = matching_relations()
    assert rel(5, 1, 13, 9) == (1, -2, -1)


def test_expand_factor_p5():
    # g_5 = 1 - t x + 5 x^2
    h = expand_factor(-t, 5)
    assert h.coefficients() == [1, 1, 13, 9, 65, 25, 125]


def test_rm_factor_p5():
    f = rm_factor(ZetaNumerator(5, 1, 13, 9))
    assert canonical(f.alpha) == canonical(-t)
    assert f.alpha.coords() == (-1, 1, 1)


@pytest.mark.parametrize("p,h,alpha", [(13, (10, 70, 289), (2, 1, 1)),
                                       (41, (24, 315, 2480), (8, 0, 0)),
                                       (89, (3, 11, 367), (-12, 11, 10))])
def test_rm_factor_frozen(p, h, alpha):
    assert rm_factor(ZetaNumerator(p, *h)).alpha.coords() == alpha


def test_rm_factor_failures():
    # Weil-compliant but not a norm form over O_K
    with pytest.raises(RMFailure):
        rm_factor(ZetaNumerator(5, 0, 15, 1))
    with pytest.raises(RMFailure):
        rm_factor(ZetaNumerator(5, 0, 40, 0))
    with pytest.raises(InputError):
        rm_factor((1, 13, 9))


@given(st.sampled_from([11, 13, 29, 89]), st.integers(-3, 3), st.integers(-3, 3),
       st.integers(-3, 3))
def test_factor_roundtrip(p, u, v, w):
    alpha = OKElem(u, v, w)
    bound = 2 * math.sqrt(p)
    if any(abs(e) > bound for e in alpha.embeddings()):
        return
    h = expand_factor(alpha, p)
    assert canonical(rm_factor(h).alpha) == canonical(alpha)


def test_coordinate_bounds():
    assert coordinate_bounds(89) == [24, 17, 17]


def test_verify_table_row_accepts_conjugates():
    table = load_table()
    row = table[13]
    f = rm_factor(ZetaNumerator(13, 10, 70, 289))
    assert verify_table_row(13, f, row.alpha, row.trace)
    assert not verify_table_row(13, f, row.alpha, row.trace + 1)
    assert not verify_table_row(11, f, row.alpha, row.trace)


def test_table_fixture_shape():
    table = load_table()
    assert len(table) == 20 and min(table) == 5 and max(table) == 89
    assert 7 not in table and 73 not in table
