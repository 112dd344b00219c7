import random

import pytest
from hypothesis import given, settings, strategies as st

from rm3.errors import InputError
from rm3.finitefield import (FieldCtx, LogTables, count_roots, find_roots, irreducible_factors,
                             is_prime, make_field, squarefree_decomposition, squarefree_profile)


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(2147483647) and not is_prime(2147483647 * 3)


@pytest.mark.parametrize("p,k", [(5, 1), (5, 2), (7, 3), (3, 4)])
def test_field_axioms(p, k):
    F = make_field(p, k)
    rng = random.Random(k)
    for _ in range(50):
        a, b, c = (F.random_element(rng) for _ in range(3))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        if any(a):
            assert F.mul(a, F.inv(a)) == F.one
        assert F.pow(a, F.q) == a


def test_frobenius_is_pth_power():
    F = make_field(7, 3)
    rng = random.Random(0)
    a = F.random_element(rng)
    assert F.frobenius(a) == F.pow(a, 7)


def test_generator_has_full_order():
    F = make_field(5, 2)
    g = F.generator()
    seen = {F.pow(g, i) for i in range(F.q - 1)}
    assert len(seen) == F.q - 1


def test_int_encoding_roundtrip():
    F = make_field(3, 3)
    assert [F.to_int(F.from_int(n)) for n in range(27)] == list(range(27))


def test_bad_parameters():
    with pytest.raises(InputError):
        FieldCtx(9)
    with pytest.raises(InputError):
        make_field(5, 5)


def test_count_roots_matches_enumeration():
    F = make_field(11)
    rng = random.Random(3)
    for _ in range(30):
        f = F.poly([rng.randrange(11) for _ in range(rng.randrange(2, 8))] + [1])
        brute = sum(1 for a in F.elements() if not any(F.poly_eval(f, a)))
        assert count_roots(F, f) == brute
        assert len(find_roots(F, f)) == brute


def test_roots_in_extension():
    # x^2 + 1 has no root in GF(7) but two in GF(49)
    assert count_roots(make_field(7), [1, 0, 1]) == 0
    assert count_roots(make_field(7, 2), [1, 0, 1]) == 2


def test_squarefree_profile_counts_closure_multiplicities():
    F = make_field(5)
    # (x^2 + 2)^2 (x - 1)^3 : x^2 + 2 is irreducible mod 5
    f = F.poly([1])
    for g in ([2, 0, 1], [2, 0, 1], [-1, 1], [-1, 1], [-1, 1]):
        f = F.poly_mul(f, F.poly(g))
    assert squarefree_profile(F, f) == (3, 2, 2)


def test_squarefree_in_characteristic_p():
    F = make_field(3)
    # (x^3 - x + 1)^3 has zero derivative; the p-th root is needed
    g = F.poly([1, -1, 0, 1])
    f = F.poly_mul(F.poly_mul(g, g), g)
    assert [(m, len(h) - 1) for h, m in squarefree_decomposition(F, f)] == [(3, 3)]


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 12), min_size=2, max_size=9))
def test_irreducible_factors_multiply_back(coeffs):
    F = make_field(13)
    f = F.poly(coeffs + [1])
    for g, _ in squarefree_decomposition(F, f):
        prod = [F.one]
        for h in irreducible_factors(F, g):
            prod = F.poly_mul(prod, h)
            assert len(h) <= 2 or count_roots(F, h) == 0
        assert prod == g


def test_log_tables_consistent():
    F = make_field(7, 2)
    T = LogTables(F)
    rng = random.Random(1)
    for _ in range(40):
        a, b = F.random_element(rng), F.random_element(rng)
        la, lb = T.log_of(a), T.log_of(b)
        if any(a) and any(b):
            assert T.elem_of((la + lb) % T.order) == F.mul(a, b)
