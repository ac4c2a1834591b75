import pytest

from nichols_abe.closed_forms import (E4_EXCEPTIONS, E5_EXCEPTIONS, F5_SMALL, HypothesisViolation,
                                      cf_bminus1_tilde, cf_dimension, cf_E, cf_orbit_size,
                                      cf_tilde_fk, f5_general, square_pascal)
from nichols_abe.scalars import A, E, MultiPoly
from nichols_abe.symaction import ek_table, orbit
from nichols_abe.symmetrizer import tilde_f_k


def a_poly(coeffs):
    return MultiPoly({(i, 0, 0): c for i, c in coeffs.items()})


@pytest.mark.parametrize("n,k,parity,expected", [
    (2, 0, "even", 6),
    (2, 2, "even", 1),
    (2, 1, "odd", 5),
    (3, 0, "odd", 35),
])
def test_cf_orbit_size(n, k, parity, expected):
    assert cf_orbit_size(n, k, parity) == expected


@pytest.mark.parametrize("n,k,parity", [(2, 3, "even"), (2, -1, "odd"), (2, 1, "both")])
def test_cf_orbit_size_rejects(n, k, parity):
    with pytest.raises(ValueError):
        cf_orbit_size(n, k, parity)


def test_cf_orbit_size_odd_against_orbits():
    # C(2n+1, n-k) for the word 2^{2(n-k)+1}(12)^k
    for n in range(4):
        for k in range(n + 1):
            w = "2" * (2 * (n - k) + 1) + "12" * k
            assert cf_orbit_size(n, k, "odd") == len(orbit(w))


def test_orbit_sizes_sum_to_power_of_two():
    # the named words come in pairs (w and its bar) except 2^{2n}
    for n in range(1, 6):
        even = cf_orbit_size(n, 0, "even") + 2 * sum(cf_orbit_size(n, k, "even") for k in range(1, n + 1))
        assert even == 4 ** n
        odd = 2 * sum(cf_orbit_size(n, k, "odd") for k in range(n + 1))
        assert odd == 2 ** (2 * n + 1)


@pytest.mark.parametrize("k,n,expected", [
    (1, 5, a_poly({1: 3})),
    (4, 7, a_poly({2: 10, 3: 19, 4: 1})),
    (5, 6, a_poly({3: 4})),
    (0, 3, MultiPoly.const(1)),
    (2, 3, MultiPoly()),
])
def test_cf_tilde_fk_examples(k, n, expected):
    assert cf_tilde_fk(k, n) == expected


@pytest.mark.parametrize("k,s,n,expected", [
    (3, 7, 6, 10),
    (4, 8, 6, 4),
    (1, 3, 2, 0),
    (4, 12, 7, 1),
    (5, 13, 8, 32),
    (5, 15, 9, 4),
    (0, 0, 5, 1),
])
def test_cf_E_examples(k, s, n, expected):
    assert cf_E(k, s, n) == expected


def test_exception_lists_are_transcribed():
    assert len(E4_EXCEPTIONS) + len(E5_EXCEPTIONS) == 7


def test_f5_general_formula_reaches_n10_but_not_n9():
    assert f5_general(10) == a_poly(F5_SMALL[10])
    assert f5_general(9) != a_poly(F5_SMALL[9])


@pytest.mark.parametrize("k", range(6))
@pytest.mark.parametrize("n", range(2, 11))
def test_cf_tilde_fk_matches_recursion(k, n):
    assert cf_tilde_fk(k, n) == tilde_f_k(n, k)


@pytest.mark.parametrize("n", range(2, 13))
def test_cf_tilde_fk_consistent_with_cf_E(n):
    for k in range(6):
        from_e = a_poly({i: cf_E(k, 2 * i + k, n) for i in range(n * n)})
        assert cf_tilde_fk(k, n) == from_e, (k, n)


@pytest.mark.parametrize("n", range(2, 10))
def test_cf_E_matches_enumeration(n):
    table = ek_table(n, 5)
    for k in range(6):
        for s in range(n * (n - 1) // 2 + 1):
            assert cf_E(k, s, n) == table.get(k, s), (k, s, n)


def test_cf_dimension():
    assert cf_dimension("A1xA1") == 4
    assert cf_dimension("A2") == 27
    assert cf_dimension("V1b1", 4) == 16
    assert cf_dimension("BMinusOne", 3) == 12
    with pytest.raises(HypothesisViolation):
        cf_dimension("BMinusOne", 1)
    with pytest.raises(HypothesisViolation):
        cf_dimension("V1b1", 1)
    with pytest.raises(ValueError):
        cf_dimension("B2")


@pytest.mark.parametrize("m,variant,expected", [
    (1, "odd-power", 1 - A * E),
    (2, "odd-power", (1 - A * E) ** 2 * (1 + A * E)),
    (2, "even-cross", -(E ** 2) * (1 - A * E)),
    (1, "even-diag", MultiPoly.const(1)),
])
def test_cf_bminus1_tilde(m, variant, expected):
    assert cf_bminus1_tilde(m, variant) == expected


def test_square_pascal():
    assert [square_pascal(3, d) for d in range(6)] == [1, 2, 3, 2, 1, 0]
    assert sum(square_pascal(5, d) for d in range(10)) == 25
