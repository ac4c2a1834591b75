import itertools

import pytest

from nichols_abe.braiding import BraidingParams, phi_apply
from nichols_abe.linalg import UnsupportedMode, bareiss_rank
from nichols_abe.scalars import A, B, E, CyclotomicNumber, MultiPoly, ParamPoint, q_factorial
from nichols_abe.symaction import all_words, orbit
from nichols_abe.symmetrizer import (bruteforce_column, engine, graded_dim, nichols_dimension,
                                     rank, symmetrizer_block, tilde_f, tilde_f_bruteforce,
                                     tilde_f_k)

FORMAL = BraidingParams.formal()
ONE = MultiPoly.const(1)


def pt(*lits):
    return ParamPoint.from_literals(*lits)


def full_symmetrizer_rank(n, point):
    # dense 2^n x 2^n matrix of sum_sigma Phi_sigma, no orbit blocks
    params = BraidingParams.at(point)
    words = all_words(n)
    index = {w: i for i, w in enumerate(words)}
    zero = point.a.zero()
    rows = [[zero] * len(words) for _ in words]
    for x in words:
        for p in itertools.permutations(range(1, n + 1)):
            coef, y = phi_apply(p, x, params)
            rows[index[y]][index[x]] = rows[index[y]][index[x]] + coef
    return bareiss_rank(rows)


@pytest.mark.parametrize("x,y,expected", [
    ("11", "22", A),
    ("111", "111", 1 + A * B * E),
    ("12", "12", 1 + B),
    ("11", "11", ONE),
    ("1111", "1112", MultiPoly()),
])
def test_tilde_f_examples(x, y, expected):
    assert tilde_f(x, y) == expected
    assert tilde_f_bruteforce(x, y) == expected


def test_tilde_f_1111_e1():
    assert tilde_f("1111", "1111").subs(e=1) == 1 + 2 * A * B + A * B ** 2


def test_q_factorial_example():
    # n=3, k=1: word 2^4 (12), a = e = 1
    w = "2222" + "12"
    params = BraidingParams(ONE, B, ONE, symbolic=True)
    assert engine(params).tilde_f(w, w) == q_factorial(4, B) * q_factorial(2, B)


def test_bminus1_bruteforce_example():
    # 1^5 at b=-1, e=1 is (1-a)^2 (2)_a^!
    got = tilde_f_bruteforce("11111", "11111").subs(b=-1, e=1)
    assert got == (1 - A) ** 2 * (1 + A)


@pytest.mark.parametrize("n", range(1, 6))
def test_recursion_matches_bruteforce_column(n):
    eng = engine(FORMAL)
    for x in all_words(n):
        assert eng.column(x) == bruteforce_column(x, FORMAL)


def test_recursion_matches_pairwise_oracle():
    for x in all_words(5):
        for y in orbit(x):
            assert tilde_f(x, y) == tilde_f_bruteforce(x, y)


def test_columns_stay_in_orbit():
    eng = engine(FORMAL)
    for x in all_words(6):
        assert set(eng.column(x)) <= set(orbit(x))


def test_specialized_matches_symbolic():
    p = pt("zeta(5)", "-1/2", "zeta(5)^3")
    for x in all_words(4):
        for y in orbit(x):
            assert tilde_f(x, y, p) == tilde_f(x, y).evaluate(p)


def test_block_matrix():
    m = symmetrizer_block(2, "11")
    assert m.basis.words == ["11", "22"]
    assert m.entries == [[ONE, E], [A, ONE]]
    assert symmetrizer_block(2, "12").entries == [[1 + B]]
    assert "22" in m.dump()
    with pytest.raises(ValueError):
        symmetrizer_block(3, "11")


@pytest.mark.parametrize("lits,rep,expected", [
    (("1", "1", "1"), "11", 1),
    (("1", "-1", "1"), "12", 0),
    (("1", "1", "-1"), "11", 2),
])
def test_rank_examples(lits, rep, expected):
    assert rank(symmetrizer_block(2, rep, pt(*lits))) == expected


def test_rank_rejects_symbolic():
    with pytest.raises(UnsupportedMode):
        rank(symmetrizer_block(2, "11"))


def test_bareiss_rank_rationals():
    assert bareiss_rank([[1, 2], [2, 4]]) == 1
    assert bareiss_rank([[0, 0], [0, 0]]) == 0
    assert bareiss_rank([[0, 1, 2], [1, 0, 3], [1, 1, 5]]) == 2
    z = CyclotomicNumber.zeta(3)
    assert bareiss_rank([[z, z * z], [z * z, z.one()]]) == 1


@pytest.mark.parametrize("n,lits,expected", [
    (2, ("1", "-1", "1"), 1),
    (2, ("1", "2", "1"), 3),
    (2, ("2", "3", "5"), 4),
    (3, ("1", "-1", "1"), 0),
    (3, ("1", "zeta(3)", "zeta(3)^2"), 4),
    (3, ("zeta(4)", "zeta(3)", "2"), 6),
    (3, ("2", "3", "5"), 8),
])
def test_graded_dim_against_dense_matrix(n, lits, expected):
    assert graded_dim(n, pt(*lits)) == expected
    assert full_symmetrizer_rank(n, pt(*lits)) == expected


def test_graded_dim_vanishes_at_degree_7():
    assert graded_dim(7, pt("1", "zeta(3)", "1")) == 0


def test_graded_dim_parallel_matches_serial():
    p = pt("1", "zeta(3)", "zeta(3)^2")
    assert graded_dim(5, p, jobs=2) == graded_dim(5, p)


@pytest.mark.parametrize("lits,ranks", [
    (("1", "-1", "1"), [1, 2, 1, 0]),
    (("1", "zeta(3)", "zeta(3)^2"), [1, 2, 4, 4, 5, 4, 4, 2, 1, 0]),
    (("1", "zeta(4)", "1"), [1, 2, 3, 4, 3, 2, 1, 0]),
])
def test_nichols_dimension_profiles(lits, ranks):
    prof = nichols_dimension(pt(*lits), cap=12)
    assert prof.status == "terminated"
    assert prof.ranks == ranks
    assert prof.total == sum(ranks)
    assert prof.to_json()["total"] == sum(ranks)


def test_cap_exceeded_makes_no_claim():
    prof = nichols_dimension(pt("1", "2", "1"), cap=8)
    assert prof.status == "cap-exceeded"
    assert prof.total is None
    assert "total" not in prof.to_json()
    assert len(prof.ranks) == 9


def test_nichols_dimension_rejects_small_cap():
    with pytest.raises(ValueError):
        nichols_dimension(pt("1", "-1", "1"), cap=1)


@pytest.mark.parametrize("n,k,expected", [
    (5, 0, ONE),
    (8, 4, 17 * A ** 2 + 52 * A ** 3 + 2 * A ** 4),
    (10, 5, 10 * A ** 5 + 234 * A ** 4 + 226 * A ** 3 + 4 * A ** 2),
    (4, 2, A),
])
def test_tilde_f_k(n, k, expected):
    assert tilde_f_k(n, k) == expected
