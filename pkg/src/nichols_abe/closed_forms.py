"""
Closed forms for orbit sizes, the polynomials F~_k(1^n|1^n), the counts
E_{k,s}^n and the Nichols dimensions, transcribed verbatim with their
piecewise ranges.  Nothing here calls the brute-force engines.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .scalars import A, E, MultiPoly, q_factorial

ZERO = MultiPoly()


class HypothesisViolation(ValueError):
    pass


def _a_poly(coeffs) -> MultiPoly:
    """{power of a: coefficient} -> MultiPoly."""
    return MultiPoly({(i, 0, 0): Fraction(c) for i, c in coeffs.items()})


def _exact(num, den):
    q = Fraction(num, den)
    assert q.denominator == 1, (num, den)
    return int(q)


def cf_orbit_size(n: int, k: int, parity: str) -> int:
    """|O(2^{2(n-k)}(12)^k)| (even) or |O(2^{2(n-k)+1}(12)^k)| (odd)."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if parity == "even":
        return comb(2 * n, n - k)
    if parity == "odd":
        return comb(2 * n + 1, n - k)
    raise ValueError(f"parity must be 'even' or 'odd', not {parity!r}")


F4_SMALL = {
    8: {2: 17, 3: 52, 4: 2},
    7: {2: 10, 3: 19, 4: 1},
    6: {2: 4, 3: 4},
    5: {3: 1},
}

F5_SMALL = {
    10: {5: 10, 4: 234, 3: 226, 2: 4},
    9: {5: 4, 4: 96, 3: 131, 2: 3},
    8: {4: 32, 3: 62, 2: 2},
    7: {4: 10, 3: 19, 2: 1},
    6: {3: 4},
}


def f5_general(n: int) -> MultiPoly:
    """The n >= 11 branch of F~_5, usable at any n."""
    return _a_poly({
        5: _exact(n**5 - 20 * n**4 + 75 * n**3 + 740 * n**2 - 5716 * n + 9360, 120),
        4: _exact(n**4 - 9 * n**3 - 34 * n**2 + 474 * n - 936, 6),
        3: _exact(n**3 - n**2 - 62 * n + 172, 2),
        2: n - 6,
    })


def cf_tilde_fk(k: int, n: int) -> MultiPoly:
    """F~_k(1^n|1^n) for k <= 5 as a polynomial in a (e = 1)."""
    if not 0 <= k <= 5:
        raise ValueError("closed forms are known for k <= 5 only")
    if k == 0:
        return MultiPoly.const(1)
    if k == 1:
        return _a_poly({1: n - 2}) if n >= 2 else ZERO
    if k == 2:
        if n <= 3:
            return ZERO
        return _a_poly({2: _exact((n - 1) * (n - 4), 2), 1: n - 3})
    if k == 3:
        if n >= 6:
            return _a_poly({3: _exact((n + 1) * (n - 4) * (n - 6), 6), 2: n * n - 4 * n - 2})
        if n == 5:
            return _a_poly({2: 3})
        return ZERO
    if k == 4:
        if n > 8:
            return _a_poly({
                4: _exact((n - 7) * (n**3 - 7 * n**2 - 14 * n + 96), 24),
                3: _exact(n**3 - 6 * n**2 - 13 * n + 80, 2),
                2: _exact(n * n - n - 22, 2),
            })
        return _a_poly(F4_SMALL.get(n, {}))
    if n >= 11:
        return f5_general(n)
    return _a_poly(F5_SMALL.get(n, {}))


E4_EXCEPTIONS = {(12, 7): 1, (10, 6): 4, (10, 5): 1}
E5_EXCEPTIONS = {(15, 9): 4, (13, 8): 32, (11, 7): 19, (11, 6): 4}


def cf_E(k: int, s: int, n: int) -> int:
    """E_{k,s}^n for k <= 5, with the exceptional values listed explicitly.

    The k = 0 row (only E_{0,0} = 1) follows from F~_0 = 1.
    """
    if not 0 <= k <= 5:
        raise ValueError("closed forms are known for k <= 5 only")
    if k == 0:
        return 1 if s == 0 else 0
    if k == 1:
        return n - 2 if s == 3 and n >= 2 else 0
    if k == 2:
        if s == 6 and n >= 4:
            return _exact((n - 1) * (n - 4), 2)
        if s == 4 and n >= 4:
            return n - 3
        return 0
    if k == 3:
        if s == 9 and n >= 6:
            return _exact((n + 1) * (n - 4) * (n - 6), 6)
        if s == 7 and n >= 5:
            return n * n - 4 * n - 2
        return 0
    if k == 4:
        if (s, n) in E4_EXCEPTIONS:
            return E4_EXCEPTIONS[(s, n)]
        if s == 12 and n >= 8:
            return _exact((n - 7) * (n**3 - 7 * n**2 - 14 * n + 96), 24)
        if s == 10 and n >= 7:
            return _exact(n**3 - 6 * n**2 - 13 * n + 80, 2)
        if s == 8 and n >= 6:
            return _exact(n * n - n - 22, 2)
        return 0
    if (s, n) in E5_EXCEPTIONS:
        return E5_EXCEPTIONS[(s, n)]
    if s == 15 and n >= 10:
        return _exact(n**5 - 20 * n**4 + 75 * n**3 + 740 * n**2 - 5716 * n + 9360, 120)
    if s == 13 and n >= 9:
        return _exact(n**4 - 9 * n**3 - 34 * n**2 + 474 * n - 936, 6)
    if s == 11 and n >= 8:
        return _exact(n**3 - n**2 - 62 * n + 172, 2)
    if s == 9 and n >= 7:
        return n - 6
    return 0


def cf_dimension(case: str, param: int | None = None) -> int:
    """Nichols dimensions: 'A1xA1' -> 4, 'A2' -> 27, 'V1b1' n -> n^2, 'BMinusOne' m -> 4m."""
    if case == "A1xA1":
        return 4
    if case == "A2":
        return 27
    if case == "V1b1":
        if param is None or param < 2:
            raise HypothesisViolation("V_1b1 needs b a primitive n-th root with n >= 2")
        return param * param
    if case == "BMinusOne":
        if param is None or param < 1:
            raise HypothesisViolation("ae must be a primitive m-th root, m >= 1")
        if param == 1:
            # ae = 1 = b^2 contradicts b^2 != ae
            raise HypothesisViolation("m = 1 forces b^2 = ae, outside the hypothesis")
        return 4 * param
    raise ValueError(f"unknown case {case!r}")


def cf_bminus1_tilde(m: int, variant: str) -> MultiPoly:
    """Intermediate values of F~ at b = -1 as polynomials in a, e.

    odd-power:  F~(1^{2m+1}|1^{2m+1}) = (1-ae)^m (m)_{ae}^!
    even-diag:  F~(2^{2m}|2^{2m})     = (1-ae)^{m-1} (m-1)_{ae}^!
    even-cross: F~(2^{2m}|1^{2m})     = e^m (-1)^{m-1} (1-ae)^{m-1} (m-1)_{ae}^!
    """
    ae = A * E
    one_minus = 1 - ae
    if variant == "odd-power":
        if m < 1:
            raise ValueError("m >= 1")
        return one_minus ** m * q_factorial(m, ae)
    if m < 1:
        raise ValueError("m >= 1")
    base = one_minus ** (m - 1) * q_factorial(m - 1, ae)
    if variant == "even-diag":
        return base
    if variant == "even-cross":
        return base * E ** m * (-1) ** (m - 1)
    raise ValueError(f"unknown variant {variant!r}")


def square_pascal(n: int, d: int) -> int:
    """#{(i, j) : i + j = d, 0 <= i, j <= n-1}."""
    return sum(1 for i in range(n) if 0 <= d - i <= n - 1)
