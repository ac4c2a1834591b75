"""
The braided vector space V_abe with monomial braiding

    c(v1 v1) = a v2 v2,   c(v1 v2) = b v1 v2,
    c(v2 v1) = g v2 v1,   c(v2 v2) = e v1 v1,

where g (gamma) is tied to b.  Coefficients are either MultiPolys in the
formal a, b, e (symbolic mode) or elements of one cyclotomic field
(specialized mode).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .scalars import (A, B, E, MultiPoly, ParamPoint, QuadElement,
                      reduce_b2_ae, sqrt_adjoin)
from .symaction import check_word, reduced_word


class MonomialTerm(NamedTuple):
    coefficient: object
    word: str


@dataclass(frozen=True)
class BraidingParams:
    a: object
    b: object
    e: object
    gamma: Optional[object] = None
    symbolic: bool = False

    @classmethod
    def formal(cls) -> "BraidingParams":
        return cls(A, B, E, symbolic=True)

    @classmethod
    def formal_e1(cls) -> "BraidingParams":
        """Formal a, b with e = 1."""
        return cls(A, B, MultiPoly.const(1), symbolic=True)

    @classmethod
    def at(cls, pt: ParamPoint) -> "BraidingParams":
        return cls(pt.a, pt.b, pt.e)

    @classmethod
    def raw_table(cls, a, b, gamma, e, symbolic=True) -> "BraidingParams":
        """Braiding with an independent gamma; only for testing the YBE criterion."""
        return cls(a, b, e, gamma=gamma, symbolic=symbolic)

    @property
    def g(self):
        return self.b if self.gamma is None else self.gamma

    @property
    def point(self) -> ParamPoint:
        if self.symbolic:
            raise ValueError("symbolic braiding has no parameter point")
        return ParamPoint(self.a, self.b, self.e)

    def one(self):
        return self.a.one()

    def factor(self, pair: str):
        """Scalar and replacement for the letters at one crossing."""
        if pair == "11":
            return self.a, "22"
        if pair == "22":
            return self.e, "11"
        if pair == "12":
            return self.b, "12"
        return self.g, "21"


def apply_c(i: int, term: MonomialTerm, params: BraidingParams) -> MonomialTerm:
    """c_i acting on positions (i, i+1) of a monomial."""
    coef, w = term
    if not 1 <= i < len(w):
        raise IndexError(f"position {i} out of range for word of length {len(w)}")
    f, pair = params.factor(w[i - 1:i + 1])
    return MonomialTerm(coef * f, w[:i - 1] + pair + w[i + 1:])


def apply_gens(gens, term: MonomialTerm, params: BraidingParams) -> MonomialTerm:
    """Apply c_{g1} ... c_{gk}, rightmost first."""
    for i in reversed(gens):
        term = apply_c(i, term, params)
    return term


def phi_apply(p, w: str, params: BraidingParams) -> MonomialTerm:
    """Matsumoto lift of p applied to the basis monomial v_w."""
    check_word(w)
    if len(p) != len(w):
        raise ValueError(f"length mismatch: perm of degree {len(p)}, word {w!r}")
    return apply_gens(reduced_word(p), MonomialTerm(params.one(), w), params)


def ybe_check(params: BraidingParams) -> bool:
    """c1 c2 c1 == c2 c1 c2 on the eight basis words of V^{x3}."""
    one = params.one()
    for w in ("111", "112", "121", "122", "211", "212", "221", "222"):
        lhs = apply_gens([1, 2, 1], MonomialTerm(one, w), params)
        rhs = apply_gens([2, 1, 2], MonomialTerm(one, w), params)
        if lhs.word != rhs.word or lhs.coefficient != rhs.coefficient:
            return False
    return True


def is_diagonal_type(params: BraidingParams) -> bool:
    if params.symbolic:
        raise ValueError("diagonal-type test needs a specialized point")
    return params.b * params.b == params.a * params.e


# ---------------------------------------------------------------------------
# the w-basis of the diagonal case

DIAGONAL_TABLE_SIGNS = {("1", "1"): 1, ("1", "2"): -1, ("2", "1"): -1, ("2", "2"): 1}


class DiagonalMismatch(AssertionError):
    pass


def _vec_add(u, v):
    out = dict(u)
    for k, c in v.items():
        out[k] = out[k] + c if k in out else c
    return out


def _scale(u, c):
    return {k: x * c for k, x in u.items()}


def diagonal_basis_braiding(params: BraidingParams):
    """Braiding of V_abe in the basis w1 = v1 + s v2, w2 = v1 - s v2, s^2 = a/b.

    Returns ``{(i, j): (coefficient, (k, l))}`` meaning
    ``c(w_i w_j) = coefficient * w_k w_l``; the printed table is
    ``c(w_i w_j) = +-b w_j w_i`` with sign + when i == j.

    In symbolic mode w1 = b v1 + s v2 with s^2 = ab (the same line, scaled by
    b) and b^2 = ae is imposed by reducing modulo b^2 - ae.
    """
    if params.symbolic:
        one = MultiPoly.const(1)
        root = sqrt_adjoin(A * B)
        lift = lambda x: QuadElement(root.x, x, MultiPoly())  # noqa: E731
        w1 = {"1": lift(B), "2": root}
        w2 = {"1": lift(B), "2": -root}
        norm = lambda q: q.map(reduce_b2_ae)  # noqa: E731
        b = B
    else:
        if not is_diagonal_type(params):
            raise ValueError("w-basis needs b^2 = ae")
        x = params.a / params.b
        root = sqrt_adjoin(x)
        one = params.one()
        lift = lambda c: QuadElement(root.x, c, one - one)  # noqa: E731
        w1 = {"1": lift(one), "2": root}
        w2 = {"1": lift(one), "2": -root}
        norm = lambda q: q  # noqa: E731
        b = params.b
    basis = {"1": w1, "2": w2}

    def tensor(x, y):
        return {p + q: cx * cy for p, cx in x.items() for q, cy in y.items()}

    def braid(vec):
        out = {}
        for word, coef in vec.items():
            f, pair = params.factor(word) if not params.symbolic else (
                {"11": A, "22": E, "12": B, "21": B}[word],
                {"11": "22", "22": "11", "12": "12", "21": "21"}[word])
            out = _vec_add(out, {pair: coef * lift(f)})
        return out

    table = {}
    for i in "12":
        for j in "12":
            got = braid(tensor(basis[i], basis[j]))
            sign = DIAGONAL_TABLE_SIGNS[(i, j)]
            coef = b * sign
            want = _scale(tensor(basis[j], basis[i]), lift(coef))
            diff = {k: norm(got.get(k, lift(one - one)) - want.get(k, lift(one - one)))
                    for k in set(got) | set(want)}
            if any(d for d in diff.values()):
                raise DiagonalMismatch(f"c(w{i} w{j}) does not match {coef} w{j} w{i}: {diff}")
            table[(int(i), int(j))] = (coef, (int(j), int(i)))
    return table


def normalize_to_e1(params: BraidingParams) -> BraidingParams:
    """(a, b, e) -> (ae, b, 1); the rescaling v1 -> sqrt(e) v1 needs no explicit root."""
    if params.symbolic:
        raise ValueError("normalization is defined for specialized points")
    return BraidingParams(params.a * params.e, params.b, params.e.one())
