"""
Braided symmetrizers of V_abe, orbit by orbit.

S_n(v_x) is built from S_{n-1}(v_{x'}) (x' = x without its last letter)
through

    S_n = S_{n-1,1} (S_{n-1} (x) id),
    S_{n-1,1} = id + c_{n-1} + c_{n-2} c_{n-1} + ... + c_1 ... c_{n-1},

so every column is memoized per prefix and reused across degrees.  The
image of v_x stays inside the orbit of x, giving one block per orbit with
entry (y, x) = F~(x|y).
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional

from .braiding import BraidingParams, phi_apply
from .linalg import bareiss_rank
from .scalars import MultiPoly, ParamPoint
from .symaction import check_word, fset, fsets_from, orbit, orbit_partition

DEFAULT_CAP = 24


@dataclass
class OrbitBasis:
    degree: int
    words: List[str]
    index: Dict[str, int] = field(init=False, repr=False)

    def __post_init__(self):
        self.index = {w: i for i, w in enumerate(self.words)}


@dataclass
class BlockMatrix:
    basis: OrbitBasis
    entries: List[list]   # entries[row y][col x] = F~(x|y)

    @property
    def size(self):
        return len(self.basis.words)

    def dump(self) -> str:
        width = [max(len(str(self.entries[i][j])) for i in range(self.size))
                 for j in range(self.size)]
        head = " " * (self.basis.degree + 2) + "  ".join(
            w.rjust(width[j]) for j, w in enumerate(self.basis.words))
        lines = [head]
        for i, w in enumerate(self.basis.words):
            lines.append(w + "  " + "  ".join(
                str(self.entries[i][j]).rjust(width[j]) for j in range(self.size)))
        return "\n".join(lines)


def _monomial_exponent(x):
    if isinstance(x, MultiPoly) and len(x.terms) == 1:
        (exp, c), = x.terms.items()
        if c == 1:
            return exp
    return None


class Symmetrizer:
    """Memoized symmetrizer columns for one braiding."""

    def __init__(self, params: BraidingParams):
        self.params = params
        self._one = params.one()
        self._zero = self._one - self._one
        self._cols: Dict[str, dict] = {}
        self._shift = None
        if params.symbolic:
            exps = {pair: _monomial_exponent(params.factor(pair)[0])
                    for pair in ("11", "12", "21", "22")}
            if all(v is not None for v in exps.values()):
                self._shift = exps

    def column(self, x: str) -> dict:
        """S_n(v_x) as ``{y: coefficient}`` with zero coefficients dropped."""
        col = self._cols.get(x)
        if col is not None:
            return col
        check_word(x)
        n = len(x)
        if n <= 1:
            col = {x: self._one}
        else:
            prev = self.column(x[:-1])
            if self._shift is not None:
                col = self._extend_symbolic(prev, x[-1], n)
            else:
                col = self._extend(prev, x[-1], n)
        self._cols[x] = col
        return col

    def _extend(self, prev, last, n):
        factor = self.params.factor
        acc: dict = {}
        for head, coef in prev.items():
            w = head + last
            acc[w] = acc[w] + coef if w in acc else coef
            for i in range(n - 1, 0, -1):
                f, pair = factor(w[i - 1:i + 1])
                coef = coef * f
                w = w[:i - 1] + pair + w[i + 1:]
                acc[w] = acc[w] + coef if w in acc else coef
        return {w: c for w, c in acc.items() if c}

    def _extend_symbolic(self, prev, last, n):
        # every crossing multiplies by a monomial: accumulate exponent shifts
        shift = self._shift
        flip = {"11": "22", "22": "11", "12": "12", "21": "21"}
        acc: Dict[str, dict] = {}
        for head, poly in prev.items():
            w = head + last
            da = db = de = 0
            terms = poly.terms
            for step in range(n):
                if step:
                    i = n - step
                    pair = w[i - 1:i + 1]
                    sa, sb, se = shift[pair]
                    da += sa
                    db += sb
                    de += se
                    w = w[:i - 1] + flip[pair] + w[i + 1:]
                bucket = acc.setdefault(w, {})
                for (x, y, z), c in terms.items():
                    k = (x + da, y + db, z + de)
                    v = bucket.get(k, 0) + c
                    if v:
                        bucket[k] = v
                    else:
                        del bucket[k]
        return {w: MultiPoly._raw(b) for w, b in acc.items() if b}

    def tilde_f(self, x: str, y: str):
        if len(x) != len(y):
            raise ValueError("words of different lengths")
        return self.column(x).get(y, self._zero)

    def block(self, rep: str) -> BlockMatrix:
        words = orbit(rep)
        basis = OrbitBasis(len(rep), words)
        entries = [[self._zero] * len(words) for _ in words]
        for j, x in enumerate(words):
            for y, c in self.column(x).items():
                entries[basis.index[y]][j] = c
        return BlockMatrix(basis, entries)


@lru_cache(maxsize=64)
def engine(params: BraidingParams) -> Symmetrizer:
    return Symmetrizer(params)


def _as_params(params) -> BraidingParams:
    if isinstance(params, ParamPoint):
        return BraidingParams.at(params)
    if params is None:
        return BraidingParams.formal()
    return params


def symmetrizer_block(n: int, rep: str, params=None) -> BlockMatrix:
    if n < 1 or len(rep) != n:
        raise ValueError(f"representative {rep!r} must have length n={n} >= 1")
    return engine(_as_params(params)).block(rep)


def tilde_f(x: str, y: str, params=None):
    """F~(x|y): the coefficient of v_y in S_n(v_x); zero off the orbit."""
    return engine(_as_params(params)).tilde_f(x, y)


def tilde_f_bruteforce(x: str, y: str, params=None, cap: Optional[int] = None):
    """Sum of Matsumoto lifts over F(x|y), enumerated independently of the recursion."""
    params = _as_params(params)
    check_word(x)
    check_word(y)
    total = params.one() - params.one()
    for p in fset(x, y, cap=cap):
        term = phi_apply(p, x, params)
        assert term.word == y
        total = total + term.coefficient
    return total


def bruteforce_column(x: str, params=None, cap: Optional[int] = None) -> dict:
    """{y: F~(x|y)} by one full pass over S_n and the Matsumoto lift."""
    params = _as_params(params)
    out = {}
    for y, perms in fsets_from(x, cap=cap).items():
        total = params.one() - params.one()
        for p in perms:
            term = phi_apply(p, x, params)
            assert term.word == y
            total = total + term.coefficient
        if total:
            out[y] = total
    return out


def tilde_f_k(n: int, k: int) -> MultiPoly:
    """Coefficient of b^k in F~(1^n|1^n) at e = 1, a polynomial in a."""
    x = "1" * n
    full = engine(BraidingParams.formal_e1()).tilde_f(x, x)
    return full.coefficient("b", k)


def rank(m: BlockMatrix) -> int:
    return bareiss_rank(m.entries)


def _block_rank(args):
    params, rep = args
    return rank(engine(params).block(rep))


def graded_dim(n: int, pt, jobs: int = 1) -> int:
    """dim of the degree-n piece: the sum of block ranks of S_n."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n == 0:
        return 1
    if n == 1:
        return 2
    params = _as_params(pt)
    if params.symbolic:
        raise ValueError("graded dimensions need a specialized point")
    reps = [o.representative for o in orbit_partition(n)]
    eng = engine(params)
    if jobs > 1 and len(reps) > 1:
        # warm the shared memo for degree n-1 before fanning out
        for rep in reps:
            for x in orbit(rep):
                eng.column(x[:-1])
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return sum(pool.map(_block_rank, [(params, r) for r in reps]))
    return sum(rank(eng.block(rep)) for rep in reps)


@dataclass
class GradedProfile:
    point: ParamPoint
    ranks: List[int]
    status: str            # "terminated" or "cap-exceeded"
    cap: int
    terminated_at: Optional[int] = None

    @property
    def total(self) -> Optional[int]:
        return sum(self.ranks) if self.status == "terminated" else None

    def to_json(self) -> dict:
        out = {"point": {"a": str(self.point.a), "b": str(self.point.b), "e": str(self.point.e)},
               "ranks": self.ranks, "status": self.status, "cap": self.cap}
        if self.status == "terminated":
            out["terminated_at"] = self.terminated_at
            out["total"] = self.total
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def nichols_dimension(pt: ParamPoint, cap: int = DEFAULT_CAP, jobs: int = 1) -> GradedProfile:
    """Graded dimensions degree by degree until one vanishes or ``cap`` is passed.

    A cap-exceeded profile makes no claim about the total.
    """
    if cap < 2:
        raise ValueError("cap must be at least 2")
    ranks = [1, 2]
    for n in range(2, cap + 1):
        r = graded_dim(n, pt, jobs=jobs)
        ranks.append(r)
        if r == 0:
            return GradedProfile(pt, ranks, "terminated", cap, terminated_at=n)
    return GradedProfile(pt, ranks, "cap-exceeded", cap)
