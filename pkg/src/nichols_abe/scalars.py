"""
Exact scalars: rationals, sparse polynomials in the formal parameters
a, b, e, cyclotomic fields Q(zeta_N), and a formal square-root extension.

Rationals are plain ``int`` / ``fractions.Fraction`` values; integral
fractions are folded back to ``int`` so the common case stays cheap.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, Tuple, Union

Rational = Union[int, Fraction]
Exp = Tuple[int, int, int]

VARS = ("a", "b", "e")


class DegenerateExtension(ValueError):
    pass


class ScalarParseError(ValueError):
    pass


def _q(c) -> Rational:
    """Normalize a rational: Fractions with denominator 1 become ints."""
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise TypeError(f"not a rational: {c!r}")


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def _lcm(a, b):
    return a * b // gcd(a, b)


# ---------------------------------------------------------------------------
# dense univariate polynomials over Q, coefficient lists low -> high

def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _pmul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return _trim(out)


def _pdivmod(p, q):
    rem = [Fraction(x) for x in _trim(p)]
    q = [Fraction(x) for x in _trim(q)]
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    quo = [Fraction(0)] * max(len(rem) - len(q) + 1, 0)
    while len(rem) >= len(q):
        c = rem[-1] / q[-1]
        shift = len(rem) - len(q)
        quo[shift] = c
        for i, y in enumerate(q):
            rem[shift + i] -= c * y
        rem = _trim(rem)
    return [_q(x) for x in _trim(quo)], [_q(x) for x in rem]


def _psub(p, q):
    n = max(len(p), len(q))
    return _trim([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)])


@lru_cache(maxsize=None)
def cyclotomic_polynomial(N: int) -> Tuple[int, ...]:
    """Integer coefficients (constant term first) of the N-th cyclotomic polynomial.

    Obtained by dividing x^N - 1 by every Phi_d with d a proper divisor of N.
    """
    if N < 1:
        raise ValueError("N must be positive")
    num = [-1] + [0] * (N - 1) + [1]
    for d in _divisors(N)[:-1]:
        num, rem = _pdivmod(num, list(cyclotomic_polynomial(d)))
        assert not rem
    return tuple(int(c) for c in num)


def euler_phi(N: int) -> int:
    return len(cyclotomic_polynomial(N)) - 1


# ---------------------------------------------------------------------------
# multivariate polynomials in a, b, e

class MultiPoly:
    """Sparse polynomial in a, b, e with rational coefficients.

    ``terms`` maps exponent triples ``(deg_a, deg_b, deg_e)`` to nonzero
    coefficients. Instances are treated as immutable.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for k, c in terms.items():
                if c:
                    k = tuple(k)
                    if len(k) != 3 or min(k) < 0:
                        raise ValueError(f"bad exponent {k!r}")
                    clean[k] = _q(c)
        self.terms: Dict[Exp, Rational] = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "MultiPoly":
        return cls({(0, 0, 0): c}) if c else cls()

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        i = VARS.index(name)
        exp = [0, 0, 0]
        exp[i] = 1
        return cls._raw({tuple(exp): 1})

    @classmethod
    def monomial(cls, exp, c=1) -> "MultiPoly":
        return cls({tuple(exp): c})

    @staticmethod
    def _coerce(other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(other)
        return NotImplemented

    def one(self):
        return MultiPoly.const(1)

    def zero(self):
        return MultiPoly()

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = _q(v)
            else:
                out.pop(k, None)
        return MultiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.terms or not other.terms:
            return MultiPoly()
        if len(other.terms) == 1:
            (k2, c2), = other.terms.items()
            return self.mul_monomial(k2, c2)
        if len(self.terms) == 1:
            (k1, c1), = self.terms.items()
            return other.mul_monomial(k1, c1)
        out: Dict[Exp, Rational] = {}
        for (i1, j1, l1), c1 in self.terms.items():
            for (i2, j2, l2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2, l1 + l2)
                out[k] = out.get(k, 0) + c1 * c2
        return MultiPoly({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def mul_monomial(self, exp: Exp, c: Rational = 1) -> "MultiPoly":
        """Multiply by ``c * a^i b^j e^l`` without a general product."""
        i, j, l = exp
        if c == 1:
            return MultiPoly._raw({(x + i, y + j, z + l): v
                                   for (x, y, z), v in self.terms.items()})
        if not c:
            return MultiPoly()
        return MultiPoly._raw({(x + i, y + j, z + l): _q(v * c)
                               for (x, y, z), v in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        out = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def degree(self, var: str | None = None) -> int:
        if not self.terms:
            return -1
        if var is None:
            return max(sum(k) for k in self.terms)
        i = VARS.index(var)
        return max(k[i] for k in self.terms)

    def coefficient(self, var: str, k: int) -> "MultiPoly":
        """Coefficient of ``var**k``, as a polynomial in the other variables."""
        i = VARS.index(var)
        out = {}
        for exp, c in self.terms.items():
            if exp[i] == k:
                e2 = list(exp)
                e2[i] = 0
                out[tuple(e2)] = c
        return MultiPoly._raw(out)

    def swap_ae(self) -> "MultiPoly":
        return MultiPoly._raw({(l, j, i): c for (i, j, l), c in self.terms.items()})

    def subs(self, **values) -> "MultiPoly":
        """Substitute rationals or polynomials for some of a, b, e."""
        repl = {}
        for name, v in values.items():
            if name not in VARS:
                raise KeyError(name)
            repl[VARS.index(name)] = v if isinstance(v, MultiPoly) else MultiPoly.const(v)
        if all(isinstance(v, MultiPoly) and v.terms.keys() <= {(0, 0, 0)}
               for v in repl.values()):
            # scalar substitution: stays a single pass
            scal = {i: v.terms.get((0, 0, 0), 0) for i, v in repl.items()}
            out: Dict[Exp, Rational] = {}
            for exp, c in self.terms.items():
                e2 = list(exp)
                for i, s in scal.items():
                    c = c * s ** exp[i]
                    e2[i] = 0
                if c:
                    k = tuple(e2)
                    out[k] = out.get(k, 0) + c
            return MultiPoly({k: v for k, v in out.items() if v})
        total = MultiPoly()
        for exp, c in self.terms.items():
            e2 = list(exp)
            term = MultiPoly.const(c)
            for i, v in repl.items():
                term = term * v ** exp[i]
                e2[i] = 0
            total = total + term.mul_monomial(tuple(e2))
        return total

    def evaluate(self, pt: "ParamPoint") -> "CyclotomicNumber":
        """Specialize a, b, e to the entries of ``pt``."""
        field = pt.a.N
        pows = [{}, {}, {}]
        vals = (pt.a, pt.b, pt.e)

        def power(i, k):
            cache = pows[i]
            if k not in cache:
                cache[k] = vals[i] ** k
            return cache[k]

        acc = CyclotomicNumber.from_rational(field, 0)
        for (i, j, l), c in self.terms.items():
            acc = acc + power(0, i) * power(1, j) * power(2, l) * c
        return acc

    def sorted_terms(self):
        """Terms in graded order: total degree ascending, then lex on (a, b, e) descending."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), tuple(-x for x in kv[0])))

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(VARS, exp) if k
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s


A = MultiPoly.var("a")
B = MultiPoly.var("b")
E = MultiPoly.var("e")


def reduce_b2_ae(p: MultiPoly) -> MultiPoly:
    """Normal form modulo b^2 - ae (rewrite b^2 -> ae)."""
    out: Dict[Exp, Rational] = {}
    for (i, j, l), c in p.terms.items():
        k = (i + j // 2, j % 2, l + j // 2)
        out[k] = out.get(k, 0) + c
    return MultiPoly({k: v for k, v in out.items() if v})


# ---------------------------------------------------------------------------
# cyclotomic fields

class CyclotomicNumber:
    """An element of Q(zeta_N), stored in the power basis 1, zeta, ..., zeta^(phi(N)-1)."""

    __slots__ = ("N", "coeffs")

    def __init__(self, N: int, coeffs):
        phi = euler_phi(N)
        c = list(coeffs)
        if len(c) > phi:
            c = _reduce_mod_phi(N, c)
        c = [_q(x) for x in c] + [0] * (phi - len(c))
        self.N = N
        self.coeffs: Tuple[Rational, ...] = tuple(c)

    @classmethod
    def _raw(cls, N, coeffs):
        obj = cls.__new__(cls)
        obj.N = N
        obj.coeffs = coeffs
        return obj

    @classmethod
    def from_rational(cls, N: int, c) -> "CyclotomicNumber":
        phi = euler_phi(N)
        return cls._raw(N, (_q(c if isinstance(c, Fraction) else int(c)),) + (0,) * (phi - 1))

    @classmethod
    def zeta(cls, N: int, k: int = 1) -> "CyclotomicNumber":
        k %= N
        return cls(N, [0] * k + [1])

    def one(self):
        return CyclotomicNumber.from_rational(self.N, 1)

    def zero(self):
        return CyclotomicNumber.from_rational(self.N, 0)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.N != self.N:
                raise ValueError(f"mixed conductors {self.N} and {other.N}")
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_rational(self.N, other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, CyclotomicNumber) and other.N != self.N:
            return False
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.N, self.coeffs))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CyclotomicNumber._raw(self.N, tuple(_q(x + y) for x, y in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber._raw(self.N, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CyclotomicNumber._raw(self.N, tuple(_q(x - y) for x, y in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber._raw(self.N, tuple(_q(x * other) for x in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p, q = self.coeffs, other.coeffs
        if len(p) == 1:
            return CyclotomicNumber._raw(self.N, (_q(p[0] * q[0]),))
        prod = [0] * (2 * len(p) - 1)
        for i, x in enumerate(p):
            if x:
                for j, y in enumerate(q):
                    if y:
                        prod[i + j] += x * y
        return CyclotomicNumber._raw(self.N, tuple(_q(x) for x in _reduce_mod_phi(self.N, prod)))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        """Multiplicative inverse via the extended Euclidean algorithm against Phi_N."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if len(self.coeffs) == 1 or self.is_rational():
            return CyclotomicNumber.from_rational(self.N, Fraction(1) / self.coeffs[0])
        # s*self + t*Phi = g with g a nonzero constant
        r0, r1 = list(cyclotomic_polynomial(self.N)), _trim(self.coeffs)
        s0, s1 = [], [1]
        while len(r1) > 1:
            quo, rem = _pdivmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _psub(s0, _pmul(quo, s1))
        g = Fraction(r1[0])
        return CyclotomicNumber(self.N, [Fraction(x) / g for x in s1])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def embed(self, M: int) -> "CyclotomicNumber":
        """Image in Q(zeta_M) for a multiple M of N (zeta_N -> zeta_M^(M/N))."""
        if M % self.N:
            raise ValueError(f"{self.N} does not divide {M}")
        step = M // self.N
        poly = [0] * ((len(self.coeffs) - 1) * step + 1)
        for i, c in enumerate(self.coeffs):
            poly[i * step] = c
        return CyclotomicNumber(M, poly)

    def __repr__(self):
        return f"CyclotomicNumber({self.N}, {list(self.coeffs)})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                z = f"zeta({self.N})" + (f"^{i}" if i > 1 else "")
                body = z if abs(c) == 1 else f"{abs(c)}*{z}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s


def _reduce_mod_phi(N, poly):
    mod = cyclotomic_polynomial(N)
    phi = len(mod) - 1
    p = list(poly)
    # Phi_N is monic: x^phi = -sum(mod[i] x^i)
    for top in range(len(p) - 1, phi - 1, -1):
        c = p[top]
        if c:
            base = top - phi
            for i in range(phi):
                if mod[i]:
                    p[base + i] -= c * mod[i]
        p[top] = 0
    p = p[:phi] + [0] * (phi - min(len(p), phi))
    return p[:phi]


# ---------------------------------------------------------------------------
# q-numbers and roots of unity

def _one_like(x):
    if isinstance(x, (MultiPoly, CyclotomicNumber)):
        return x.one()
    return 1


def q_int(n: int, b):
    """(n)_b = 1 + b + ... + b^(n-1); (0)_b = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    one = _one_like(b)
    total = one - one
    term = one
    for _ in range(n):
        total = total + term
        term = term * b
    return total


def q_factorial(n: int, b):
    """(n)_b^! = (1)_b (2)_b ... (n)_b; (0)_b^! = 1."""
    out = _one_like(b)
    for k in range(1, n + 1):
        out = out * q_int(k, b)
    return out


def is_primitive_root(x, n: int) -> bool:
    """True iff x^n = 1 and x^d != 1 for each proper divisor d of n."""
    if n < 1:
        raise ValueError("n must be positive")
    one = _one_like(x)
    if x ** n != one:
        return False
    return all(x ** d != one for d in _divisors(n)[:-1])


# ---------------------------------------------------------------------------
# formal square roots

class QuadElement:
    """``c0 + c1*s`` in the rank-2 ring K[s]/(s^2 - x)."""

    __slots__ = ("x", "c0", "c1")

    def __init__(self, x, c0, c1):
        self.x = x
        self.c0 = c0
        self.c1 = c1

    def _lift(self, other):
        if isinstance(other, QuadElement):
            if other.x != self.x:
                raise ValueError("elements of different extensions")
            return other
        return QuadElement(self.x, other, self.c0 - self.c0)

    def __add__(self, other):
        o = self._lift(other)
        return QuadElement(self.x, self.c0 + o.c0, self.c1 + o.c1)

    __radd__ = __add__

    def __neg__(self):
        return QuadElement(self.x, -self.c0, -self.c1)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        return QuadElement(
            self.x,
            self.c0 * o.c0 + self.c1 * o.c1 * self.x,
            self.c0 * o.c1 + self.c1 * o.c0,
        )

    __rmul__ = __mul__

    def __pow__(self, n):
        out = QuadElement(self.x, _one_like(self.c0), self.c0 - self.c0)
        for _ in range(n):
            out = out * self
        return out

    def inverse(self):
        norm = self.c0 * self.c0 - self.c1 * self.c1 * self.x
        if not norm:
            raise ZeroDivisionError("element is not invertible")
        inv = 1 / norm
        return QuadElement(self.x, self.c0 * inv, -self.c1 * inv)

    def map(self, f):
        return QuadElement(self.x, f(self.c0), f(self.c1))

    def is_zero(self):
        return not self.c0 and not self.c1

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        o = self._lift(other)
        return self.c0 == o.c0 and self.c1 == o.c1

    def __hash__(self):
        return hash((self.c0, self.c1))

    def __repr__(self):
        return f"({self.c0}) + ({self.c1})*s"


def sqrt_adjoin(x) -> QuadElement:
    """The generator s of K[s]/(s^2 - x)."""
    if not x:
        raise DegenerateExtension("cannot adjoin the square root of 0")
    one = _one_like(x)
    return QuadElement(x, one - one, one)


# ---------------------------------------------------------------------------
# literals and parameter points

@dataclass(frozen=True)
class RootLiteral:
    """``coeff * zeta(order)^exp`` with gcd(exp, order) = 1 and order minimal."""

    coeff: Fraction
    order: int = 1
    exp: int = 0

    @classmethod
    def normal(cls, coeff, order, exp):
        coeff = Fraction(coeff)
        exp %= order
        g = gcd(exp, order)
        order //= g
        exp //= g
        if order == 2:
            coeff, order, exp = -coeff, 1, 0
        elif order % 4 == 2:
            # zeta_{2m}^j = -zeta_m^{j(m+1)/2} for odd m
            m = order // 2
            coeff, order, exp = -coeff, m, (exp * (m + 1) // 2) % m
        if order == 1:
            exp = 0
        return cls(coeff, order, exp)

    def __mul__(self, other: "RootLiteral") -> "RootLiteral":
        L = _lcm(self.order, other.order)
        return RootLiteral.normal(
            self.coeff * other.coeff, L,
            self.exp * (L // self.order) + other.exp * (L // other.order),
        )

    def to_field(self, N: int) -> CyclotomicNumber:
        if N % self.order:
            raise ValueError(f"zeta({self.order}) is not in Q(zeta_{N})")
        return CyclotomicNumber.zeta(N, self.exp * (N // self.order)) * _q(self.coeff)

    def __str__(self):
        c = _q(self.coeff)
        if self.order == 1:
            return str(c)
        z = f"zeta({self.order})" + (f"^{self.exp}" if self.exp != 1 else "")
        if c == 1:
            return z
        if c == -1:
            return "-" + z
        return f"{c}*{z}"


_FACTOR = re.compile(
    r"\s*(?P<neg>-)?\s*(?:"
    r"zeta\(\s*(?P<N>\d+)\s*\)(?:\s*\^\s*(?P<k>-?\d+))?"
    r"|(?P<p>\d+)(?:\s*/\s*(?P<q>\d+))?"
    r")\s*$"
)


def parse_scalar(text: str) -> RootLiteral:
    """Parse ``zeta(N)^k``, ``p/q``, and ``*``-products of those."""
    if not text or not text.strip():
        raise ScalarParseError("empty scalar literal")
    out = RootLiteral(Fraction(1))
    for piece in text.split("*"):
        m = _FACTOR.match(piece)
        if not m:
            raise ScalarParseError(f"cannot parse scalar factor {piece.strip()!r} in {text!r}")
        if m.group("N") is not None:
            N = int(m.group("N"))
            if N < 1:
                raise ScalarParseError("zeta(N) needs N >= 1")
            k = int(m.group("k")) if m.group("k") is not None else 1
            f = RootLiteral.normal(1, N, k)
        else:
            q = int(m.group("q")) if m.group("q") is not None else 1
            if q == 0:
                raise ScalarParseError(f"zero denominator in {text!r}")
            f = RootLiteral.normal(Fraction(int(m.group("p")), q), 1, 0)
        if m.group("neg"):
            f = RootLiteral.normal(-f.coeff, f.order, f.exp)
        out = out * f
    return out


@dataclass(frozen=True)
class ParamPoint:
    """A specialization (a, b, e) with all three in one field Q(zeta_N)."""

    a: CyclotomicNumber
    b: CyclotomicNumber
    e: CyclotomicNumber

    def __post_init__(self):
        if not (self.a.N == self.b.N == self.e.N):
            raise ValueError("a, b, e must share one conductor")
        if not (self.a and self.b and self.e):
            raise ValueError("a*b*e must be nonzero")

    @property
    def N(self) -> int:
        return self.a.N

    @classmethod
    def from_literals(cls, a, b, e) -> "ParamPoint":
        lits = [x if isinstance(x, RootLiteral) else parse_scalar(str(x)) for x in (a, b, e)]
        N = 1
        for lit in lits:
            N = _lcm(N, lit.order)
        return cls(*(lit.to_field(N) for lit in lits))

    @classmethod
    def of(cls, a, b, e) -> "ParamPoint":
        """Build from any mix of rationals and CyclotomicNumbers."""
        N = 1
        for x in (a, b, e):
            if isinstance(x, CyclotomicNumber):
                N = _lcm(N, x.N)

        def lift(x):
            if isinstance(x, CyclotomicNumber):
                return x.embed(N) if x.N != N else x
            return CyclotomicNumber.from_rational(N, Fraction(x))

        return cls(lift(a), lift(b), lift(e))

    def __str__(self):
        return f"(a={self.a}, b={self.b}, e={self.e})"
