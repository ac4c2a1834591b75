"""
The symmetric group acting on words over {1, 2}.

The generator s_i acts on positions (i, i+1) by 11 <-> 22 and fixes 12 and
21.  Writing ``u_j = (letter_j + j) mod 2`` turns this into the ordinary
place permutation of the u-sequence, which is what :func:`act` uses; the
generator-by-generator definition is kept in :func:`act_generator`.

Words are strings such as ``"1122"``.  Permutations are tuples in one-line
notation on ``1..n``; ``compose(p, q)`` is ``p o q`` (apply q first).
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

Perm = Tuple[int, ...]

SCAN_CAP = 10
SUBGROUP_CAP = 13


class CapExceeded(ValueError):
    pass


class NotInSubgroup(ValueError):
    pass


# ---------------------------------------------------------------------------
# words

def check_word(w: str) -> str:
    if any(ch not in "12" for ch in w):
        raise ValueError(f"word {w!r} is not over the alphabet {{1,2}}")
    return w


def bar(w: str) -> str:
    return w.translate(str.maketrans("12", "21"))


def rev(w: str) -> str:
    return w[::-1]


def u_pattern(w: str) -> Tuple[int, ...]:
    return tuple((int(ch == "2") + j) & 1 for j, ch in enumerate(w))


def word_from_u(u) -> str:
    return "".join("2" if (x + j) & 1 else "1" for j, x in enumerate(u))


def all_words(n: int):
    return ["".join(t) for t in itertools.product("12", repeat=n)]


# ---------------------------------------------------------------------------
# permutations

def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def s(i: int, n: int) -> Perm:
    """Adjacent transposition s_i (1-based) in S_n."""
    p = list(range(1, n + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def t(i: int, n: int) -> Perm:
    """t_i = s_i s_{i+1} s_i, the transposition (i, i+2)."""
    p = list(range(1, n + 1))
    p[i - 1], p[i + 1] = p[i + 1], p[i - 1]
    return tuple(p)


def compose(p: Perm, q: Perm) -> Perm:
    return tuple(p[x - 1] for x in q)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p, 1):
        out[x - 1] = i
    return tuple(out)


def check_perm(p) -> Perm:
    p = tuple(p)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"{p!r} is not a permutation in one-line notation")
    return p


def from_word(gens, n: int) -> Perm:
    """The permutation s_{g1} s_{g2} ... s_{gk}."""
    p = identity(n)
    for g in gens:
        p = compose(p, s(g, n))
    return p


def sl(p: Perm) -> int:
    """Coxeter length: the number of inversions."""
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def reduced_word(p: Perm) -> List[int]:
    """Reduced expression [g1, ..., gk] with p = s_{g1} ... s_{gk}.

    Built by repeatedly stripping the leftmost descent from the right.
    """
    q = list(p)
    stripped = []
    while True:
        for i in range(len(q) - 1):
            if q[i] > q[i + 1]:
                q[i], q[i + 1] = q[i + 1], q[i]
                stripped.append(i + 1)
                break
        else:
            break
    return stripped[::-1]


def descents(p: Perm) -> List[int]:
    return [i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1]]


def random_reduced_word(p: Perm, rng) -> List[int]:
    """A reduced expression chosen by stripping random right descents."""
    q = tuple(p)
    stripped = []
    while True:
        ds = descents(q)
        if not ds:
            break
        i = rng.choice(ds)
        q = compose(q, s(i, len(q)))
        stripped.append(i)
    return stripped[::-1]


# ---------------------------------------------------------------------------
# the action

def act_generator(i: int, w: str) -> str:
    """s_i . w straight from the definition on N^2."""
    pair = w[i - 1:i + 1]
    if pair == "11":
        pair = "22"
    elif pair == "22":
        pair = "11"
    return w[:i - 1] + pair + w[i + 1:]


def act(p: Perm, w: str) -> str:
    if len(p) != len(w):
        raise ValueError(f"length mismatch: perm of degree {len(p)}, word {w!r}")
    u = u_pattern(w)
    out = [0] * len(w)
    for j, x in enumerate(u):
        out[p[j] - 1] = x
    return word_from_u(out)


def orbit(w: str) -> List[str]:
    """Closure of w under s_1, ..., s_{n-1}, sorted."""
    check_word(w)
    seen = {w}
    queue = deque([w])
    while queue:
        x = queue.popleft()
        for i in range(1, len(w)):
            y = act_generator(i, x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return sorted(seen)


# ---------------------------------------------------------------------------
# F(x|y) and the t-generated subgroup

@dataclass
class FSet:
    source: str
    target: str
    members: List[Perm] = field(default_factory=list)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def _scan(x: str, y: str) -> List[Perm]:
    # sigma . x = y  iff  u(y)[sigma(j)] == u(x)[j] for every j
    n = len(x)
    ux, uy = u_pattern(x), u_pattern(y)
    if sorted(ux) != sorted(uy):
        return []
    slots = [[k + 1 for k in range(n) if uy[k] == ux[j]] for j in range(n)]
    out = []
    image = [0] * n
    used = [False] * (n + 1)

    def rec(j):
        if j == n:
            out.append(tuple(image))
            return
        for k in slots[j]:
            if not used[k]:
                used[k] = True
                image[j] = k
                rec(j + 1)
                used[k] = False

    rec(0)
    return sorted(out)


def fset(x: str, y: str, cap: Optional[int] = None) -> FSet:
    """All sigma in S_n with sigma . x = y."""
    check_word(x)
    check_word(y)
    if len(x) != len(y):
        raise ValueError("words of different lengths")
    n = len(x)
    if x == y and set(x) <= {"1"} or x == y and set(x) <= {"2"}:
        limit = SUBGROUP_CAP if cap is None else cap
        if n > limit:
            raise CapExceeded(f"n={n} exceeds subgroup cap {limit}")
        return FSet(x, y, sorted(subgroup_tgen(n)))
    limit = SCAN_CAP if cap is None else cap
    if n > limit:
        raise CapExceeded(f"n={n} exceeds brute-force cap {limit}")
    return FSet(x, y, _scan(x, y))


def fsets_from(x: str, cap: Optional[int] = None) -> Dict[str, List[Perm]]:
    """Partition S_n by the image of x: {y: F(x|y)}, one full pass over S_n."""
    n = len(x)
    limit = SCAN_CAP if cap is None else cap
    if n > limit:
        raise CapExceeded(f"n={n} exceeds brute-force cap {limit}")
    out: Dict[str, List[Perm]] = {}
    for p in itertools.permutations(range(1, n + 1)):
        out.setdefault(act(p, x), []).append(p)
    return out


@lru_cache(maxsize=None)
def _tl_distances(n: int) -> Dict[Perm, int]:
    # BFS over the Cayley graph of <t_1, ..., t_{n-2}>
    if n > SUBGROUP_CAP:
        raise CapExceeded(f"n={n} exceeds subgroup cap {SUBGROUP_CAP}")
    gens = [t(i, n) for i in range(1, n - 1)]
    start = identity(n)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        d = dist[p] + 1
        for g in gens:
            q = compose(p, g)
            if q not in dist:
                dist[q] = d
                queue.append(q)
    return dist


def subgroup_tgen(n: int) -> frozenset:
    """The subgroup of S_n generated by t_1, ..., t_{n-2}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return frozenset(_tl_distances(n))


def tl(p: Perm, n: Optional[int] = None) -> int:
    """Word length of p in the generators t_i."""
    n = len(p) if n is None else n
    dist = _tl_distances(n)
    try:
        return dist[tuple(p)]
    except KeyError:
        raise NotInSubgroup(f"{p!r} is not in <t_i> for n={n}") from None


# ---------------------------------------------------------------------------
# E_{k,s}^n

@dataclass
class EkTable:
    n: int
    counts: Dict[Tuple[int, int], int]

    def get(self, k: int, s: int) -> int:
        return self.counts.get((k, s), 0)

    def rows(self):
        return [(self.n, k, s, c) for (k, s), c in sorted(self.counts.items())]

    def to_json(self):
        return [{"n": n, "k": k, "s": s, "count": c} for n, k, s, c in self.rows()]


def ek_table(n: int, k_max: int = -1) -> EkTable:
    """Count elements of F(1^n|1^n) by (tl, sl); k_max = -1 keeps everything."""
    dist = _tl_distances(n)
    counts: Counter = Counter()
    for p, k in dist.items():
        if k_max < 0 or k <= k_max:
            counts[(k, sl(p))] += 1
    return EkTable(n, dict(counts))


# ---------------------------------------------------------------------------
# orbit partition

@dataclass
class OrbitInfo:
    representative: str
    size: int
    label: Optional[str] = None
    named_word: Optional[str] = None
    words: List[str] = field(default_factory=list, repr=False)

    def to_json(self):
        return {"representative": self.representative, "size": self.size,
                "label": self.label, "named_word": self.named_word}


def _label(letter: str, m: int, block: str, k: int) -> str:
    parts = []
    if m:
        parts.append(letter if m == 1 else f"{letter}^{m}")
    if k:
        parts.append(f"({block})" if k == 1 else f"({block})^{k}")
    return "".join(parts)


def theorem_forms(n: int) -> List[Tuple[str, str]]:
    """The orbit representatives of the Pascal decomposition as (label, word)."""
    forms = []
    h = n // 2
    if n % 2 == 0:
        forms.append((_label("2", n, "21", 0), "2" * n))
        for k in range(1, h + 1):
            m = 2 * (h - k)
            forms.append((_label("2", m, "21", k), "2" * m + "21" * k))
            forms.append((_label("1", m, "12", k), "1" * m + "12" * k))
    else:
        for k in range(h + 1):
            m = 2 * (h - k) + 1
            forms.append((_label("2", m, "12", k), "2" * m + "12" * k))
            forms.append((_label("1", m, "21", k), "1" * m + "21" * k))
    return forms


def orbit_partition(n: int) -> List[OrbitInfo]:
    """Split all 2^n words into orbits; sorted by size (descending) then representative."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    named = {}
    for label, w in theorem_forms(n) if n > 0 else []:
        named[w] = label
    seen = set()
    out = []
    for w in all_words(n):
        if w in seen:
            continue
        orb = orbit(w)
        seen.update(orb)
        info = OrbitInfo(orb[0], len(orb), words=orb)
        hits = [x for x in orb if x in named]
        if hits:
            info.named_word = hits[0]
            info.label = named[hits[0]]
        out.append(info)
    out.sort(key=lambda o: (-o.size, o.representative))
    return out

