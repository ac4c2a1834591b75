"""Cross-check every closed form against the brute-force engines."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Dict, List, Optional, Tuple

from . import closed_forms as cf
from .braiding import BraidingParams, diagonal_basis_braiding, ybe_check
from .scalars import B, MultiPoly, ParamPoint, q_factorial
from .symaction import (bar, ek_table, fset, orbit, orbit_partition, rev,
                        subgroup_tgen, theorem_forms, all_words)
from .symmetrizer import engine, nichols_dimension, tilde_f_k


@dataclass
class ClosedFormReport:
    name: str
    checked: str
    status: str = "pass"
    counterexample: Optional[dict] = None

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        out = {"name": self.name, "checked": self.checked, "status": self.status}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def _first_mismatch(pairs):
    """pairs yields (input, expected, got); return the first disagreement."""
    for inp, want, got in pairs:
        if want != got:
            return {"input": inp, "closed_form": str(want), "computed": str(got)}
    return None


def _report(name, checked, pairs) -> ClosedFormReport:
    bad = _first_mismatch(pairs)
    return ClosedFormReport(name, checked, "fail" if bad else "pass", bad)


def _orbit_checks(n_max):
    for L in range(1, n_max + 1):
        h, odd = divmod(L, 2)
        parity = "odd" if odd else "even"

        def pairs(L=L, h=h, odd=odd, parity=parity):
            for k in range(h + 1):
                w = "2" * (2 * (h - k) + odd) + "12" * k
                yield {"word": w}, cf.cf_orbit_size(h, k, parity), len(orbit(w))

        yield _report(f"orbit sizes, length {L}", f"k=0..{h}", pairs())

        def decomposition(L=L):
            parts = orbit_partition(L)
            labels = [o.label for o in parts]
            want_labels = sorted(lab for lab, _ in theorem_forms(L))
            got = sorted(lab or "<unnamed>" for lab in labels)
            yield {"length": L, "what": "every orbit named once"}, want_labels, got
            yield {"length": L, "what": "sizes sum"}, 2 ** L, sum(o.size for o in parts)

        yield _report(f"Pascal decomposition, length {L}", "orbit_partition", decomposition())


def _group_checks(n_max):
    def orders():
        for L in range(1, min(n_max, 11) + 1):
            h = L // 2
            want = factorial(h) ** 2 if L % 2 == 0 else factorial(h + 1) * factorial(h)
            yield {"n": L}, want, len(subgroup_tgen(L))

    yield _report("order of <t_i>", f"n<= {min(n_max, 11)}", orders())

    def cosets():
        for L in range(2, min(n_max, 10) + 1):
            h, odd = divmod(L, 2)
            for k in range(h + 1):
                w = "2" * (2 * (h - k) + odd) + "12" * k
                want = (factorial(h + k + odd) * factorial(h - k))
                yield {"word": w}, want, len(fset(w, w))

    yield _report("|F(x|x)| = (n+k)!(n-k)!", f"length<= {min(n_max, 10)}", cosets())


def _e_checks(n_max, perturb):
    perturb = perturb or {}
    for n in range(2, n_max + 1):
        table = ek_table(n, 5)
        top = n * (n - 1) // 2

        def pairs(n=n, table=table, top=top):
            for k in range(6):
                for s in range(top + 1):
                    want = perturb.get((k, s, n), cf.cf_E(k, s, n))
                    yield {"k": k, "s": s, "n": n}, want, table.get(k, s)

        yield _report(f"E_(k,s)^{n}, k<=5", "all s", pairs())


def _ftilde_checks(n_max):
    for n in range(2, n_max + 1):
        def closed(n=n):
            for k in range(6):
                yield {"k": k, "n": n}, cf.cf_tilde_fk(k, n), tilde_f_k(n, k)

        yield _report(f"F~_k(1^{n}|1^{n}), k<=5", "recursion vs closed form", closed())

        def bridge(n=n):
            table = ek_table(n, 5)
            for k in range(6):
                want = MultiPoly({(i, 0, 0): table.get(k, 2 * i + k) for i in range(n * n)})
                yield {"k": k, "n": n}, want, tilde_f_k(n, k)

        yield _report(f"F~_k = sum_i E_(k,2i+k) a^i, n={n}", "recursion vs E-table", bridge())


def _longest_checks(n_max):
    def pairs():
        for n in range(4, n_max + 1):
            x = "1" * n
            poly = engine(BraidingParams.formal_e1()).tilde_f(x, x)
            h = n // 2
            deg = h * (h - 1) if n % 2 == 0 else h * h
            lead = h * (h - 1) // 2 if n % 2 == 0 else h * (h + 1) // 2
            yield {"n": n, "what": "top b-degree"}, deg, poly.degree("b")
            yield {"n": n, "what": "top coefficient"}, MultiPoly({(lead, 0, 0): 1}), poly.coefficient("b", deg)

    return _report("longest element of F(1^n|1^n)", f"n=4..{n_max}", pairs())


def _qfactorial_checks(n_max):
    def pairs():
        params = BraidingParams(MultiPoly.const(1), B, MultiPoly.const(1), symbolic=True)
        eng = engine(params)
        for L in range(2, min(n_max, 12) + 1):
            h, odd = divmod(L, 2)
            for k in range(h + 1):
                w = "2" * (2 * (h - k) + odd) + "12" * k
                want = q_factorial(h + k + odd, B) * q_factorial(h - k, B)
                yield {"word": w}, want, eng.tilde_f(w, w)

    return _report("F~(x|x) = (n+k)_b^!(n-k)_b^! at a=e=1", f"length<= {min(n_max, 12)}", pairs())


def _bminus1_checks(n_max):
    def pairs():
        eng = engine(BraidingParams.formal())
        for m in range(1, (n_max - 1) // 2 + 1):
            odd = "1" * (2 * m + 1)
            yield ({"m": m, "variant": "odd-power"}, cf.cf_bminus1_tilde(m, "odd-power"),
                   eng.tilde_f(odd, odd).subs(b=-1))
            ev2, ev1 = "2" * (2 * m), "1" * (2 * m)
            yield ({"m": m, "variant": "even-diag"}, cf.cf_bminus1_tilde(m, "even-diag"),
                   eng.tilde_f(ev2, ev2).subs(b=-1))
            yield ({"m": m, "variant": "even-cross"}, cf.cf_bminus1_tilde(m, "even-cross"),
                   eng.tilde_f(ev2, ev1).subs(b=-1))

    return _report("F~ at b=-1", f"2m+1<= {n_max}", pairs())


def _symmetry_checks(n_max):
    L_max = min(n_max, 5)

    def pairs():
        eng = engine(BraidingParams.formal())
        for L in range(1, L_max + 1):
            for x in all_words(L):
                col = eng.column(x)
                for y in orbit(x):
                    f = col.get(y, MultiPoly())
                    yield {"x": x, "y": y, "rule": "swap"}, f, eng.tilde_f(y, x).swap_ae()
                    yield {"x": x, "y": y, "rule": "bar"}, f, eng.tilde_f(bar(x), bar(y)).swap_ae()
                    yield {"x": x, "y": y, "rule": "reverse"}, f, eng.tilde_f(rev(x), rev(y))

    return _report("F~ symmetries (swap, bar, reverse)", f"length<= {L_max}", pairs())


def _braiding_checks():
    def pairs():
        yield {"what": "YBE, formal"}, True, ybe_check(BraidingParams.formal())
        table = diagonal_basis_braiding(BraidingParams.formal())
        yield {"what": "w-basis table"}, 4, len(table)

    return _report("braiding of V_abe", "symbolic", pairs())


DIMENSION_CASES = [
    ("A1xA1", None, ("1", "-1", "1")),
    ("A2", None, ("1", "zeta(3)", "zeta(3)^2")),
] + [("V1b1", n, ("1", f"zeta({n})", "1")) for n in range(2, 6)] \
  + [("BMinusOne", m, (f"zeta({m})", "-1", "1")) for m in range(2, 6)]


def _needed_degree(case, param):
    if case == "A1xA1":
        return 3
    if case == "A2":
        return 9
    if case == "V1b1":
        return 2 * param - 1
    return 2 * param + 1


def _dimension_checks(n_max, degree_cap):
    cases = [c for c in DIMENSION_CASES
             if _needed_degree(c[0], c[1]) <= degree_cap and (c[1] is None or c[1] <= n_max)]

    def pairs():
        for case, param, lits in cases:
            prof = nichols_dimension(ParamPoint.from_literals(*lits), cap=degree_cap)
            yield {"case": case, "param": param, "point": list(lits)}, cf.cf_dimension(case, param), prof.total
            if case == "V1b1":
                want = [cf.square_pascal(param, d) for d in range(len(prof.ranks))]
                yield {"case": case, "param": param, "what": "graded"}, want, prof.ranks

    return _report("Nichols dimensions", f"degree cap {degree_cap}", pairs())


def verify_all(n_max: int = 9, degree_cap: int = 14,
               perturb: Optional[Dict[Tuple[int, int, int], int]] = None) -> List[ClosedFormReport]:
    """Run every closed-form check; ``perturb`` overrides cf_E entries (k, s, n) for fault injection."""
    reports: List[ClosedFormReport] = []
    reports.extend(_orbit_checks(n_max))
    reports.extend(_group_checks(n_max))
    reports.extend(_e_checks(n_max, perturb))
    reports.extend(_ftilde_checks(n_max))
    reports.append(_longest_checks(n_max))
    reports.append(_qfactorial_checks(n_max))
    reports.append(_bminus1_checks(n_max))
    reports.append(_symmetry_checks(n_max))
    reports.append(_braiding_checks())
    reports.append(_dimension_checks(n_max, degree_cap))
    return reports
