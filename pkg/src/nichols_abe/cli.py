"""Command-line front end: dim, ftilde, etable, orbits, verify."""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
from pathlib import Path

from .scalars import (ParamPoint, RootLiteral, ScalarParseError,
                      parse_scalar)
from .symaction import SUBGROUP_CAP, check_word, ek_table, orbit_partition
from .symmetrizer import DEFAULT_CAP, nichols_dimension, tilde_f

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFY_FAILED = 3
EXIT_CAP = 4

CACHE_ENV = "NICHOLS_ABE_CACHE"
FTILDE_MAX_LEN = 16
ORBITS_MAX_N = 20


class UsageError(Exception):
    pass


class CapError(Exception):
    pass


# ---------------------------------------------------------------------------
# cache: one JSON file per (operation, key)

class ResultCache:
    def __init__(self, root):
        self.root = Path(root) if root else None

    def _path(self, op, key):
        digest = hashlib.sha256(json.dumps([op, key]).encode()).hexdigest()[:20]
        return self.root / f"{op}-{digest}.json"

    def get(self, op, key):
        if self.root is None:
            return None
        path = self._path(op, key)
        try:
            doc = json.loads(path.read_text())
        except (OSError, ValueError):
            return None
        if doc.get("op") != op or doc.get("key") != key:
            return None
        return doc["result"]

    def put(self, op, key, result):
        if self.root is None:
            return
        self.root.mkdir(parents=True, exist_ok=True)
        path = self._path(op, key)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps({"op": op, "key": key, "result": result}, sort_keys=True))
        os.replace(tmp, path)

    def fetch(self, op, key, compute):
        hit = self.get(op, key)
        if hit is not None:
            return hit
        result = compute()
        self.put(op, key, result)
        return result


def default_cache_dir():
    env = os.environ.get(CACHE_ENV)
    if env is not None:
        return env or None   # empty string disables caching
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return os.path.join(base, "nichols-abe")


# ---------------------------------------------------------------------------
# rendering helpers

def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _literal(text: str) -> RootLiteral:
    try:
        return parse_scalar(text)
    except ScalarParseError as exc:
        raise UsageError(str(exc)) from None


def _point(args):
    lits = [_literal(x) for x in (args.a, args.b, args.e)]
    if any(lit.coeff == 0 for lit in lits):
        raise UsageError("a, b, e must be nonzero")
    return lits, ParamPoint.from_literals(*lits)


def _word(text: str) -> str:
    try:
        return check_word(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# ---------------------------------------------------------------------------
# subcommands; each returns (output text, exit code)

def cmd_dim(args, cache):
    if args.cap < 2:
        raise UsageError("--cap must be at least 2")
    lits, pt = _point(args)
    key = {"point": [str(x) for x in lits], "cap": args.cap}

    def compute():
        return nichols_dimension(pt, cap=args.cap, jobs=args.jobs).to_json()

    doc = cache.fetch("dim", key, compute)
    doc["point"] = dict(zip("abe", key["point"]))
    code = EXIT_OK if doc["status"] == "terminated" else EXIT_CAP
    if args.format == "json":
        return _json(doc) + "\n", code
    if args.format == "csv":
        return _csv(["degree", "dim"], list(enumerate(doc["ranks"]))), code
    p = doc["point"]
    lines = [f"point: a={p['a']} b={p['b']} e={p['e']}"]
    lines += [f"degree {d}: {r}" for d, r in enumerate(doc["ranks"])]
    lines.append(f"status: {doc['status']}")
    if doc["status"] == "terminated":
        lines.append(f"total: {doc['total']}")
    else:
        lines.append(f"no vanishing degree up to {doc['cap']}; no total claimed")
    return "\n".join(lines) + "\n", code


def _parse_set(items):
    values = {}
    for item in items or []:
        name, sep, val = item.partition("=")
        name = name.strip()
        if not sep or name not in ("a", "b", "e"):
            raise UsageError(f"--set expects a=VALUE, b=VALUE or e=VALUE, got {item!r}")
        lit = _literal(val)
        if lit.order != 1:
            raise UsageError("--set takes rationals; use -a/-b/-e for roots of unity")
        values[name] = lit.coeff
    return values


def cmd_ftilde(args, cache):
    x, y = _word(args.x), _word(args.y)
    if len(x) != len(y):
        raise UsageError("words must have the same length")
    if len(x) > FTILDE_MAX_LEN:
        raise CapError(f"word length {len(x)} exceeds {FTILDE_MAX_LEN}")
    given = [v is not None for v in (args.a, args.b, args.e)]
    if any(given) and not all(given):
        raise UsageError("give all of -a, -b, -e or none of them")
    if all(given):
        if args.set:
            raise UsageError("--set only applies to the formal polynomial")
        lits, pt = _point(args)
        key = {"x": x, "y": y, "point": [str(v) for v in lits]}
        value = cache.fetch("ftilde", key, lambda: str(tilde_f(x, y, pt)))
    else:
        subs = _parse_set(args.set)
        key = {"x": x, "y": y, "set": {k: str(v) for k, v in sorted(subs.items())}}

        def compute():
            poly = tilde_f(x, y)
            return str(poly.subs(**subs) if subs else poly)

        value = cache.fetch("ftilde", key, compute)
    if args.format == "json":
        return _json(dict(key, value=value)) + "\n", EXIT_OK
    return value + "\n", EXIT_OK


def cmd_etable(args, cache):
    if args.n < 1:
        raise UsageError("-n must be positive")
    if args.n > SUBGROUP_CAP:
        raise CapError(f"n = {args.n} exceeds the subgroup cap {SUBGROUP_CAP}")
    key = {"n": args.n, "k": args.k}
    rows = cache.fetch("etable", key, lambda: [list(r) for r in ek_table(args.n, args.k).rows()])
    if args.format == "json":
        return _json([dict(zip(("n", "k", "s", "count"), r)) for r in rows]) + "\n", EXIT_OK
    if args.format == "text":
        return "".join(f"E_{{{k},{s}}}^{n} = {c}\n" for n, k, s, c in rows), EXIT_OK
    return _csv(["n", "k", "s", "count"], rows), EXIT_OK


def cmd_orbits(args, cache):
    if args.n < 1:
        raise UsageError("-n must be positive")
    if args.n > ORBITS_MAX_N:
        raise CapError(f"n = {args.n} exceeds {ORBITS_MAX_N}")
    docs = cache.fetch("orbits", {"n": args.n},
                       lambda: [o.to_json() for o in orbit_partition(args.n)])
    if args.format == "json":
        return _json(docs) + "\n", EXIT_OK
    rows = [(d["representative"], d["size"], d["label"] or "") for d in docs]
    if args.format == "csv":
        return _csv(["representative", "size", "label"], rows), EXIT_OK
    lines = [f"{r}  {s:>6}  {lab}".rstrip() for r, s, lab in rows]
    lines.append("sizes: " + ",".join(str(d["size"]) for d in docs))
    lines.append(f"total: {sum(d['size'] for d in docs)}")
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_verify(args, cache):
    from .verify import verify_all

    if args.nmax < 2:
        raise UsageError("--nmax must be at least 2")
    if args.cap < 2:
        raise UsageError("--cap must be at least 2")
    reports = verify_all(n_max=args.nmax, degree_cap=args.cap)
    failed = [r for r in reports if not r.ok]
    code = EXIT_VERIFY_FAILED if failed else EXIT_OK
    if args.format == "json":
        return _json([r.to_json() for r in reports]) + "\n", code
    lines = []
    for r in reports:
        lines.append(f"{r.status.upper():4}  {r.name}  [{r.checked}]")
        if r.counterexample:
            lines.append("      " + json.dumps(r.counterexample, sort_keys=True))
    lines.append(f"{len(reports) - len(failed)} passed, {len(failed)} failed")
    return "\n".join(lines) + "\n", code


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="nichols-abe",
        description="Exact symmetrizer ranks and combinatorics for the braided space V_abe.")
    p.add_argument("--cache-dir", default=None,
                   help=f"result cache directory (default: ${CACHE_ENV} or ~/.cache/nichols-abe)")
    p.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")
    sub = p.add_subparsers(dest="command", required=True)

    def point_flags(sp, required):
        for name in "abe":
            sp.add_argument(f"-{name}", required=required, metavar="LIT",
                            help="scalar literal: p/q, zeta(N)^k, or a *-product")

    d = sub.add_parser("dim", help="graded dimensions until a degree vanishes")
    point_flags(d, True)
    d.add_argument("--cap", type=int, default=DEFAULT_CAP, help="highest degree computed")
    d.add_argument("--jobs", type=int, default=1, help="worker processes per degree")
    d.add_argument("--format", choices=("text", "json", "csv"), default="text")
    d.set_defaults(func=cmd_dim)

    f = sub.add_parser("ftilde", help="F~(x|y): coefficient of v_y in S_n(v_x)")
    f.add_argument("x")
    f.add_argument("y")
    point_flags(f, False)
    f.add_argument("--set", action="append", metavar="VAR=VALUE",
                   help="substitute a rational for a, b or e (repeatable)")
    f.add_argument("--format", choices=("text", "json"), default="text")
    f.set_defaults(func=cmd_ftilde)

    t = sub.add_parser("etable", help="counts E_{k,s}^n of F(1^n|1^n) by (tl, sl)")
    t.add_argument("-n", type=int, required=True)
    t.add_argument("-k", type=int, default=-1, help="largest tl kept (default: all)")
    t.add_argument("--format", choices=("csv", "json", "text"), default="csv")
    t.set_defaults(func=cmd_etable)

    o = sub.add_parser("orbits", help="orbit partition of words of length n")
    o.add_argument("-n", type=int, required=True)
    o.add_argument("--format", choices=("text", "json", "csv"), default="text")
    o.set_defaults(func=cmd_orbits)

    v = sub.add_parser("verify", help="check every closed form against brute force")
    v.add_argument("--nmax", type=int, default=9)
    v.add_argument("--cap", type=int, default=14, help="degree cap for dimension checks")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if getattr(args, "jobs", 1) < 1:
        parser.print_usage(sys.stderr)
        print("error: --jobs must be positive", file=sys.stderr)
        return EXIT_USAGE
    root = None if args.no_cache else (args.cache_dir or default_cache_dir())
    cache = ResultCache(root)
    try:
        out, code = args.func(args, cache)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
