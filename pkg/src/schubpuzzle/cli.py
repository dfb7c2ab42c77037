"""
Command line: schubpuzzle <command> ...

    multiply n k lam mu        structure constants of S_lam S_mu
    puzzles n k lam mu nu      list or count puzzles
    render FILE                draw a saved puzzle
    verify SUITE n k           run a verification suite ('fixtures' for examples)
    ms n k theta mu            Molev-Sagan constants
    class n k lam              all restrictions of S_lam
    bench                      enumeration vs row-transfer timings

Exit status: 0 on success, 1 on usage errors, 2 when a check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .cache import CacheStore, cached_class, cached_product
from .dp import frontier_sums
from .mspuzzle import molev_sagan_constants
from .puzzle import (
    PuzzleFormatError, enumerate_puzzles, from_structured, from_text,
    product_via_puzzles, puzzle_weight, to_structured, to_text,
)
from .render import render_ascii, render_svg
from .strings import BitString, all_strings
from .verify import SUITES, UnknownSuite, regression_fixtures, run_suite

USAGE, FAILED = 1, 2


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE, "%s: error: %s\n" % (self.prog, message))


def word(text, n, k, what):
    try:
        w = BitString.parse(text)
    except ValueError as exc:
        raise UsageError("%s: %s" % (what, exc))
    if w.n != n or w.k != k:
        raise UsageError("%s=%s is not in %d choose %d" % (what, text, n, k))
    return w


def check_nk(n, k):
    if n < 1 or not 0 <= k <= n:
        raise UsageError("need n >= 1 and 0 <= k <= n")


def store_for(args):
    if args.no_cache:
        return None
    return CacheStore(args.cache_dir)


def format_entries(entries: dict) -> str:
    if not entries:
        return "0"
    return " | ".join("%s: %s" % (nu, p) for nu, p in sorted(entries.items()))


def cmd_multiply(args):
    check_nk(args.n, args.k)
    lam = word(args.lam, args.n, args.k, "lambda")
    mu = word(args.mu, args.n, args.k, "mu")
    store = store_for(args)
    engines = ["puzzle", "gkm"] if args.engine == "both" else [args.engine]
    tables = {e: cached_product(lam, mu, e, store) for e in engines}
    match = len({tuple(t.items()) for t in tables.values()}) == 1
    if args.format == "structured":
        out = {e: t.to_structured() for e, t in tables.items()}
        if args.engine == "both":
            out["match"] = match
        print(json.dumps(out, indent=1, sort_keys=True))
    else:
        for e, t in tables.items():
            prefix = "%s: " % e if args.engine == "both" else ""
            print(prefix + t.format())
        if args.engine == "both":
            print("match" if match else "MISMATCH")
    return 0 if match else FAILED


def cmd_puzzles(args):
    check_nk(args.n, args.k)
    lam = word(args.lam, args.n, args.k, "lambda")
    mu = word(args.mu, args.n, args.k, "mu")
    nu = word(args.nu, args.n, args.k, "nu")
    found = enumerate_puzzles(lam, mu, nu, ordinary_only=args.ordinary_only)
    if args.count_only:
        print(len(found))
        return 0
    if args.format == "structured":
        print(json.dumps([dict(to_structured(P), weight=str(puzzle_weight(P))) for P in found],
                         indent=1, sort_keys=True))
        return 0
    for i, P in enumerate(found):
        print("# puzzle %d, weight %s" % (i + 1, puzzle_weight(P)))
        if args.render == "ascii":
            print(render_ascii(P), end="")
        elif args.render == "svg":
            print(render_svg(P), end="")
        else:
            print(to_text(P), end="")
    print("# %d puzzles" % len(found))
    return 0


def cmd_render(args):
    try:
        with open(args.file) as f:
            text = f.read()
    except OSError as exc:
        raise UsageError(str(exc))
    try:
        if text.lstrip().startswith("{"):
            P = from_structured(json.loads(text))
        else:
            P = from_text(text)
    except (PuzzleFormatError, ValueError) as exc:
        raise UsageError("%s: %s" % (args.file, exc))
    print(render_svg(P) if args.format == "svg" else render_ascii(P), end="")
    return 0


def cmd_verify(args):
    if args.suite == "fixtures":
        rep = regression_fixtures()
    else:
        check_nk(args.n, args.k)
        try:
            rep = run_suite(args.suite, args.n, args.k)
        except UnknownSuite as exc:
            raise UsageError(exc.args[0])
    if args.format == "structured":
        print(rep.to_json())
    else:
        print(rep.summary())
        for f in rep.failures[:20]:
            print("  %s: %s != %s" % (" ".join([f["identity"]] + f["inputs"]), f["lhs"], f["rhs"]))
    return 0 if rep.passed else FAILED


def cmd_ms(args):
    check_nk(args.n, args.k)
    theta = word(args.theta, args.n, args.k, "theta")
    mu = word(args.mu, args.n, args.k, "mu")
    e = molev_sagan_constants(theta, mu)
    if args.format == "structured":
        print(json.dumps({str(nu): p.to_structured() for nu, p in sorted(e.items())}, indent=1, sort_keys=True))
    else:
        print(format_entries(e))
    return 0


def cmd_class(args):
    check_nk(args.n, args.k)
    lam = word(args.lam, args.n, args.k, "lambda")
    rec = cached_class(lam, store_for(args))
    if args.format == "structured":
        print(json.dumps(rec, indent=1, sort_keys=True))
    else:
        for mu in sorted(rec):
            print("%s: %s" % (mu, rec[mu]))
    return 0


def cmd_bench(args):
    print("%3s %3s %8s %12s %12s %8s" % ("n", "k", "pairs", "enumerate_s", "dp_s", "speedup"))
    for n in range(args.min_n, args.max_n + 1):
        k = n // 2
        S = all_strings(n, k)
        pairs = [(a, b) for a in S for b in S]
        t0 = time.perf_counter()
        for a, b in pairs:
            product_via_puzzles(a, b)
        t1 = time.perf_counter()
        for a, b in pairs:
            frontier_sums(a, b)
        t2 = time.perf_counter()
        speed = (t1 - t0) / (t2 - t1) if t2 > t1 else float("inf")
        print("%3d %3d %8d %12.3f %12.3f %7.1fx" % (n, k, len(pairs), t1 - t0, t2 - t1, speed))
    return 0


def build_parser():
    p = Parser(prog="schubpuzzle", description="Equivariant Schubert calculus on Grassmannians via puzzles and localization.")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--no-cache", action="store_true", help="do not read or write the on-disk cache")
    p.add_argument("--cache-dir", help="cache directory (default $SCHUBPUZZLE_CACHE or ~/.cache/schubpuzzle)")
    sub = p.add_subparsers(dest="command", parser_class=Parser)
    sub.required = True

    def nk(sp):
        sp.add_argument("n", type=int)
        sp.add_argument("k", type=int)

    def fmt(sp):
        sp.add_argument("--format", choices=["table", "structured"], default="table")

    m = sub.add_parser("multiply", help="structure constants of S_lam S_mu")
    nk(m)
    m.add_argument("lam")
    m.add_argument("mu")
    m.add_argument("--engine", choices=["puzzle", "gkm", "both"], default="puzzle")
    fmt(m)
    m.set_defaults(func=cmd_multiply)

    z = sub.add_parser("puzzles", help="list or count puzzles with a given boundary")
    nk(z)
    z.add_argument("lam")
    z.add_argument("mu")
    z.add_argument("nu")
    z.add_argument("--count-only", action="store_true")
    z.add_argument("--ordinary-only", action="store_true", help="only puzzles without equivariant pieces")
    z.add_argument("--render", choices=["none", "ascii", "svg"], default="none")
    fmt(z)
    z.set_defaults(func=cmd_puzzles)

    r = sub.add_parser("render", help="draw a puzzle saved in text or structured form")
    r.add_argument("file")
    r.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    r.set_defaults(func=cmd_render)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=list(SUITES) + ["fixtures"])
    v.add_argument("n", type=int, nargs="?", default=0)
    v.add_argument("k", type=int, nargs="?", default=0)
    fmt(v)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("ms", help="Molev-Sagan constants via MS-puzzles")
    nk(s)
    s.add_argument("theta")
    s.add_argument("mu")
    fmt(s)
    s.set_defaults(func=cmd_ms)

    c = sub.add_parser("class", help="restrictions of an equivariant Schubert class")
    nk(c)
    c.add_argument("lam")
    fmt(c)
    c.set_defaults(func=cmd_class)

    b = sub.add_parser("bench", help="time enumeration against the row-transfer count")
    b.add_argument("--min-n", type=int, default=3)
    b.add_argument("--max-n", type=int, default=6)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print("schubpuzzle: error: %s" % exc, file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
