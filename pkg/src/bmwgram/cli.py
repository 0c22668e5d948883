"""Command line surface.

Subcommands: classify, classify-brauer, gram, dims, verify, oracle, sweep
and cache.  Output is deterministic; --threads only affects wall time.
Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bmw as B
from . import cellmod as CM
from . import classify as CL
from . import oracle as OR
from . import verify as V
from .coeff import ParamSpec

CACHE_ENV = "BMWGRAM_CACHE_DIR"


def _parse_partition(text):
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError("partition must look like (3,2,1) or ()")
    inner = text[1:-1].strip().rstrip(",")
    if not inner:
        return ()
    return tuple(int(part) for part in inner.split(","))


def _parse_rform(text):
    text = text.strip()
    if text == "generic":
        return "generic"
    sign = 1
    if text.startswith("-"):
        sign = -1
        text = text[1:]
    elif text.startswith("+"):
        text = text[1:]
    if text == "q":
        return (sign, 1)
    if not text.startswith("q^"):
        raise ValueError("r must be generic or ±q^a")
    return (sign, int(text[2:]))


def _spec_from_args(args):
    concrete = [getattr(args, name, None) for name in ("q0", "r0")]
    if any(v is not None for v in concrete):
        if args.p in (None, 0):
            raise ValueError("concrete specs need a prime --p")
        if args.q0 is None or args.r0 is None:
            raise ValueError("concrete specs need both --q0 and --r0")
        return ParamSpec.concrete(args.p, args.q0, args.r0)
    e = None if args.e in (None, 0) else args.e
    p = None if args.p in (None, 0) else args.p
    r = _parse_rform(args.r) if args.r is not None else "generic"
    qe = {"+1": 1, "-1": -1, None: 0}[args.qe]
    return ParamSpec.symbolic(e=e, p=p, r=r, qe=qe)


def _emit(args, payload, text_lines):
    if args.output == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _add_spec_args(sub, concrete=True):
    sub.add_argument("--r", help="r=generic or ±q^a, e.g. q^-1, -q^3")
    sub.add_argument("--e", type=int, help="order of q^2 (0 = infinite)")
    sub.add_argument("--p", type=int, help="characteristic (0 = zero)")
    sub.add_argument("--qe", choices=["+1", "-1"], help="sign of q^e")
    if concrete:
        sub.add_argument("--q0", type=int, help="concrete q over GF(p)")
        sub.add_argument("--r0", type=int, help="concrete r over GF(p)")


def build_parser():
    ap = argparse.ArgumentParser(prog="bmwgram",
                                 description="Exact BMW-algebra engine: "
                                             "Gram matrices, determinants "
                                             "and singular parameters.")
    ap.add_argument("--output", choices=["json", "text", "csv"],
                    default="text")
    ap.add_argument("--cache-dir", default=os.environ.get(CACHE_ENV))
    ap.add_argument("--threads", type=int, default=1,
                    help="worker pool size (never changes output)")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="singularity of (r, q) for degree n")
    c.add_argument("--n", type=int, required=True)
    _add_spec_args(c)

    cb = sub.add_parser("classify-brauer", help="Brauer-algebra singularity")
    cb.add_argument("--n", type=int, required=True)
    cb.add_argument("--delta", type=int, required=True)
    cb.add_argument("--p", type=int, default=0, help="characteristic (0 = zero)")

    g = sub.add_parser("gram", help="Gram matrix of one cell")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--f", type=int, required=True)
    g.add_argument("--lambda", dest="lam", required=True,
                   help='partition, e.g. "(2,1)"')
    g.add_argument("--subst", help="substitution r=±q^a, e.g. r=q^-1")
    g.add_argument("--det", action="store_true",
                   help="print the determinant (unit-normalized)")
    g.add_argument("--rank", action="store_true",
                   help="rank over GF(p); needs --p --q0 --r0")
    _add_spec_args(g)

    d = sub.add_parser("dims", help="cell dimension table")
    d.add_argument("--n", type=int, required=True)

    v = sub.add_parser("verify", help="run a named verification suite")
    v.add_argument("--suite", required=True, choices=sorted(V.SUITES))
    v.add_argument("--nmax", type=int)

    o = sub.add_parser("oracle", help="brute-force singularity over GF(p)")
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--p", type=int, required=True)
    o.add_argument("--q0", type=int, required=True)
    o.add_argument("--r0", type=int, required=True)

    s = sub.add_parser("sweep", help="oracle vs classifier agreement sweep")
    s.add_argument("--nmax", type=int, default=4)
    s.add_argument("--primes", default="2,3,5,7,11,13")
    s.add_argument("--dedup", action="store_true")

    k = sub.add_parser("cache", help="structure constant cache management")
    k.add_argument("--warm", type=int, help="precompute for this degree")
    k.add_argument("--info", action="store_true")
    return ap


def _cache_path(args, n):
    base = args.cache_dir
    if not base:
        return None
    os.makedirs(base, exist_ok=True)
    return os.path.join(base, "bmw-n%d-v%d.jsonl" % (n, B.CACHE_FORMAT))


def cmd_classify(args):
    spec = _spec_from_args(args)
    verdict = CL.classify_bmw(args.n, spec)
    _emit(args, verdict.to_json(),
          ["singular: %s" % verdict.singular,
           "clause: %s" % verdict.clause]
          + (["notes: %s" % verdict.notes] if verdict.notes else []))
    return 0


def cmd_classify_brauer(args):
    p = None if args.p == 0 else args.p
    verdict = CL.classify_brauer(args.n, args.delta, p)
    _emit(args, verdict.to_json(),
          ["singular: %s" % verdict.singular,
           "clause: %s" % verdict.clause]
          + (["notes: %s" % verdict.notes] if verdict.notes else []))
    return 0


def cmd_gram(args):
    lam = _parse_partition(args.lam)
    cell = CM.CellIndex(args.n, args.f, lam)
    path = _cache_path(args, args.n)
    if path and os.path.exists(path):
        B.load_cache(args.n, path)
    gram = CM.gram_matrix(cell)
    if args.subst:
        key, _, val = args.subst.partition("=")
        if key.strip() != "r":
            raise ValueError("only substitutions of r are supported")
        sign, a = _parse_rform(val)
        gram = gram.substitute_r(sign, a)
    if args.rank:
        spec = _spec_from_args(args)
        if not spec.is_concrete():
            raise ValueError("--rank needs a concrete spec")
        rank = CM.specialized_rank(gram, spec)
        _emit(args, {"cell": gram.to_json()["cell"], "rank": rank,
                     "dim": gram.dim()},
              ["rank = %d of %d" % (rank, gram.dim())])
        return 0
    if args.det:
        det = CM.gram_det(gram)
        if det.is_zero():
            _emit(args, {"det": "0"}, ["det = 0"])
            return 0
        unit, core = det.normalize_unit()
        _emit(args, {"det": str(det), "unit": str(unit), "core": str(core)},
              ["det = %s * (%s)" % (unit, core)])
        return 0
    _emit(args, gram.to_json(),
          ["cell (%d, %s) at n=%d, dimension %d"
           % (cell.f, list(cell.lam), cell.n, gram.dim())]
          + ["  ".join(str(e) for e in row) for row in gram.entries])
    return 0


def cmd_dims(args):
    dims = CM.cell_dims(args.n)
    total = sum(d * d for d in dims.values())
    rows = sorted(((c.f, c.lam, d) for c, d in dims.items()))
    payload = {"n": args.n,
               "cells": [{"f": f, "lambda": list(lam), "dim": d}
                         for f, lam, d in rows],
               "sum_of_squares": total,
               "double_factorial": B.basis_size(args.n)}
    if args.output == "csv":
        print("f,lambda,dim")
        for f, lam, d in rows:
            print("%d,\"%s\",%d" % (f, list(lam), d))
        return 0
    _emit(args, payload,
          ["f=%d lambda=%-12s dim=%d" % (f, str(list(lam)), d)
           for f, lam, d in rows]
          + ["sum of squares = %d (%d!! check: %d)"
             % (total, 2 * args.n - 1, B.basis_size(args.n))])
    return 0


def cmd_verify(args):
    kwargs = {}
    if args.nmax is not None:
        if args.suite == "relations":
            kwargs["nmax"] = args.nmax
        elif args.suite == "oracle-agreement":
            kwargs["ns"] = tuple(range(2, args.nmax + 1))
    results = V.run_suite(args.suite, **kwargs)
    failed = [name for name, ok, _d in results if not ok]
    for name, ok, detail in results:
        line = "%s: %s" % (name, "PASS" if ok else "FAIL")
        if detail and not ok:
            line += " (%s)" % detail
        print(line)
    print("%d/%d passed" % (len(results) - len(failed), len(results)))
    return 0 if not failed else 1


def cmd_oracle(args):
    spec = ParamSpec.concrete(args.p, args.q0, args.r0)
    report = OR.singular_oracle(args.n, spec)
    if args.output == "csv":
        print("f,lambda,dim_induced,dim_simple")
        for f, lam, a, b in report.table:
            print("%d,\"%s\",%d,%d" % (f, list(lam), a, b))
        return 0
    _emit(args, report.to_json(),
          ["singular: %s" % report.singular]
          + ["f=%d lambda=%-10s induced=%d simple=%d"
             % (f, str(list(lam)), a, b) for f, lam, a, b in report.table])
    return 0


def cmd_sweep(args):
    primes = tuple(int(x) for x in args.primes.split(","))
    ns = tuple(range(2, args.nmax + 1))
    jobs = [(n, spec) for n in ns for spec in OR.sweep_specs(primes)]

    def work(job):
        n, spec = job
        rep = OR.singular_oracle(n, spec)
        verdict = CL.classify_bmw(n, spec)
        return (n, str(spec), rep.singular, verdict.singular)

    if args.threads > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            rows = list(pool.map(work, jobs))
    else:
        rows = [work(job) for job in jobs]
    disagreements = [row for row in rows if row[2] != row[3]]
    if args.output == "csv":
        print("n,spec,oracle,classifier")
        for n, spec, a, b in rows:
            print('%d,"%s",%s,%s' % (n, spec, a, b))
    else:
        _emit(args, {"rows": len(rows),
                     "disagreements": [list(r) for r in disagreements]},
              ["%d regimes checked, %d disagreements"
               % (len(rows), len(disagreements))]
              + ["DISAGREE n=%d %s oracle=%s classifier=%s" % row
                 for row in disagreements])
    return 0 if not disagreements else 1


def cmd_cache(args):
    if args.warm:
        n = args.warm
        B.warm(n)
        path = _cache_path(args, n)
        if path:
            B.save_cache(n, path)
            print("warmed n=%d, cache written to %s" % (n, path))
        else:
            print("warmed n=%d (in memory only; set --cache-dir or %s)"
                  % (n, CACHE_ENV))
        return 0
    if args.info:
        base = args.cache_dir
        if not base or not os.path.isdir(base):
            print("no cache directory")
            return 0
        for name in sorted(os.listdir(base)):
            print(os.path.join(base, name))
        return 0
    print("nothing to do; use --warm N or --info")
    return 0


COMMANDS = {
    "classify": cmd_classify,
    "classify-brauer": cmd_classify_brauer,
    "gram": cmd_gram,
    "dims": cmd_dims,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "sweep": cmd_sweep,
    "cache": cmd_cache,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ValueError, KeyError, ArithmeticError) as err:
        print("error: %s" % err, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
