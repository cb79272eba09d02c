"""srforge command line.

Exit status: 0 on success or a true verdict, 1 on a false verdict (witness
printed) or a failing corpus case, 2 on usage or precondition errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys

from . import formats
from . import poly as P
from .companion import BlockMat, CompanionCtx, companion_matrix, mat_frobenius
from .construct import (
    PerturbSpecBlock,
    PerturbSpecRow,
    chain,
    kron_block,
    lift,
    perturb_block,
    perturb_row,
    random_search,
    scaled_columns,
)
from .corpus import CASE_IDS, DEFAULT_SAMPLES, run_corpus
from .errors import NotSuperregular, SrforgeError
from .field import GF, is_primitive, primitive_polys
from .verify import is_block_superregular, is_superregular, minor_table

OK, FALSE, USAGE = 0, 1, 2


def _env_jobs():
    try:
        return max(1, int(os.environ.get("SRFORGE_JOBS", "1")))
    except ValueError:
        return 1


def _global_flags(parser, suppress):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--jobs", type=int, default=d(_env_jobs()), help="verifier worker processes (default $SRFORGE_JOBS or 1)")
    parser.add_argument("--out", choices=["text", "json", "csv"], default=d("text"), help="output format")
    parser.add_argument("--exhaustive", action="store_true", default=d(False), help="enumerate every minor even after a failure")
    parser.add_argument("--unchecked", action="store_true", default=d(False), help="skip construction precondition checks")


def build_parser():
    ap = argparse.ArgumentParser(prog="srforge", description="Superregular matrices over finite fields.")
    _global_flags(ap, suppress=False)
    sub = ap.add_subparsers(dest="cmd", required=True, metavar="COMMAND")

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        _global_flags(p, suppress=True)
        return p

    p = add("verify", "check superregularity or b-block superregularity")
    vsub = p.add_subparsers(dest="kind", required=True)
    for kind, help_ in (("sr", "every square minor nonzero"), ("block", "every full-block square submatrix nonsingular")):
        q = vsub.add_parser(kind, help=help_)
        _global_flags(q, suppress=True)
        if kind == "block":
            q.add_argument("--b", type=int, help="block size (defaults to the file's block= header)")
        q.add_argument("file")

    p = add("minors", "table of all k x k minors")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("file")

    p = add("kron", "A (x) B, block superregular for superregular A and nonsingular B")
    p.add_argument("a")
    p.add_argument("b")

    p = add("chain", "A_1 (x) ... (x) A_l (x) B")
    p.add_argument("factors", nargs="+")
    p.add_argument("--with", dest="with_", required=True, metavar="B")

    p = add("scaled", "[a_ij B_j B] with per-column nonsingular factors")
    p.add_argument("a")
    p.add_argument("--b", required=True)
    p.add_argument("--bs", required=True, help="comma separated files B1,B2,...")

    p = add("companion", "companion matrix of a polynomial over GF(p)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--poly", required=True)

    p = add("primitive", "primitive polynomials of a given degree")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--list", action="store_true", help="list all instead of the first")

    p = add("lift", "Psi^-1(A_1 (x) ... (x) C^t) over GF(p^n)")
    p.add_argument("factors", nargs="+")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--texp", type=int, help="generator exponent t with gcd(t, p^n-1) = 1")

    p = add("embed", "Psi: matrix over GF(p^n) to block matrix over GF(p)")
    p.add_argument("file")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--inverse", action="store_true", help="apply Psi^-1 to a block matrix instead")
    p.add_argument("--compact", action="store_true", help="write blocks as C^k / O")

    p = add("frobenius", "entrywise x -> x^(p^j)")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("file")

    for name, help_ in (("perturb-row", "add alpha^i terms to one row of alpha*A"),
                        ("perturb-block", "add n_il alpha^t to the first j rows of alpha*A")):
        p = add(name, help_)
        p.add_argument("file")
        p.add_argument("--spec", required=True, help="JSON text or path to a JSON file")
        p.add_argument("--poly", help="modulus when FILE is over GF(p)")
        if name == "perturb-block":
            p.add_argument("--allow-j1", action="store_true", help="admit j = 1, always verified")

    p = add("search", "seeded random search for a superregular matrix")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--poly")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--tries", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)

    p = add("paper-example", "run embedded worked examples and tables")
    p.add_argument("id", nargs="?", choices=CASE_IDS, metavar="ID")
    p.add_argument("--all", action="store_true")
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES, help="random instantiations per sampled case")
    return ap


# output helpers ----------------------------------------------------------------


def _matrix_csv(M):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for row in M.tolist():
        w.writerow([formats._fmt_entry(x) for x in row])
    return buf.getvalue()


def _emit_matrix(args, obj, compact=False):
    if args.out == "json":
        print(json.dumps(formats.to_json_obj(obj), sort_keys=True))
    elif args.out == "csv":
        sys.stdout.write(_matrix_csv(obj.inner if isinstance(obj, BlockMat) else obj))
    else:
        sys.stdout.write(formats.dumps_text(obj, compact=compact))
    return OK


def _emit_report(args, report):
    if args.out == "json":
        print(report.to_json())
    elif args.out == "csv":
        d = report.to_dict()
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(list(d))
        w.writerow([" ".join(map(str, v)) if isinstance(v, list) else v for v in d.values()])
    else:
        print(report.to_text())
    return OK if report.verdict else FALSE


def _spec_json(text):
    if os.path.exists(text):
        with open(text, encoding="utf-8") as fh:
            return json.load(fh)
    return json.loads(text)


def _base_and_ctx(args):
    M = formats.load(args.file)
    if M.field.n > 1:
        ctx = CompanionCtx(M.field.modulus, M.field.p)
    elif args.poly:
        ctx = CompanionCtx(args.poly, M.field.p)
    else:
        raise SrforgeError("FILE is over a prime field; give --poly for the extension")
    return M, ctx


# commands ------------------------------------------------------------------------


def cmd_verify(args):
    M = formats.load(args.file)
    if args.kind == "sr":
        if isinstance(M, BlockMat):
            M = M.inner
        return _emit_report(args, is_superregular(M, jobs=args.jobs, exhaustive=args.exhaustive))
    b = args.b
    if b is None and not isinstance(M, BlockMat):
        raise SrforgeError("block size unknown: pass --b or a file with a block= header")
    return _emit_report(args, is_block_superregular(M, b, jobs=args.jobs, exhaustive=args.exhaustive))


def cmd_minors(args):
    M = formats.load(args.file)
    if isinstance(M, BlockMat):
        M = M.inner
    table = minor_table(M, args.k)
    if args.out == "json":
        print(json.dumps(table.to_dict(), sort_keys=True))
    elif args.out == "csv":
        sys.stdout.write(table.to_csv())
    else:
        print(table.to_text())
    return OK


def _load_plain(path):
    M = formats.load(path)
    return M.inner if isinstance(M, BlockMat) else M


def cmd_kron(args):
    return _emit_matrix(args, kron_block(_load_plain(args.a), _load_plain(args.b), check=not args.unchecked))


def cmd_chain(args):
    As = [_load_plain(f) for f in args.factors]
    return _emit_matrix(args, chain(As, _load_plain(args.with_), check=not args.unchecked))


def cmd_scaled(args):
    Bs = [_load_plain(f) for f in args.bs.split(",") if f]
    return _emit_matrix(args, scaled_columns(_load_plain(args.a), _load_plain(args.b), Bs, check=not args.unchecked))


def cmd_companion(args):
    F = GF(args.p)
    f = P.parse_poly(args.poly, args.p)
    C = companion_matrix(f, F)
    prim = is_primitive(f, args.p)
    if args.out == "json":
        print(json.dumps({
            "schema": 1,
            "p": args.p,
            "poly": P.format_poly(f),
            "primitive": prim,
            "matrix": [[x.value for x in r] for r in C.tolist()],
        }, sort_keys=True))
    elif args.out == "csv":
        sys.stdout.write(_matrix_csv(C))
    else:
        print(f"# companion of {P.format_poly(f)} over GF({args.p}); primitive: {'yes' if prim else 'no'}")
        sys.stdout.write(formats.dumps_text(C))
    return OK


def cmd_primitive(args):
    found = []
    for f in primitive_polys(args.p, args.degree):
        found.append(P.format_poly(f))
        if not args.list:
            break
    if args.out == "json":
        print(json.dumps({"p": args.p, "degree": args.degree, "primitive": found}))
    else:
        print("\n".join(found))
    return OK if found else FALSE


def cmd_lift(args):
    ctx = CompanionCtx(args.poly, args.p)
    As = [_load_plain(f) for f in args.factors]
    return _emit_matrix(args, lift(As, ctx, t_exp=args.texp, check=not args.unchecked))


def cmd_embed(args):
    ctx = CompanionCtx(args.poly, args.p)
    M = formats.load(args.file)
    if args.inverse:
        if not isinstance(M, BlockMat):
            M = BlockMat(M, ctx.n, ctx)
        return _emit_matrix(args, ctx.Psi_inv(BlockMat(M.inner, M.block_size, ctx)))
    return _emit_matrix(args, ctx.Psi(M), compact=args.compact)


def cmd_frobenius(args):
    return _emit_matrix(args, mat_frobenius(_load_plain(args.file), args.j))


def cmd_perturb_row(args):
    M, ctx = _base_and_ctx(args)
    spec = PerturbSpecRow.from_json(_spec_json(args.spec))
    return _emit_matrix(args, perturb_row(M, spec, ctx, check=not args.unchecked))


def cmd_perturb_block(args):
    M, ctx = _base_and_ctx(args)
    spec = PerturbSpecBlock.from_json(_spec_json(args.spec))
    try:
        N = perturb_block(M, spec, ctx, check=not args.unchecked, allow_j1=args.allow_j1, jobs=args.jobs)
    except NotSuperregular as exc:
        if exc.report is None or not (args.allow_j1 and spec.rows == 1):
            raise
        print(f"# {exc}", file=sys.stderr)
        return _emit_report(args, exc.report)
    return _emit_matrix(args, N)


def cmd_search(args):
    F = GF(args.p, args.poly or "prime")
    M = random_search(F, args.rows, args.cols, args.tries, args.seed, jobs=args.jobs)
    if M is None:
        msg = f"no superregular {args.rows}x{args.cols} matrix in {args.tries} tries (seed {args.seed})"
        if args.out == "json":
            print(json.dumps({"schema": 1, "seed": args.seed, "found": False}))
        else:
            print(msg)
        return FALSE
    if args.out == "json":
        obj = formats.to_json_obj(M)
        obj.update(seed=args.seed, found=True)
        print(json.dumps(obj, sort_keys=True))
        return OK
    if args.out == "text":
        print(f"# seed {args.seed}")
    return _emit_matrix(args, M)


def cmd_paper_example(args):
    if not args.all and args.id is None:
        raise SrforgeError("give an example ID or --all")
    ids = None if args.all else [args.id]
    if args.out == "json":
        code, results = run_corpus(ids, jobs=args.jobs, samples=args.samples, stream=io.StringIO())
        print(json.dumps([
            {
                "id": r.case_id,
                "citation": r.citation,
                "pass": r.ok,
                "checks": [{"name": c.name, "pass": c.ok, "expected": repr(c.expected), "actual": repr(c.actual)} for c in r.checks],
                "notes": r.notes,
            }
            for r in results
        ], sort_keys=True))
        return code
    code, _ = run_corpus(ids, jobs=args.jobs, samples=args.samples, verbose=not args.all)
    return code


COMMANDS = {
    "verify": cmd_verify,
    "minors": cmd_minors,
    "kron": cmd_kron,
    "chain": cmd_chain,
    "scaled": cmd_scaled,
    "companion": cmd_companion,
    "primitive": cmd_primitive,
    "lift": cmd_lift,
    "embed": cmd_embed,
    "frobenius": cmd_frobenius,
    "perturb-row": cmd_perturb_row,
    "perturb-block": cmd_perturb_block,
    "search": cmd_search,
    "paper-example": cmd_paper_example,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    if args.jobs < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return USAGE
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.cmd](args)
    except (SrforgeError, ValueError, KeyError, IndexError, OSError, ArithmeticError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return USAGE


cli_main = main

if __name__ == "__main__":
    sys.exit(main())
