"""Command line front end.

    quadsys identities --op tetrad --degree 7
    quadsys table --op anti --degree 10 --partition 8,2
    quadsys special --op tetrad --multidegree a6,b,c,d,e
    quadsys envelope --system D11

Results go to stdout (text, or JSON with --json); progress to stderr.
Exit codes: 0 ok, 2 usage error, 3 truncated result.
"""
import argparse
import json
import os
import re
import sys
import time

from . import free_algebra as fa
from .ncgroebner import format_word

EXIT_OK, EXIT_USAGE, EXIT_TRUNCATED = 0, 2, 3


class UsageError(ValueError):
    pass


def default_prime():
    text = os.environ.get("QUADSYS_PRIME", "101")
    try:
        p = int(text)
    except ValueError:
        raise UsageError("QUADSYS_PRIME must be an integer, got %r" % text)
    if p < 11:
        raise UsageError("QUADSYS_PRIME must be a prime larger than the degree")
    return p


def parse_multidegree(text):
    """'a6,b,c,d,e' -> (6, 1, 1, 1, 1); letters must be a, b, c, ... in order."""
    mults = []
    for i, tok in enumerate(t for t in text.replace(" ", "").split(",") if t):
        m = re.fullmatch(r"([a-z])(\^?)(\d*)", tok)
        if not m or m.group(1) != "abcdefghijklmnop"[i]:
            raise UsageError("bad multidegree %r" % text)
        mults.append(int(m.group(3)) if m.group(3) else 1)
    if not mults or any(x < 1 for x in mults):
        raise UsageError("bad multidegree %r" % text)
    return tuple(mults)


def _progress(msg):
    print(msg, file=sys.stderr, flush=True)


def _emit(obj, as_json, text_lines):
    if as_json:
        print(json.dumps(obj, sort_keys=True, indent=1))
    else:
        print("\n".join(text_lines))


def _op(args):
    try:
        return fa.OperationKind.parse(args.op)
    except ValueError as exc:
        raise UsageError(str(exc))


# -- commands -------------------------------------------------------------------

def cmd_identities(args):
    from .identities.multilinear import is_symmetry_instance, multilinear_generators
    op = _op(args)
    if args.degree not in (4, 7):
        raise UsageError("identities: degree must be 4 or 7")
    p = default_prime()
    res = multilinear_generators(args.degree, op, p, minimize=args.degree == 7)
    space = res.space
    out = {"op": op.value, "degree": args.degree, "prime": p, "rank": space.rank,
           "nullity": space.nullity}
    lines = ["%s degree %d: rank %d, nullity %d" % (op.value, args.degree, space.rank, space.nullity)]
    if args.degree == 4:
        ids = space.identities()
        out["symmetry_only"] = all(is_symmetry_instance(x) for x in ids)
        out["identities"] = [str(x) for x in ids]
        lines.append("every identity is an instance of the symmetry: %s" % out["symmetry_only"])
        lines += ["  " + s for s in out["identities"]]
    else:
        gens = res.minimal
        out["extracted"] = len(res.extracted)
        out["generators"] = [str(g) for g in gens.identities]
        out["terms"] = [len(g) for g in gens.identities]
        out["module_dim"] = gens.module_dim
        lines.append("%d generators (from %d extracted), module dimension %d"
                     % (len(gens), len(res.extracted), gens.module_dim))
        lines += ["  [%d terms] %s" % (len(g), g) for g in gens.identities]
    _emit(out, args.json, lines)
    return EXIT_OK


def cmd_table(args):
    from .identities.reports import STRETCH_DIM, format_table, partition_table, required_partitions
    from .symmetric_group import irreducible_dimension, parse_partition, partitions
    op = _op(args)
    if args.degree not in (7, 10):
        raise UsageError("table: degree must be 7 or 10")
    p = default_prime()
    if args.partition:
        try:
            lam = parse_partition(args.partition)
        except ValueError as exc:
            raise UsageError(str(exc))
        if sum(lam) != args.degree:
            raise UsageError("partition %s is not of %d" % (args.partition, args.degree))
        if args.degree == 10 and irreducible_dimension(lam) > STRETCH_DIM and not args.stretch:
            raise UsageError("d = %d exceeds %d; pass --stretch" % (irreducible_dimension(lam), STRETCH_DIM))
        lams = [lam]
    elif args.degree == 7:
        lams = partitions(7)
    else:
        lams = required_partitions(10, args.stretch)

    def progress(r):
        _progress("%s %s d=%d new=%d %.1fs" % (op.value, ",".join(map(str, r.lam)), r.dim, r.new, r.seconds))

    reps = partition_table(args.degree, op, p, lams, workers=args.workers, progress=progress)
    out = {"op": op.value, "degree": args.degree, "prime": p,
           "rows": [{k: v for k, v in r.as_dict().items() if k != "seconds"} for r in reps]}
    _emit(out, args.json, [format_table(reps, args.degree)])
    return EXIT_OK


def cmd_special(args):
    from .identities import nonlinear as nl
    op = _op(args)
    p = default_prime()
    if args.multidegree is None:
        if args.degree != 7:
            raise UsageError("special: give --multidegree, or --degree 7 for generators")
        rows, gs, small = nl.minimal_nonlinear_generators(
            op, 7, p, progress=lambda r: _progress("multidegree %s: rank %d nullity %d kept %d %.1fs" % (
                ",".join(map(str, r.lam)), r.rank, r.nullity, r.generators, r.seconds)))
        chosen = small if args.minimize else gs
        out = {"op": op.value, "degree": 7, "prime": p,
               "rows": [{"lam": list(r.lam), "words": r.words, "monomials": r.monomials,
                         "rank": r.rank, "nullity": r.nullity, "generators": r.generators}
                        for r in rows],
               "generators": len(gs), "module_dim": gs.module_dim,
               "minimized": args.minimize,
               "identities": [{"multidegree": list(x.mults), "terms": len(x), "identity": str(x)}
                              for x in chosen.identities]}
        lines = ["%-14s %6s %6s %6s %6s %4s" % ("multidegree", "A", "Q", "R", "N", "G")]
        lines += ["%-14s %6d %6d %6d %6d %4d" % (",".join(map(str, r.lam)), r.words, r.monomials,
                                                 r.rank, r.nullity, r.generators) for r in rows]
        lines.append("total generators %d, module dimension %d" % (len(gs), gs.module_dim))
        if args.minimize:
            lines.append("minimal set: %d identities with %s terms" % (
                len(small), "/".join(str(len(x)) for x in small.identities)))
        lines += ["  %s" % x for x in chosen.identities]
        _emit(out, args.json, lines)
        return EXIT_OK
    mults = parse_multidegree(args.multidegree)
    if sum(mults) not in (7, 10):
        raise UsageError("special: total degree must be 7 or 10")
    lam = tuple(sorted(mults, reverse=True))
    start = time.time()
    search = nl.find_special_identities(mults, op, lam, p=p)
    c = search.candidates
    _progress("%s: %.1fs" % (args.multidegree, time.time() - start))
    out = {"op": op.value, "multidegree": list(mults), "partition": list(lam),
           "words": c.nwords, "monomials": c.nmonomials, "rank": c.rank, "nullity": c.nullity,
           "sizes": [[label, round(size, 2)] for label, size in c.sizes],
           "candidates": len(c.identities), "ranks": search.ranks,
           "confirmed": [{"terms": len(x), "identity": str(x)} for x in search.confirmed]}
    lines = ["%s %s: %d x %d, rank %d, nullity %d" % (op.value, args.multidegree, c.nwords,
                                                      c.nmonomials, c.rank, c.nullity),
             "basis sizes: " + ", ".join("%s %.2f" % s for s in c.sizes),
             "ranks: " + " -> ".join(map(str, search.ranks)),
             "%d new identities" % len(search.confirmed)]
    lines += ["  [%d terms] %s" % (len(x), x) for x in search.confirmed]
    _emit(out, args.json, lines)
    return EXIT_OK


def cmd_envelope(args):
    from .envelope import analyze
    try:
        rep = analyze(args.system, args.degree_bound, extend=args.extend, units=args.units)
    except ValueError as exc:
        raise UsageError(str(exc))
    if "monomials" in rep:
        rep["monomials"] = [format_word(w if w != "1" else "") for w in rep["monomials"]]
    lines = ["%s (%s): %d relations, Groebner basis of %d rules (%s)" % (
        rep["system"], rep["op"], rep["relations"], len(rep["groebner"]), rep["status"])]
    lines += ["  " + g for g in rep["groebner"]]
    if rep["finite"]:
        lines.append("dimension %d" % rep["dim"])
    else:
        lines.append("infinite dimensional; graded dimensions %s" % rep["graded_dims"])
    for key in ("semisimple", "center_dim", "field", "ideal_dims", "extension_required"):
        if key in rep:
            lines.append("%s: %s" % (key.replace("_", " "), rep[key]))
    for e in rep.get("idempotents", []):
        lines.append("  idempotent: " + e)
    _emit(rep, args.json, lines)
    truncated = rep["status"] != "complete"
    if truncated or (not rep["finite"] and args.degree_bound is None):
        _progress("result truncated; pass --degree-bound to accept a partial answer")
        return EXIT_TRUNCATED
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(prog="quadsys", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--op", default="tetrad", help="tetrad or anti")
        sp.add_argument("--json", action="store_true", help="JSON output")

    sp = sub.add_parser("identities", help="multilinear identities in degree 4 or 7")
    common(sp)
    sp.add_argument("--degree", type=int, default=7)
    sp.set_defaults(func=cmd_identities)

    sp = sub.add_parser("table", help="multiplicities per partition in degree 7 or 10")
    common(sp)
    sp.add_argument("--degree", type=int, default=7)
    sp.add_argument("--partition", help="e.g. 8,2 or 6,1^4")
    sp.add_argument("--stretch", action="store_true", help="include partitions with d > 350")
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("special", help="nonlinear identities from integer lattices")
    common(sp)
    sp.add_argument("--multidegree", help="e.g. a6,b,c,d,e or a6,b4")
    sp.add_argument("--degree", type=int, default=7)
    sp.add_argument("--minimize", action="store_true")
    sp.set_defaults(func=cmd_special)

    sp = sub.add_parser("envelope", help="universal associative envelope of a quadruple system")
    sp.add_argument("--system", required=True, help="A2, B2, C111, D11, A-2, B-3, C-111, D-21, ...")
    sp.add_argument("--degree-bound", type=int, default=None)
    sp.add_argument("--extend", action="store_true", help="allow a quadratic extension of Q")
    sp.add_argument("--units", action="store_true", help="matrix units of each simple ideal")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--workers", type=int, default=1, help="accepted for symmetry; one job")
    sp.set_defaults(func=cmd_envelope)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
