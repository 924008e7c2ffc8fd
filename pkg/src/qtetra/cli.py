"""Command-line front end.

Subcommands
-----------
build FAMILY --block W1 W2 ...   dump one weight class of an operator
z element i j k l a b c d        print one 3D-Z element (canonical string)
z block W1 W2                    dump a 3D-Z weight class
verify NAME --bound N            check an equation / relation / involutions
crystal FAMILY --block W1 W2     dump a signed crystal map
crystal verify NAME --bound N    combinatorial equation check
pbw derive --diagram KEY --weight A...   derived transition block
selftest                         golden-element suite

Exit codes: 0 pass, 1 mismatch, 2 usage error.  All output is ordered
lexicographically by index tuples so runs are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import crystal as crystal_mod
from . import equations, pbw, zrec
from .tensor import enumerate_weighted


def _dump_block(fam, targets, fmt, fh):
    header = {
        "family": fam.name,
        "signature": list(fam.signature),
        "weights": [list(w) for w in fam.weight_forms],
        "block": list(targets),
    }
    if fmt == "json":
        fh.write(json.dumps(header) + "\n")
    records = []
    for sup in enumerate_weighted(fam.signature, fam.weight_forms, targets):
        for sub, c in fam.rows_for_sup(sup):
            records.append((sup, sub, c))
    records.sort(key=lambda r: (r[0], r[1]))
    for sup, sub, c in records:
        if fmt == "json":
            fh.write(
                json.dumps(
                    {"out": list(sup), "in": list(sub), "coeff": c.canonical()}
                )
                + "\n"
            )
        else:
            fh.write(
                f"{fam.name}[{','.join(map(str, sub))} -> "
                f"{','.join(map(str, sup))}] = {c.canonical()}\n"
            )
    return len(records)


def cmd_build(args):
    fam = equations.families().get(args.family)
    if fam is None:
        print(f"unknown family {args.family!r}", file=sys.stderr)
        return 2
    out = open(args.out, "w") if args.out else sys.stdout
    _dump_block(fam, tuple(args.block), args.format, out)
    if args.out:
        out.close()
    return 0


def cmd_z(args):
    if args.zcmd == "element":
        i, j, k, l, a, b, c, d = args.indices
        v = zrec.z_gamma((i, j, k, l), (a, b, c, d))
        print(v.canonical())
        return 0
    fam = zrec.ZFamily()
    _dump_block(fam, tuple(args.block), args.format, sys.stdout)
    return 0


def cmd_verify(args):
    if args.bound < 0 or args.jobs < 1:
        print("bound must be >= 0 and jobs >= 1", file=sys.stderr)
        return 2
    name = args.name
    if name == "involutions":
        rep = equations.verify_involutions(args.bound)
    elif name in equations.RELATIONS:
        rep = equations.verify_relation(name, args.bound)
    elif name in equations.REGISTRY:
        rep = equations.verify(name, args.bound, jobs=args.jobs)
    else:
        print(f"unknown verification target {name!r}", file=sys.stderr)
        return 2
    print(
        f"{rep.name}: {rep.outcome()} "
        f"(bound={rep.bound}, externals={rep.externals}, "
        f"mismatches={len(rep.mismatches)})"
    )
    if args.report:
        equations.report_to_json(rep, args.report)
    if rep.status == "conjecture":
        return 0 if rep.passed else 1
    return 0 if rep.passed else 1


def cmd_crystal(args):
    if args.words[0] == "verify":
        if len(args.words) != 2:
            print("usage: crystal verify NAME --bound N", file=sys.stderr)
            return 2
        name = args.words[1]
        if name not in equations.REGISTRY:
            print(f"unknown equation {name!r}", file=sys.stderr)
            return 2
        rep = equations.verify(name, args.bound, jobs=args.jobs)
        print(
            f"{rep.name}: {rep.outcome()} "
            f"(bound={rep.bound}, externals={rep.externals})"
        )
        if args.report:
            equations.report_to_json(rep, args.report)
        return 0 if rep.passed else 1
    if len(args.words) != 1 or not args.block:
        print("usage: crystal FAMILY --block W1 W2 ...", file=sys.stderr)
        return 2
    fams = equations.families()
    name = args.words[0] if args.words[0].startswith("c") else "c" + args.words[0]
    if name not in fams:
        print(f"unknown crystal family {args.words[0]!r}", file=sys.stderr)
        return 2
    cmap = crystal_mod.crystal_operator(name, tuple(args.block), fams)
    for sub in sorted(cmap.entries):
        sup, sign = cmap.entries[sub]
        print(
            f"{name}[{','.join(map(str, sub))} -> "
            f"{','.join(map(str, sup))}] = {sign:+d}"
        )
    return 0


def cmd_pbw(args):
    key = args.diagram
    if key not in pbw.DIAGRAMS or pbw.DIAGRAMS[key].rank != 2:
        print(f"unknown rank-2 diagram {key!r}", file=sys.stderr)
        return 2
    sup = tuple(args.weight)
    block = pbw.transition_block(key, sup)
    for sub in sorted(block):
        print(
            f"gamma[{','.join(map(str, sub))} -> "
            f"{','.join(map(str, sup))}] = {block[sub].canonical()}"
        )
    return 0


def cmd_selftest(args):
    from . import selftest

    return selftest.run(verbose=True)


def main(argv=None):
    ap = argparse.ArgumentParser(prog="qtetra", description=__doc__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("build", help="dump an operator weight class")
    p.add_argument("family")
    p.add_argument("--block", type=int, nargs="+", required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_build)

    p = sub.add_parser("z", help="3D-Z elements via the recurrences")
    psub = p.add_subparsers(dest="zcmd", required=True)
    pe = psub.add_parser("element")
    pe.add_argument("indices", type=int, nargs=8, metavar="I")
    pb = psub.add_parser("block")
    pb.add_argument("--block", type=int, nargs=2, required=True)
    pb.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(fn=cmd_z)

    p = sub.add_parser("verify", help="equations, relations, involutions")
    p.add_argument("name")
    p.add_argument("--bound", type=int, default=1)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser(
        "crystal", help="dump a signed map, or `crystal verify NAME`"
    )
    p.add_argument("words", nargs="+", metavar="FAMILY|verify NAME")
    p.add_argument("--block", type=int, nargs="+")
    p.add_argument("--bound", type=int, default=1)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report")
    p.set_defaults(fn=cmd_crystal)

    p = sub.add_parser("pbw", help="derive a transition block from PBW bases")
    psub = p.add_subparsers(dest="pbwcmd", required=True)
    pd = psub.add_parser("derive")
    pd.add_argument("--diagram", required=True)
    pd.add_argument("--weight", type=int, nargs="+", required=True)
    p.set_defaults(fn=cmd_pbw)

    p = sub.add_parser("selftest", help="golden-element suite")
    p.set_defaults(fn=cmd_selftest)

    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except SystemExit as e:
        raise
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
