"""``permgrammar`` command line: triangles, derivatives, series, labelings, bijections, verification.

Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import bijection, identities, labeling, permstat
from .grammar import derive_n, get_grammar
from .poly import format_poly, parse_poly, poly_to_json
from .series import CLOSED_FORMS, closed_form, render_pairs
from .trees import IncreasingTree


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def cmd_triangle(args) -> str:
    tri = permstat.triangle(args.stat, args.n, args.method)
    rows = tri.rows()
    if args.format == "json":
        return _dump({"stat": tri.kind, "n": tri.n, "method": args.method,
                      "rows": [{"n": n, "k": k, "count": c} for n, k, c in rows]})
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(("n", "k", "count"))
        writer.writerows(rows)
        return buf.getvalue().rstrip("\n")
    return "\n".join(f"{k}\t{c}" for _, k, c in rows)


def cmd_derive(args) -> str:
    g = get_grammar(args.grammar)
    result = derive_n(g, parse_poly(args.seed), args.n)
    if args.format == "json":
        return _dump({"grammar": str(g), "seed": args.seed, "n": args.n, "result": poly_to_json(result)})
    return format_poly(result)


def cmd_series(args) -> str:
    s = closed_form(args.formula, args.order)
    if args.format == "json":
        return _dump({"formula": args.formula, **s.to_json()})
    return render_pairs(s)


def cmd_label(args) -> str:
    ls = labeling.LABELINGS[args.scheme](permstat.parse_permutation(args.perm))
    if args.format == "json":
        return _dump({"perm": list(ls.perm), "labels": list(ls.labels), "weight": str(ls.weight)})
    return f"{ls.render()}\nweight: {ls.weight}"


def cmd_decompose(args) -> str:
    d = labeling.decompose(args.kind, permstat.parse_permutation(args.perm))
    if args.format == "json":
        return _dump({"kind": d.kind, "blocks": [list(b) for b in d.blocks]})
    return str(d)


def cmd_biject(args) -> str:
    kind = args.map
    if args.tree is not None:
        try:
            lit = args.tree.strip()
            if lit[:1] not in ("[", "{"):  # bare comma list of parents
                lit = "[" + lit + "]"
            tree = IncreasingTree.from_json(lit)
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"bad tree literal: {exc}") from None
        perm = bijection.phi_inverse(kind, tree)
    else:
        perm = permstat.parse_permutation(args.perm)
        tree = bijection.phi(kind, perm)
    stats = None if kind == "unified" else bijection.transported_statistics(kind, perm, tree)
    if args.format == "json":
        out = {"map": kind, "perm": list(perm), **tree.to_json()}
        if stats:
            out["statistics"] = stats
        return _dump(out)
    lines = [f"perm: {permstat.format_permutation(perm)}", f"tree: {_dump(tree.to_json())}"]
    if stats:
        lines.append(f"statistics: {_dump(stats)}")
    if args.trace:
        if kind == "unified":
            raise UsageError("--trace is available for updown, leftpeak and exterior")
        lines += ["", bijection.phi_trace(kind, perm).render()]
    return "\n".join(lines)


def cmd_verify(args) -> tuple[str, int]:
    if args.suite == "all":
        ids = identities.registered_ids()
    else:
        ids = [i.strip() for i in args.suite.split(",") if i.strip()]
        unknown = [i for i in ids if i not in identities.REGISTRY]
        if unknown:
            raise UsageError(f"unknown identity id(s): {', '.join(unknown)}")
    checks = identities.verify_all(ids, args.nmax, args.order)
    if args.format == "json":
        text = _dump([c.to_json() for c in checks])
    else:
        text = identities.report_table(checks)
    return text, 0 if all(c.passed for c in checks) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="permgrammar", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("triangle", help="statistic triangle row")
    t.add_argument("--stat", required=True,
                   choices=sorted(set(permstat.STAT_KINDS) | set(permstat.KIND_ALIASES)))
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--method", choices=("brute", "recurrence"), default="brute")
    t.add_argument("--format", choices=("table", "json", "csv"), default="table")
    t.set_defaults(func=cmd_triangle)

    d = sub.add_parser("derive", help="iterated formal derivative")
    d.add_argument("--grammar", required=True, help="preset name or inline:<rules>")
    d.add_argument("--seed", required=True, help='polynomial, e.g. "a" or "x^-1*y"')
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--format", choices=("text", "json"), default="text")
    d.set_defaults(func=cmd_derive)

    s = sub.add_parser("series", help="closed-form series coefficients")
    s.add_argument("--formula", required=True, choices=CLOSED_FORMS)
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_series)

    lab = sub.add_parser("label", help="grammatical labeling of a permutation")
    lab.add_argument("--scheme", choices=tuple(labeling.LABELINGS), required=True)
    lab.add_argument("--perm", required=True)
    lab.add_argument("--format", choices=("text", "json"), default="text")
    lab.set_defaults(func=cmd_label)

    dec = sub.add_parser("decompose", help="LW or AL decomposition")
    dec.add_argument("--kind", choices=("lw", "al"), required=True)
    dec.add_argument("--perm", required=True)
    dec.add_argument("--format", choices=("text", "json"), default="text")
    dec.set_defaults(func=cmd_decompose)

    b = sub.add_parser("biject", help="permutation <-> increasing tree")
    b.add_argument("--map", choices=bijection.MAP_KINDS, required=True)
    src = b.add_mutually_exclusive_group(required=True)
    src.add_argument("--perm")
    src.add_argument("--tree", help='parent array JSON, e.g. {"n": 2, "parent": [0, 0]}')
    b.add_argument("--trace", action="store_true")
    b.add_argument("--format", choices=("text", "json"), default="text")
    b.set_defaults(func=cmd_biject)

    v = sub.add_parser("verify", help="run identity checks")
    v.add_argument("--suite", default="all", help="all, or comma-separated ids")
    v.add_argument("--nmax", type=int, default=identities.DEFAULT_N_MAX)
    v.add_argument("--order", type=int, default=identities.DEFAULT_ORDER)
    v.add_argument("--format", choices=("table", "json"), default="table")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except (UsageError, ValueError, KeyError) as exc:
        print(f"permgrammar {args.command}: error: {exc}", file=sys.stderr)
        return 2
    text, code = result if isinstance(result, tuple) else (result, 0)
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
