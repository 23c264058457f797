"""Command-line front end.

Exit status: 0 when a decision is positive or a command succeeds, 1 when a
decision is negative, 2 on usage, input or size-limit errors.
"""

from __future__ import annotations

import argparse
import random
import sys
from typing import Sequence

from . import oracle
from .cases import CASES
from .document import DigraphDocument, DocumentError, document_for, export_dot, format_document, parse_document
from .dx import build_dx, dx_order, dx_representation, dx_sides, has_4_dicycle
from .graph import GraphError, all_signatures, normalize_signatures

OK, NO, ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> DigraphDocument:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        try:
            with open(path, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_document(data)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _sig(text: str) -> tuple[int, int]:
    vals = _int_list(text)
    if len(vals) != 2:
        raise argparse.ArgumentTypeError(f"signature must look like 2,1, got {text!r}")
    return vals[0], vals[1]


def _fmt_sigs(sigs) -> str:
    return "{" + ", ".join(f"({s.major},{s.minor})" for s in sorted(sigs, reverse=True)) + "}"


def cmd_validate(args) -> int:
    doc = _read(args.file)
    d = doc.to_bipartite()
    kind = "bipartite-tournament" if doc.intra_arcs is None else "completion"
    if doc.intra_arcs is not None:
        doc.to_completion()
    print(f"valid: {kind}")
    print(f"n1: {d.n1}")
    print(f"n2: {d.n2}")
    print(f"arcs: {len(doc.arcs)}")
    if doc.intra_arcs is not None:
        print(f"intra_arcs: {len(doc.intra_arcs)}")
    return OK


def cmd_acyclic(args) -> int:
    doc = _read(args.file)
    cyc = has_4_dicycle(doc.to_bipartite())
    if cyc is None:
        print("acyclic: yes")
        return OK
    print("acyclic: no")
    print("dicycle: " + " ".join(doc.name(v) for v in cyc.vertices + cyc.vertices[:1]))
    return NO


def cmd_dx_repr(args) -> int:
    doc = _read(args.file)
    d = doc.to_bipartite()
    xs = dx_representation(d)
    if xs is None:
        print("dx: none (cyclic)")
        return NO
    print("X: " + ",".join(map(str, xs)))
    for v, x in zip(dx_order(d), xs):
        print(f"{doc.name(v)} = {x}")
    return OK


def cmd_build_dx(args) -> int:
    odd, even = dx_sides(args.set)
    d = build_dx(args.set)
    doc = document_for(d, [str(x) for x in odd], [str(x) for x in even])
    sys.stdout.write(format_document(doc, [f"D_X for X = {{{','.join(map(str, sorted(args.set)))}}}"]))
    return OK


def cmd_decide(args) -> int:
    case = CASES[args.case]
    d = _read(args.file).to_bipartite()
    result = case.decide(d)
    print(f"case: {case.name}")
    print(f"target: t={case.t} k={case.k} K={_fmt_sigs(case.sigs)}")
    print(f"result: {'yes' if result else 'no'}")
    return OK if result else NO


def cmd_construct(args) -> int:
    case = CASES[args.case]
    doc = _read(args.file)
    t = case.construct(doc.to_bipartite())
    if t is None:
        print(f"# no completion with {case.summary}")
        return NO
    sys.stdout.write(format_document(doc.with_completion(t), [f"completion with {case.summary}"]))
    return OK


def _counts_line(counts: dict, ks: Sequence[int]) -> str:
    parts = []
    for k in ks:
        cells = " ".join(f"({s.major},{s.minor})={counts[k, s]}" for s in sorted(all_signatures(k), reverse=True))
        parts.append(f"k={k} {cells}")
    return "; ".join(parts)


def cmd_oracle_census(args) -> int:
    doc = _read(args.file)
    ks = sorted(set(args.k))
    if any(k < 3 for k in ks):
        raise UsageError("--k values must be at least 3")
    if doc.intra_arcs is not None:
        t = doc.to_completion()
        counts = {(k, s): oracle.completion_counts(t, k, [s]) for k in ks for s in all_signatures(k)}
        print("completions: 1")
        print(f"given: {_counts_line(counts, ks)}")
        return OK
    entries = oracle.census(doc.to_bipartite(), ks)
    print(f"completions: {len(entries)}")
    for e in entries:
        print(f"{e.index}: {_counts_line(e.counts, ks)}")
    return OK


def cmd_oracle_decide(args) -> int:
    d = _read(args.file).to_bipartite()
    if args.case:
        case = CASES[args.case]
        t, k, sigs = case.t, case.k, case.sigs
    else:
        if args.t is None or args.k is None:
            raise UsageError("give --case, or both --t and --k")
        t, k = args.t, args.k
        sigs = normalize_signatures(k, args.sig) if args.sig else all_signatures(k)
    result = oracle.brute_decide(d, t, k, sigs)
    print(f"target: t={t} k={k} K={_fmt_sigs(sigs)}")
    print(f"result: {'yes' if result else 'no'}")
    return OK if result else NO


def cmd_gen(args) -> int:
    if args.n1 < 1 or args.n2 < 1:
        raise UsageError("--n1 and --n2 must be positive")
    d = oracle.random_bipartite(args.n1, args.n2, random.Random(args.seed))
    sys.stdout.write(format_document(document_for(d), [f"seed: {args.seed}", f"n1: {args.n1}", f"n2: {args.n2}"]))
    return OK


def cmd_export_dot(args) -> int:
    sys.stdout.write(export_dot(_read(args.file)))
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bipcomplete", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def with_file(name: str, func, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.add_argument("file", help="digraph document, or - for stdin")
        sp.set_defaults(func=func)
        return sp

    with_file("validate", cmd_validate, "check a digraph document")
    with_file("acyclic", cmd_acyclic, "is the bipartite tournament acyclic?")
    with_file("dx-repr", cmd_dx_repr, "integer set X with D isomorphic to D_X")
    with_file("export-dot", cmd_export_dot, "Graphviz DOT output")

    sp = sub.add_parser("build-dx", help="emit D_X for an integer set")
    sp.add_argument("--set", required=True, type=_int_list, help="comma-separated positive integers")
    sp.set_defaults(func=cmd_build_dx)

    for name, func, help in (
        ("decide", cmd_decide, "decide whether a completion meeting the target exists"),
        ("construct", cmd_construct, "emit a completion meeting the target"),
    ):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("case", choices=list(CASES))
        sp.add_argument("file")
        sp.set_defaults(func=func)

    sp = sub.add_parser("oracle", help="exhaustive checks over all completions")
    osub = sp.add_subparsers(dest="oracle_command", required=True)
    c = osub.add_parser("census", help="augmented dicycle counts per completion")
    c.add_argument("file")
    c.add_argument("--k", type=_int_list, default=[3, 4], help="cycle lengths (default 3,4)")
    c.set_defaults(func=cmd_oracle_census)
    c = osub.add_parser("decide", help="brute-force decision for a (t, k, K) target")
    c.add_argument("file")
    c.add_argument("--case", choices=list(CASES))
    c.add_argument("--t", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--sig", type=_sig, action="append", help="signature j,k-j (repeatable; default all)")
    c.set_defaults(func=cmd_oracle_decide)

    sp = sub.add_parser("gen", help="random bipartite tournament")
    sp.add_argument("--n1", type=int, required=True)
    sp.add_argument("--n2", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_gen)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DocumentError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
