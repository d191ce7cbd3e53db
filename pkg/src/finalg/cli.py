"""Command-line front end: ``finalg SUBCOMMAND FILE ...``.

Exit status: 0 success / property holds, 1 property fails (a counterexample
is printed on stdout), 2 parse, semantic or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from finalg.algebra import FinAlgebra, compatibility_failure, cont_compatibility_failure
from finalg.congruence import (
    DEFAULT_MAX_SIZE,
    Congruence,
    ProductIndex,
    all_congruences,
    check_congruence,
    generated_congruence,
    product,
    quotient_algebra,
)
from finalg.continuous import ContRelation
from finalg.errors import FinalgError
from finalg.relations import BinaryRelation
from finalg.speclang import SpecDocument, SpecError, document_for, nested_table, parse_file, serialize

EXIT_OK, EXIT_FALSE, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _blocks_text(blocks) -> str:
    return " ".join("{" + ", ".join(map(str, b)) + "}" for b in blocks)


def _algebra(doc: SpecDocument, name: str) -> FinAlgebra:
    try:
        return doc.algebra(name)
    except KeyError:
        raise UsageError(f"no algebra named '{name}'") from None


def _algebra_json(a: FinAlgebra) -> dict:
    return {
        "name": a.name,
        "carrier": a.carrier.size,
        "signature": [[s, k] for s, k in a.signature],
        "operations": {s: nested_table(f) for s, f in a.items()},
    }


def _emit_algebra(doc: SpecDocument, alg: FinAlgebra, out_path: Optional[str], header: str = ""):
    sig_name = doc.signature_name_for(alg.signature) or f"{alg.name}_sig"
    text = header + serialize(document_for(alg, sig_name))
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {alg.name} ({alg.carrier.size} elements) to {out_path}")
    else:
        sys.stdout.write(text)


# subcommands -------------------------------------------------------------

def cmd_check(args, doc: SpecDocument) -> int:
    for kind, items in (("signature", doc.signatures), ("algebra", doc.algebras),
                        ("relation", doc.relations), ("partition", doc.partitions)):
        for name, d in items.items():
            if kind == "signature":
                detail = ", ".join(f"{s}/{k}" for s, k in d.signature)
            elif kind == "algebra":
                detail = f"{d.signature_name}, {d.algebra.carrier.size} elements"
            elif kind == "relation":
                detail = f"on {d.algebra_name}, arity {d.arity}, {len(d.members)} tuples"
            else:
                detail = f"on {d.algebra_name}, {d.partition.num_blocks} blocks"
            print(f"{kind} {name}: {detail}")
    print("ok")
    return EXIT_OK


def cmd_congruences(args, doc: SpecDocument) -> int:
    alg = _algebra(doc, args.algebra)
    cons = all_congruences(alg, max_size=args.max_size)
    if args.format == "json":
        print(_dump({"algebra": alg.name, "count": len(cons),
                     "congruences": [[list(b) for b in c.blocks] for c in cons]}))
    else:
        print(f"{alg.name}: {len(cons)} congruences")
        for i, c in enumerate(cons):
            print(f"  {i}: {_blocks_text(c.blocks)}")
    return EXIT_OK


def _parse_pairs(text: str) -> list[tuple[int, int]]:
    pairs = []
    for chunk in filter(None, (c.strip() for c in text.split(","))):
        parts = chunk.split("-")
        if len(parts) != 2 or not all(p.strip().isdigit() for p in parts):
            raise UsageError(f"bad pair '{chunk}'; expected the form a-b")
        pairs.append((int(parts[0]), int(parts[1])))
    return pairs


def cmd_generated(args, doc: SpecDocument) -> int:
    alg = _algebra(doc, args.algebra)
    pairs = _parse_pairs(args.pairs)
    con = generated_congruence(alg, pairs, max_size=args.max_size)
    if args.format == "json":
        print(_dump({"algebra": alg.name, "pairs": [list(p) for p in pairs],
                     "partition": [list(b) for b in con.blocks]}))
    else:
        print(_blocks_text(con.blocks))
    return EXIT_OK


def _report_violation(args, alg: FinAlgebra, what: str, symbol, detail: dict, message: str) -> int:
    if getattr(args, "format", "text") == "json":
        print(_dump({"algebra": alg.name, "compatible": False, "against": what,
                     "symbol": symbol, **detail}))
    else:
        print(f"not compatible: {message}")
    return EXIT_FALSE


def _partition_congruence(args, doc, alg):
    decl = doc.partitions.get(args.partition)
    if decl is None:
        raise UsageError(f"no partition named '{args.partition}'")
    if decl.algebra_name != alg.name:
        raise UsageError(f"partition '{decl.name}' is declared on {decl.algebra_name}, not {alg.name}")
    return check_congruence(alg, decl.partition)


def _violation_exit(args, alg, what, v) -> int:
    if v.args is None:
        return _report_violation(args, alg, what, None, {"reason": v.reason}, v.reason)
    u, w = v.args
    f = alg.op(v.symbol)
    msg = (f"symbol {v.symbol}, u={u}, v={w}: {v.symbol}{u} = {f.apply(u)}, "
           f"{v.symbol}{w} = {f.apply(w)}")
    return _report_violation(args, alg, what, v.symbol, {"u": list(u), "v": list(w)}, msg)


def cmd_quotient(args, doc: SpecDocument) -> int:
    alg = _algebra(doc, args.algebra)
    res = _partition_congruence(args, doc, alg)
    if not isinstance(res, Congruence):
        return _violation_exit(args, alg, args.partition, res)
    q = quotient_algebra(alg, res, name=f"{alg.name}_{args.partition}")
    if args.format == "json":
        data = _algebra_json(q)
        data["blocks"] = [list(b) for b in res.blocks]
        print(_dump(data))
        return EXIT_OK
    header = "".join(f"# element {i} = block {{{', '.join(map(str, b))}}}\n"
                     for i, b in enumerate(res.blocks))
    _emit_algebra(doc, q, args.out, header)
    return EXIT_OK


def cmd_product(args, doc: SpecDocument) -> int:
    names = [n.strip() for n in args.algebras.split(",") if n.strip()]
    if not names:
        raise UsageError("--algebras needs at least one name")
    index = ProductIndex([_algebra(doc, n) for n in names])
    p = product(index)
    if args.format == "json":
        data = _algebra_json(p)
        data["factors"] = names
        data["elements"] = [{"index": e, "tuple": list(index.decode(e))} for e in range(p.carrier.size)]
        print(_dump(data))
        return EXIT_OK
    header = "".join(f"# element {e} = {index.decode(e)}\n" for e in range(p.carrier.size))
    _emit_algebra(doc, p, args.out, header)
    return EXIT_OK


def cmd_compatible(args, doc: SpecDocument) -> int:
    alg = _algebra(doc, args.algebra)
    if args.partition:
        res = _partition_congruence(args, doc, alg)
        if not isinstance(res, Congruence):
            return _violation_exit(args, alg, args.partition, res)
        what = args.partition
    else:
        decl = doc.relations.get(args.relation)
        if decl is None:
            raise UsageError(f"no relation named '{args.relation}'")
        if decl.algebra_name != alg.name:
            raise UsageError(f"relation '{decl.name}' is declared on {decl.algebra_name}, not {alg.name}")
        what = args.relation
        if decl.arity == 2:
            hit = compatibility_failure(alg, BinaryRelation.from_pairs(alg.carrier, decl.members))
            if hit is not None:
                sym, u, w = hit
                f = alg.op(sym)
                msg = (f"symbol {sym}, u={u}, v={w}: ({f.apply(u)}, {f.apply(w)}) "
                       f"not in {what}")
                return _report_violation(args, alg, what, sym, {"u": list(u), "v": list(w)}, msg)
        else:
            hit = cont_compatibility_failure(alg, ContRelation.of(alg.carrier, decl.arity, decl.members))
            if hit is not None:
                sym, matrix = hit
                f = alg.op(sym)
                image = tuple(f.apply(row) for row in matrix)
                msg = f"symbol {sym}, rows {matrix}: image {image} not in {what}"
                return _report_violation(args, alg, what, sym, {"matrix": matrix, "image": list(image)}, msg)
    if args.format == "json":
        print(_dump({"algebra": alg.name, "compatible": True, "against": what}))
    else:
        print("compatible")
    return EXIT_OK


# driver ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="finalg", description="Query finite algebras declared in .ual files.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file")
        p.set_defaults(func=fn)
        return p

    def fmt(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    add("check", cmd_check, "parse and validate a file")

    p = add("congruences", cmd_congruences, "list every congruence of an algebra")
    p.add_argument("--algebra", required=True)
    p.add_argument("--max-size", type=int, default=DEFAULT_MAX_SIZE)
    fmt(p)

    p = add("generated", cmd_generated, "least congruence containing the given pairs")
    p.add_argument("--algebra", required=True)
    p.add_argument("--pairs", required=True, help='e.g. "0-2,1-3"')
    p.add_argument("--max-size", type=int, default=DEFAULT_MAX_SIZE)
    fmt(p)

    p = add("quotient", cmd_quotient, "quotient of an algebra by a partition")
    p.add_argument("--algebra", required=True)
    p.add_argument("--partition", required=True)
    p.add_argument("--out")
    fmt(p)

    p = add("product", cmd_product, "direct product of algebras")
    p.add_argument("--algebras", required=True, help="comma-separated names")
    p.add_argument("--out")
    fmt(p)

    p = add("compatible", cmd_compatible, "is a relation or partition compatible with an algebra")
    p.add_argument("--algebra", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--relation")
    g.add_argument("--partition")
    fmt(p)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = parse_file(args.file)
    except OSError as exc:
        print(f"error: cannot read {args.file}: {exc.strerror}", file=sys.stderr)
        return EXIT_ERROR
    except SpecError as exc:
        print(exc, file=sys.stderr)
        return EXIT_ERROR
    try:
        return args.func(args, doc)
    except (UsageError, FinalgError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
