"""Canonical text form of a :class:`SpecDocument`.

Declarations keep their order; each op, tuple and block sits on its own line
with two-space indent.  Relation tuples are sorted and partition blocks appear
in least-element order, so ``serialize(parse(serialize(d))) == serialize(d)``.
"""

from __future__ import annotations

import re

from finalg.relations import FiniteOperation
from finalg.speclang.document import (
    AlgebraDecl,
    PartitionDecl,
    RelationDecl,
    SignatureDecl,
    SpecDocument,
)
from finalg.tuples import encode


_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def _name(s: str) -> str:
    if not _IDENT.match(s):
        raise ValueError(f"{s!r} is not a valid identifier in .ual syntax")
    return s


def nested_table(f: FiniteOperation):
    """The table as nested lists, outermost index = first argument."""
    n, k = f.carrier.size, f.arity

    def build(prefix: tuple):
        if len(prefix) == k:
            return f.table[encode(prefix, n)]
        return [build(prefix + (i,)) for i in range(n)]

    return build(())


def format_table(t) -> str:
    if isinstance(t, int):
        return str(t)
    return "[" + ", ".join(format_table(x) for x in t) + "]"


def _signature(d: SignatureDecl) -> list[str]:
    lines = [f"signature {_name(d.name)} {{"]
    lines += [f"  op {_name(sym)} {k};" for sym, k in d.signature]
    return lines + ["}"]


def _algebra(d: AlgebraDecl) -> list[str]:
    a = d.algebra
    lines = [f"algebra {_name(d.name)} : {_name(d.signature_name)} {{", f"  carrier {a.carrier.size};"]
    lines += [f"  op {_name(sym)} = {format_table(nested_table(f))};" for sym, f in a.items()]
    return lines + ["}"]


def _relation(d: RelationDecl) -> list[str]:
    lines = [f"relation {_name(d.name)} on {_name(d.algebra_name)} arity {d.arity} {{"]
    lines += ["  (" + ", ".join(map(str, t)) + ");" for t in sorted(d.members)]
    return lines + ["}"]


def _partition(d: PartitionDecl) -> list[str]:
    lines = [f"partition {_name(d.name)} on {_name(d.algebra_name)} {{"]
    lines += ["  {" + ", ".join(map(str, b)) + "};" for b in d.partition.blocks]
    return lines + ["}"]


_WRITERS = {SignatureDecl: _signature, AlgebraDecl: _algebra,
            RelationDecl: _relation, PartitionDecl: _partition}


def serialize(doc: SpecDocument) -> str:
    chunks = ["\n".join(_WRITERS[type(d)](d)) for d in doc.items]
    return "\n\n".join(chunks) + "\n" if chunks else ""
