"""Recursive-descent parser for ``.ual`` files.

Grammar (``#`` comments run to end of line)::

    file      := item*
    item      := signature | algebra | relation | partition
    signature := "signature" IDENT "{" ("op" IDENT NAT ";")* "}"
    algebra   := "algebra" IDENT ":" IDENT "{" "carrier" NAT ";" ("op" IDENT "=" table ";")* "}"
    table     := NAT | "[" (table ("," table)*)? "]"
    relation  := "relation" IDENT "on" IDENT "arity" NAT "{" ("(" NAT ("," NAT)* ")" ";")* "}"
    partition := "partition" IDENT "on" IDENT "{" ("{" NAT ("," NAT)* "}" ";")* "}"

Keywords are matched by spelling where the grammar expects them, so they are
not reserved as identifiers.  Parsing stops at the first syntax error;
semantic checks run only on a syntactically clean file and report every
problem found.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Union

from finalg.algebra import FinAlgebra, Signature
from finalg.base import Carrier
from finalg.congruence import MAX_TABLE_ENTRIES
from finalg.equivalence import Partition
from finalg.relations import FiniteOperation
from finalg.speclang.document import (
    AlgebraDecl,
    Diagnostic,
    PartitionDecl,
    RelationDecl,
    SignatureDecl,
    SpecDocument,
    SpecSemanticError,
    SpecSyntaxError,
)
from finalg.tuples import encode

MAX_NESTING = 64

_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<IDENT>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<NAT>[0-9]+)
  | (?P<PUNCT>[{}\[\](),;:=])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str  # IDENT, NAT, PUNCT, EOF
    text: str
    line: int
    col: int

    def describe(self) -> str:
        if self.kind == "EOF":
            return "end of input"
        return f"'{self.text}'"


class _Abort(Exception):
    def __init__(self, diag: Diagnostic):
        self.diag = diag


def _tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    line, line_start = 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise _Abort(Diagnostic(line, pos - line_start + 1,
                                    f"unexpected character {text[pos]!r}"))
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1))
        chunk = m.group()
        nl = chunk.count("\n")
        if nl:
            line += nl
            line_start = pos + chunk.rindex("\n") + 1
        pos = m.end()
    tokens.append(Token("EOF", "", line, pos - line_start + 1))
    return tokens


def tokenize(text: str, filename: str = "<input>") -> list[Token]:
    try:
        return _tokenize(text)
    except _Abort as exc:
        raise SpecSyntaxError([exc.diag], filename) from None


# raw syntax tree ---------------------------------------------------------

@dataclass
class _Table:
    value: Union[int, list]  # int leaf or list of _Table
    line: int
    col: int


@dataclass
class _RawSignature:
    name: Token
    ops: list  # (name Token, arity Token)


@dataclass
class _RawAlgebra:
    name: Token
    sig: Token
    carrier: Token
    ops: list  # (name Token, _Table)


@dataclass
class _RawRelation:
    name: Token
    target: Token
    arity: Token
    tuples: list  # list of list[Token]


@dataclass
class _RawPartition:
    name: Token
    target: Token
    blocks: list  # list of list[Token]


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.toks = tokens
        self.i = 0

    @property
    def cur(self) -> Token:
        return self.toks[self.i]

    def error(self, msg: str, tok: Optional[Token] = None):
        tok = tok or self.cur
        raise _Abort(Diagnostic(tok.line, tok.col, msg))

    def advance(self) -> Token:
        tok = self.cur
        if tok.kind != "EOF":
            self.i += 1
        return tok

    def at(self, text: str) -> bool:
        return self.cur.kind in ("PUNCT", "IDENT") and self.cur.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.error(f"expected '{text}', found {self.cur.describe()}")
        return self.advance()

    def expect_kind(self, kind: str, what: str) -> Token:
        if self.cur.kind != kind:
            self.error(f"expected {what}, found {self.cur.describe()}")
        return self.advance()

    def ident(self) -> Token:
        return self.expect_kind("IDENT", "an identifier")

    def nat(self) -> Token:
        return self.expect_kind("NAT", "a natural number")

    # items -------------------------------------------------------------

    def file(self) -> list:
        items = []
        while self.cur.kind != "EOF":
            head = self.cur
            if head.kind == "IDENT" and head.text == "signature":
                items.append(self.signature())
            elif head.kind == "IDENT" and head.text == "algebra":
                items.append(self.algebra())
            elif head.kind == "IDENT" and head.text == "relation":
                items.append(self.relation())
            elif head.kind == "IDENT" and head.text == "partition":
                items.append(self.partition())
            else:
                self.error("expected 'signature', 'algebra', 'relation' or 'partition', "
                           f"found {head.describe()}")
        return items

    def signature(self) -> _RawSignature:
        self.expect("signature")
        name = self.ident()
        self.expect("{")
        ops = []
        while not self.at("}"):
            self.expect("op")
            sym = self.ident()
            arity = self.nat()
            self.expect(";")
            ops.append((sym, arity))
        self.expect("}")
        return _RawSignature(name, ops)

    def algebra(self) -> _RawAlgebra:
        self.expect("algebra")
        name = self.ident()
        self.expect(":")
        sig = self.ident()
        self.expect("{")
        self.expect("carrier")
        carrier = self.nat()
        self.expect(";")
        ops = []
        while not self.at("}"):
            self.expect("op")
            sym = self.ident()
            self.expect("=")
            table = self.table()
            self.expect(";")
            ops.append((sym, table))
        self.expect("}")
        return _RawAlgebra(name, sig, carrier, ops)

    def table(self, depth: int = 0) -> _Table:
        tok = self.cur
        if depth > MAX_NESTING:
            self.error(f"table nested more than {MAX_NESTING} levels deep")
        if tok.kind == "NAT":
            self.advance()
            return _Table(int(tok.text), tok.line, tok.col)
        self.expect("[")
        entries = []
        if not self.at("]"):
            entries.append(self.table(depth + 1))
            while self.at(","):
                self.advance()
                entries.append(self.table(depth + 1))
        self.expect("]")
        return _Table(entries, tok.line, tok.col)

    def _nat_list(self, close: str) -> list:
        out = [self.nat()]
        while self.at(","):
            self.advance()
            out.append(self.nat())
        self.expect(close)
        return out

    def relation(self) -> _RawRelation:
        self.expect("relation")
        name = self.ident()
        self.expect("on")
        target = self.ident()
        self.expect("arity")
        arity = self.nat()
        self.expect("{")
        tuples = []
        while not self.at("}"):
            self.expect("(")
            tuples.append(self._nat_list(")"))
            self.expect(";")
        self.expect("}")
        return _RawRelation(name, target, arity, tuples)

    def partition(self) -> _RawPartition:
        self.expect("partition")
        name = self.ident()
        self.expect("on")
        target = self.ident()
        self.expect("{")
        blocks = []
        while not self.at("}"):
            self.expect("{")
            blocks.append(self._nat_list("}"))
            self.expect(";")
        self.expect("}")
        return _RawPartition(name, target, blocks)


# semantic analysis -------------------------------------------------------

class _Checker:
    def __init__(self):
        self.diags: list[Diagnostic] = []
        self.signatures: dict[str, Signature] = {}
        self.algebras: dict[str, FinAlgebra] = {}
        self.names = {"signature": set(), "algebra": set(), "relation": set(), "partition": set()}

    def err(self, line: int, col: int, msg: str):
        self.diags.append(Diagnostic(line, col, msg, "semantic"))

    def err_at(self, tok: Token, msg: str):
        self.err(tok.line, tok.col, msg)

    def claim(self, kind: str, tok: Token) -> bool:
        if tok.text in self.names[kind]:
            self.err_at(tok, f"duplicate {kind} name '{tok.text}'")
            return False
        self.names[kind].add(tok.text)
        return True

    def run(self, raw: list) -> list:
        out = []
        for item in raw:
            decl = getattr(self, "check_" + type(item).__name__[4:].lower())(item)
            if decl is not None:
                out.append(decl)
        return out

    def check_signature(self, r: _RawSignature):
        fresh = self.claim("signature", r.name)
        seen = set()
        syms = []
        for sym, arity in r.ops:
            if sym.text in seen:
                self.err_at(sym, f"duplicate symbol '{sym.text}' in signature '{r.name.text}'")
                continue
            seen.add(sym.text)
            syms.append((sym.text, int(arity.text)))
        sig = Signature(tuple(syms))
        if fresh:
            self.signatures[r.name.text] = sig
        return SignatureDecl(r.name.text, sig, (r.name.line, r.name.col))

    def check_algebra(self, r: _RawAlgebra):
        fresh = self.claim("algebra", r.name)
        sig = self.signatures.get(r.sig.text)
        if sig is None:
            self.err_at(r.sig, f"unknown signature '{r.sig.text}'")
            return None
        n = int(r.carrier.text)
        carrier = Carrier(n)
        defined: dict[str, FiniteOperation] = {}
        ok = True
        for sym, table in r.ops:
            if sym.text not in sig:
                self.err_at(sym, f"unknown symbol '{sym.text}' in signature '{r.sig.text}'")
                ok = False
                continue
            if sym.text in defined:
                self.err_at(sym, f"operation '{sym.text}' defined twice")
                ok = False
                continue
            k = sig.arity(sym.text)
            flat = self.flatten(sym.text, table, n, k)
            if flat is None:
                ok = False
                continue
            defined[sym.text] = FiniteOperation(carrier, k, flat)
        for name, k in sig:
            if name not in defined and all(s.text != name for s, _ in r.ops):
                self.err_at(r.name, f"missing operation '{name}' in algebra '{r.name.text}'")
                ok = False
            elif k == 0 and n == 0 and name in defined:
                self.err_at(r.carrier, f"nullary symbol '{name}' needs a nonempty carrier")
                ok = False
        if not ok:
            return None
        alg = FinAlgebra.from_mapping(r.name.text, sig, carrier, defined)
        if fresh:
            self.algebras[r.name.text] = alg
        return AlgebraDecl(r.name.text, r.sig.text, alg, (r.name.line, r.name.col))

    def flatten(self, sym: str, table: _Table, n: int, k: int) -> Optional[tuple]:
        if n ** k > MAX_TABLE_ENTRIES:
            self.err(table.line, table.col, f"table for '{sym}' would need {n ** k} entries")
            return None
        out = [0] * (n ** k)
        good = True

        def walk(t: _Table, prefix: tuple) -> None:
            nonlocal good
            depth = len(prefix)
            if isinstance(t.value, int):
                if depth != k:
                    self.err(t.line, t.col,
                             f"arity mismatch: '{sym}' has arity {k} but the table is nested {depth} deep")
                    good = False
                    return
                if t.value >= n:
                    self.err(t.line, t.col,
                             f"out-of-range value {t.value} (carrier has {n} elements)")
                    good = False
                    return
                out[encode(prefix, n)] = t.value
                return
            if depth >= k:
                self.err(t.line, t.col,
                         f"arity mismatch: '{sym}' has arity {k} but the table is nested deeper")
                good = False
                return
            if len(t.value) != n:
                self.err(t.line, t.col,
                         f"table for '{sym}' has {len(t.value)} entries at this level, expected {n}")
                good = False
                return
            for i, sub in enumerate(t.value):
                walk(sub, prefix + (i,))
                if not good:  # one diagnostic per table is enough
                    return

        walk(table, ())
        return tuple(out) if good else None

    def _target(self, tok: Token) -> Optional[FinAlgebra]:
        alg = self.algebras.get(tok.text)
        if alg is None:
            self.err_at(tok, f"unknown algebra '{tok.text}'")
        return alg

    def check_relation(self, r: _RawRelation):
        self.claim("relation", r.name)
        alg = self._target(r.target)
        if alg is None:
            return None
        k = int(r.arity.text)
        n = alg.carrier.size
        members = set()
        ok = True
        for tup in r.tuples:
            if len(tup) != k:
                self.err_at(tup[0], f"arity mismatch: tuple has {len(tup)} entries, relation has arity {k}")
                ok = False
                continue
            for tok in tup:
                if int(tok.text) >= n:
                    self.err_at(tok, f"out-of-range value {tok.text} (carrier has {n} elements)")
                    ok = False
            members.add(tuple(int(t.text) for t in tup))
        if not ok:
            return None
        return RelationDecl(r.name.text, r.target.text, k, tuple(sorted(members)),
                            (r.name.line, r.name.col))

    def check_partition(self, r: _RawPartition):
        self.claim("partition", r.name)
        alg = self._target(r.target)
        if alg is None:
            return None
        n = alg.carrier.size
        labels: list = [None] * n
        ok = True
        for b, blk in enumerate(r.blocks):
            for tok in blk:
                x = int(tok.text)
                if x >= n:
                    self.err_at(tok, f"out-of-range value {x} (carrier has {n} elements)")
                    ok = False
                elif labels[x] is not None:
                    self.err_at(tok, f"element {x} appears in more than one block")
                    ok = False
                else:
                    labels[x] = b
        missing = [x for x, lab in enumerate(labels) if lab is None]
        if ok and missing:
            self.err_at(r.name, f"partition '{r.name.text}' does not cover elements {missing}")
            ok = False
        if not ok:
            return None
        return PartitionDecl(r.name.text, r.target.text, Partition(alg.carrier, tuple(labels)),
                             (r.name.line, r.name.col))


def parse(text: str, filename: str = "<input>") -> SpecDocument:
    """Parse ``.ual`` source; raise :class:`SpecSyntaxError` or :class:`SpecSemanticError`."""
    try:
        raw = _Parser(_tokenize(text)).file()
    except _Abort as exc:
        raise SpecSyntaxError([exc.diag], filename) from None
    checker = _Checker()
    items = checker.run(raw)
    if checker.diags:
        raise SpecSemanticError(checker.diags, filename)
    return SpecDocument(tuple(items))


def parse_file(path) -> SpecDocument:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read(), str(path))
