"""In-memory form of a ``.ual`` specification file."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

from finalg.algebra import FinAlgebra, Signature
from finalg.equivalence import Partition


@dataclass(frozen=True)
class Diagnostic:
    line: int
    column: int
    message: str
    kind: str = "syntax"  # or "semantic"

    def format(self, filename: str = "<input>") -> str:
        return f"{filename}:{self.line}:{self.column}: {self.kind} error: {self.message}"


class SpecError(Exception):
    """A ``.ual`` document failed to parse; ``diagnostics`` says where and why."""

    def __init__(self, diagnostics, filename: str = "<input>"):
        self.diagnostics = list(diagnostics)
        self.filename = filename
        super().__init__("\n".join(d.format(filename) for d in self.diagnostics))


class SpecSyntaxError(SpecError):
    pass


class SpecSemanticError(SpecError):
    pass


@dataclass(frozen=True)
class SignatureDecl:
    name: str
    signature: Signature
    loc: tuple = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class AlgebraDecl:
    name: str
    signature_name: str
    algebra: FinAlgebra
    loc: tuple = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class RelationDecl:
    """``members`` is sorted and duplicate-free."""

    name: str
    algebra_name: str
    arity: int
    members: tuple
    loc: tuple = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class PartitionDecl:
    name: str
    algebra_name: str
    partition: Partition
    loc: tuple = field(default=(0, 0), compare=False, repr=False)


Decl = Union[SignatureDecl, AlgebraDecl, RelationDecl, PartitionDecl]

KIND_OF = {SignatureDecl: "signature", AlgebraDecl: "algebra",
           RelationDecl: "relation", PartitionDecl: "partition"}


@dataclass(frozen=True)
class SpecDocument:
    """Declarations in source order.  Names are unique per kind."""

    items: tuple = ()

    def _of(self, cls) -> dict:
        return {d.name: d for d in self.items if isinstance(d, cls)}

    @property
    def signatures(self) -> dict[str, SignatureDecl]:
        return self._of(SignatureDecl)

    @property
    def algebras(self) -> dict[str, AlgebraDecl]:
        return self._of(AlgebraDecl)

    @property
    def relations(self) -> dict[str, RelationDecl]:
        return self._of(RelationDecl)

    @property
    def partitions(self) -> dict[str, PartitionDecl]:
        return self._of(PartitionDecl)

    def algebra(self, name: str) -> FinAlgebra:
        try:
            return self.algebras[name].algebra
        except KeyError:
            raise KeyError(f"no algebra named {name!r}") from None

    def __iter__(self) -> Iterator[Decl]:
        return iter(self.items)

    def signature_name_for(self, sig: Signature) -> Optional[str]:
        for d in self.items:
            if isinstance(d, SignatureDecl) and d.signature == sig:
                return d.name
        return None


def document_for(algebra: FinAlgebra, signature_name: str) -> SpecDocument:
    """A self-contained document holding ``algebra`` and its signature."""
    return SpecDocument((
        SignatureDecl(signature_name, algebra.signature),
        AlgebraDecl(algebra.name, signature_name, algebra),
    ))
