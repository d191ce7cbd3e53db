"""The ``.ual`` specification language: parse, check, and print documents."""

from finalg.speclang.document import (
    AlgebraDecl,
    Diagnostic,
    PartitionDecl,
    RelationDecl,
    SignatureDecl,
    SpecDocument,
    SpecError,
    SpecSemanticError,
    SpecSyntaxError,
    document_for,
)
from finalg.speclang.parser import parse, parse_file, tokenize
from finalg.speclang.serializer import format_table, nested_table, serialize

__all__ = [
    "AlgebraDecl", "Diagnostic", "PartitionDecl", "RelationDecl", "SignatureDecl",
    "SpecDocument", "SpecError", "SpecSemanticError", "SpecSyntaxError",
    "document_for", "format_table", "nested_table", "parse", "parse_file",
    "serialize", "tokenize",
]
