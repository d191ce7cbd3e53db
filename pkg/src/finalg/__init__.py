"""Computational universal algebra over finite carriers.

Carriers are ``0..n-1``.  The most used names are re-exported here; the
submodules hold the rest.
"""

from finalg.algebra import (
    FinAlgebra,
    Signature,
    Violation,
    compatible,
    cyclic_group,
    interpret,
    monoid_signature,
    validate,
    z2_monoid,
)
from finalg.base import Carrier, FiniteFunction
from finalg.congruence import (
    Congruence,
    all_congruences,
    check_congruence,
    full_congruence,
    generated_congruence,
    product,
    quotient_algebra,
    zero_congruence,
)
from finalg.continuous import ContRelation, DepRelation
from finalg.equivalence import Partition, to_partition
from finalg.errors import FinalgError
from finalg.relations import BinaryRelation, FiniteOperation, Subset, compatible_op

__all__ = [
    "BinaryRelation", "Carrier", "Congruence", "ContRelation", "DepRelation", "FinAlgebra",
    "FinalgError", "FiniteFunction", "FiniteOperation", "Partition", "Signature", "Subset",
    "Violation", "all_congruences", "check_congruence", "compatible", "compatible_op",
    "cyclic_group", "full_congruence", "generated_congruence", "interpret", "monoid_signature",
    "product", "quotient_algebra", "to_partition", "validate", "z2_monoid", "zero_congruence",
]
