"""Relations of arbitrary finite arity, over one carrier or a family of carriers.

A ``k x m`` matrix ``a`` is indexed ``a[i][j]`` with ``i`` the relation
coordinate and ``j`` the operation argument slot.  ``a`` is related when every
column ``(a[0][j], ..., a[k-1][j])`` is a member; an operation (or a tuple of
operations, one per coordinate) is compatible when it maps the rows of every
related matrix to a member.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from finalg import kernels
from finalg.base import Carrier, as_carrier
from finalg.errors import CarrierMismatchError, ShapeError
from finalg.relations import BinaryRelation, FiniteOperation
from finalg.tuples import encode_mixed


@dataclass(frozen=True)
class DepRelation:
    """Mixed tuples whose coordinate ``i`` ranges over ``family[i]``."""

    family: tuple
    members: frozenset

    def __post_init__(self):
        fam = tuple(as_carrier(c) for c in self.family)
        object.__setattr__(self, "family", fam)
        mem = frozenset(tuple(int(x) for x in t) for t in self.members)
        for t in mem:
            if len(t) != len(fam):
                raise ShapeError(f"member {t} has length {len(t)}, expected {len(fam)}")
            for x, c in zip(t, fam):
                c.check(x, f"coordinate of {t}")
        object.__setattr__(self, "members", mem)

    @property
    def arity(self) -> int:
        return len(self.family)

    @property
    def sizes(self) -> tuple:
        return tuple(c.size for c in self.family)

    @classmethod
    def full(cls, family) -> "DepRelation":
        from itertools import product
        fam = tuple(as_carrier(c) for c in family)
        return cls(fam, frozenset(product(*(range(c.size) for c in fam))))

    def __contains__(self, t) -> bool:
        return tuple(t) in self.members

    def __len__(self) -> int:
        return len(self.members)

    @cached_property
    def sorted_members(self) -> list[tuple]:
        return sorted(self.members)

    @cached_property
    def mask(self) -> bytes:
        size = 1
        for s in self.sizes:
            size *= s
        out = bytearray(size)
        for t in self.members:
            out[encode_mixed(t, self.sizes)] = 1
        return bytes(out)


@dataclass(frozen=True)
class ContRelation:
    """A set of ``arity``-tuples over a single carrier."""

    carrier: Carrier
    arity: int
    members: frozenset

    def __post_init__(self):
        c = as_carrier(self.carrier)
        object.__setattr__(self, "carrier", c)
        if self.arity < 0:
            raise ValueError("arity must be a natural number")
        mem = frozenset(tuple(int(x) for x in t) for t in self.members)
        for t in mem:
            if len(t) != self.arity:
                raise ShapeError(f"member {t} has length {len(t)}, expected {self.arity}")
            for x in t:
                c.check(x, f"coordinate of {t}")
        object.__setattr__(self, "members", mem)

    @classmethod
    def of(cls, carrier, arity: int, members: Iterable[Sequence[int]]) -> "ContRelation":
        return cls(as_carrier(carrier), arity, frozenset(tuple(m) for m in members))

    @classmethod
    def full(cls, carrier, arity: int) -> "ContRelation":
        from itertools import product
        c = as_carrier(carrier)
        return cls(c, arity, frozenset(product(range(c.size), repeat=arity)))

    def __contains__(self, t) -> bool:
        return tuple(t) in self.members

    def __len__(self) -> int:
        return len(self.members)

    @cached_property
    def as_dep(self) -> DepRelation:
        return DepRelation((self.carrier,) * self.arity, self.members)


def binary_as_cont(r: BinaryRelation) -> ContRelation:
    if not r.is_square:
        raise CarrierMismatchError("only square relations have a single-carrier view")
    return ContRelation(r.dom_a, 2, frozenset(r.pairs()))


def cont_as_dep(r: ContRelation) -> DepRelation:
    return r.as_dep


def cont_as_binary(r: ContRelation) -> BinaryRelation:
    if r.arity != 2:
        raise ShapeError("only 2-ary relations convert to binary relations")
    return BinaryRelation.from_pairs(r.carrier, r.members)


def _check_matrix(a: Sequence[Sequence[int]], family: Sequence[Carrier]) -> int:
    if len(a) != len(family):
        raise ShapeError(f"matrix has {len(a)} rows, relation has arity {len(family)}")
    widths = {len(row) for row in a}
    if len(widths) > 1:
        raise ShapeError("matrix rows have different lengths")
    for row, c in zip(a, family):
        for x in row:
            c.check(x)
    return widths.pop() if widths else 0


def eval_dep_rel(r: DepRelation, a: Sequence[Sequence[int]]) -> bool:
    """True iff every column of ``a`` is a member of ``r``."""
    m = _check_matrix(a, r.family)
    return all(tuple(row[j] for row in a) in r.members for j in range(m))


def eval_cont_rel(r: ContRelation, a: Sequence[Sequence[int]]) -> bool:
    return eval_dep_rel(r.as_dep, a)


def dep_compatibility_witness(fs: Sequence[FiniteOperation], r: DepRelation) -> Optional[list[list[int]]]:
    """A related matrix whose row images leave ``r``, or ``None`` if compatible.

    The matrix is returned row-wise (``k`` rows, ``m`` columns).  Relations of
    arity 0 are treated as compatible with everything.
    """
    if len(fs) != r.arity:
        raise ShapeError(f"{len(fs)} operations for a relation of arity {r.arity}")
    if r.arity == 0:
        return None
    arities = {f.arity for f in fs}
    if len(arities) != 1:
        raise ShapeError("operations in a dependent family must share an arity")
    m = arities.pop()
    for i, (f, c) in enumerate(zip(fs, r.family)):
        if f.carrier != c:
            raise CarrierMismatchError(f"operation {i} lives on carrier {f.carrier.size}, "
                                       f"coordinate {i} on {c.size}")
        f.ensure_valid()
    members = r.sorted_members
    hit = kernels.dep_violation([f.table for f in fs], r.sizes, m, r.mask, members)
    if hit is None:
        return None
    cols = [members[c] for c in hit]
    return [[col[i] for col in cols] for i in range(r.arity)]


def dep_compatible_ops(fs: Sequence[FiniteOperation], r: DepRelation) -> bool:
    return dep_compatibility_witness(fs, r) is None


def cont_compatibility_witness(f: FiniteOperation, r: ContRelation) -> Optional[list[list[int]]]:
    if f.carrier != r.carrier:
        raise CarrierMismatchError("operation and relation live on different carriers")
    return dep_compatibility_witness([f] * r.arity, r.as_dep)


def cont_compatible_op(f: FiniteOperation, r: ContRelation) -> bool:
    return cont_compatibility_witness(f, r) is None
