"""Subsets, binary relations, finitary operations and compatibility.

A ``BinaryRelation`` is a dense boolean matrix packed into ``bytes``
(row-major, ``mask[a * cols + b]``).  A ``FiniteOperation`` of arity ``k``
stores one result per ``k``-tuple in little-endian tuple order (see
:mod:`finalg.tuples`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Iterator, Optional, Sequence

from finalg import kernels
from finalg.base import Carrier, FiniteFunction, as_carrier, check_tuple
from finalg.errors import CarrierMismatchError, RangeError, ShapeError
from finalg.tuples import decode, encode, table_order


# --------------------------------------------------------------------------
# subsets


@dataclass(frozen=True)
class Subset:
    carrier: Carrier
    bits: tuple

    def __post_init__(self):
        object.__setattr__(self, "carrier", as_carrier(self.carrier))
        object.__setattr__(self, "bits", tuple(bool(b) for b in self.bits))
        if len(self.bits) != self.carrier.size:
            raise ShapeError(f"mask of length {len(self.bits)} for carrier of size {self.carrier.size}")

    @classmethod
    def of(cls, carrier, elements: Iterable[int]) -> "Subset":
        carrier = as_carrier(carrier)
        bits = [False] * carrier.size
        for x in elements:
            bits[carrier.check(x)] = True
        return cls(carrier, tuple(bits))

    def __contains__(self, x) -> bool:
        return x in self.carrier and self.bits[x]

    def __iter__(self) -> Iterator[int]:
        return (x for x, b in enumerate(self.bits) if b)

    def __len__(self) -> int:
        return sum(self.bits)

    def elements(self) -> list[int]:
        return list(self)

    def __repr__(self):
        return f"Subset({self.carrier.size}, {{{', '.join(map(str, self))}}})"


def _same_carrier(s: Subset, t: Subset):
    if s.carrier != t.carrier:
        raise CarrierMismatchError(
            f"subsets over carriers of size {s.carrier.size} and {t.carrier.size}")


def member(s: Subset, x: int) -> bool:
    return s.bits[s.carrier.check(x)]


def is_subset(s: Subset, t: Subset) -> bool:
    _same_carrier(s, t)
    return all(b or not a for a, b in zip(s.bits, t.bits))


def union(s: Subset, t: Subset) -> Subset:
    _same_carrier(s, t)
    return Subset(s.carrier, tuple(a or b for a, b in zip(s.bits, t.bits)))


def empty(carrier) -> Subset:
    carrier = as_carrier(carrier)
    return Subset(carrier, (False,) * carrier.size)


def singleton(carrier, x: int) -> Subset:
    return Subset.of(carrier, [x])


def image_in(f: FiniteFunction, s: Subset) -> bool:
    """True iff ``f`` maps every point of its domain into ``s``."""
    if s.carrier != f.cod:
        raise CarrierMismatchError("subset must live on the codomain of f")
    return all(s.bits[y] for y in f.table)


def disjoint_union(a, b) -> tuple[Carrier, FiniteFunction, FiniteFunction]:
    a, b = as_carrier(a), as_carrier(b)
    total = Carrier(a.size + b.size)
    inj1 = FiniteFunction(a, total, tuple(range(a.size)))
    inj2 = FiniteFunction(b, total, tuple(a.size + y for y in range(b.size)))
    return total, inj1, inj2


# --------------------------------------------------------------------------
# binary relations


@dataclass(frozen=True)
class BinaryRelation:
    """A relation between ``dom_a`` and ``dom_b`` as a packed boolean matrix."""

    dom_a: Carrier
    dom_b: Carrier
    mask: bytes

    def __post_init__(self):
        object.__setattr__(self, "dom_a", as_carrier(self.dom_a))
        object.__setattr__(self, "dom_b", as_carrier(self.dom_b))
        object.__setattr__(self, "mask", bytes(1 if v else 0 for v in self.mask))
        if len(self.mask) != self.dom_a.size * self.dom_b.size:
            raise ShapeError(
                f"mask has {len(self.mask)} entries, expected "
                f"{self.dom_a.size}x{self.dom_b.size}")

    @classmethod
    def from_pairs(cls, dom_a, pairs: Iterable[tuple[int, int]], dom_b=None) -> "BinaryRelation":
        dom_a = as_carrier(dom_a)
        dom_b = dom_a if dom_b is None else as_carrier(dom_b)
        mask = bytearray(dom_a.size * dom_b.size)
        for a, b in pairs:
            mask[dom_a.check(a) * dom_b.size + dom_b.check(b)] = 1
        return cls(dom_a, dom_b, bytes(mask))

    @classmethod
    def from_predicate(cls, dom_a, pred: Callable[[int, int], bool], dom_b=None) -> "BinaryRelation":
        dom_a = as_carrier(dom_a)
        dom_b = dom_a if dom_b is None else as_carrier(dom_b)
        return cls(dom_a, dom_b, bytes(
            1 if pred(a, b) else 0 for a in dom_a for b in dom_b))

    @classmethod
    def total(cls, carrier) -> "BinaryRelation":
        c = as_carrier(carrier)
        return cls(c, c, b"\x01" * (c.size * c.size))

    @property
    def is_square(self) -> bool:
        return self.dom_a == self.dom_b

    @property
    def carrier(self) -> Carrier:
        if not self.is_square:
            raise CarrierMismatchError("heterogeneous relation has no single carrier")
        return self.dom_a

    def __call__(self, a: int, b: int) -> bool:
        return bool(self.mask[self.dom_a.check(a) * self.dom_b.size + self.dom_b.check(b)])

    def pairs(self) -> list[tuple[int, int]]:
        nb = self.dom_b.size
        return [divmod(i, nb) for i, v in enumerate(self.mask) if v] if nb else []

    def __len__(self) -> int:
        return sum(self.mask)

    def as_subset(self) -> Subset:
        """The same relation as a subset of pair codes ``a + b * |dom_a|``."""
        na = self.dom_a.size
        bits = [False] * (na * self.dom_b.size)
        for a, b in self.pairs():
            bits[a + b * na] = True
        return Subset(Carrier(len(bits)), tuple(bits))

    def __repr__(self):
        return f"BinaryRelation({self.dom_a.size}x{self.dom_b.size}, {self.pairs()})"


def _square(r: BinaryRelation) -> Carrier:
    if not r.is_square:
        raise CarrierMismatchError("relation must be square (on one carrier)")
    return r.dom_a


def ker(f: FiniteFunction) -> BinaryRelation:
    """Relate ``x`` and ``y`` iff ``f(x) == f(y)``."""
    t = f.table
    return BinaryRelation.from_predicate(f.dom, lambda x, y: t[x] == t[y])


def kernel(f: FiniteFunction) -> Subset:
    # same relation, viewed as a predicate on pair codes
    return ker(f).as_subset()


def zero_rel(carrier) -> BinaryRelation:
    return BinaryRelation.from_predicate(carrier, lambda x, y: x == y)


def total_rel(carrier) -> BinaryRelation:
    return BinaryRelation.total(carrier)


def pullback(r: BinaryRelation, g: FiniteFunction) -> BinaryRelation:
    """``(x, y)`` related iff ``r(g x, g y)``."""
    if _square(r) != g.cod:
        raise CarrierMismatchError("relation must live on the codomain of g")
    n = r.dom_a.size
    t = g.table
    m = r.mask
    return BinaryRelation.from_predicate(g.dom, lambda x, y: m[t[x] * n + t[y]])


def rel_implies(p: BinaryRelation, q: BinaryRelation) -> bool:
    if (p.dom_a, p.dom_b) != (q.dom_a, q.dom_b):
        raise CarrierMismatchError("relations have different shapes")
    return all(b or not a for a, b in zip(p.mask, q.mask))


def rel_implies_under(p: BinaryRelation, g: FiniteFunction, q: BinaryRelation) -> bool:
    return rel_implies(p, pullback(q, g))


def eval_rel(r: BinaryRelation, u: Sequence[int], v: Sequence[int]) -> bool:
    """Lift ``r`` componentwise to tuples of equal length."""
    if len(u) != len(v):
        raise ShapeError(f"tuples of lengths {len(u)} and {len(v)}")
    return all(r(a, b) for a, b in zip(u, v))


# --------------------------------------------------------------------------
# operations


@dataclass(frozen=True)
class FiniteOperation:
    """A total ``arity``-ary operation on ``carrier``.

    ``table[encode(t, n)]`` is the value at tuple ``t``.  Construction does not
    range-check the table so that malformed algebras can be built and then
    reported by :func:`finalg.algebra.validate`; :meth:`problems` lists what is
    wrong and every kernel entry point refuses an operation with problems.
    """

    carrier: Carrier
    arity: int
    table: tuple = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "carrier", as_carrier(self.carrier))
        object.__setattr__(self, "table", tuple(int(v) for v in self.table))
        if self.arity < 0:
            raise ValueError("arity must be a natural number")

    @classmethod
    def from_function(cls, carrier, arity: int, fn: Callable[..., int]) -> "FiniteOperation":
        carrier = as_carrier(carrier)
        return cls(carrier, arity, tuple(fn(*t) for t in table_order(carrier.size, arity)))

    @classmethod
    def constant(cls, carrier, value: int) -> "FiniteOperation":
        return cls(carrier, 0, (value,))

    @cached_property
    def problems(self) -> list[tuple]:
        """``(tuple_or_None, reason)`` for every defect of the table."""
        n, k = self.carrier.size, self.arity
        expected = n ** k
        if len(self.table) != expected:
            return [(None, f"table has {len(self.table)} entries, expected {expected}")]
        return [(decode(i, n, k), f"value {v} out of range")
                for i, v in enumerate(self.table) if not 0 <= v < n]

    def ensure_valid(self) -> "FiniteOperation":
        if self.problems:
            t, reason = self.problems[0]
            raise RangeError(f"invalid operation table: {reason}" + (f" at {t}" if t else ""))
        return self

    def __call__(self, *args: int) -> int:
        return self.apply(args)

    def apply(self, args: Sequence[int]) -> int:
        check_tuple(self.carrier, args, self.arity)
        return self.table[encode(args, self.carrier.size)]

    def items(self) -> Iterator[tuple[tuple, int]]:
        n, k = self.carrier.size, self.arity
        for i, v in enumerate(self.table):
            yield decode(i, n, k), v


def projection_op(carrier, k: int, i: int) -> FiniteOperation:
    if not 0 <= i < k:
        raise RangeError(f"coordinate {i} out of range for arity {k}")
    return FiniteOperation.from_function(carrier, k, lambda *t: t[i])


def compatibility_witness(f: FiniteOperation, r: BinaryRelation) -> Optional[tuple[tuple, tuple]]:
    """First ``(u, v)`` (lexicographic) with ``u r v`` componentwise but not ``f(u) r f(v)``."""
    c = _square(r)
    if f.carrier != c:
        raise CarrierMismatchError("operation and relation live on different carriers")
    f.ensure_valid()
    return kernels.binary_violation(f.table, c.size, f.arity, r.mask)


def compatible_op(f: FiniteOperation, r: BinaryRelation) -> bool:
    return compatibility_witness(f, r) is None
