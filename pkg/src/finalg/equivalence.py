"""Relation properties, partitions, blocks and quotient sets.

An equivalence relation is stored as a canonical :class:`Partition`: blocks
are ordered by their least element and ``block_of`` is the resulting
restricted growth string.  Two partitions are equal values exactly when they
encode the same equivalence.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

from finalg.base import Carrier, FiniteFunction, as_carrier
from finalg.errors import CarrierMismatchError, NotAnEquivalenceError, ShapeError
from finalg.relations import BinaryRelation, Subset
from finalg.tuples import restricted_growth_strings


@dataclass(frozen=True)
class RelationProperties:
    reflexive: bool
    symmetric: bool
    antisymmetric: bool
    transitive: bool

    @property
    def is_equivalence(self) -> bool:
        return self.reflexive and self.symmetric and self.transitive

    @property
    def is_preorder(self) -> bool:
        return self.reflexive and self.transitive

    # membership is a boolean, so each instance has at most one witness
    is_singleton_valued = True


def _square(r: BinaryRelation) -> int:
    if not r.is_square:
        raise CarrierMismatchError("relation properties need a square relation")
    return r.dom_a.size


def _first_failures(r: BinaryRelation) -> dict:
    n = _square(r)
    m = r.mask
    fails: dict = {}
    for x in range(n):
        if not m[x * n + x]:
            fails.setdefault("reflexive", (x, x))
            break
    for x in range(n):
        for y in range(n):
            if m[x * n + y]:
                if not m[y * n + x]:
                    fails.setdefault("symmetric", (x, y))
                elif x != y:
                    fails.setdefault("antisymmetric", (x, y))
    for x in range(n):
        for y in range(n):
            if not m[x * n + y]:
                continue
            for z in range(n):
                if m[y * n + z] and not m[x * n + z]:
                    fails.setdefault("transitive", (x, y, z))
                    break
            if "transitive" in fails:
                break
        if "transitive" in fails:
            break
    return fails


def relation_properties(r: BinaryRelation) -> RelationProperties:
    fails = _first_failures(r)
    return RelationProperties(
        reflexive="reflexive" not in fails,
        symmetric="symmetric" not in fails,
        antisymmetric="antisymmetric" not in fails,
        transitive="transitive" not in fails,
    )


def _canonical_labels(labels: Sequence) -> tuple:
    ids: dict = {}
    return tuple(ids.setdefault(b, len(ids)) for b in labels)


@dataclass(frozen=True)
class Partition:
    """A partition of ``carrier``; any labelling is canonicalised on construction."""

    carrier: Carrier
    block_of: tuple

    def __post_init__(self):
        c = as_carrier(self.carrier)
        object.__setattr__(self, "carrier", c)
        if len(self.block_of) != c.size:
            raise ShapeError(f"{len(self.block_of)} labels for a carrier of size {c.size}")
        object.__setattr__(self, "block_of", _canonical_labels(self.block_of))

    @classmethod
    def from_blocks(cls, carrier, blocks: Iterable[Iterable[int]]) -> "Partition":
        c = as_carrier(carrier)
        labels: list[Optional[int]] = [None] * c.size
        for i, blk in enumerate(blocks):
            blk = list(blk)
            if not blk:
                raise ValueError("blocks must be nonempty")
            for x in blk:
                c.check(x)
                if labels[x] is not None:
                    raise ValueError(f"element {x} appears in more than one block")
                labels[x] = i
        missing = [x for x, b in enumerate(labels) if b is None]
        if missing:
            raise ValueError(f"blocks do not cover elements {missing}")
        return cls(c, tuple(labels))

    @classmethod
    def discrete(cls, carrier) -> "Partition":
        c = as_carrier(carrier)
        return cls(c, tuple(range(c.size)))

    @classmethod
    def full(cls, carrier) -> "Partition":
        c = as_carrier(carrier)
        return cls(c, (0,) * c.size)

    @cached_property
    def blocks(self) -> tuple:
        out: list[list[int]] = [[] for _ in range(self.num_blocks)]
        for x, b in enumerate(self.block_of):
            out[b].append(x)
        return tuple(tuple(b) for b in out)

    @property
    def num_blocks(self) -> int:
        return max(self.block_of) + 1 if self.block_of else 0

    @cached_property
    def representatives(self) -> tuple:
        return tuple(b[0] for b in self.blocks)

    def related(self, x: int, y: int) -> bool:
        return self.block_of[self.carrier.check(x)] == self.block_of[self.carrier.check(y)]

    def to_relation(self) -> BinaryRelation:
        b = self.block_of
        return BinaryRelation.from_predicate(self.carrier, lambda x, y: b[x] == b[y])

    def refines(self, other: "Partition") -> bool:
        """True iff every block of ``self`` lies inside a block of ``other``."""
        if other.carrier != self.carrier:
            raise CarrierMismatchError("partitions over different carriers")
        seen: dict = {}
        return all(seen.setdefault(a, b) == b for a, b in zip(self.block_of, other.block_of))

    def __repr__(self):
        inner = ", ".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)
        return f"Partition({self.carrier.size}, [{inner}])"


def to_partition(r: BinaryRelation) -> Partition:
    """Convert an equivalence relation; otherwise raise with the first counterexample."""
    fails = _first_failures(r)
    for law in ("reflexive", "symmetric", "transitive"):
        if law in fails:
            raise NotAnEquivalenceError(law, fails[law])
    n = r.dom_a.size
    labels = [0] * n
    for x in range(n):
        labels[x] = next(y for y in range(x + 1) if r.mask[x * n + y])
    return Partition(r.dom_a, tuple(labels))


def ker_partition(f: FiniteFunction) -> Partition:
    return Partition(f.dom, f.table)


def block(u: int, p: Partition) -> Subset:
    """The block ``[u]`` of ``p`` as a subset."""
    b = p.block_of[p.carrier.check(u)]
    return Subset(p.carrier, tuple(x == b for x in p.block_of))


def is_block(c: Subset, p: Partition) -> Optional[int]:
    """Least ``u`` with ``block(u, p) == c``, if ``c`` is a block at all."""
    if c.carrier != p.carrier:
        raise CarrierMismatchError("subset and partition over different carriers")
    elems = tuple(c)
    if not elems:
        return None
    return elems[0] if p.blocks[p.block_of[elems[0]]] == elems else None


def quotient_set(p: Partition) -> list[tuple[Subset, int]]:
    """Blocks in canonical order paired with their least element."""
    return [(block(rep, p), rep) for rep in p.representatives]


def class_of(u: int, p: Partition) -> tuple[Subset, int]:
    """``⟨u⟩``: the block of ``u`` together with its designated representative."""
    b = p.block_of[p.carrier.check(u)]
    return block(u, p), p.representatives[b]


def representative(u: int, p: Partition) -> int:
    return p.representatives[p.block_of[p.carrier.check(u)]]


def all_partitions(n: int) -> Iterator[Partition]:
    """Every partition of an ``n``-set, restricted growth strings in lex order."""
    c = Carrier(n)
    for a in restricted_growth_strings(n):
        yield Partition(c, tuple(a))
