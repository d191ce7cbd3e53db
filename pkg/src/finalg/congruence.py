"""Products of algebras, congruences, and quotient algebras."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from finalg import kernels
from finalg.algebra import FinAlgebra, Signature, Violation, ensure_valid
from finalg.base import Carrier
from finalg.equivalence import Partition, to_partition
from finalg.errors import (
    CarrierMismatchError,
    NotAnEquivalenceError,
    SignatureMismatchError,
    SizeBoundError,
)
from finalg.relations import BinaryRelation, FiniteOperation
from finalg.tuples import decode_mixed, encode_mixed

DEFAULT_MAX_SIZE = 10
MAX_PRODUCT_SIZE = 2 ** 32
# an operation table this large would not fit in memory anyway
MAX_TABLE_ENTRIES = 2 ** 26

_CHECKED = object()


@dataclass(frozen=True)
class Congruence:
    """A partition of ``algebra``'s carrier known to be compatible with every operation.

    Instances come only from :func:`check_congruence` and the functions built
    on it; calling the constructor directly raises ``TypeError``.
    """

    algebra: FinAlgebra
    partition: Partition
    _token: object = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self._token is not _CHECKED:
            raise TypeError("use check_congruence() to construct a Congruence")

    def related(self, u: int, v: int) -> bool:
        return self.partition.related(u, v)

    @property
    def blocks(self) -> tuple:
        return self.partition.blocks

    def relation(self) -> BinaryRelation:
        return self.partition.to_relation()

    def __repr__(self):
        return f"Congruence({self.algebra.name}, {self.partition!r})"


def _trusted(a: FinAlgebra, p: Partition) -> Congruence:
    return Congruence(a, p, _CHECKED)


# --------------------------------------------------------------------------
# products


@dataclass(frozen=True)
class ProductIndex:
    """An ordered list of factors over one signature; the product's index set."""

    factors: tuple

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    @property
    def sizes(self) -> tuple:
        return tuple(f.carrier.size for f in self.factors)

    def encode(self, t: Sequence[int]) -> int:
        return encode_mixed(t, self.sizes)

    def decode(self, e: int) -> tuple:
        return decode_mixed(e, self.sizes)


def product(factors: Union[ProductIndex, Sequence[FinAlgebra]],
            signature: Optional[Signature] = None, name: Optional[str] = None) -> FinAlgebra:
    """Direct product with coordinatewise operations.

    Element ``e`` of the product stands for the tuple ``decode_mixed(e, sizes)``
    (coordinate 0 least significant).  ``signature`` is only needed for the
    empty product, whose carrier is the single empty tuple.
    """
    index = factors if isinstance(factors, ProductIndex) else ProductIndex(factors)
    algs = index.factors
    if algs:
        signature = algs[0].signature
        for a in algs:
            if a.signature != signature:
                raise SignatureMismatchError(f"factor {a.name} has a different signature")
            ensure_valid(a)
    elif signature is None:
        signature = Signature(())
    sizes = index.sizes
    total = 1
    for s in sizes:
        total *= s
    if total > MAX_PRODUCT_SIZE:
        raise SizeBoundError(f"product carrier would have {total} elements (limit {MAX_PRODUCT_SIZE})")
    carrier = Carrier(total)
    place = np.cumprod((1,) + sizes[:-1], dtype=np.int64) if sizes else np.zeros(0, np.int64)

    ops = []
    for sym, k in signature:
        entries = total ** k
        if entries > MAX_TABLE_ENTRIES:
            raise SizeBoundError(f"table for {sym} would have {entries} entries")
        idx = np.arange(entries, dtype=np.int64)
        args = [(idx // total ** j) % total for j in range(k)]
        out = np.zeros(entries, dtype=np.int64)
        for i, a in enumerate(algs):
            s = sizes[i]
            row = np.zeros(entries, dtype=np.int64)
            mult = 1
            for arg in args:
                row += ((arg // place[i]) % s) * mult
                mult *= s
            out += np.asarray(a.op(sym).table, dtype=np.int64)[row] * place[i]
        ops.append(FiniteOperation(carrier, k, tuple(out.tolist())))
    if name is None:
        name = "_x_".join(a.name for a in algs) if algs else "One"
    return FinAlgebra(name, signature, carrier, tuple(ops))


def class_product(members: Sequence[tuple[FinAlgebra, object]], signature: Optional[Signature] = None,
                  name: Optional[str] = None) -> FinAlgebra:
    """Product over an enumerated class; each member is ``(algebra, tag)`` and tags are ignored."""
    return product([alg for alg, _tag in members], signature=signature, name=name)


# --------------------------------------------------------------------------
# congruences


def _kernel_args(a: FinAlgebra):
    return [f.table for f in a.ops], [k for _, k in a.signature]


def check_congruence(a: FinAlgebra, theta: Union[Partition, BinaryRelation]) -> Union[Congruence, Violation]:
    """Return a :class:`Congruence`, or a :class:`Violation` saying why ``theta`` is not one.

    For a compatibility failure the violation's ``args`` is the pair of
    argument tuples ``(u, v)``: componentwise related, with unrelated images.
    """
    ensure_valid(a)
    if isinstance(theta, BinaryRelation):
        if not theta.is_square or theta.dom_a != a.carrier:
            raise CarrierMismatchError("relation must be square on the algebra's carrier")
        try:
            theta = to_partition(theta)
        except NotAnEquivalenceError as exc:
            return Violation(f"not an equivalence: {exc.law} fails at {exc.witness}")
    if theta.carrier != a.carrier:
        raise CarrierMismatchError(
            f"partition over {theta.carrier.size} elements, algebra {a.name} has {a.carrier.size}")
    n = a.carrier.size
    for sym, f in a.items():
        hit = kernels.partition_violation(f.table, n, f.arity, theta.block_of)
        if hit is not None:
            u, v = hit
            return Violation(
                f"not compatible: {sym}{u} = {f.apply(u)} and {sym}{v} = {f.apply(v)} "
                f"lie in different blocks", sym, (u, v))
    return _trusted(a, theta)


def is_congruence(a: FinAlgebra, theta) -> bool:
    return isinstance(check_congruence(a, theta), Congruence)


def zero_congruence(a: FinAlgebra) -> Congruence:
    """The discrete partition; compatible with every operation of every algebra."""
    ensure_valid(a)
    return _trusted(a, Partition.discrete(a.carrier))


def full_congruence(a: FinAlgebra) -> Congruence:
    ensure_valid(a)
    return _trusted(a, Partition.full(a.carrier))


def _bound(a: FinAlgebra, max_size: int):
    if a.carrier.size > max_size:
        raise SizeBoundError(
            f"algebra {a.name} has {a.carrier.size} elements; enumeration bound is {max_size}")


def all_congruences(a: FinAlgebra, max_size: int = DEFAULT_MAX_SIZE) -> list[Congruence]:
    """Every congruence, in lexicographic order of restricted growth strings."""
    ensure_valid(a)
    _bound(a, max_size)
    tables, arities = _kernel_args(a)
    rgs = kernels.enumerate_congruences(tables, arities, a.carrier.size)
    return [_trusted(a, Partition(a.carrier, r)) for r in rgs]


def generated_congruence(a: FinAlgebra, pairs: Iterable[tuple[int, int]],
                         max_size: int = DEFAULT_MAX_SIZE) -> Congruence:
    """The least congruence relating every given pair."""
    ensure_valid(a)
    _bound(a, max_size)
    pairs = [(a.carrier.check(x), a.carrier.check(y)) for x, y in pairs]
    tables, arities = _kernel_args(a)
    rgs = kernels.congruence_closure(tables, arities, a.carrier.size, pairs)
    return _trusted(a, Partition(a.carrier, rgs))


# --------------------------------------------------------------------------
# quotients


def quotient_algebra(a: FinAlgebra, theta: Congruence, name: Optional[str] = None) -> FinAlgebra:
    """``a / theta``: element ``b`` is block ``b`` of ``theta`` in canonical order.

    Each operation is evaluated on the least element of every argument block.
    """
    if theta.algebra != a:
        raise CarrierMismatchError(f"congruence belongs to {theta.algebra.name}, not {a.name}")
    p = theta.partition
    q = p.num_blocks
    reps = np.asarray(p.representatives, dtype=np.int64)
    blk = np.asarray(p.block_of, dtype=np.int64)
    n = a.carrier.size
    carrier = Carrier(q)
    ops = []
    for f in a.ops:
        k = f.arity
        idx = np.arange(q ** k, dtype=np.int64)
        src = np.zeros(q ** k, dtype=np.int64)
        for j in range(k):
            src += reps[(idx // q ** j) % q] * n ** j
        table = blk[np.asarray(f.table, dtype=np.int64)[src]]
        ops.append(FiniteOperation(carrier, k, tuple(table.tolist())))
    return FinAlgebra(name or f"{a.name}_quot", a.signature, carrier, tuple(ops))


def quotient_zero(a: FinAlgebra, theta: Congruence) -> Congruence:
    return zero_congruence(quotient_algebra(a, theta))


def quotient_elim(theta: Congruence, u: int, v: int) -> bool:
    """Whether ``u`` and ``v`` land on the same element of the quotient."""
    return theta.partition.related(u, v)
