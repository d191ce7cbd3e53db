"""Signatures, finite algebras, and compatibility with whole algebras."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Mapping, Optional, Sequence

from finalg.base import Carrier, as_carrier, check_tuple
from finalg.continuous import (
    ContRelation,
    DepRelation,
    cont_compatibility_witness,
    dep_compatibility_witness,
)
from finalg.errors import (
    CarrierMismatchError,
    InvalidAlgebraError,
    ShapeError,
    SignatureMismatchError,
)
from finalg.relations import BinaryRelation, FiniteOperation, compatibility_witness


@dataclass(frozen=True)
class Signature:
    """Operation symbols with arities, in declaration order."""

    symbols: tuple

    def __post_init__(self):
        syms = tuple((str(name), int(arity)) for name, arity in self.symbols)
        names = [s for s, _ in syms]
        dupes = {s for s in names if names.count(s) > 1}
        if dupes:
            raise ValueError(f"duplicate operation symbols: {sorted(dupes)}")
        for name, arity in syms:
            if arity < 0:
                raise ValueError(f"symbol {name} has negative arity")
        object.__setattr__(self, "symbols", syms)

    @classmethod
    def of(cls, **arities: int) -> "Signature":
        return cls(tuple(arities.items()))

    @property
    def names(self) -> tuple:
        return tuple(s for s, _ in self.symbols)

    def arity(self, name: str) -> int:
        for s, k in self.symbols:
            if s == name:
                return k
        raise KeyError(f"unknown symbol {name!r}")

    def __contains__(self, name) -> bool:
        return name in self.names

    def __iter__(self) -> Iterator[tuple[str, int]]:
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)


@dataclass(frozen=True)
class Violation:
    """One broken invariant: which symbol, at which argument tuple, and why."""

    reason: str
    symbol: Optional[str] = None
    args: Optional[tuple] = None

    def __str__(self):
        where = ""
        if self.symbol is not None:
            where = f"symbol {self.symbol}"
            if self.args is not None:
                where += f" at {self.args}"
            where += ": "
        return where + self.reason


@dataclass(frozen=True)
class FinAlgebra:
    """A carrier with one operation per signature symbol (``ops`` in signature order)."""

    name: str
    signature: Signature
    carrier: Carrier
    ops: tuple

    def __post_init__(self):
        object.__setattr__(self, "carrier", as_carrier(self.carrier))
        object.__setattr__(self, "ops", tuple(self.ops))
        if len(self.ops) != len(self.signature):
            raise ShapeError(
                f"{len(self.ops)} operations for a signature of {len(self.signature)} symbols")

    @classmethod
    def from_mapping(cls, name: str, signature: Signature, carrier,
                     ops: Mapping[str, FiniteOperation]) -> "FinAlgebra":
        missing = [s for s in signature.names if s not in ops]
        if missing:
            raise SignatureMismatchError(f"no interpretation for {missing}")
        extra = [s for s in ops if s not in signature]
        if extra:
            raise SignatureMismatchError(f"unknown symbols {extra}")
        return cls(name, signature, carrier, tuple(ops[s] for s in signature.names))

    @classmethod
    def from_functions(cls, name: str, signature: Signature, size: int,
                       fns: Mapping[str, Callable[..., int]]) -> "FinAlgebra":
        c = Carrier(size)
        return cls.from_mapping(name, signature, c, {
            s: FiniteOperation.from_function(c, k, fns[s]) for s, k in signature})

    def op(self, symbol: str) -> FiniteOperation:
        try:
            return self.ops[self.signature.names.index(symbol)]
        except ValueError:
            raise KeyError(f"unknown symbol {symbol!r} in algebra {self.name}") from None

    def items(self) -> Iterator[tuple[str, FiniteOperation]]:
        return zip(self.signature.names, self.ops)

    def __len__(self) -> int:
        return self.carrier.size

    def renamed(self, name: str) -> "FinAlgebra":
        return FinAlgebra(name, self.signature, self.carrier, self.ops)


def validate(a: FinAlgebra) -> list[Violation]:
    """Every violated invariant of ``a``; an empty list means the algebra is valid."""
    out: list[Violation] = []
    for (sym, k), f in zip(a.signature, a.ops):
        if f.arity != k:
            out.append(Violation(f"arity mismatch: table has arity {f.arity}, signature says {k}", sym))
            continue
        if f.carrier != a.carrier:
            out.append(Violation(
                f"carrier mismatch: table over {f.carrier.size} elements, algebra has {a.carrier.size}",
                sym))
            continue
        if k == 0 and a.carrier.size == 0:
            out.append(Violation("nullary symbol on an empty carrier", sym))
            continue
        for args, reason in f.problems:
            out.append(Violation(reason, sym, args))
    return out


def ensure_valid(a: FinAlgebra) -> FinAlgebra:
    problems = validate(a)
    if problems:
        raise InvalidAlgebraError(problems)
    return a


def interpret(a: FinAlgebra, symbol: str, args: Sequence[int]) -> int:
    """Evaluate ``symbol`` of ``a`` at ``args``."""
    k = a.signature.arity(symbol)
    check_tuple(a.carrier, args, k)
    return a.op(symbol).apply(args)


def monoid_signature() -> Signature:
    return Signature((("e", 0), ("·", 2)))


def z2_monoid() -> FinAlgebra:
    """({0, 1}, e = 0, x · y = x + y mod 2)."""
    return FinAlgebra.from_functions(
        "Z2", monoid_signature(), 2, {"e": lambda: 0, "·": lambda x, y: (x + y) % 2})


def cyclic_group(n: int, name: Optional[str] = None) -> FinAlgebra:
    """Integers mod ``n`` with addition as the only operation (symbol ``+``)."""
    return FinAlgebra.from_functions(
        name or f"Z{n}", Signature((("+", 2),)), n, {"+": lambda x, y: (x + y) % n})


def compatibility_failure(a: FinAlgebra, r: BinaryRelation) -> Optional[tuple[str, tuple, tuple]]:
    """First ``(symbol, u, v)`` witnessing that ``r`` is not compatible with ``a``."""
    ensure_valid(a)
    if not r.is_square or r.dom_a != a.carrier:
        raise CarrierMismatchError("relation must be square on the algebra's carrier")
    for sym, f in a.items():
        hit = compatibility_witness(f, r)
        if hit is not None:
            return (sym, *hit)
    return None


def compatible(a: FinAlgebra, r: BinaryRelation) -> bool:
    return compatibility_failure(a, r) is None


def cont_compatibility_failure(a: FinAlgebra, r: ContRelation) -> Optional[tuple[str, list]]:
    ensure_valid(a)
    if r.carrier != a.carrier:
        raise CarrierMismatchError("relation must live on the algebra's carrier")
    for sym, f in a.items():
        hit = cont_compatibility_witness(f, r)
        if hit is not None:
            return sym, hit
    return None


def cont_compatible(a: FinAlgebra, r: ContRelation) -> bool:
    return cont_compatibility_failure(a, r) is None


def dep_compatible(family: Sequence[FinAlgebra], r: DepRelation) -> bool:
    """Every symbol, interpreted coordinatewise in ``family``, preserves ``r``."""
    if not family:
        raise ValueError("dependent compatibility needs a nonempty family of algebras")
    sig = family[0].signature
    for alg in family:
        if alg.signature != sig:
            raise SignatureMismatchError(f"algebra {alg.name} has a different signature")
        ensure_valid(alg)
    if len(family) != r.arity:
        raise ShapeError(f"{len(family)} algebras for a relation of arity {r.arity}")
    for sym in sig.names:
        if dep_compatibility_witness([alg.op(sym) for alg in family], r) is not None:
            return False
    return True
